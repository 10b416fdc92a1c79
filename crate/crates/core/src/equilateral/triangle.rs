//! Unit equilateral triangles inscribed in the ellipse, and the 5-point
//! equilateral sets they complete.
//!
//! A vertex `P(t)` moves around the ellipse. For each position the two
//! nearest ellipse points at distance 1 on either side, `B(t)` and `C(t)`,
//! are found by scanning and bisection, and the base length `‖B − C‖ − 1` is
//! root-found in `t`. Every triangle is met three times, once per vertex.

use std::f64::consts::{PI, TAU};

use serde_json::json;

use super::ellipse::{feasibility_endpoints, EllipseFamily};
use crate::config::{point_to_json, Claim, Configuration};
use crate::error::{PettyError, Result};
use crate::geometry::{normalize_angle, PettyPoint};
use crate::roots::{bisect, golden_section_min};

type Point = PettyPoint<f64>;

/// Samples of the vertex parameter over one turn.
const VERTEX_SAMPLES: usize = 720;
/// Samples of the arc scanned on each side of the vertex.
const NEIGHBOR_SAMPLES: usize = 256;
/// Parameter tolerance of all bisections.
const PARAM_TOL: f64 = 1e-13;
/// Two triangles are the same if their sorted vertex parameters agree to this.
const SAME_TRIANGLE: f64 = 1e-6;
/// Distance within which a submersion counts as an interval endpoint.
pub const BOUNDARY_BAND: f64 = 1e-9;

/// Three ellipse points with their angular parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipseTriangle {
    pub vertices: [Point; 3],
    pub parameters: [f64; 3],
}

impl EllipseTriangle {
    pub fn side_lengths(&self) -> [f64; 3] {
        let v = &self.vertices;
        [
            v[0].distance(&v[1]),
            v[1].distance(&v[2]),
            v[0].distance(&v[2]),
        ]
    }

    pub fn max_side_error(&self) -> f64 {
        self.side_lengths()
            .iter()
            .map(|s| (s - 1.0).abs())
            .fold(0.0, f64::max)
    }
}

/// Parameter of the first ellipse point at distance 1 from `P(t)` when
/// walking from `t` in direction `dir` (±1) for at most half a turn.
pub fn neighbor_at_unit_distance(e: &EllipseFamily, t: f64, dir: f64) -> Option<f64> {
    let p = e.point_at_angle(t);
    let h = |s: f64| p.distance(&e.point_at_angle(t + dir * s)) - 1.0;
    let mut prev = 0.0;
    for k in 1..=NEIGHBOR_SAMPLES {
        let s = PI * k as f64 / NEIGHBOR_SAMPLES as f64;
        if h(s) >= 0.0 {
            let s = bisect(h, prev, s, PARAM_TOL).ok()?;
            return Some(normalize_angle(t + dir * s));
        }
        prev = s;
    }
    None
}

/// `‖B(t) − C(t)‖ − 1` together with the neighbor parameters.
fn base_excess(e: &EllipseFamily, t: f64) -> Option<(f64, f64, f64)> {
    let b = neighbor_at_unit_distance(e, t, 1.0)?;
    let c = neighbor_at_unit_distance(e, t, -1.0)?;
    let g = e.point_at_angle(b).distance(&e.point_at_angle(c)) - 1.0;
    Some((g, b, c))
}

fn circular_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

/// All unit equilateral triangles on the ellipse, up to `tol` in the side
/// lengths.
pub fn equilateral_triangle_on_ellipse(
    e: &EllipseFamily,
    tol: f64,
) -> Result<Vec<EllipseTriangle>> {
    if !(tol > 0.0) {
        return Err(PettyError::InvalidInput(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let g = |t: f64| base_excess(e, t).map(|v| v.0);
    let ts: Vec<f64> = (0..=VERTEX_SAMPLES)
        .map(|k| TAU * k as f64 / VERTEX_SAMPLES as f64)
        .collect();
    let gs: Vec<Option<f64>> = ts.iter().map(|&t| g(t)).collect();

    let mut roots = Vec::new();
    let root_in = |lo: f64, hi: f64| bisect(|t| g(t).unwrap_or(f64::NAN), lo, hi, PARAM_TOL).ok();
    for k in 0..VERTEX_SAMPLES {
        let (Some(a), Some(b)) = (gs[k], gs[k + 1]) else {
            continue;
        };
        if a == 0.0 || (a < 0.0) != (b < 0.0) {
            roots.extend(root_in(ts[k], ts[k + 1]));
        }
    }
    // Extrema of g close to zero can hide a pair of roots between two
    // samples, or touch zero without crossing at the interval endpoints.
    for k in 0..VERTEX_SAMPLES {
        let prev = if k == 0 { VERTEX_SAMPLES - 1 } else { k - 1 };
        let (Some(left), Some(mid), Some(right)) = (gs[prev], gs[k], gs[k + 1]) else {
            continue;
        };
        if (left < 0.0) != (mid < 0.0) || (mid < 0.0) != (right < 0.0) {
            continue;
        }
        if mid.abs() > left.abs() || mid.abs() > right.abs() {
            continue;
        }
        let sign = mid.signum();
        let lo = ts[k] - TAU / VERTEX_SAMPLES as f64;
        let hi = ts[k + 1];
        let (t_ext, g_ext) =
            golden_section_min(|t| sign * g(t).unwrap_or(f64::INFINITY), lo, hi, PARAM_TOL);
        let g_ext = sign * g_ext;
        if g_ext.abs() <= tol {
            roots.push(t_ext);
        } else if (g_ext < 0.0) != (mid < 0.0) {
            roots.extend(root_in(lo, t_ext));
            roots.extend(root_in(t_ext, hi));
        }
    }

    let mut found: Vec<EllipseTriangle> = Vec::new();
    for t in roots {
        let t = normalize_angle(t);
        let Some((_, b, c)) = base_excess(e, t) else {
            continue;
        };
        let mut params = [t, b, c];
        params.sort_by(f64::total_cmp);
        let tri = EllipseTriangle {
            vertices: params.map(|p| e.point_at_angle(p)),
            parameters: params,
        };
        if tri.max_side_error() > tol {
            continue;
        }
        let duplicate = found.iter().any(|f| {
            (0..3).all(|i| circular_gap(f.parameters[i], tri.parameters[i]) < SAME_TRIANGLE)
        });
        if !duplicate {
            found.push(tri);
        }
    }
    found.sort_by(|a, b| a.parameters[0].total_cmp(&b.parameters[0]));
    Ok(found)
}

/// A 5-point 1-equilateral set `α₁ … α₅` with `α₅` the origin and
/// `α₄ = (0, d, 1 − d)`, labelled so that `z(α₅) ≤ z(α₃) ≤ z(α₂) ≤ z(α₁) ≤ z(α₄)`.
#[derive(Debug, Clone, PartialEq)]
pub struct EquilateralQuintuple {
    pub d: f64,
    pub points: [Point; 5],
    /// Ellipse parameters of `α₁, α₂, α₃`.
    pub triangle_parameters: [f64; 3],
    /// `d` lies within [`BOUNDARY_BAND`] of an interval endpoint.
    pub boundary: bool,
}

impl EquilateralQuintuple {
    pub fn max_distance_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..5 {
            for j in i + 1..5 {
                worst = worst.max((self.points[i].distance(&self.points[j]) - 1.0).abs());
            }
        }
        worst
    }

    /// The height slab `[1/2 − d, 1/2]` containing `α₁, α₂, α₃`.
    pub fn slab(&self) -> (f64, f64) {
        (0.5 - self.d, 0.5)
    }

    pub fn to_configuration(&self, tol: f64) -> Result<Configuration<f64>> {
        Ok(
            Configuration::new(self.points.to_vec(), Claim::Equilateral1, tol)?
                .with_meta("source", json!("equilateral"))
                .with_meta("d", json!(self.d))
                .with_meta("boundary", json!(self.boundary))
                .with_meta("triangle_parameters", json!(self.triangle_parameters))
                .with_meta("slab", json!([0.5 - self.d, 0.5]))
                .with_meta(
                    "fixed_points",
                    json!([
                        point_to_json(&self.points[3]),
                        point_to_json(&self.points[4])
                    ]),
                ),
        )
    }
}

/// Builds the 5-point equilateral set for submersion `d`.
///
/// `d` must lie in `[d₂, d₁]`; endpoint solutions are returned with
/// `boundary` set.
pub fn build_quintuple(d: f64, tol: f64) -> Result<EquilateralQuintuple> {
    let iv = feasibility_endpoints();
    if !d.is_finite() || !iv.contains(d) {
        return Err(PettyError::Infeasible {
            d,
            d1: iv.d1,
            d2: iv.d2,
        });
    }
    let e = EllipseFamily::new(d)?;
    let triangles = equilateral_triangle_on_ellipse(&e, tol)?;
    let tri = triangles.first().ok_or(PettyError::Infeasible {
        d,
        d1: iv.d1,
        d2: iv.d2,
    })?;

    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| tri.vertices[j].z.total_cmp(&tri.vertices[i].z));
    let points = [
        tri.vertices[order[0]],
        tri.vertices[order[1]],
        tri.vertices[order[2]],
        e.upper_center(),
        e.lower_center(),
    ];
    let q = EquilateralQuintuple {
        d,
        points,
        triangle_parameters: order.map(|i| tri.parameters[i]),
        boundary: (d - iv.d1).abs() <= BOUNDARY_BAND || (d - iv.d2).abs() <= BOUNDARY_BAND,
    };
    if q.max_distance_error() > tol {
        return Err(PettyError::Numerical(format!(
            "quintuple at d = {d} misses unit distance by {}",
            q.max_distance_error()
        )));
    }
    Ok(q)
}
