//! Points at distance 1 from every point of a given set.

use rand::Rng;

use crate::error::{PettyError, Result};
use crate::geometry::PettyPoint;
use crate::pattern::{pattern_search, PatternOptions};
use crate::search::restart_rng;

type Point = PettyPoint<f64>;

const STARTS: usize = 96;
const SAME_POINT: f64 = 1e-7;

fn residuals<'a>(p: &Point, set: &'a [Point]) -> impl Iterator<Item = f64> + 'a {
    let p = *p;
    set.iter().map(move |a| p.distance(a) - 1.0)
}

fn max_residual(p: &Point, set: &[Point]) -> f64 {
    residuals(p, set).map(f64::abs).fold(0.0, f64::max)
}

/// Gauss-Newton refinement of `‖p − aᵢ‖ = 1`. Returns the best iterate.
fn polish(mut p: Point, set: &[Point]) -> Point {
    let mut best = max_residual(&p, set);
    for _ in 0..30 {
        let mut jtj = [[0.0f64; 3]; 3];
        let mut jtr = [0.0f64; 3];
        for a in set {
            let v = p - *a;
            let rho = v.r();
            if rho == 0.0 {
                return p;
            }
            let grad = [v.x / rho, v.y / rho, v.z.signum()];
            let r = p.distance(a) - 1.0;
            for i in 0..3 {
                jtr[i] += grad[i] * r;
                for j in 0..3 {
                    jtj[i][j] += grad[i] * grad[j];
                }
            }
        }
        let Some(delta) = solve3(jtj, jtr) else {
            return p;
        };
        let next = Point::new(p.x - delta[0], p.y - delta[1], p.z - delta[2]);
        let err = max_residual(&next, set);
        if !(err < best) {
            return p;
        }
        p = next;
        best = err;
    }
    p
}

fn det3(m: &[[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Cramer's rule; `None` for a (nearly) singular matrix.
fn solve3(m: [[f64; 3]; 3], rhs: [f64; 3]) -> Option<[f64; 3]> {
    let det = det3(&m);
    if det.abs() < 1e-14 {
        return None;
    }
    let mut out = [0.0; 3];
    for (c, slot) in out.iter_mut().enumerate() {
        let mut mc = m;
        for r in 0..3 {
            mc[r][c] = rhs[r];
        }
        *slot = det3(&mc) / det;
    }
    Some(out)
}

/// All points found at distance 1 from every point of `set` (within `tol`),
/// by seeded multi-start pattern search followed by Gauss-Newton polishing.
/// Sorted lexicographically by coordinates.
pub fn equidistant_extensions(set: &[Point], tol: f64, seed: u64) -> Result<Vec<Point>> {
    if set.is_empty() {
        return Err(PettyError::InvalidInput("empty point set".into()));
    }
    if !(tol > 0.0) {
        return Err(PettyError::InvalidInput(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let lo = set.iter().fold([f64::INFINITY; 3], |m, p| {
        [m[0].min(p.x), m[1].min(p.y), m[2].min(p.z)]
    });
    let hi = set.iter().fold([f64::NEG_INFINITY; 3], |m, p| {
        [m[0].max(p.x), m[1].max(p.y), m[2].max(p.z)]
    });
    let objective = |x: &[f64; 3]| {
        let p = Point::new(x[0], x[1], x[2]);
        residuals(&p, set).map(|r| r * r).sum::<f64>()
    };
    let opts = PatternOptions {
        initial_step: 0.2,
        min_step: 1e-12,
        max_step: 0.5,
        max_evaluations: 20_000,
    };
    let mut found: Vec<Point> = Vec::new();
    for start in 0..STARTS {
        let mut rng = restart_rng(seed, start);
        let x0 = [0, 1, 2].map(|k| rng.gen_range(lo[k] - 1.0..=hi[k] + 1.0));
        let r = pattern_search(objective, x0, &opts, &mut rng);
        let p = polish(Point::new(r.x[0], r.x[1], r.x[2]), set);
        if max_residual(&p, set) <= tol && !found.iter().any(|q| q.distance(&p) < SAME_POINT) {
            found.push(p);
        }
    }
    found.sort_by(|a, b| {
        a.x.total_cmp(&b.x)
            .then(a.y.total_cmp(&b.y))
            .then(a.z.total_cmp(&b.z))
    });
    Ok(found)
}

/// Fourth points completing a unit equilateral triangle to an equilateral
/// quadruple.
pub fn extend_triangle_to_four(t: &[Point; 3], tol: f64) -> Result<Vec<Point>> {
    if !(tol > 0.0) {
        return Err(PettyError::InvalidInput(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        let d = t[i].distance(&t[j]);
        if (d - 1.0).abs() > tol {
            return Err(PettyError::InvalidInput(format!(
                "triangle side {i}-{j} has length {d}, not 1"
            )));
        }
    }
    equidistant_extensions(t, tol, 0)
}
