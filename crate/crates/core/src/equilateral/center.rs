//! Numerical search for a center, a point equidistant from every point of a
//! set.

use rand::Rng;
use rayon::prelude::*;

use super::triangle::EquilateralQuintuple;
use crate::error::{PettyError, Result};
use crate::geometry::PettyPoint;
use crate::pattern::{pattern_search, PatternOptions};
use crate::search::restart_rng;

type Point = PettyPoint<f64>;

/// `maxᵢ ‖p − aᵢ‖ − minᵢ ‖p − aᵢ‖`; zero exactly at the centers of `set`.
pub fn center_spread(set: &[Point], p: &Point) -> f64 {
    let (lo, hi) = set
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), a| {
            let d = p.distance(a);
            (lo.min(d), hi.max(d))
        });
    if set.is_empty() {
        0.0
    } else {
        hi - lo
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CenterEvidence {
    /// Smallest spread found over all restarts.
    pub lower_estimate: f64,
    pub best_point: Point,
    pub best_restart: usize,
}

/// Axis-aligned bounding box of `set`, inflated by `margin`.
pub fn inflated_box(set: &[Point], margin: f64) -> ([f64; 3], [f64; 3]) {
    let lo = set.iter().fold([f64::INFINITY; 3], |m, p| {
        [m[0].min(p.x), m[1].min(p.y), m[2].min(p.z)]
    });
    let hi = set.iter().fold([f64::NEG_INFINITY; 3], |m, p| {
        [m[0].max(p.x), m[1].max(p.y), m[2].max(p.z)]
    });
    (lo.map(|v| v - margin), hi.map(|v| v + margin))
}

/// Multi-start minimisation of [`center_spread`].
///
/// Even restarts start uniformly in the bounding box of `set` inflated by 1;
/// odd restarts start with their height drawn from `slab` when one is given.
/// Restarts run in parallel and merge deterministically.
pub fn no_center_evidence_for_set(
    set: &[Point],
    slab: Option<(f64, f64)>,
    restarts: usize,
    seed: u64,
) -> Result<CenterEvidence> {
    if set.is_empty() {
        return Err(PettyError::InvalidInput("empty point set".into()));
    }
    if restarts == 0 {
        return Err(PettyError::InvalidInput("restarts must be positive".into()));
    }
    let (lo, hi) = inflated_box(set, 1.0);
    let opts = PatternOptions::default();
    let runs: Vec<(usize, f64, Point)> = (0..restarts)
        .into_par_iter()
        .map(|r| {
            let mut rng = restart_rng(seed, r);
            let mut x0 = [0, 1, 2].map(|k| rng.gen_range(lo[k]..=hi[k]));
            if let (Some((zlo, zhi)), true) = (slab, r % 2 == 1) {
                x0[2] = rng.gen_range(zlo.min(zhi)..=zlo.max(zhi));
            }
            let res = pattern_search(
                |x: &[f64; 3]| center_spread(set, &Point::new(x[0], x[1], x[2])),
                x0,
                &opts,
                &mut rng,
            );
            (r, res.value, Point::new(res.x[0], res.x[1], res.x[2]))
        })
        .collect();
    let best = runs
        .iter()
        .min_by(|a, b| a.1.total_cmp(&b.1).then(a.0.cmp(&b.0)))
        .expect("restarts > 0");
    Ok(CenterEvidence {
        lower_estimate: best.1,
        best_point: best.2,
        best_restart: best.0,
    })
}

/// Center search for a 5-point equilateral set, with starts also drawn from
/// the slab `1/2 − d ≤ z ≤ 1/2` where any center would have to lie.
pub fn no_center_evidence(
    q: &EquilateralQuintuple,
    restarts: usize,
    seed: u64,
) -> Result<CenterEvidence> {
    no_center_evidence_for_set(&q.points, Some(q.slab()), restarts, seed)
}
