//! Multi-start hill climbing for `n` unit-sphere points with the largest
//! possible minimum pairwise distance.
//!
//! Every restart owns a ChaCha stream derived from `(seed, restart index)` and
//! runs independently; restarts are executed in parallel and merged
//! deterministically (largest minimum distance, lowest restart index on ties).

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::{Claim, Configuration};
use crate::error::{PettyError, Result};
use crate::geometry::PettyPoint;

type Point = PettyPoint<f64>;

/// Margin above 1 that a minimum distance needs to count as strictly
/// separated.
pub const STRICT_MARGIN: f64 = 1e-9;

/// Sphere-membership tolerance attached to emitted configurations.
pub const EMITTED_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    pub n: usize,
    pub restarts: usize,
    pub iterations: u64,
    pub initial_step: f64,
    /// Per-iteration multiplier applied to the step length.
    pub cooling: f64,
    pub seed: u64,
    /// Pin the first two points to `±e₃`.
    pub freeze_poles: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            n: 14,
            restarts: 32,
            iterations: 200_000,
            initial_step: 0.25,
            cooling: 0.99998,
            seed: 7,
            freeze_poles: false,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(PettyError::InvalidInput(m));
        if self.n < 2 {
            return bad(format!("need at least 2 points, got {}", self.n));
        }
        if self.restarts == 0 || self.iterations == 0 {
            return bad("restarts and iterations must be positive".into());
        }
        if !(self.initial_step > 0.0 && self.initial_step.is_finite()) {
            return bad(format!(
                "initial step must be positive, got {}",
                self.initial_step
            ));
        }
        if !(self.cooling > 0.0 && self.cooling < 1.0) {
            return bad(format!(
                "cooling factor must lie in (0, 1), got {}",
                self.cooling
            ));
        }
        if self.freeze_poles && self.n < 2 {
            return bad("pole freezing needs two points".into());
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "restarts": self.restarts,
            "iterations": self.iterations,
            "initial_step": self.initial_step,
            "cooling": self.cooling,
            "seed": self.seed,
            "freeze_poles": self.freeze_poles,
        })
    }
}

/// Separation level reached by a configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Separation {
    Gt1,
    Ge1,
    Below1,
}

impl Separation {
    pub fn classify(min_distance: f64) -> Self {
        if min_distance > 1.0 + STRICT_MARGIN {
            Separation::Gt1
        } else if min_distance >= 1.0 {
            Separation::Ge1
        } else {
            Separation::Below1
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Separation::Gt1 => "gt-1",
            Separation::Ge1 => "ge-1",
            Separation::Below1 => "below-1",
        }
    }

    pub fn claim(&self) -> Claim {
        match self {
            Separation::Gt1 => Claim::SeparatedGt1,
            Separation::Ge1 => Claim::SeparatedGe1,
            Separation::Below1 => Claim::None,
        }
    }
}

/// Result of a single restart.
#[derive(Debug, Clone, PartialEq)]
pub struct RestartOutcome {
    pub restart: usize,
    pub points: Vec<Point>,
    pub min_distance: f64,
    pub worst_pair: (usize, usize),
    pub accepted: u64,
    /// Incumbent value after every strict improvement, in order.
    pub improvements: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub config: SearchConfig,
    pub best: Configuration<f64>,
    pub min_pairwise_distance: f64,
    pub worst_pair: (usize, usize),
    pub achieved: Separation,
    pub seed: u64,
    pub best_restart: usize,
    pub iterations_used: u64,
    /// Best minimum distance of every restart, by restart index.
    pub restart_values: Vec<f64>,
    pub wall_time: Duration,
}

impl SearchReport {
    /// Equality of everything except wall time.
    pub fn same_outcome(&self, other: &Self) -> bool {
        self.config == other.config
            && self.best == other.best
            && self.min_pairwise_distance.to_bits() == other.min_pairwise_distance.to_bits()
            && self.worst_pair == other.worst_pair
            && self.achieved == other.achieved
            && self.seed == other.seed
            && self.best_restart == other.best_restart
            && self.iterations_used == other.iterations_used
            && self
                .restart_values
                .iter()
                .map(|v| v.to_bits())
                .eq(other.restart_values.iter().map(|v| v.to_bits()))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "v": crate::config::SCHEMA_VERSION,
            "search": self.config.to_json(),
            "best": self.best.to_json(),
            "min_pairwise_distance": self.min_pairwise_distance,
            "worst_pair": [self.worst_pair.0, self.worst_pair.1],
            "achieved_separation": self.achieved.as_str(),
            "seed": self.seed,
            "best_restart": self.best_restart,
            "iterations_used": self.iterations_used,
            "restart_values": self.restart_values,
            "wall_time_ms": self.wall_time.as_millis() as u64,
        })
    }
}

/// Random number stream of one restart.
pub fn restart_rng(seed: u64, restart: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(restart as u64);
    rng
}

fn random_in_ball<R: Rng + ?Sized>(radius: f64, rng: &mut R) -> Point {
    loop {
        let v = Point::new(
            rng.gen_range(-1.0..=1.0),
            rng.gen_range(-1.0..=1.0),
            rng.gen_range(-1.0..=1.0),
        );
        let e2 = v.x * v.x + v.y * v.y + v.z * v.z;
        if e2 <= 1.0 {
            return v * radius;
        }
    }
}

/// A random point of the unit sphere.
pub fn random_sphere_point<R: Rng + ?Sized>(rng: &mut R) -> Point {
    loop {
        if let Some(p) = random_in_ball(1.0, rng).normalized() {
            return p;
        }
    }
}

/// Moves `p` by a random displacement of Euclidean length at most `step` and
/// projects the result back to the sphere by `q ↦ q/‖q‖`.
pub fn perturb_point<R: Rng + ?Sized>(p: &Point, step: f64, rng: &mut R) -> Point {
    if step == 0.0 {
        return *p;
    }
    let moved = *p + random_in_ball(step, rng);
    moved.normalized().unwrap_or(*p)
}

/// Moves one uniformly chosen point of `c`; every other point is returned
/// unchanged.
pub fn local_perturb<R: Rng + ?Sized>(
    c: &Configuration<f64>,
    step: f64,
    rng: &mut R,
) -> Configuration<f64> {
    let mut out = c.clone();
    if step == 0.0 {
        return out;
    }
    let idx = rng.gen_range(0..c.len());
    out.set_point(idx, perturb_point(&c.points()[idx], step, rng));
    out
}

/// Distance matrix with incremental minimum tracking.
struct Pairwise {
    n: usize,
    d: Vec<f64>,
}

impl Pairwise {
    fn new(points: &[Point]) -> Self {
        let n = points.len();
        let mut d = vec![0.0; n * n];
        for i in 0..n {
            for j in i + 1..n {
                let v = points[i].distance(&points[j]);
                d[i * n + j] = v;
                d[j * n + i] = v;
            }
        }
        Self { n, d }
    }

    /// Minimum over pairs with `i < j`, first pair on ties.
    fn min(&self) -> ((usize, usize), f64) {
        let mut best = ((0, 1), f64::INFINITY);
        for i in 0..self.n {
            let row = &self.d[i * self.n..(i + 1) * self.n];
            for (j, &v) in row.iter().enumerate().skip(i + 1) {
                if v < best.1 {
                    best = ((i, j), v);
                }
            }
        }
        best
    }

    /// Minimum with row/column `k` replaced by `row`.
    fn min_with_row(&self, k: usize, row: &[f64]) -> ((usize, usize), f64) {
        let mut best = ((0, 1), f64::INFINITY);
        for i in 0..self.n {
            for j in i + 1..self.n {
                let v = if i == k {
                    row[j]
                } else if j == k {
                    row[i]
                } else {
                    self.d[i * self.n + j]
                };
                if v < best.1 {
                    best = ((i, j), v);
                }
            }
        }
        best
    }

    fn set_row(&mut self, k: usize, row: &[f64]) {
        for (j, &v) in row.iter().enumerate() {
            if j != k {
                self.d[k * self.n + j] = v;
                self.d[j * self.n + k] = v;
            }
        }
    }
}

fn initial_points(cfg: &SearchConfig, rng: &mut ChaCha8Rng) -> Vec<Point> {
    let mut pts = Vec::with_capacity(cfg.n);
    if cfg.freeze_poles {
        pts.push(Point::apex());
        pts.push(-Point::apex());
    }
    while pts.len() < cfg.n {
        let p = random_sphere_point(rng);
        pts.push(p);
        // Antipodal partners start every pair at distance 2.
        if pts.len() < cfg.n {
            pts.push(-p);
        }
    }
    pts
}

/// Runs one restart of the hill climber.
pub fn hill_climb(cfg: &SearchConfig, restart: usize) -> Result<RestartOutcome> {
    cfg.validate()?;
    let mut rng = restart_rng(cfg.seed, restart);
    let mut points = initial_points(cfg, &mut rng);
    let n = points.len();
    let first_movable = if cfg.freeze_poles { 2 } else { 0 };
    let movable = n - first_movable;

    let mut pairwise = Pairwise::new(&points);
    let (mut worst, mut best) = pairwise.min();
    let mut improvements = vec![best];
    let mut accepted = 0u64;
    let mut row = vec![0.0; n];
    let floor = cfg.initial_step * 1e-6;
    let mut step = cfg.initial_step;

    if movable == 0 {
        return Ok(RestartOutcome {
            restart,
            points,
            min_distance: best,
            worst_pair: worst,
            accepted,
            improvements,
        });
    }

    for _ in 0..cfg.iterations {
        // Half of the moves go to an endpoint of the current closest pair.
        let k = if rng.gen_bool(0.5) {
            let pick = if rng.gen_bool(0.5) { worst.0 } else { worst.1 };
            if pick >= first_movable {
                pick
            } else {
                first_movable + rng.gen_range(0..movable)
            }
        } else {
            first_movable + rng.gen_range(0..movable)
        };
        let candidate = perturb_point(&points[k], step, &mut rng);
        for (j, p) in points.iter().enumerate() {
            row[j] = if j == k { 0.0 } else { candidate.distance(p) };
        }
        let (pair, value) = pairwise.min_with_row(k, &row);
        if value >= best {
            if value > best {
                improvements.push(value);
            }
            points[k] = candidate;
            pairwise.set_row(k, &row);
            worst = pair;
            best = value;
            accepted += 1;
        }
        step = (step * cfg.cooling).max(floor);
    }

    Ok(RestartOutcome {
        restart,
        points,
        min_distance: best,
        worst_pair: worst,
        accepted,
        improvements,
    })
}

/// Merges restart outcomes: largest minimum distance wins, ties go to the
/// lowest restart index.
pub fn merge_outcomes(outcomes: &[RestartOutcome]) -> Option<&RestartOutcome> {
    outcomes
        .iter()
        .fold(None, |acc: Option<&RestartOutcome>, o| match acc {
            Some(b) if b.min_distance > o.min_distance => Some(b),
            Some(b) if b.min_distance == o.min_distance && b.restart < o.restart => Some(b),
            _ => Some(o),
        })
}

/// Searches for `cfg.n` sphere points maximising the minimum pairwise
/// distance.
pub fn maximize_min_distance(cfg: &SearchConfig) -> Result<SearchReport> {
    cfg.validate()?;
    let started = Instant::now();
    let outcomes = (0..cfg.restarts)
        .into_par_iter()
        .map(|r| hill_climb(cfg, r))
        .collect::<Result<Vec<_>>>()?;
    let best = merge_outcomes(&outcomes).expect("at least one restart");

    // Recompute from the returned points rather than trusting the tracker.
    let (worst_pair, min_distance) = crate::geometry::min_pairwise(&best.points).expect("n >= 2");
    let achieved = Separation::classify(min_distance);
    let best_cfg = Configuration::new(best.points.clone(), achieved.claim(), EMITTED_TOLERANCE)?
        .with_meta("source", json!("search"))
        .with_meta("seed", json!(cfg.seed))
        .with_meta("restart", json!(best.restart));

    Ok(SearchReport {
        config: cfg.clone(),
        best: best_cfg,
        min_pairwise_distance: min_distance,
        worst_pair,
        achieved,
        seed: cfg.seed,
        best_restart: best.restart,
        iterations_used: cfg.iterations * cfg.restarts as u64,
        restart_values: outcomes.iter().map(|o| o.min_distance).collect(),
        wall_time: started.elapsed(),
    })
}
