//! Derivative-free pattern search in three dimensions.
//!
//! Each poll tries the six directions `±q₁, ±q₂, ±q₃` of a freshly drawn
//! random orthonormal frame and moves to the first improving point. Redrawing
//! the frame keeps the search from stalling on the creases of max/min type
//! objectives, where every fixed coordinate direction can fail to descend.

use rand::Rng;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PatternOptions {
    pub initial_step: f64,
    pub min_step: f64,
    pub max_step: f64,
    pub max_evaluations: usize,
}

impl Default for PatternOptions {
    fn default() -> Self {
        Self {
            initial_step: 0.25,
            min_step: 1e-13,
            max_step: 1.0,
            max_evaluations: 50_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PatternResult {
    pub x: [f64; 3],
    pub value: f64,
    pub evaluations: usize,
}

#[allow(clippy::needless_range_loop)]
fn random_frame<R: Rng + ?Sized>(rng: &mut R) -> [[f64; 3]; 3] {
    loop {
        let mut v: [[f64; 3]; 3] = [[0.0; 3]; 3];
        for row in &mut v {
            for c in row.iter_mut() {
                *c = rng.gen_range(-1.0..1.0);
            }
        }
        // Gram-Schmidt.
        let mut ok = true;
        for i in 0..3 {
            for j in 0..i {
                let dot: f64 = (0..3).map(|k| v[i][k] * v[j][k]).sum();
                for k in 0..3 {
                    v[i][k] -= dot * v[j][k];
                }
            }
            let n = (0..3).map(|k| v[i][k] * v[i][k]).sum::<f64>().sqrt();
            if n < 1e-3 {
                ok = false;
                break;
            }
            for k in 0..3 {
                v[i][k] /= n;
            }
        }
        if ok {
            return v;
        }
    }
}

/// Minimises `f` from `x0`.
pub fn pattern_search<F, R>(f: F, x0: [f64; 3], opts: &PatternOptions, rng: &mut R) -> PatternResult
where
    F: Fn(&[f64; 3]) -> f64,
    R: Rng + ?Sized,
{
    let mut x = x0;
    let mut fx = f(&x);
    let mut evals = 1;
    let mut step = opts.initial_step;
    while step > opts.min_step && evals < opts.max_evaluations {
        let frame = random_frame(rng);
        let mut improved = false;
        'poll: for q in &frame {
            for sign in [1.0, -1.0] {
                let y = [
                    x[0] + sign * step * q[0],
                    x[1] + sign * step * q[1],
                    x[2] + sign * step * q[2],
                ];
                let fy = f(&y);
                evals += 1;
                if fy < fx {
                    x = y;
                    fx = fy;
                    improved = true;
                    break 'poll;
                }
            }
        }
        step = if improved {
            (step * 2.0).min(opts.max_step)
        } else {
            step * 0.5
        };
    }
    PatternResult {
        x,
        value: fx,
        evaluations: evals,
    }
}
