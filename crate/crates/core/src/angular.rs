//! The 1-angular distance between latitude circles of the unit sphere.
//!
//! For heights `z1`, `z2` the 1-angular distance `θ(z1, z2)` is the polar
//! angle gap at which two unit-sphere points at those heights are exactly at
//! distance 1. With `rₖ = 1 − |zₖ|`:
//!
//! * same hemisphere (`z1·z2 ≥ 0`, labelled so that `r2 ≤ r1`):
//!   `cos θ = 1 − (2(r2 − r1) + 1) / (2 r1 r2)`
//! * opposite hemispheres: `cos θ = (2(r1 + r2) − 1) / (2 r1 r2) − 1`
//!
//! Both expressions agree when either height is 0.

use crate::error::{PettyError, Result};
use crate::geometry::PettyPoint;
use crate::scalar::Real;

/// The `arccos` argument of `θ(z1, z2)` before any clamping.
///
/// Values above 1 mean the two latitude circles are everywhere more than 1
/// apart, values below −1 that they are everywhere closer than 1.
pub fn one_angular_cosine<T: Real>(z1: T, z2: T) -> Result<T> {
    let one = T::one();
    if !(z1 > -one && z1 < one && z2 > -one && z2 < one) {
        return Err(PettyError::Domain(format!(
            "heights must lie in (-1, 1), got z1 = {z1}, z2 = {z2}"
        )));
    }
    if (z1 - z2).abs() > one {
        return Err(PettyError::Domain(format!(
            "height gap |z1 - z2| = {} exceeds 1",
            (z1 - z2).abs()
        )));
    }
    let two = T::lit(2.0);
    let ra = one - z1.abs();
    let rb = one - z2.abs();
    let c = if z1 * z2 >= T::zero() {
        let (r1, r2) = if ra >= rb { (ra, rb) } else { (rb, ra) };
        one - (two * (r2 - r1) + one) / (two * r1 * r2)
    } else {
        (two * (ra + rb) - one) / (two * ra * rb) - one
    };
    Ok(c)
}

/// `θ(z1, z2)` in radians, in `[0, π]`.
pub fn one_angular_distance<T: Real>(z1: T, z2: T) -> Result<T> {
    let c = one_angular_cosine(z1, z2)?;
    let one = T::one();
    let clamped = if c > one {
        if c - one <= T::ARCCOS_SLACK {
            one
        } else {
            return Err(no_solution(z1, z2));
        }
    } else if c < -one {
        if -one - c <= T::ARCCOS_SLACK {
            -one
        } else {
            return Err(no_solution(z1, z2));
        }
    } else {
        c
    };
    Ok(clamped.acos())
}

fn no_solution<T: Real>(z1: T, z2: T) -> PettyError {
    PettyError::NoSolution {
        z1: z1.as_f64(),
        z2: z2.as_f64(),
    }
}

/// Angular distance `φ ∈ [0, π]` between the polar vectors of two points.
pub fn polar_gap<T: Real>(p: &PettyPoint<T>, q: &PettyPoint<T>) -> T {
    let cross = p.x * q.y - p.y * q.x;
    let dot = p.x * q.x + p.y * q.y;
    cross.abs().atan2(dot)
}

/// Checks that `φ ≥ θ(z1, z2) ⇔ ‖b1 − b2‖ ≥ 1` for a pair of sphere points.
///
/// Pairs within the boundary slack of distance 1 count as agreeing. When the
/// two latitude circles admit no pair at distance 1, the angular side is taken
/// as `cos φ ≤ c` with the unclamped cosine `c`, which is what the
/// equivalence reduces to.
pub fn distance_vs_angle_check<T: Real>(b1: &PettyPoint<T>, b2: &PettyPoint<T>) -> Result<bool> {
    for b in [b1, b2] {
        b.ensure_finite()?;
        if b.r() == T::zero() {
            return Err(PettyError::Domain("apex point has no polar angle".into()));
        }
        if (b.norm() - T::one()).abs() > T::BOUNDARY_SLACK {
            return Err(PettyError::Domain(format!(
                "point ({}, {}, {}) is not on the unit sphere",
                b.x, b.y, b.z
            )));
        }
    }
    let c = one_angular_cosine(b1.z, b2.z)?;
    let dist = b1.distance(b2);
    if (dist - T::one()).abs() <= T::BOUNDARY_SLACK {
        return Ok(true);
    }
    let cos_phi = polar_gap(b1, b2).cos();
    Ok((cos_phi <= c) == (dist >= T::one()))
}

fn check_regular_heights<T: Real>(points: &[PettyPoint<T>]) -> Result<()> {
    let half = T::lit(0.5);
    for (i, p) in points.iter().enumerate() {
        p.ensure_finite()?;
        if p.z < -half || p.z > half {
            return Err(PettyError::Domain(format!(
                "point {i} has height {} outside [-1/2, 1/2]",
                p.z
            )));
        }
    }
    Ok(())
}

/// Reorders points by non-decreasing polar angle in `[0, 2π)`; ties keep
/// their input order.
pub fn regular_form<T: Real>(points: &[PettyPoint<T>]) -> Result<Vec<PettyPoint<T>>> {
    check_regular_heights(points)?;
    let mut keyed: Vec<(T, PettyPoint<T>)> = points.iter().map(|p| (p.theta(), *p)).collect();
    keyed.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite angles"));
    Ok(keyed.into_iter().map(|(_, p)| p).collect())
}

/// Result of summing consecutive 1-angular distances around the circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularSum<T> {
    pub sum: T,
    /// `sum ≤ 2π` up to the boundary slack. Every 1-separated configuration
    /// satisfies this.
    pub satisfied: bool,
}

/// `Σ θ(zₖ, zₖ₊₁) + θ(zₙ, z₁)` over a configuration in regular form.
pub fn angular_sum_bound<T: Real>(points: &[PettyPoint<T>]) -> Result<AngularSum<T>> {
    let all: Vec<usize> = (0..points.len()).collect();
    angular_sum_bound_subsequence(points, &all)
}

/// The same cyclic sum restricted to the strictly increasing index sequence
/// `indices`.
pub fn angular_sum_bound_subsequence<T: Real>(
    points: &[PettyPoint<T>],
    indices: &[usize],
) -> Result<AngularSum<T>> {
    check_regular_heights(points)?;
    if indices.len() < 2 {
        return Err(PettyError::InvalidInput(format!(
            "angular sum needs at least 2 points, got {}",
            indices.len()
        )));
    }
    if indices.windows(2).any(|w| w[0] >= w[1]) || *indices.last().unwrap() >= points.len() {
        return Err(PettyError::InvalidInput(
            "subsequence indices must be strictly increasing and in range".into(),
        ));
    }
    let mut sum = T::zero();
    for k in 0..indices.len() {
        let (i, j) = (indices[k], indices[(k + 1) % indices.len()]);
        let (z1, z2) = (points[i].z, points[j].z);
        sum = sum
            + one_angular_distance(z1, z2).map_err(|e| match e {
                PettyError::NoSolution { z1, z2 } => PettyError::NoAngle { i, j, z1, z2 },
                other => other,
            })?;
    }
    Ok(AngularSum {
        sum,
        satisfied: sum <= T::TAU() + T::BOUNDARY_SLACK,
    })
}

/// Grid check that `θ(z1, z) + θ(z, z2)` over `z ∈ [z2, z1]` is smallest at
/// `z = 0`: no grid value lies below the value at 0, and the grid values do
/// not increase when moving towards 0 from either side.
pub fn middle_point_minimality<T: Real>(z1: T, z2: T, samples: usize) -> Result<bool> {
    let half = T::lit(0.5);
    if !(z1 < half && z1 >= T::zero() && z2 <= T::zero() && z2 > -half) {
        return Err(PettyError::Domain(format!(
            "need 1/2 > z1 >= 0 >= z2 > -1/2, got z1 = {z1}, z2 = {z2}"
        )));
    }
    if samples == 0 {
        return Err(PettyError::InvalidInput("samples must be positive".into()));
    }
    let grid: Vec<T> = if samples == 1 {
        vec![z2]
    } else {
        let step = (z1 - z2) / T::from_usize(samples - 1).unwrap();
        (0..samples)
            .map(|k| {
                if k + 1 == samples {
                    z1
                } else {
                    z2 + step * T::from_usize(k).unwrap()
                }
            })
            .collect()
    };
    let sums = grid
        .iter()
        .map(|&z| Ok(one_angular_distance(z1, z)? + one_angular_distance(z, z2)?))
        .collect::<Result<Vec<T>>>()?;

    // The minimum sits at a kink with unequal one-sided slopes, so the grid
    // point nearest 0 need not be the grid minimum. Compare against z = 0 itself.
    let at_zero = one_angular_distance(z1, T::zero())? + one_angular_distance(T::zero(), z2)?;
    let slack = T::ARCCOS_SLACK;
    if sums.iter().any(|&s| s + slack < at_zero) {
        return Ok(false);
    }
    // Walking outwards from 0 the sums must not decrease.
    let split = grid
        .iter()
        .position(|&z| z > T::zero())
        .unwrap_or(grid.len());
    let rising_right = sums[split..].windows(2).all(|w| w[1] + slack >= w[0]);
    let rising_left = sums[..split].windows(2).all(|w| w[0] + slack >= w[1]);
    Ok(rising_right && rising_left)
}
