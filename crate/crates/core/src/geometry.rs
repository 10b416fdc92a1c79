//! Points, norm and distance of the Petty space, where
//! `‖(x, y, z)‖ = √(x² + y²) + |z|`.
//!
//! The unit ball is a double cone over a unit disc. Points are stored in
//! Cartesian form; the cylindrical coordinates `(r, θ, z)` are derived on
//! demand.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{PettyError, Result};
use crate::scalar::Real;

/// A point of the space, stored in Cartesian coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PettyPoint<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Real> PettyPoint<T> {
    pub const fn new(x: T, y: T, z: T) -> Self {
        Self { x, y, z }
    }

    /// Same as [`PettyPoint::new`] but rejects non-finite coordinates.
    pub fn try_new(x: T, y: T, z: T) -> Result<Self> {
        let p = Self { x, y, z };
        p.ensure_finite()?;
        Ok(p)
    }

    pub fn origin() -> Self {
        Self::new(T::zero(), T::zero(), T::zero())
    }

    /// The apex `e₃ = (0, 0, 1)`.
    pub fn apex() -> Self {
        Self::new(T::zero(), T::zero(), T::one())
    }

    /// Builds a point from `(r, θ, z)` with `θ` in radians.
    pub fn from_cylindrical(r: T, theta: T, z: T) -> Result<Self> {
        if !(r.is_finite() && theta.is_finite() && z.is_finite()) {
            return Err(PettyError::InvalidInput(format!(
                "non-finite cylindrical coordinates ({r}, {theta}, {z})"
            )));
        }
        if r < T::zero() {
            return Err(PettyError::InvalidInput(format!(
                "negative polar radius {r}"
            )));
        }
        let (s, c) = theta.sin_cos();
        Ok(Self::new(r * c, r * s, z))
    }

    /// Like [`PettyPoint::from_cylindrical`] with the polar angle in degrees.
    pub fn from_cylindrical_deg(r: T, theta_deg: T, z: T) -> Result<Self> {
        Self::from_cylindrical(r, theta_deg.to_radians(), z)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub(crate) fn ensure_finite(&self) -> Result<()> {
        if self.is_finite() {
            Ok(())
        } else {
            Err(PettyError::InvalidInput(format!(
                "non-finite coordinate in ({}, {}, {})",
                self.x, self.y, self.z
            )))
        }
    }

    /// Polar radius `√(x² + y²)`.
    #[inline]
    pub fn r(&self) -> T {
        (self.x * self.x + self.y * self.y).sqrt()
    }

    /// Polar angle in `[0, 2π)`; 0 on the z-axis.
    pub fn theta(&self) -> T {
        if self.x == T::zero() && self.y == T::zero() {
            return T::zero();
        }
        normalize_angle(self.y.atan2(self.x))
    }

    /// `√(x² + y²) + |z|`, without the finiteness check of [`petty_norm`].
    #[inline]
    pub fn norm(&self) -> T {
        self.r() + self.z.abs()
    }

    /// Distance `‖self − other‖`. Symmetric bit for bit.
    #[inline]
    pub fn distance(&self, other: &Self) -> T {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        (dx * dx + dy * dy).sqrt() + (self.z - other.z).abs()
    }

    /// Rotation by `angle` radians about the z-axis.
    pub fn rotate_z(&self, angle: T) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(c * self.x - s * self.y, s * self.x + c * self.y, self.z)
    }

    /// Reflection across the xy-plane.
    pub fn reflect_xy(&self) -> Self {
        Self::new(self.x, self.y, -self.z)
    }

    /// Radial projection `p / ‖p‖` onto the unit sphere. `None` for the origin.
    pub fn normalized(&self) -> Option<Self> {
        let n = self.norm();
        if n > T::zero() && n.is_finite() {
            Some(Self::new(self.x / n, self.y / n, self.z / n))
        } else {
            None
        }
    }
}

/// Reduces an angle to `[0, 2π)` by floor division; a result that rounds to
/// `2π` maps to 0.
pub fn normalize_angle<T: Real>(theta: T) -> T {
    let tau = T::TAU();
    let t = theta - tau * (theta / tau).floor();
    if t >= tau || t < T::zero() {
        T::zero()
    } else {
        t
    }
}

/// `‖p‖ = r + |z|`.
pub fn petty_norm<T: Real>(p: &PettyPoint<T>) -> Result<T> {
    p.ensure_finite()?;
    Ok(p.norm())
}

/// `‖p − q‖`, computed in Cartesian form.
pub fn petty_distance<T: Real>(p: &PettyPoint<T>, q: &PettyPoint<T>) -> Result<T> {
    p.ensure_finite()?;
    q.ensure_finite()?;
    Ok(p.distance(q))
}

/// Whether `|‖p‖ − 1| ≤ tol`.
pub fn on_unit_sphere<T: Real>(p: &PettyPoint<T>, tol: T) -> Result<bool> {
    if !(tol > T::zero()) {
        return Err(PettyError::InvalidInput(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    Ok((petty_norm(p)? - T::one()).abs() <= tol)
}

/// Smallest pairwise distance and the lexicographically first pair attaining
/// it. `None` for fewer than two points.
pub fn min_pairwise<T: Real>(points: &[PettyPoint<T>]) -> Option<((usize, usize), T)> {
    let mut best: Option<((usize, usize), T)> = None;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d = points[i].distance(&points[j]);
            match best {
                Some((_, b)) if d >= b => {}
                _ => best = Some(((i, j), d)),
            }
        }
    }
    best
}

impl<T: Real> Add for PettyPoint<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<T: Real> Sub for PettyPoint<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<T: Real> Neg for PettyPoint<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}

impl<T: Real> Mul<T> for PettyPoint<T> {
    type Output = Self;
    fn mul(self, s: T) -> Self {
        Self::new(self.x * s, self.y * s, self.z * s)
    }
}
