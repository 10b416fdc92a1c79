//! The planar ellipse of points at distance 1 from both the origin and
//! `(0, d, 1 − d)`.

use crate::error::{PettyError, Result};
use crate::geometry::PettyPoint;
use crate::roots::bisect;

type Point = PettyPoint<f64>;

/// Ellipse of candidate points for submersion `d ∈ (0, 1/2]`.
///
/// It lies in the plane `z = a·y + b` with `a = −d/(d+1)`, `b = 1/(2(1+d))` and
/// satisfies `x² = (2d+1)/(4(d+1)²)·(−4y² + 4dy + 2d + 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipseFamily {
    pub d: f64,
    pub a: f64,
    pub b: f64,
}

impl EllipseFamily {
    pub fn new(d: f64) -> Result<Self> {
        if !(d > 0.0 && d <= 0.5) {
            return Err(PettyError::InvalidInput(format!(
                "submersion must lie in (0, 1/2], got {d}"
            )));
        }
        Ok(Self {
            d,
            a: -d / (d + 1.0),
            b: 1.0 / (2.0 * (1.0 + d)),
        })
    }

    /// The fixed point `(0, d, 1 − d)`.
    pub fn upper_center(&self) -> Point {
        Point::new(0.0, self.d, 1.0 - self.d)
    }

    /// The fixed point at the origin.
    pub fn lower_center(&self) -> Point {
        Point::origin()
    }

    /// Range of `y` over which the ellipse is real: `[−1/2, d + 1/2]`.
    pub fn y_support(&self) -> (f64, f64) {
        (-0.5, self.d + 0.5)
    }

    fn radicand(&self, y: f64) -> f64 {
        -4.0 * y * y + 4.0 * self.d * y + 2.0 * self.d + 1.0
    }

    /// The ellipse point with ordinate `y` on the branch `sign·x ≥ 0`.
    pub fn point(&self, y: f64, sign: f64) -> Result<Point> {
        if !y.is_finite() || sign == 0.0 || !sign.is_finite() {
            return Err(PettyError::InvalidInput(format!(
                "bad ellipse parameter y = {y}, sign = {sign}"
            )));
        }
        let mut rad = self.radicand(y);
        if rad < 0.0 {
            if rad >= -1e-12 {
                rad = 0.0;
            } else {
                return Err(PettyError::Domain(format!(
                    "y = {y} lies outside the ellipse support [{}, {}]",
                    -0.5,
                    self.d + 0.5
                )));
            }
        }
        let d = self.d;
        let x = ((2.0 * d + 1.0) / (4.0 * (d + 1.0) * (d + 1.0)) * rad).sqrt();
        Ok(Point::new(sign.signum() * x, y, self.a * y + self.b))
    }

    /// Angular parametrisation `y = d/2 + (1+d)/2·cos t`,
    /// `x = √(2d+1)/2·sin t`, equivalent to [`EllipseFamily::point`] with
    /// `sign = sign(sin t)`.
    pub fn point_at_angle(&self, t: f64) -> Point {
        let d = self.d;
        let (s, c) = t.sin_cos();
        let y = 0.5 * d + 0.5 * (1.0 + d) * c;
        let x = 0.5 * (2.0 * d + 1.0).sqrt() * s;
        Point::new(x, y, self.a * y + self.b)
    }

    /// The four axis vertices in angular order: `A₁` (top, `y = −1/2`),
    /// `A₂` (`x < 0`), `A₃` (bottom, `y = d + 1/2`), `A₄` (`x > 0`).
    pub fn vertices(&self) -> [Point; 4] {
        use std::f64::consts::PI;
        [PI, 1.5 * PI, 0.0, 0.5 * PI].map(|t| {
            let mut p = self.point_at_angle(t);
            // The cosine/sine of these angles are not exact in floating point.
            if t == PI || t == 0.0 {
                p.x = 0.0;
            }
            p
        })
    }
}

/// The endpoints of the submersion interval admitting a 5-point equilateral
/// set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FeasibleInterval {
    /// Upper endpoint `(√2 − 1)/4`.
    pub d1: f64,
    /// Lower endpoint, the real root of `16d³ + 24d² + 8d − 1`.
    pub d2: f64,
}

impl FeasibleInterval {
    pub fn contains(&self, d: f64) -> bool {
        d >= self.d2 && d <= self.d1
    }
}

pub fn endpoint_cubic(d: f64) -> f64 {
    ((16.0 * d + 24.0) * d + 8.0) * d - 1.0
}

pub fn feasibility_endpoints() -> FeasibleInterval {
    let d1 = (std::f64::consts::SQRT_2 - 1.0) / 4.0;
    let d2 = bisect(endpoint_cubic, 0.0, 0.25, 1e-16).expect("cubic changes sign on (0, 1/4)");
    FeasibleInterval { d1, d2 }
}
