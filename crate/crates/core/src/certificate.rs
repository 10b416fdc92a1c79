//! Checking configuration claims by exhaustive pairwise evaluation, plus the
//! known certificates shipped with the crate.

use serde_json::{json, Value};

use crate::config::{point_to_json, Claim, Configuration};
use crate::error::{PettyError, Result};
use crate::geometry::PettyPoint;
use crate::scalar::Real;

/// Outcome of [`verify_certificate`].
#[derive(Debug, Clone, PartialEq)]
pub struct CertificateCheck<T> {
    pub ok: bool,
    /// Pair with the smallest distance for separation claims, or the largest
    /// deviation from 1 for equilateral claims. Lexicographically first on
    /// ties; `None` for a single point.
    pub worst_pair: Option<(usize, usize)>,
    pub worst_distance: Option<T>,
    /// Whether every point lies on the unit sphere within the tolerance.
    /// Always `true` for equilateral claims, which are not sphere subsets.
    pub on_sphere: bool,
    pub max_norm_error: T,
}

impl CertificateCheck<f64> {
    pub fn to_json(&self) -> Value {
        json!({
            "ok": self.ok,
            "worst_pair": self.worst_pair.map(|(i, j)| vec![i, j]),
            "worst_distance": self.worst_distance,
            "on_sphere": self.on_sphere,
            "max_norm_error": self.max_norm_error,
        })
    }
}

/// Verifies the configuration's claim with a zero strictness margin.
pub fn verify_certificate<T: Real>(c: &Configuration<T>) -> Result<CertificateCheck<T>> {
    verify_certificate_with_margin(c, T::zero())
}

/// Verifies the claim of `c`:
///
/// * `separated-gt-1`: every distance `> 1 + margin`, every point on the sphere.
/// * `separated-ge-1`: every distance `≥ 1 − tolerance`, every point on the sphere.
/// * `equilateral-1`: every distance within `tolerance` of 1.
pub fn verify_certificate_with_margin<T: Real>(
    c: &Configuration<T>,
    margin: T,
) -> Result<CertificateCheck<T>> {
    let tol = c.tolerance();
    let pts = c.points();
    let one = T::one();
    let max_norm_error = pts
        .iter()
        .map(|p| (p.norm() - one).abs())
        .fold(T::zero(), T::max);

    let (worst_pair, worst_distance, pairs_ok) = match c.claim {
        Claim::None => {
            return Err(PettyError::InvalidInput(
                "configuration makes no claim to verify".into(),
            ))
        }
        Claim::SeparatedGt1 | Claim::SeparatedGe1 => {
            let worst = crate::geometry::min_pairwise(pts);
            let ok = match worst {
                None => true,
                Some((_, d)) if c.claim == Claim::SeparatedGt1 => d > one + margin,
                Some((_, d)) => d >= one - tol,
            };
            (worst.map(|w| w.0), worst.map(|w| w.1), ok)
        }
        Claim::Equilateral1 => {
            let mut worst: Option<((usize, usize), T, T)> = None;
            for i in 0..pts.len() {
                for j in i + 1..pts.len() {
                    let d = pts[i].distance(&pts[j]);
                    let dev = (d - one).abs();
                    match worst {
                        Some((_, _, w)) if dev <= w => {}
                        _ => worst = Some(((i, j), d, dev)),
                    }
                }
            }
            let ok = worst.is_none_or(|w| w.2 <= tol);
            (worst.map(|w| w.0), worst.map(|w| w.1), ok)
        }
    };
    let on_sphere = !c.claim.is_separation() || max_norm_error <= tol;
    Ok(CertificateCheck {
        ok: pairs_ok && on_sphere,
        worst_pair,
        worst_distance,
        on_sphere,
        max_norm_error,
    })
}

/// The 14-point 1⁺-separated subset of the unit sphere: eight points around
/// the equatorial band at 45° steps, four near the `z = ±1/2` circles and
/// the two apexes.
pub fn fourteen_point_set() -> Configuration<f64> {
    let cyl = |r: f64, deg: f64, z: f64| {
        PettyPoint::from_cylindrical_deg(r, deg, z).expect("valid literal")
    };
    let mut pts = Vec::with_capacity(14);
    for k in 0..8 {
        let deg = 45.0 * k as f64;
        pts.push(match k % 4 {
            0 => cyl(0.7, deg, 0.3),
            2 => cyl(0.7, deg, -0.3),
            _ => cyl(1.0, deg, 0.0),
        });
    }
    pts.push(cyl(0.501, 85.0, 0.499));
    pts.push(cyl(0.501, 265.0, 0.499));
    pts.push(cyl(0.501, 175.0, -0.499));
    pts.push(cyl(0.501, 355.0, -0.499));
    pts.push(PettyPoint::apex());
    pts.push(-PettyPoint::apex());
    Configuration::new(pts, Claim::SeparatedGt1, 1e-12)
        .expect("non-empty")
        .with_meta("name", json!("fourteen-point"))
}

/// Center of [`equilateral_with_center`]: `(0, 0, (1 − √2/2)/2)`.
pub fn equilateral_center() -> PettyPoint<f64> {
    PettyPoint::new(0.0, 0.0, 0.5 * (1.0 - std::f64::consts::SQRT_2 / 2.0))
}

/// A maximal 4-point 1-equilateral set with a center, the common distance
/// to which is `1 − √2/4`.
pub fn equilateral_with_center() -> Configuration<f64> {
    let h = 0.5 * (2.0 - std::f64::consts::SQRT_2);
    let pts = vec![
        PettyPoint::new(0.0, 0.5, 0.0),
        PettyPoint::new(0.0, -0.5, 0.0),
        PettyPoint::new(0.5, 0.0, h),
        PettyPoint::new(-0.5, 0.0, h),
    ];
    Configuration::new(pts, Claim::Equilateral1, 1e-12)
        .expect("non-empty")
        .with_meta("name", json!("equilateral-with-center"))
        .with_meta("center", point_to_json(&equilateral_center()))
        .with_meta(
            "center_distance",
            json!(1.0 - std::f64::consts::SQRT_2 / 4.0),
        )
}

/// The fourth point `(0, √3/6, 1 − √3/3)` over the Euclidean unit triangle of
/// [`equilateral_without_center`]. Its mirror image in the plane `z = 0`
/// also works; the point reflection `−D` does not.
pub fn triangle_apex() -> PettyPoint<f64> {
    let s3 = 3f64.sqrt();
    PettyPoint::new(0.0, s3 / 6.0, 1.0 - s3 / 3.0)
}

/// The equatorial Euclidean unit triangle.
pub fn equatorial_triangle() -> [PettyPoint<f64>; 3] {
    [
        PettyPoint::new(0.5, 0.0, 0.0),
        PettyPoint::new(-0.5, 0.0, 0.0),
        PettyPoint::new(0.0, 3f64.sqrt() / 2.0, 0.0),
    ]
}

/// A maximal 4-point 1-equilateral set with no center: the equatorial
/// triangle plus [`triangle_apex`].
pub fn equilateral_without_center() -> Configuration<f64> {
    let mut pts = equatorial_triangle().to_vec();
    pts.push(triangle_apex());
    let barycenter = PettyPoint::new(0.0, 3f64.sqrt() / 6.0, 0.0);
    Configuration::new(pts, Claim::Equilateral1, 1e-12)
        .expect("non-empty")
        .with_meta("name", json!("equilateral-without-center"))
        .with_meta("triangle_barycenter", point_to_json(&barycenter))
}
