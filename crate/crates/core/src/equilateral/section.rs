//! Horizontal sections of balls. A ball of radius `ρ` around `c` meets the
//! plane `z = z0` in a disc of radius `ρ − |z0 − c.z|` around `(c.x, c.y)`.

use crate::geometry::PettyPoint;

type Point = PettyPoint<f64>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disc {
    pub cx: f64,
    pub cy: f64,
    pub rho: f64,
}

impl Disc {
    pub fn center_distance(&self, other: &Disc) -> f64 {
        (self.cx - other.cx).hypot(self.cy - other.cy)
    }

    /// `center distance − (ρ₁ + ρ₂)`: zero for externally tangent discs,
    /// negative when they overlap.
    pub fn tangency_gap(&self, other: &Disc) -> f64 {
        self.center_distance(other) - (self.rho + other.rho)
    }
}

/// Section of the ball `B(center, radius)` by the plane `z = z0`; `None` when
/// the plane misses it or the radius is not positive.
pub fn cone_cross_section(center: &Point, radius: f64, z0: f64) -> Option<Disc> {
    if !(radius > 0.0) {
        return None;
    }
    let rho = radius - (z0 - center.z).abs();
    (rho >= 0.0).then_some(Disc {
        cx: center.x,
        cy: center.y,
        rho,
    })
}

/// One pair of discs in a section.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectionPair {
    pub i: usize,
    pub j: usize,
    /// The plane height lies in the band where the sections of two balls at
    /// distance 1 touch: `max(lo, hi − ρ) ≤ z0 ≤ min(hi, lo + ρ)` for center
    /// heights `lo ≤ hi` and ball radius `ρ`.
    pub in_contact_band: bool,
    pub gap: f64,
}

/// Discs of the balls of `radius` around each point at height `z0`, and the
/// tangency gap of every pair whose discs both exist.
pub fn section(points: &[Point], radius: f64, z0: f64) -> (Vec<Option<Disc>>, Vec<SectionPair>) {
    let discs: Vec<Option<Disc>> = points
        .iter()
        .map(|p| cone_cross_section(p, radius, z0))
        .collect();
    let mut pairs = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if let (Some(a), Some(b)) = (discs[i], discs[j]) {
                let (lo, hi) = (points[i].z.min(points[j].z), points[i].z.max(points[j].z));
                pairs.push(SectionPair {
                    i,
                    j,
                    in_contact_band: z0 >= lo.max(hi - radius) && z0 <= hi.min(lo + radius),
                    gap: a.tangency_gap(&b),
                });
            }
        }
    }
    (discs, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn section_examples() {
        let o = Point::origin();
        assert_eq!(
            cone_cross_section(&o, 0.5, 0.0),
            Some(Disc {
                cx: 0.0,
                cy: 0.0,
                rho: 0.5
            })
        );
        assert_eq!(cone_cross_section(&o, 0.5, 0.6), None);
        assert_eq!(cone_cross_section(&o, 0.0, 0.0), None);
        assert_eq!(cone_cross_section(&o, 0.5, 0.5).unwrap().rho, 0.0);
    }

    #[test]
    fn unit_distance_balls_have_tangent_sections_between_their_heights() {
        // ‖a − b‖ = 0.7 + 0.3 = 1.
        let a = Point::new(0.0, 0.0, 0.0);
        let b = Point::new(0.7, 0.0, 0.3);
        for k in 0..=10 {
            let z0 = 0.3 * k as f64 / 10.0;
            let da = cone_cross_section(&a, 0.5, z0).unwrap();
            let db = cone_cross_section(&b, 0.5, z0).unwrap();
            assert!(da.tangency_gap(&db).abs() <= 1e-12);
        }
        // Below both centers the discs separate.
        let da = cone_cross_section(&a, 0.5, -0.1).unwrap();
        let db = cone_cross_section(&b, 0.5, -0.1).unwrap();
        assert!(da.tangency_gap(&db) > 0.1);

        let (discs, pairs) = section(&[a, b], 0.5, 0.1);
        assert!(!section(&[a, b], 0.5, -0.1).1[0].in_contact_band);
        assert!(discs.iter().all(Option::is_some));
        assert_eq!(pairs.len(), 1);
        assert!(pairs[0].in_contact_band && pairs[0].gap.abs() < 1e-12);
    }

    #[test]
    fn far_apart_heights_touch_in_the_middle_band() {
        // Height gap 3/4 >= 1/2: contact for 1/4 <= z0 <= 1/2.
        let a = Point::new(0.0, 0.0, 0.0);
        let b = Point::new(0.0, 0.25, 0.75);
        for k in 0..=8 {
            let z0 = 0.25 + 0.25 * k as f64 / 8.0;
            let (_, pairs) = section(&[a, b], 0.5, z0);
            assert!(pairs[0].in_contact_band);
            assert!(pairs[0].gap.abs() <= 1e-12, "z0 = {z0}: {}", pairs[0].gap);
        }
        // Outside the band one of the sections is empty.
        assert!(section(&[a, b], 0.5, 0.2).1.is_empty());
    }
}
