//! Latitude zones of the unit sphere and the cardinality bounds a
//! 1-separated configuration obeys in them.
//!
//! `D0, D1, D1', D2, D2'` partition the sphere by height. The remaining zones
//! are finer bands inside `D0` and overlap it and each other.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{PettyError, Result};
use crate::geometry::PettyPoint;
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Zone {
    D1,
    D1p,
    D2,
    D2p,
    D0,
    D3,
    D3p,
    D0bar,
    D4,
    D4p,
    D5,
    D5p,
}

/// Height interval of a zone with its endpoint openness.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZoneInterval {
    pub z_lower: f64,
    pub z_upper: f64,
    pub lower_open: bool,
    pub upper_open: bool,
}

impl ZoneInterval {
    const fn new(z_lower: f64, lower_open: bool, z_upper: f64, upper_open: bool) -> Self {
        Self {
            z_lower,
            z_upper,
            lower_open,
            upper_open,
        }
    }

    pub fn contains<T: Real>(&self, z: T) -> bool {
        let (lo, hi) = (T::lit(self.z_lower), T::lit(self.z_upper));
        let above = if self.lower_open { z > lo } else { z >= lo };
        let below = if self.upper_open { z < hi } else { z <= hi };
        above && below
    }
}

const THIRD: f64 = 1.0 / 3.0;

impl Zone {
    pub const ALL: [Zone; 12] = [
        Zone::D1,
        Zone::D1p,
        Zone::D2,
        Zone::D2p,
        Zone::D0,
        Zone::D3,
        Zone::D3p,
        Zone::D0bar,
        Zone::D4,
        Zone::D4p,
        Zone::D5,
        Zone::D5p,
    ];

    /// The zones that partition the sphere.
    pub const PARTITION: [Zone; 5] = [Zone::D0, Zone::D1, Zone::D1p, Zone::D2, Zone::D2p];

    pub fn name(&self) -> &'static str {
        match self {
            Zone::D1 => "D1",
            Zone::D1p => "D1'",
            Zone::D2 => "D2",
            Zone::D2p => "D2'",
            Zone::D0 => "D0",
            Zone::D3 => "D3",
            Zone::D3p => "D3'",
            Zone::D0bar => "D0bar",
            Zone::D4 => "D4",
            Zone::D4p => "D4'",
            Zone::D5 => "D5",
            Zone::D5p => "D5'",
        }
    }

    pub fn interval(&self) -> ZoneInterval {
        use ZoneInterval as I;
        match self {
            Zone::D1 => I::new(0.5, true, 1.0, false),
            Zone::D1p => I::new(-1.0, false, -0.5, true),
            Zone::D2 => I::new(THIRD, true, 0.5, false),
            Zone::D2p => I::new(-0.5, false, -THIRD, true),
            Zone::D0 => I::new(-THIRD, false, THIRD, false),
            Zone::D3 => I::new(0.25, true, THIRD, false),
            Zone::D3p => I::new(-THIRD, false, -0.25, true),
            Zone::D0bar => I::new(-0.25, false, 0.25, false),
            Zone::D4 => I::new(0.245, true, THIRD, false),
            Zone::D4p => I::new(-THIRD, false, -0.245, true),
            Zone::D5 => I::new(0.224, true, THIRD, false),
            Zone::D5p => I::new(-THIRD, false, -0.224, true),
        }
    }
}

impl fmt::Display for Zone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Every zone whose height interval contains `p.z`.
///
/// `tol` is the sphere-membership tolerance; points off the sphere are
/// rejected. Heights are compared exactly against the zone endpoints.
pub fn classify<T: Real>(p: &PettyPoint<T>, tol: T) -> Result<Vec<Zone>> {
    p.ensure_finite()?;
    if (p.norm() - T::one()).abs() > tol {
        return Err(PettyError::Domain(format!(
            "point ({}, {}, {}) has norm {} and is not on the unit sphere",
            p.x,
            p.y,
            p.z,
            p.norm()
        )));
    }
    Ok(Zone::ALL
        .iter()
        .copied()
        .filter(|zone| zone.interval().contains(p.z))
        .collect())
}

/// Per-zone point counts of a configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZoneCensus {
    pub counts: BTreeMap<Zone, usize>,
    pub total: usize,
}

impl ZoneCensus {
    pub fn empty() -> Self {
        Self {
            counts: Zone::ALL.iter().map(|&z| (z, 0)).collect(),
            total: 0,
        }
    }

    /// Builds a census directly from counts, e.g. to probe the bound checker.
    pub fn from_counts(counts: &[(Zone, usize)], total: usize) -> Self {
        let mut c = Self::empty();
        for &(zone, n) in counts {
            c.counts.insert(zone, n);
        }
        c.total = total;
        c
    }

    pub fn count(&self, zone: Zone) -> usize {
        self.counts.get(&zone).copied().unwrap_or(0)
    }

    pub fn to_json(&self) -> Value {
        let counts: serde_json::Map<String, Value> = self
            .counts
            .iter()
            .map(|(z, n)| (z.name().to_owned(), json!(n)))
            .collect();
        json!({"counts": counts, "total": self.total})
    }
}

pub fn census<T: Real>(points: &[PettyPoint<T>], tol: T) -> Result<ZoneCensus> {
    let mut c = ZoneCensus::empty();
    for p in points {
        for zone in classify(p, tol)? {
            *c.counts.entry(zone).or_insert(0) += 1;
        }
    }
    c.total = points.len();
    Ok(c)
}

/// A cardinality bound that a census breaks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundViolation {
    /// Zone name, or `"total"`.
    pub subject: String,
    pub limit: usize,
    pub count: usize,
}

impl BoundViolation {
    pub fn rule(&self) -> String {
        format!("{} <= {}", self.subject, self.limit)
    }

    pub fn to_json(&self) -> Value {
        json!({"rule": self.rule(), "subject": self.subject, "limit": self.limit, "count": self.count})
    }
}

/// Upper bounds on the number of points of a 1-separated sphere subset.
pub const ZONE_LIMITS: [(Zone, usize); 5] = [
    (Zone::D1, 1),
    (Zone::D1p, 1),
    (Zone::D2, 3),
    (Zone::D2p, 3),
    (Zone::D0, 10),
];

/// Upper bound on the size of any 1-separated subset of the sphere.
pub const TOTAL_LIMIT: usize = 16;

/// Lists every zone bound the census violates. The bounds only apply to
/// 1-separated configurations; for others the list is empty.
pub fn check_bounds(census: &ZoneCensus, separated: bool) -> Vec<BoundViolation> {
    if !separated {
        return Vec::new();
    }
    let mut out: Vec<BoundViolation> = ZONE_LIMITS
        .iter()
        .filter(|&&(zone, limit)| census.count(zone) > limit)
        .map(|&(zone, limit)| BoundViolation {
            subject: zone.name().to_owned(),
            limit,
            count: census.count(zone),
        })
        .collect();
    if census.total > TOTAL_LIMIT {
        out.push(BoundViolation {
            subject: "total".into(),
            limit: TOTAL_LIMIT,
            count: census.total,
        });
    }
    out
}
