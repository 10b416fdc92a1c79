//! Point configurations and their JSON file format.
//!
//! A configuration file looks like
//!
//! ```json
//! {"v": 1, "claim": "separated-gt-1", "tolerance": 1e-12,
//!  "points": [{"x": 0.0, "y": 0.0, "z": 1.0}, {"r": 1.0, "theta": 0.785, "z": 0.0}]}
//! ```
//!
//! A point is written either as `{"x", "y", "z"}` or cylindrically as
//! `{"r", "theta", "z"}` (radians) or `{"r", "theta_deg", "z"}`. Emitted files
//! always use the Cartesian form, so persisted data carries no angle unit.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::error::{PettyError, Result};
use crate::geometry::PettyPoint;
use crate::scalar::Real;

/// Schema version written into every emitted file.
pub const SCHEMA_VERSION: u64 = 1;

/// Property a configuration claims to have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Claim {
    /// All pairwise distances are at least 1.
    SeparatedGe1,
    /// All pairwise distances exceed 1.
    SeparatedGt1,
    /// All pairwise distances equal 1.
    Equilateral1,
    None,
}

impl Claim {
    pub fn as_str(&self) -> &'static str {
        match self {
            Claim::SeparatedGe1 => "separated-ge-1",
            Claim::SeparatedGt1 => "separated-gt-1",
            Claim::Equilateral1 => "equilateral-1",
            Claim::None => "none",
        }
    }

    pub fn is_separation(&self) -> bool {
        matches!(self, Claim::SeparatedGe1 | Claim::SeparatedGt1)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Claim {
    type Err = PettyError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "separated-ge-1" => Ok(Claim::SeparatedGe1),
            "separated-gt-1" => Ok(Claim::SeparatedGt1),
            "equilateral-1" => Ok(Claim::Equilateral1),
            "none" => Ok(Claim::None),
            other => Err(PettyError::InvalidInput(format!("unknown claim {other:?}"))),
        }
    }
}

/// An ordered, non-empty point set together with the property it claims and
/// the tolerance that claim is checked at.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration<T> {
    points: Vec<PettyPoint<T>>,
    pub claim: Claim,
    tolerance: T,
    /// Free-form annotations carried through the file format.
    pub meta: Map<String, Value>,
}

impl<T: Real> Configuration<T> {
    pub fn new(points: Vec<PettyPoint<T>>, claim: Claim, tolerance: T) -> Result<Self> {
        if points.is_empty() {
            return Err(PettyError::InvalidInput(
                "configuration has no points".into(),
            ));
        }
        if !(tolerance > T::zero()) || !tolerance.is_finite() {
            return Err(PettyError::InvalidInput(format!(
                "configuration tolerance must be positive, got {tolerance}"
            )));
        }
        if let Some(p) = points.iter().find(|p| !p.is_finite()) {
            p.ensure_finite()?;
        }
        Ok(Self {
            points,
            claim,
            tolerance,
            meta: Map::new(),
        })
    }

    pub fn with_meta(mut self, key: &str, value: Value) -> Self {
        self.meta.insert(key.to_owned(), value);
        self
    }

    pub fn points(&self) -> &[PettyPoint<T>] {
        &self.points
    }

    pub fn into_points(self) -> Vec<PettyPoint<T>> {
        self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn tolerance(&self) -> T {
        self.tolerance
    }

    /// Replaces the point at `index`, keeping every other point untouched.
    pub(crate) fn set_point(&mut self, index: usize, p: PettyPoint<T>) {
        self.points[index] = p;
    }
}

pub fn point_to_json(p: &PettyPoint<f64>) -> Value {
    json!({"x": p.x, "y": p.y, "z": p.z})
}

pub fn point_from_json(v: &Value) -> Result<PettyPoint<f64>> {
    let obj = v
        .as_object()
        .ok_or_else(|| PettyError::Parse(format!("point must be an object, got {v}")))?;
    let num = |key: &str| -> Result<Option<f64>> {
        match obj.get(key) {
            None => Ok(None),
            Some(x) => x
                .as_f64()
                .map(Some)
                .ok_or_else(|| PettyError::Parse(format!("point field {key:?} is not a number"))),
        }
    };
    let (x, y, z) = (num("x")?, num("y")?, num("z")?);
    let (r, theta, theta_deg) = (num("r")?, num("theta")?, num("theta_deg")?);
    let z = z.ok_or_else(|| PettyError::Parse(format!("point {v} has no \"z\"")))?;
    let cartesian = x.is_some() || y.is_some();
    let cylindrical = r.is_some() || theta.is_some() || theta_deg.is_some();
    match (cartesian, cylindrical) {
        (true, false) => match (x, y) {
            (Some(x), Some(y)) => PettyPoint::try_new(x, y, z),
            _ => Err(PettyError::Parse(format!(
                "point {v} needs both \"x\" and \"y\""
            ))),
        },
        (false, true) => match (r, theta, theta_deg) {
            (Some(r), Some(t), None) => PettyPoint::from_cylindrical(r, t, z),
            (Some(r), None, Some(t)) => PettyPoint::from_cylindrical_deg(r, t, z),
            _ => Err(PettyError::Parse(format!(
                "cylindrical point {v} needs \"r\" and exactly one of \"theta\", \"theta_deg\""
            ))),
        },
        (true, true) => Err(PettyError::Parse(format!(
            "point {v} mixes Cartesian and cylindrical fields"
        ))),
        (false, false) => Err(PettyError::Parse(format!("point {v} has no coordinates"))),
    }
}

impl Configuration<f64> {
    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("v".into(), json!(SCHEMA_VERSION));
        obj.insert("claim".into(), json!(self.claim.as_str()));
        obj.insert("tolerance".into(), json!(self.tolerance));
        obj.insert(
            "points".into(),
            Value::Array(self.points.iter().map(point_to_json).collect()),
        );
        if !self.meta.is_empty() {
            obj.insert("meta".into(), Value::Object(self.meta.clone()));
        }
        Value::Object(obj)
    }

    /// Parses a configuration document. A search report (an object with a
    /// `"best"` member) is accepted and yields its best configuration.
    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| PettyError::Parse("configuration must be a JSON object".into()))?;
        if let Some(best) = obj.get("best") {
            return Self::from_json(best);
        }
        if let Some(ver) = obj.get("v") {
            if ver.as_u64() != Some(SCHEMA_VERSION) {
                return Err(PettyError::Parse(format!(
                    "unsupported schema version {ver}"
                )));
            }
        }
        let claim = match obj.get("claim") {
            None => Claim::None,
            Some(c) => c
                .as_str()
                .ok_or_else(|| PettyError::Parse("\"claim\" must be a string".into()))?
                .parse()?,
        };
        let tolerance = match obj.get("tolerance") {
            None => 1e-9,
            Some(t) => t
                .as_f64()
                .ok_or_else(|| PettyError::Parse("\"tolerance\" must be a number".into()))?,
        };
        let points = obj
            .get("points")
            .and_then(Value::as_array)
            .ok_or_else(|| PettyError::Parse("missing \"points\" array".into()))?
            .iter()
            .map(point_from_json)
            .collect::<Result<Vec<_>>>()?;
        let mut cfg = Self::new(points, claim, tolerance)?;
        if let Some(Value::Object(meta)) = obj.get("meta") {
            cfg.meta = meta.clone();
        }
        Ok(cfg)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(s)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let text = serde_json::to_string_pretty(&self.to_json())?;
        std::fs::write(path, text + "\n")?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_bad_tolerance() {
        assert!(Configuration::<f64>::new(vec![], Claim::None, 1e-9).is_err());
        let p = vec![PettyPoint::apex()];
        assert!(Configuration::new(p.clone(), Claim::None, 0.0).is_err());
        assert!(Configuration::new(p.clone(), Claim::None, -1.0).is_err());
        assert!(Configuration::new(p, Claim::None, 1e-9).is_ok());
    }

    #[test]
    fn claim_names() {
        for c in [
            Claim::SeparatedGe1,
            Claim::SeparatedGt1,
            Claim::Equilateral1,
            Claim::None,
        ] {
            assert_eq!(c.as_str().parse::<Claim>().unwrap(), c);
        }
        assert!("separated".parse::<Claim>().is_err());
    }

    #[test]
    fn point_forms() {
        let c = point_from_json(&json!({"x": 1.0, "y": 2.0, "z": 3.0})).unwrap();
        assert_eq!(c, PettyPoint::new(1.0, 2.0, 3.0));

        let r = point_from_json(&json!({"r": 1.0, "theta": std::f64::consts::FRAC_PI_2, "z": 0.0}))
            .unwrap();
        assert!(r.x.abs() < 1e-16 && (r.y - 1.0).abs() < 1e-16);

        let d = point_from_json(&json!({"r": 0.501, "theta_deg": 85.0, "z": 0.499})).unwrap();
        assert!((d.theta().to_degrees() - 85.0).abs() < 1e-12);

        for bad in [
            json!({"x": 1.0, "z": 0.0}),
            json!({"x": 1.0, "y": 0.0, "r": 1.0, "z": 0.0}),
            json!({"r": 1.0, "theta": 0.0, "theta_deg": 0.0, "z": 0.0}),
            json!({"r": 1.0, "theta": 0.0}),
            json!({"r": -1.0, "theta": 0.0, "z": 0.0}),
            json!({"x": "1", "y": 0.0, "z": 0.0}),
            json!([1.0, 2.0, 3.0]),
        ] {
            assert!(point_from_json(&bad).is_err(), "{bad} should not parse");
        }
    }

    #[test]
    fn file_round_trip_and_report_unwrapping() {
        let cfg = Configuration::new(
            vec![
                PettyPoint::new(0.1, 0.2, 0.7),
                PettyPoint::new(-0.5, 0.0, -0.5),
            ],
            Claim::SeparatedGe1,
            1e-10,
        )
        .unwrap()
        .with_meta("source", json!("unit test"));
        let text = serde_json::to_string(&cfg.to_json()).unwrap();
        let back = Configuration::from_json_str(&text).unwrap();
        assert_eq!(back, cfg);

        let report = json!({"v": 1, "best": cfg.to_json(), "min_pairwise_distance": 1.0});
        assert_eq!(Configuration::from_json(&report).unwrap(), cfg);
    }

    #[test]
    fn parse_errors() {
        assert!(Configuration::from_json_str("not json").is_err());
        assert!(Configuration::from_json_str(r#"{"points": []}"#).is_err());
        assert!(
            Configuration::from_json_str(r#"{"v": 2, "points": [{"x":0,"y":0,"z":1}]}"#).is_err()
        );
        assert!(Configuration::from_json_str(
            r#"{"claim": "bogus", "points": [{"x":0,"y":0,"z":1}]}"#
        )
        .is_err());
    }
}
