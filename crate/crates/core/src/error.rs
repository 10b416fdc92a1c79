use thiserror::Error;

/// Errors produced by the geometry, search and construction routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum PettyError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("outside the domain: {0}")]
    Domain(String),

    /// The latitude circles at heights `z1` and `z2` contain no pair of points
    /// at distance exactly 1.
    #[error("no 1-angular distance exists for heights z1 = {z1}, z2 = {z2}")]
    NoSolution { z1: f64, z2: f64 },

    /// Same as [`PettyError::NoSolution`], located at a pair of consecutive
    /// configuration indices.
    #[error("no 1-angular distance between consecutive points {i} and {j} (z = {z1}, {z2})")]
    NoAngle {
        i: usize,
        j: usize,
        z1: f64,
        z2: f64,
    },

    #[error(
        "submersion d = {d} admits no 5-point equilateral set; feasible interval is [{d2}, {d1}]"
    )]
    Infeasible { d: f64, d1: f64, d2: f64 },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, PettyError>;

impl From<serde_json::Error> for PettyError {
    fn from(e: serde_json::Error) -> Self {
        PettyError::Parse(e.to_string())
    }
}

impl From<std::io::Error> for PettyError {
    fn from(e: std::io::Error) -> Self {
        PettyError::Io(e.to_string())
    }
}
