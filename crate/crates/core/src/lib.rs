//! Geometry of the unit sphere of the Petty space: `ℝ³` with the norm
//! `‖(x, y, z)‖ = √(x² + y²) + |z|`.
//!
//! Points and most routines are generic over [`Real`] (`f32` or `f64`).
//! Numerical searches and the equilateral-set machinery work in `f64`.

// `!(x > 0.0)` style guards are used on purpose: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod angular;
pub mod certificate;
pub mod config;
pub mod equilateral;
pub mod error;
pub mod geometry;
pub mod pattern;
pub mod roots;
pub mod scalar;
pub mod search;
pub mod svg;
pub mod zones;

pub use angular::{
    angular_sum_bound, angular_sum_bound_subsequence, distance_vs_angle_check,
    middle_point_minimality, one_angular_cosine, one_angular_distance, polar_gap, regular_form,
    AngularSum,
};
pub use certificate::{verify_certificate, verify_certificate_with_margin, CertificateCheck};
pub use config::{Claim, Configuration};
pub use error::{PettyError, Result};
pub use geometry::{
    min_pairwise, normalize_angle, on_unit_sphere, petty_distance, petty_norm, PettyPoint,
};
pub use scalar::Real;
pub use search::{maximize_min_distance, SearchConfig, SearchReport, Separation};
pub use zones::{census, check_bounds, classify, BoundViolation, Zone, ZoneCensus};

pub type Point = PettyPoint<f64>;
pub type Point32 = PettyPoint<f32>;
pub type Config = Configuration<f64>;
pub type Config32 = Configuration<f32>;
