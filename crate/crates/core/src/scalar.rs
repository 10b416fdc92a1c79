//! Scalar abstraction shared by the geometry kernels.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating point type the norm, angular and zone kernels are generic over.
///
/// The two constants scale the fixed tolerances used by the kernels to the
/// precision of the type.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Largest excursion of an arccos argument outside `[-1, 1]` that is still
    /// attributed to rounding and clamped.
    const ARCCOS_SLACK: Self;
    /// Band around a distance of exactly 1 inside which two predicates that
    /// compare against 1 are allowed to disagree.
    const BOUNDARY_SLACK: Self;

    /// Converts an `f64` literal. Panics only for values the type cannot hold.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("literal representable in scalar type")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const ARCCOS_SLACK: f64 = 1e-12;
    const BOUNDARY_SLACK: f64 = 1e-9;
}

impl Real for f32 {
    const ARCCOS_SLACK: f32 = 1e-5;
    const BOUNDARY_SLACK: f32 = 1e-4;
}
