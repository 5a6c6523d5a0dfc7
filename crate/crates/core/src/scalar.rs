//! Scalar abstraction: the numeric core is generic over `f32`/`f64`.

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point scalar the library is generic over.
///
/// Special functions route through `f64` internally (their coefficients are
/// only tabulated to double precision), which is exact enough for both
/// supported scalars.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + core::fmt::Debug
    + core::fmt::Display
    + core::iter::Sum
    + Default
    + Send
    + Sync
    + 'static
{
    /// Shorthand for lifting an `f64` literal.
    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("literal must be representable")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar must convert to f64")
    }
}

impl Real for f32 {}
impl Real for f64 {}
