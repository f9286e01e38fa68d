//! Scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating point scalar: `f32` or `f64`.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Sum
    + Debug
    + Display
    + LowerExp
    + Default
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` literal. Every literal used in the crate is representable.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal converts to scalar")
    }

    #[inline]
    fn of_u32(n: u32) -> Self {
        Self::from_u32(n).expect("u32 converts to scalar")
    }

    /// Lossy conversion used for diagnostics and error messages.
    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Relative tolerance for deciding membership in closed regime intervals.
    ///
    /// `1e-12` in double precision, widened to a few ulps for `f32`.
    #[inline]
    fn boundary_tol() -> Self {
        Self::lit(1e-12).max(Self::epsilon() * Self::lit(8.0))
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// `x` is within `rel` (relative to `max(|x|, |y|, 1)`) of `y`.
#[inline]
pub(crate) fn close<T: Real>(x: T, y: T, rel: T) -> bool {
    let scale = x.abs().max(y.abs()).max(T::one());
    (x - y).abs() <= rel * scale
}

/// Relative difference, with the convention `0/0 = 0`.
#[inline]
pub fn relative_gap<T: Real>(a: T, b: T) -> T {
    let scale = a.abs().max(b.abs());
    if scale == T::zero() {
        T::zero()
    } else {
        (a - b).abs() / scale
    }
}
