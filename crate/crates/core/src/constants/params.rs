use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// A validated pair `(N, m)`: dimension `N >= 1` and weight exponent `m > 2 - N`.
///
/// The strict lower bound is the local integrability of `|x|^(m-2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Parameters<T> {
    n: u32,
    m: T,
}

/// Checks `N >= 1` and `m > 2 - N` and returns the validated pair.
pub fn validate_parameters<T: Real>(n: u32, m: T) -> Result<Parameters<T>> {
    Parameters::new(n, m)
}

impl<T: Real> Parameters<T> {
    pub fn new(n: u32, m: T) -> Result<Self> {
        if n < 1 {
            return Err(Error::DimensionTooSmall { n });
        }
        if !m.is_finite() {
            return Err(Error::NonFiniteWeight { m: m.as_f64() });
        }
        let bound = T::lit(2.0) - T::of_u32(n);
        if m <= bound {
            return Err(Error::NonIntegrableWeight {
                n,
                m: m.as_f64(),
                bound: bound.as_f64(),
            });
        }
        Ok(Self { n, m })
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn m(&self) -> T {
        self.m
    }

    /// `N` as a scalar.
    #[inline]
    pub fn dim(&self) -> T {
        T::of_u32(self.n)
    }

    /// `N + m - 4`, the quantity whose square appears in every denominator.
    #[inline]
    pub fn shift(&self) -> T {
        self.dim() + self.m - T::lit(4.0)
    }

    /// Critical radial exponent `-(N + m - 4) / 2`: the power `r^beta` makes
    /// every weighted radial integrand scale like `1/r`.
    #[inline]
    pub fn critical_exponent(&self) -> T {
        -self.shift() / T::lit(2.0)
    }

    /// `((N - m) / 2)^2`, the universal upper bound of the sharp constant.
    #[inline]
    pub fn upper_bound(&self) -> T {
        let h = (self.dim() - self.m) / T::lit(2.0);
        h * h
    }
}
