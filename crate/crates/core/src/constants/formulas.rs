//! Closed-form quantities attached to a harmonic degree: the spherical
//! eigenvalues, the auxiliary index term `I_k`, the per-degree branch
//! constants and the threshold degree `k(m)`.

use serde::Serialize;

use super::params::Parameters;
use super::regime::{classify_regime, Branch};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Laplace-Beltrami eigenvalue `c_k = k (k + N - 2)` on `S^(N-1)`.
#[inline]
pub fn eigenvalue_ck<T: Real>(n: u32, k: u32) -> T {
    let k_t = T::of_u32(k);
    k_t * (k_t + T::of_u32(n) - T::lit(2.0))
}

/// `I_k(m, N) = 2((N+m-4)/2)^2 + c_k - (m-2)(N+m-4)`.
///
/// Strictly increasing in `k` for `N >= 2`.
pub fn index_term<T: Real>(params: &Parameters<T>, k: u32) -> T {
    let s = params.shift();
    let half = s / T::lit(2.0);
    T::lit(2.0) * half * half + eigenvalue_ck::<T>(params.n(), k) - (params.m() - T::lit(2.0)) * s
}

/// Smallest `k` with `I_k(m, N) >= 0`. Only defined in the high-bad regime,
/// where `I_1 < 0`.
///
/// The root of the quadratic `k^2 + (N-2)k = q` gives a first guess, which is
/// then corrected by direct evaluation so that `I_{k-1} < 0 <= I_k` holds
/// exactly in floating point.
pub fn threshold_k<T: Real>(params: &Parameters<T>) -> Result<u32> {
    let regime = classify_regime(params);
    if regime.branch != Branch::HighBad {
        return Err(Error::ThresholdUndefined {
            n: params.n(),
            m: params.m().as_f64(),
        });
    }
    let two = T::lit(2.0);
    let s = params.shift();
    let q = (params.m() - two) * s - s * s / two;
    let lin = params.dim() - two;
    let disc = (lin * lin + T::lit(4.0) * q).max(T::zero());
    let root = (-lin + disc.sqrt()) / two;
    let mut k = root.ceil().to_u32().unwrap_or(1).max(1);
    while index_term(params, k) < T::zero() {
        k += 1;
    }
    while k > 1 && index_term(params, k - 1) >= T::zero() {
        k -= 1;
    }
    Ok(k)
}

fn require_nondegenerate<T: Real>(params: &Parameters<T>) -> Result<T> {
    let s = params.shift();
    if s == T::zero() {
        return Err(Error::DegenerateWeight {
            n: params.n(),
            m: params.m().as_f64(),
        });
    }
    Ok(s)
}

/// Per-degree constant
/// `(-N + m - 2l)^2 (2l + m + N - 4)^2 / (4 (m + N - 4)^2)`.
///
/// Degree 0 reproduces `((N-m)/2)^2`, degree 1 the low-bad formula.
pub fn branch_constant<T: Real>(params: &Parameters<T>, l: u32) -> Result<T> {
    let s = require_nondegenerate(params)?;
    let two_l = T::lit(2.0) * T::of_u32(l);
    let a = params.m() - params.dim() - two_l;
    let b = two_l + s;
    Ok(a * a * b * b / (T::lit(4.0) * s * s))
}

/// `eps_k = -4 c_k I_k / (N + m - 4)^2`, chosen so the zero-order coefficient
/// `c_k I_k + eps_k ((N+m-4)/2)^2` vanishes.
pub fn epsilon_k<T: Real>(params: &Parameters<T>, k: u32) -> Result<T> {
    let s = require_nondegenerate(params)?;
    let ck = eigenvalue_ck::<T>(params.n(), k);
    Ok(-T::lit(4.0) * ck * index_term(params, k) / (s * s))
}

/// The degree-one value written out explicitly:
/// `2 (N-1) (m^2 - N^2 - 4m + 2N + 2) / (m + N - 4)^2`.
pub fn epsilon_one_explicit<T: Real>(params: &Parameters<T>) -> Result<T> {
    let s = require_nondegenerate(params)?;
    let n = params.dim();
    let m = params.m();
    let two = T::lit(2.0);
    let poly = m * m - n * n - T::lit(4.0) * m + two * n + two;
    Ok(two * (n - T::one()) * poly / (s * s))
}

/// The special values of `m` that separate the regimes for a given `N`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegimeBoundaries<T> {
    /// `2 - N`: the weight is not integrable at or below this value.
    pub integrability: T,
    /// `4 - N`: `N + m - 4` vanishes.
    pub degenerate_weight: T,
    /// `2 - sqrt((N-1)^2 + 1)`: low-bad / middle boundary.
    pub lower_middle: T,
    /// `2 + sqrt((N-1)^2 + 1)`: middle / high-bad boundary.
    pub upper_middle: T,
    /// `(N + 4 - 2 sqrt(N^2 - N + 1)) / 3`: above it the full-gradient
    /// constant equals `((N-m)/2)^2` in the classical range.
    pub prior_threshold: T,
}

pub fn regime_boundaries<T: Real>(n: u32) -> RegimeBoundaries<T> {
    let nt = T::of_u32(n);
    let two = T::lit(2.0);
    let radical = ((nt - T::one()) * (nt - T::one()) + T::one()).sqrt();
    RegimeBoundaries {
        integrability: two - nt,
        degenerate_weight: T::lit(4.0) - nt,
        lower_middle: two - radical,
        upper_middle: two + radical,
        prior_threshold: prior_threshold(n),
    }
}

/// `(N + 4 - 2 sqrt(N^2 - N + 1)) / 3`.
pub fn prior_threshold<T: Real>(n: u32) -> T {
    let nt = T::of_u32(n);
    (nt + T::lit(4.0) - T::lit(2.0) * (nt * nt - nt + T::one()).sqrt()) / T::lit(3.0)
}
