//! Constants of the full-gradient inequality
//! `int |Lap u|^2 |x|^m >= C(N, m) int |grad u|^2 |x|^(m-2)` known from earlier
//! work, and the comparison with the radial-derivative constant.

use serde::Serialize;

use super::formulas::{eigenvalue_ck, prior_threshold};
use super::params::Parameters;
use super::sharp::sharp_constant;
use crate::error::{Error, Result};
use crate::scalar::{close, Real};

/// Classical Hardy constant `(N-2)^2 / 4`.
pub fn hardy_constant<T: Real>(n: u32) -> T {
    let a = T::of_u32(n) - T::lit(2.0);
    a * a / T::lit(4.0)
}

/// Classical Rellich constant `(N(N-4)/4)^2`.
pub fn rellich_constant<T: Real>(n: u32) -> T {
    let nt = T::of_u32(n);
    let a = nt * (nt - T::lit(4.0)) / T::lit(4.0);
    a * a
}

/// Unweighted Hardy-Rellich constant: `N^2/4` for `N >= 5`, `3` for `N = 4`,
/// `25/36` for `N = 3`.
pub fn hardy_rellich_constant<T: Real>(n: u32) -> Option<T> {
    match n {
        0..=2 => None,
        3 => Some(T::lit(25.0) / T::lit(36.0)),
        4 => Some(T::lit(3.0)),
        _ => Some(T::of_u32(n) * T::of_u32(n) / T::lit(4.0)),
    }
}

/// Full-gradient Rayleigh quotient of the critical power profile in degree `k`:
/// `((N+m-4)(N-m)/4 + c_k)^2 / (((N+m-4)/2)^2 + c_k)`.
///
/// `None` when the denominator vanishes (`k = 0`, `m = 4 - N`).
pub fn mode_quotient<T: Real>(params: &Parameters<T>, k: u32) -> Option<T> {
    let s = params.shift();
    let ck = eigenvalue_ck::<T>(params.n(), k);
    let num = s * (params.dim() - params.m()) / T::lit(4.0) + ck;
    let den = s * s / T::lit(4.0) + ck;
    if den == T::zero() {
        None
    } else {
        Some(num * num / den)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModeMinimum<T> {
    pub value: T,
    pub minimizer: u32,
}

/// Minimum of [`mode_quotient`] over `k = 0, 1, 2, ...`.
///
/// The quotient grows like `c_k`, so the scan stops once `k >= 3` and three
/// consecutive degrees exceed the running minimum.
fn mode_minimum<T: Real>(params: &Parameters<T>) -> Option<ModeMinimum<T>> {
    const HARD_CAP: u32 = 100_000;
    let mut best: Option<ModeMinimum<T>> = None;
    let mut above = 0;
    for k in 0..HARD_CAP {
        if let Some(q) = mode_quotient(params, k) {
            match best {
                Some(b) if q >= b.value => above += 1,
                _ => {
                    best = Some(ModeMinimum { value: q, minimizer: k });
                    above = 0;
                }
            }
        }
        if k >= 3 && above >= 3 {
            break;
        }
    }
    best
}

/// Best full-gradient constant for `N >= 5`, `4 - N < m <= 0`:
/// `min_k ((N-4+m)(N-m)/4 + k(N+k-2))^2 / (((N-4+m)/2)^2 + k(N+k-2))`.
pub fn prior_constant_tz<T: Real>(params: &Parameters<T>) -> Result<ModeMinimum<T>> {
    let n = params.n();
    let m = params.m();
    if n < 5 || m <= T::lit(4.0) - params.dim() || m > T::zero() {
        return Err(Error::OutsideValidity {
            n,
            m: m.as_f64(),
            requirement: "N >= 5 and 4 - N < m <= 0",
        });
    }
    Ok(mode_minimum(params).expect("denominators are positive for m > 4 - N"))
}

/// Which stated result a catalogued constant comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PriorSource {
    /// `N = 1`, `m` in `(1, 7/3] U [3, inf)`: `((1-m)/2)^2`.
    OneDimensional,
    /// `m = 4 - N`: `min{(N-2)^2, N-1}`.
    DegenerateWeight,
    /// `N >= 2`, `m` at or above the prior threshold: `((N-m)/2)^2`.
    AboveThreshold,
    /// Degree-one quotient, low-weight range.
    DegreeOne,
    /// Mode minimum for `N >= 5`, `4 - N < m <= 0`.
    ModeMinimum,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PriorConstant<T> {
    pub value: T,
    pub source: PriorSource,
}

/// The full-gradient constant where an explicit value is on record, `None`
/// otherwise.
///
/// Rules, first match wins:
/// 1. `N = 1`: `((1-m)/2)^2` on `(1, 7/3] U [3, inf)`, unknown on `(7/3, 3)`.
/// 2. `m = 4 - N`: `min{(N-2)^2, N-1}`.
/// 3. `N = 3, m >= threshold` or `N >= 4, m > 4 - N`: needs a finer
///    subdivision that is not catalogued.
/// 4. `N >= 2, m >= threshold`: `((N-m)/2)^2`.
/// 5. `2 <= N <= 3, 2 - N < m < threshold` or `N >= 4, 2 - N < m <= 4 - N`:
///    `((N-4+m)(N-m)/4 + N - 1)^2 / (((N-4+m)/2)^2 + N - 1)`.
///
/// A value above the full-gradient quotient of some critical power profile
/// cannot be the best constant and is dropped.
pub fn prior_constant_catalog<T: Real>(params: &Parameters<T>) -> Option<PriorConstant<T>> {
    let n = params.n();
    let m = params.m();
    let nt = params.dim();
    let two = T::lit(2.0);
    let tol = T::boundary_tol();

    if n == 1 {
        let seven_thirds = T::lit(7.0) / T::lit(3.0);
        let in_range = m <= seven_thirds * (T::one() + tol) || m >= T::lit(3.0) * (T::one() - tol);
        return in_range.then(|| PriorConstant {
            value: params.upper_bound(),
            source: PriorSource::OneDimensional,
        });
    }

    let degenerate = T::lit(4.0) - nt;
    let threshold = prior_threshold::<T>(n);
    let candidate = if close(m, degenerate, tol) {
        let a = nt - two;
        Some(PriorConstant {
            value: (a * a).min(nt - T::one()),
            source: PriorSource::DegenerateWeight,
        })
    } else if (n == 3 && m >= threshold) || (n >= 4 && m > degenerate) {
        None
    } else if m >= threshold {
        Some(PriorConstant {
            value: params.upper_bound(),
            source: PriorSource::AboveThreshold,
        })
    } else {
        // remaining: 2 <= N <= 3 below the threshold, N >= 4 below 4 - N
        mode_quotient(params, 1).map(|value| PriorConstant {
            value,
            source: PriorSource::DegreeOne,
        })
    };

    candidate.filter(|c| match mode_minimum(params) {
        Some(bound) => c.value <= bound.value * (T::one() + tol),
        None => true,
    })
}

/// Prior constant from the catalog, falling back on the mode minimum in its
/// range of validity.
pub fn prior_constant<T: Real>(params: &Parameters<T>) -> Option<PriorConstant<T>> {
    prior_constant_catalog(params).or_else(|| {
        prior_constant_tz(params).ok().map(|mm| PriorConstant {
            value: mm.value,
            source: PriorSource::ModeMinimum,
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ImprovementReport<T> {
    pub tilde: T,
    pub prior: Option<T>,
    pub prior_source: Option<PriorSource>,
    /// `tilde > prior` beyond rounding; `None` when no prior value is known.
    pub strict_improvement: Option<bool>,
}

pub fn improvement_report<T: Real>(params: &Parameters<T>) -> Result<ImprovementReport<T>> {
    let tilde = sharp_constant(params)?.value;
    let prior = prior_constant(params);
    let strict_improvement = prior.map(|p| tilde > p.value && !close(tilde, p.value, T::boundary_tol()));
    Ok(ImprovementReport {
        tilde,
        prior: prior.map(|p| p.value),
        prior_source: prior.map(|p| p.source),
        strict_improvement,
    })
}
