//! Integration-by-parts identities and one-dimensional weighted Hardy
//! inequalities behind the per-mode reduction.

use serde::Serialize;

use super::profiles::RadialProfile;
use super::sequence::{radial_integrals, TrialSpec};
use crate::constants::Parameters;
use crate::error::Result;
use crate::quadrature::{integrate_pieces, GaussLegendre, DEFAULT_ORDER};
use crate::scalar::Real;

/// Relative residuals of the two radial Laplacian identities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IbpResiduals<T> {
    /// `int (Lap_r u)^2 r^(N+m-1) = int u''^2 r^(N+m-1) + (N-1)(1-m) int u'^2 r^(N+m-3)`.
    pub residual1: T,
    /// `int (Lap_r u) u r^(N+m-3) = -int u'^2 r^(N+m-3) + (m-2)(N+m-4)/2 int u^2 r^(N+m-5)`.
    pub residual2: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HardyRatios<T> {
    /// `int u''^2 r^(N+m-1) / int u'^2 r^(N+m-3)`.
    pub ratio1: T,
    /// `int u'^2 r^(N+m-3) / int u^2 r^(N+m-5)`.
    pub ratio2: T,
    /// `((N+m-2)/2)^2`.
    pub bound1: T,
    /// `((N+m-4)/2)^2`.
    pub bound2: T,
}

impl<T: Real> HardyRatios<T> {
    pub fn holds(&self, rel: T) -> bool {
        self.ratio1 >= self.bound1 * (T::one() - rel) && self.ratio2 >= self.bound2 * (T::one() - rel)
    }
}

struct Moments<T> {
    u2: T,
    du2: T,
    ddu2: T,
    lap2: T,
    lap_u: T,
}

fn moments<T: Real, P: RadialProfile<T> + ?Sized>(
    params: &Parameters<T>,
    profile: &P,
    tol: T,
) -> Result<Moments<T>> {
    let breaks = profile.breakpoints();
    let rule = GaussLegendre::new(DEFAULT_ORDER);
    let n1 = params.dim() - T::one();
    let base = params.dim() + params.m();
    let (w5, w3, w1) = (base - T::lit(5.0), base - T::lit(3.0), base - T::one());
    let int = |f: &dyn Fn(T) -> T| -> Result<T> {
        Ok(integrate_pieces(&rule, &breaks, tol, f)?.value)
    };
    let lap = |r: T| {
        let j = profile.jet(r);
        (j, j.d2 + n1 * j.d1 / r)
    };
    Ok(Moments {
        u2: int(&|r| profile.jet(r).value.powi(2) * r.powf(w5))?,
        du2: int(&|r| profile.jet(r).d1.powi(2) * r.powf(w3))?,
        ddu2: int(&|r| profile.jet(r).d2.powi(2) * r.powf(w1))?,
        lap2: int(&|r| lap(r).1.powi(2) * r.powf(w1))?,
        lap_u: int(&|r| {
            let (j, l) = lap(r);
            l * j.value * r.powf(w3)
        })?,
    })
}

fn relative<T: Real>(residual: T, terms: &[T]) -> T {
    let scale = terms.iter().fold(T::zero(), |acc, t| acc.max(t.abs()));
    if scale == T::zero() {
        residual.abs()
    } else {
        residual.abs() / scale
    }
}

pub fn ibp_identity_check<T: Real, P: RadialProfile<T> + ?Sized>(
    params: &Parameters<T>,
    profile: &P,
    tol: T,
) -> Result<IbpResiduals<T>> {
    let mo = moments(params, profile, tol)?;
    let n = params.dim();
    let m = params.m();
    let c1 = (n - T::one()) * (T::one() - m);
    let t1 = c1 * mo.du2;
    let residual1 = relative(mo.lap2 - t1 - mo.ddu2, &[mo.lap2, t1, mo.ddu2]);
    let c2 = (m - T::lit(2.0)) * params.shift() / T::lit(2.0);
    let t2 = c2 * mo.u2;
    let residual2 = relative(mo.lap_u + mo.du2 - t2, &[mo.lap_u, mo.du2, t2]);
    Ok(IbpResiduals {
        residual1,
        residual2,
    })
}

fn hardy_bounds<T: Real>(params: &Parameters<T>) -> (T, T) {
    let base = params.dim() + params.m();
    let half = |x: T| (x / T::lit(2.0)).powi(2);
    (half(base - T::lit(2.0)), half(base - T::lit(4.0)))
}

/// Requires a nonzero profile.
pub fn onedim_hardy_check<T: Real, P: RadialProfile<T> + ?Sized>(
    params: &Parameters<T>,
    profile: &P,
    tol: T,
) -> Result<HardyRatios<T>> {
    let mo = moments(params, profile, tol)?;
    let (bound1, bound2) = hardy_bounds(params);
    Ok(HardyRatios {
        ratio1: mo.ddu2 / mo.du2,
        ratio2: mo.du2 / mo.u2,
        bound1,
        bound2,
    })
}

/// The Hardy ratios of the radial trial function `r^(beta+eps) g(r)`,
/// which approach `bound2` as `eps -> 0`.
pub fn onedim_hardy_trial<T: Real>(
    params: &Parameters<T>,
    eps: T,
    tol: T,
) -> Result<HardyRatios<T>> {
    let spec = TrialSpec::new(*params, 0, eps)?;
    let j = radial_integrals(&spec, tol)?;
    let (bound1, bound2) = hardy_bounds(params);
    Ok(HardyRatios {
        ratio1: j.j2 / j.j1,
        ratio2: j.j1 / j.j0,
        bound1,
        bound2,
    })
}
