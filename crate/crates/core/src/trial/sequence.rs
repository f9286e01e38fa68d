//! The approximating sequence `u_eps = r^(beta + eps) g(r) phi_l` with
//! `beta = -(N+m-4)/2`, and its per-mode Rayleigh quotient.
//!
//! Each radial integral `int_0^inf (.)^2 r^(N+m-1-2j) dr` is split at `r = 1`.
//! On `(0, 1)` the cutoff is identically one and the integrand is the pure
//! power `r^(2 eps - 1)` times a constant, integrated exactly. Only `[1, 2]`
//! is handled numerically.

use serde::Serialize;

use super::cutoff::{cutoff_eval, RadialJet};
use crate::constants::{eigenvalue_ck, Parameters};
use crate::error::{Error, Result};
use crate::quadrature::{integrate_refined, GaussLegendre, DEFAULT_ORDER};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrialSpec<T> {
    pub params: Parameters<T>,
    pub degree: u32,
    pub eps: T,
}

impl<T: Real> TrialSpec<T> {
    pub fn new(params: Parameters<T>, degree: u32, eps: T) -> Result<Self> {
        if !(eps > T::zero()) || !eps.is_finite() {
            return Err(Error::InvalidTrial(format!(
                "eps must be positive and finite, got {}",
                eps.as_f64()
            )));
        }
        if params.n() == 1 && degree != 0 {
            return Err(Error::InvalidTrial(
                "only degree 0 exists in dimension 1".to_string(),
            ));
        }
        Ok(Self { params, degree, eps })
    }

    /// Radial exponent `beta + eps`.
    #[inline]
    pub fn exponent(&self) -> T {
        self.params.critical_exponent() + self.eps
    }
}

/// `U(r) = r^(beta+eps) g(r)` and its first two derivatives.
pub fn trial_eval<T: Real>(spec: &TrialSpec<T>, r: T) -> RadialJet<T> {
    if r >= T::lit(2.0) {
        return RadialJet::zero();
    }
    let a = spec.exponent();
    let g = cutoff_eval(r);
    let p = r.powf(a);
    let p1 = a * p / r;
    let p2 = a * (a - T::one()) * p / (r * r);
    RadialJet {
        value: p * g.value,
        d1: p1 * g.value + p * g.d1,
        d2: p2 * g.value + T::lit(2.0) * p1 * g.d1 + p * g.d2,
    }
}

/// `a`-derivative of the trial jet, `a = beta + eps`.
fn trial_exponent_derivative<T: Real>(jet: &RadialJet<T>, r: T) -> RadialJet<T> {
    let lr = r.ln();
    RadialJet {
        value: lr * jet.value,
        d1: jet.value / r + lr * jet.d1,
        d2: T::lit(2.0) * jet.d1 / r - jet.value / (r * r) + lr * jet.d2,
    }
}

/// `J0 = int U^2 r^(N+m-5)`, `J1 = int U'^2 r^(N+m-3)`, `J2 = int U''^2 r^(N+m-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialIntegrals<T> {
    pub j0: T,
    pub j1: T,
    pub j2: T,
    pub err0: T,
    pub err1: T,
    pub err2: T,
}

/// Leading `1/(2 eps)` parts of the radial integrals; exactly the
/// contribution of `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AsymptoticLeading<T> {
    pub j0_lead: T,
    pub j1_lead: T,
    pub j2_lead: T,
}

pub fn asymptotic_leading<T: Real>(spec: &TrialSpec<T>) -> AsymptoticLeading<T> {
    let a = spec.exponent();
    let b = a - T::one();
    let two_eps = T::lit(2.0) * spec.eps;
    AsymptoticLeading {
        j0_lead: T::one() / two_eps,
        j1_lead: a * a / two_eps,
        j2_lead: a * a * b * b / two_eps,
    }
}

/// Radial weight exponents `N+m-5`, `N+m-3`, `N+m-1`.
fn weight_exponents<T: Real>(params: &Parameters<T>) -> [T; 3] {
    let base = params.dim() + params.m();
    [base - T::lit(5.0), base - T::lit(3.0), base - T::lit(1.0)]
}

fn outer_integral<T: Real, F: FnMut(T) -> T>(tol: T, f: F) -> Result<(T, T)> {
    let rule = GaussLegendre::new(DEFAULT_ORDER);
    let est = integrate_refined(&rule, T::one(), T::lit(2.0), tol, f)?;
    Ok((est.value, est.error))
}

/// The three radial integrals; the `[1, 2]` parts are refined until the
/// error estimate is below `tol` relative to `max(1, |I|)`.
pub fn radial_integrals<T: Real>(spec: &TrialSpec<T>, tol: T) -> Result<RadialIntegrals<T>> {
    let lead = asymptotic_leading(spec);
    let [w0, w1, w2] = weight_exponents(&spec.params);
    let (o0, err0) = outer_integral(tol, |r| {
        let u = trial_eval(spec, r);
        u.value * u.value * r.powf(w0)
    })?;
    let (o1, err1) = outer_integral(tol, |r| {
        let u = trial_eval(spec, r);
        u.d1 * u.d1 * r.powf(w1)
    })?;
    let (o2, err2) = outer_integral(tol, |r| {
        let u = trial_eval(spec, r);
        u.d2 * u.d2 * r.powf(w2)
    })?;
    Ok(RadialIntegrals {
        j0: lead.j0_lead + o0,
        j1: lead.j1_lead + o1,
        j2: lead.j2_lead + o2,
        err0,
        err1,
        err2,
    })
}

/// Coefficients `(2c_l + (N-1)(1-m), c_l^2 - c_l(m-2)(N+m-4))` of `J1` and
/// `J0` in the degree-`l` numerator.
pub fn mode_coefficients<T: Real>(params: &Parameters<T>, degree: u32) -> (T, T) {
    let ck = eigenvalue_ck::<T>(params.n(), degree);
    let n = params.dim();
    let m = params.m();
    let first = T::lit(2.0) * ck + (n - T::one()) * (T::one() - m);
    let zero = ck * ck - ck * (m - T::lit(2.0)) * params.shift();
    (first, zero)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureResult<T> {
    /// `int |Lap u|^2 |x|^m` for the unit-norm degree-`l` trial function.
    pub numerator: T,
    /// `int |x . grad u|^2 |x|^(m-4)`.
    pub denominator: T,
    pub quotient: T,
    pub error: T,
}

pub fn rayleigh_quotient<T: Real>(spec: &TrialSpec<T>, tol: T) -> Result<QuadratureResult<T>> {
    let j = radial_integrals(spec, tol)?;
    let (first, zero) = mode_coefficients(&spec.params, spec.degree);
    let numerator = j.j2 + first * j.j1 + zero * j.j0;
    let denominator = j.j1;
    let quotient = numerator / denominator;
    let num_err = j.err2 + first.abs() * j.err1 + zero.abs() * j.err0;
    let error = (num_err + quotient.abs() * j.err1) / denominator;
    Ok(QuadratureResult {
        numerator,
        denominator,
        quotient,
        error,
    })
}

/// `2 eps` times the numerator and denominator, with their `eps`-derivatives.
///
/// Both are smooth at `eps = 0`, where their ratio is the limit of the
/// Rayleigh quotient.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScaledForms<T> {
    pub eps: T,
    pub numerator: T,
    pub denominator: T,
    pub d_numerator: T,
    pub d_denominator: T,
}

impl<T: Real> ScaledForms<T> {
    pub fn quotient(&self) -> T {
        self.numerator / self.denominator
    }
}

pub fn scaled_forms<T: Real>(spec: &TrialSpec<T>, tol: T) -> Result<ScaledForms<T>> {
    let two = T::lit(2.0);
    let eps = spec.eps;
    let a = spec.exponent();
    let b = a - T::one();
    let [w0, w1, w2] = weight_exponents(&spec.params);

    // 2 eps * inner parts and their eps-derivatives (da/deps = 1)
    let inner = [T::one(), a * a, a * a * b * b];
    let d_inner = [T::zero(), two * a, two * a * b * (two * a - T::one())];

    let mut outer = [T::zero(); 3];
    let mut d_outer = [T::zero(); 3];
    for (i, w) in [w0, w1, w2].into_iter().enumerate() {
        let pick = move |jet: &RadialJet<T>| match i {
            0 => jet.value,
            1 => jet.d1,
            _ => jet.d2,
        };
        outer[i] = outer_integral(tol, |r| {
            let x = pick(&trial_eval(spec, r));
            x * x * r.powf(w)
        })?
        .0;
        d_outer[i] = outer_integral(tol, |r| {
            let jet = trial_eval(spec, r);
            let dj = trial_exponent_derivative(&jet, r);
            two * pick(&jet) * pick(&dj) * r.powf(w)
        })?
        .0;
    }

    let scaled: Vec<T> = (0..3).map(|i| inner[i] + two * eps * outer[i]).collect();
    let d_scaled: Vec<T> = (0..3)
        .map(|i| d_inner[i] + two * outer[i] + two * eps * d_outer[i])
        .collect();

    let (first, zero) = mode_coefficients(&spec.params, spec.degree);
    Ok(ScaledForms {
        eps,
        numerator: scaled[2] + first * scaled[1] + zero * scaled[0],
        denominator: scaled[1],
        d_numerator: d_scaled[2] + first * d_scaled[1] + zero * d_scaled[0],
        d_denominator: d_scaled[1],
    })
}
