use serde::Serialize;

use super::sequence::{rayleigh_quotient, scaled_forms, ScaledForms, TrialSpec};
use crate::constants::Parameters;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Limit of the trial Rayleigh quotients as `eps -> 0`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Extrapolation<T> {
    /// Ratio of the Hermite extrapolants of `2 eps * numerator` and
    /// `2 eps * denominator` at `eps = 0`.
    pub limit: T,
    /// Two-point Richardson estimate `C` of `R(eps) = C + a eps` on the two
    /// smallest `eps`.
    pub richardson_linear: T,
    /// Change in `limit` when the largest `eps` is dropped (zero for two points).
    pub spread: T,
    /// `(eps, quotient)` for each input `eps`.
    pub quotients: Vec<(T, T)>,
}

/// Value at `x` of the Hermite interpolant through `(z_i, f_i, f'_i)`.
pub fn hermite_at<T: Real>(nodes: &[T], values: &[T], slopes: &[T], x: T) -> T {
    let n = nodes.len();
    let z: Vec<T> = nodes.iter().flat_map(|&e| [e, e]).collect();
    let mut table: Vec<T> = values.iter().flat_map(|&v| [v, v]).collect();
    let mut coeffs = vec![table[0]];
    for order in 1..2 * n {
        for i in (order..2 * n).rev() {
            let dz = z[i] - z[i - order];
            table[i] = if order == 1 && dz == T::zero() {
                slopes[i / 2]
            } else {
                (table[i] - table[i - 1]) / dz
            };
        }
        coeffs.push(table[order]);
    }
    let mut acc = coeffs[2 * n - 1];
    for i in (0..2 * n - 1).rev() {
        acc = acc * (x - z[i]) + coeffs[i];
    }
    acc
}

fn limit_of<T: Real>(forms: &[ScaledForms<T>]) -> T {
    let eps: Vec<T> = forms.iter().map(|f| f.eps).collect();
    let num: Vec<T> = forms.iter().map(|f| f.numerator).collect();
    let dnum: Vec<T> = forms.iter().map(|f| f.d_numerator).collect();
    let den: Vec<T> = forms.iter().map(|f| f.denominator).collect();
    let dden: Vec<T> = forms.iter().map(|f| f.d_denominator).collect();
    hermite_at(&eps, &num, &dnum, T::zero()) / hermite_at(&eps, &den, &dden, T::zero())
}

/// Extrapolates the degree-`l` trial quotients to `eps = 0`.
///
/// `eps_list` must hold at least two strictly decreasing positive values;
/// `tol` is the quadrature tolerance. The quotients must decrease with `eps`,
/// otherwise the quadrature is too loose to trust and
/// [`Error::NonMonotone`] is returned.
pub fn limit_extrapolate<T: Real>(
    params: &Parameters<T>,
    degree: u32,
    eps_list: &[T],
    tol: T,
) -> Result<Extrapolation<T>> {
    if eps_list.len() < 2 {
        return Err(Error::InvalidExtrapolation(format!(
            "need at least two eps values, got {}",
            eps_list.len()
        )));
    }
    if eps_list.iter().any(|&e| !(e > T::zero()) || !e.is_finite()) {
        return Err(Error::InvalidExtrapolation(
            "eps values must be positive and finite".to_string(),
        ));
    }
    if eps_list.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::InvalidExtrapolation(
            "eps values must be strictly decreasing".to_string(),
        ));
    }

    let mut forms = Vec::with_capacity(eps_list.len());
    let mut quotients = Vec::with_capacity(eps_list.len());
    for &eps in eps_list {
        let spec = TrialSpec::new(*params, degree, eps)?;
        let q = rayleigh_quotient(&spec, tol)?;
        forms.push(scaled_forms(&spec, tol)?);
        quotients.push((eps, q.quotient));
    }

    let slack = T::lit(1e-10);
    if quotients
        .windows(2)
        .any(|w| w[1].1 > w[0].1 + slack * w[0].1.abs().max(T::one()))
    {
        return Err(Error::NonMonotone {
            quotients: quotients.iter().map(|q| q.1.as_f64()).collect(),
        });
    }

    let limit = limit_of(&forms);
    let spread = if forms.len() > 2 {
        (limit - limit_of(&forms[1..])).abs()
    } else {
        T::zero()
    };
    let k = quotients.len();
    let (e1, r1) = quotients[k - 2];
    let (e2, r2) = quotients[k - 1];
    let richardson_linear = (e1 * r2 - e2 * r1) / (e1 - e2);

    Ok(Extrapolation {
        limit,
        richardson_linear,
        spread,
        quotients,
    })
}
