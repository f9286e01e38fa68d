use serde::Serialize;

use super::formulas::{branch_constant, threshold_k};
use super::params::Parameters;
use super::regime::{classify_regime, Branch, Regime};
use crate::error::Result;
use crate::scalar::Real;

/// One entry of the degree table evaluated in the high-bad regime.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BranchValue<T> {
    pub degree: u32,
    pub value: T,
}

/// The sharp constant for `(N, m)` together with where it comes from.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstantReport<T> {
    pub value: T,
    pub regime: Regime,
    /// Spherical-harmonic degree of the approximating sequence.
    pub l_min: u32,
    /// Threshold degree `k(m)`; high-bad only.
    pub k_m: Option<u32>,
    /// `(l, branch_constant(l))` for `l = 0..=k(m)`; high-bad only.
    pub branch_values: Vec<BranchValue<T>>,
    /// The constant is exactly zero and the inequality carries no information.
    pub vanishing: bool,
}

/// Sharp constant of `int |Lap u|^2 |x|^m >= C int |x.grad u|^2 |x|^(m-4)`.
pub fn sharp_constant<T: Real>(params: &Parameters<T>) -> Result<ConstantReport<T>> {
    let regime = classify_regime(params);
    let report = match regime.branch {
        Branch::OneDim | Branch::Middle => ConstantReport {
            value: params.upper_bound(),
            regime,
            l_min: 0,
            k_m: None,
            branch_values: Vec::new(),
            vanishing: false,
        },
        Branch::LowBad => {
            let s = params.shift();
            let m2 = params.m() - T::lit(2.0);
            let n = params.dim();
            let num = m2 * m2 - n * n;
            ConstantReport {
                value: num * num / (T::lit(4.0) * s * s),
                regime,
                l_min: 1,
                k_m: None,
                branch_values: Vec::new(),
                vanishing: false,
            }
        }
        Branch::HighBad => {
            let k_m = threshold_k(params)?;
            let branch_values = (0..=k_m)
                .map(|degree| {
                    branch_constant(params, degree).map(|value| BranchValue { degree, value })
                })
                .collect::<Result<Vec<_>>>()?;
            // strict comparison keeps the smallest minimizing degree
            let best = branch_values
                .iter()
                .fold(branch_values[0], |acc, bv| if bv.value < acc.value { *bv } else { acc });
            ConstantReport {
                value: best.value,
                regime,
                l_min: best.degree,
                k_m: Some(k_m),
                branch_values,
                vanishing: false,
            }
        }
    };
    Ok(ConstantReport {
        vanishing: report.value == T::zero(),
        ..report
    })
}
