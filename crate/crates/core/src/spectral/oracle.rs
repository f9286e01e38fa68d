use rayon::prelude::*;
use serde::Serialize;

use super::forms::{mode_minimum, GridSpec, ModeProblem};
use crate::constants::{classify_regime, sharp_constant, threshold_k, Branch, Parameters};
use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModeValue<T> {
    pub mode: u32,
    pub value: T,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralResult<T> {
    pub per_mode: Vec<ModeValue<T>>,
    pub overall_min: T,
    pub argmin_mode: u32,
    pub grid: GridSpec,
}

/// Smallest admissible `K_max`: `k(m) + 2` in the high bad branch, 3 otherwise
/// (0 in dimension one).
pub fn required_modes<T: Real>(params: &Parameters<T>) -> Result<u32> {
    if params.n() == 1 {
        return Ok(0);
    }
    match classify_regime(params).branch {
        Branch::HighBad => Ok(threshold_k(params)? + 2),
        _ => Ok(3),
    }
}

/// `k(m) + 3` in the high bad branch, 5 otherwise (0 in dimension one).
pub fn default_modes<T: Real>(params: &Parameters<T>) -> Result<u32> {
    if params.n() == 1 {
        return Ok(0);
    }
    match classify_regime(params).branch {
        Branch::HighBad => Ok(threshold_k(params)? + 3),
        _ => Ok(5),
    }
}

/// Per-mode discrete minima for `k = 0..=k_max` (only `k = 0` when `N = 1`).
pub fn oracle_constant<T: Real>(
    params: &Parameters<T>,
    k_max: Option<u32>,
    grid: GridSpec,
) -> Result<SpectralResult<T>> {
    let required = required_modes(params)?;
    let k_max = match k_max {
        Some(k) if params.n() == 1 => k.min(0),
        Some(k) if k < required => {
            return Err(Error::ModeRangeTooSmall { k_max: k, required });
        }
        Some(k) => k,
        None => default_modes(params)?,
    };
    let problems = (0..=k_max)
        .map(|k| ModeProblem::new(*params, k, grid))
        .collect::<Result<Vec<_>>>()?;
    let per_mode = problems
        .par_iter()
        .map(|p| {
            mode_minimum(p).map(|value| ModeValue {
                mode: p.mode,
                value,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let best = per_mode
        .iter()
        .min_by(|a, b| a.value.partial_cmp(&b.value).expect("finite mode minima"))
        .copied()
        .expect("at least one mode");
    Ok(SpectralResult {
        per_mode,
        overall_min: best.value,
        argmin_mode: best.mode,
        grid,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceRow<T> {
    pub grid: GridSpec,
    pub overall_min: T,
    pub gap: T,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceTable<T> {
    pub sharp: T,
    pub rows: Vec<ConvergenceRow<T>>,
    /// Gaps never grow by more than the eigenvalue tolerance.
    pub monotone: bool,
}

pub fn convergence_study<T: Real>(
    params: &Parameters<T>,
    grids: &[GridSpec],
    k_max: Option<u32>,
) -> Result<ConvergenceTable<T>> {
    if grids.len() < 2 {
        return Err(Error::InvalidGrid(
            "a convergence study needs at least two grids".to_string(),
        ));
    }
    let sharp = sharp_constant(params)?.value;
    let rows = grids
        .iter()
        .map(|&g| {
            let r = oracle_constant(params, k_max, g)?;
            Ok(ConvergenceRow {
                grid: g,
                overall_min: r.overall_min,
                gap: r.overall_min - sharp,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let slack = T::lit(1e-8) * sharp.abs().max(T::one());
    let monotone = rows.windows(2).all(|w| w[1].gap <= w[0].gap + slack);
    Ok(ConvergenceTable {
        sharp,
        rows,
        monotone,
    })
}
