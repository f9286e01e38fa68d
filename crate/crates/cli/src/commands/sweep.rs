use hardy_rellich::spectral::{oracle_constant, GridSpec};
use hardy_rellich::verify::oracle_gap;
use hardy_rellich::{improvement_report, sharp_constant, validate_parameters};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{OracleArgs, Output};
use crate::error::{CliError, CliResult};
use crate::format::{csv_text, emit, json, opt, sig, CSV_DIGITS};

use super::grid_from;

pub const SWEEP_HEADER: [&str; 11] = [
    "N",
    "m",
    "regime",
    "k_m",
    "l_min",
    "tilde_constant",
    "upper_bound",
    "prior_constant",
    "strict_improvement",
    "oracle_value",
    "oracle_gap",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    #[serde(rename = "N")]
    pub n: u32,
    pub m: f64,
    pub regime: &'static str,
    pub k_m: Option<u32>,
    pub l_min: u32,
    pub tilde_constant: f64,
    pub upper_bound: f64,
    pub prior_constant: Option<f64>,
    pub strict_improvement: Option<bool>,
    pub oracle_value: Option<f64>,
    pub oracle_gap: Option<f64>,
}

impl SweepRow {
    pub fn compute(n: u32, m: f64, oracle: Option<(GridSpec, Option<u32>)>) -> CliResult<Self> {
        let p = validate_parameters(n, m)?;
        let report = sharp_constant(&p)?;
        let improvement = improvement_report(&p)?;
        let (oracle_value, gap) = match oracle {
            Some((grid, k_max)) => {
                let r = oracle_constant(&p, k_max, grid)?;
                (
                    Some(r.overall_min),
                    Some(oracle_gap(&p, r.overall_min, report.value)),
                )
            }
            None => (None, None),
        };
        Ok(Self {
            n,
            m,
            regime: report.regime.branch.label(),
            k_m: report.k_m,
            l_min: report.l_min,
            tilde_constant: report.value,
            upper_bound: p.upper_bound(),
            prior_constant: improvement.prior,
            strict_improvement: improvement.strict_improvement,
            oracle_value,
            oracle_gap: gap,
        })
    }

    pub fn csv_fields(&self) -> Vec<String> {
        let num = |x: &f64| sig(*x, CSV_DIGITS);
        vec![
            self.n.to_string(),
            num(&self.m),
            self.regime.to_string(),
            opt(self.k_m, u32::to_string),
            self.l_min.to_string(),
            num(&self.tilde_constant),
            num(&self.upper_bound),
            opt(self.prior_constant, num),
            opt(self.strict_improvement, bool::to_string),
            opt(self.oracle_value, num),
            opt(self.oracle_gap, num),
        ]
    }
}

/// `steps` values from `m_min` to `m_max` inclusive.
pub fn m_grid(m_min: f64, m_max: f64, steps: usize) -> Vec<f64> {
    let h = (m_max - m_min) / (steps - 1) as f64;
    (0..steps)
        .map(|i| if i + 1 == steps { m_max } else { m_min + i as f64 * h })
        .collect()
}

#[derive(Serialize)]
struct SweepDoc<'a> {
    #[serde(rename = "N")]
    n: u32,
    m_min: f64,
    m_max: f64,
    steps: usize,
    rows: &'a [SweepRow],
}

pub fn sweep(
    n: u32,
    m_min: f64,
    m_max: f64,
    steps: usize,
    output: &Output,
    oracle: &OracleArgs,
) -> CliResult<()> {
    if steps < 2 {
        return Err(CliError::Usage(format!("--steps must be at least 2, got {steps}")));
    }
    if !(m_min.is_finite() && m_max.is_finite()) || m_min >= m_max {
        return Err(CliError::Usage(format!(
            "empty m range: need m-min < m-max, got [{m_min}, {m_max}]"
        )));
    }
    validate_parameters(n, m_min)?;
    let oracle_cfg = if oracle.oracle {
        Some((grid_from(&oracle.grid)?, oracle.grid.kmax))
    } else {
        None
    };
    let rows = m_grid(m_min, m_max, steps)
        .into_par_iter()
        .map(|m| SweepRow::compute(n, m, oracle_cfg))
        .collect::<CliResult<Vec<_>>>()?;

    let text = if output.json {
        json(
            "sweep",
            &SweepDoc {
                n,
                m_min,
                m_max,
                steps,
                rows: &rows,
            },
        )?
    } else {
        let fields: Vec<Vec<String>> = rows.iter().map(SweepRow::csv_fields).collect();
        csv_text(&SWEEP_HEADER, &fields)?
    };
    emit(output.out.as_deref(), &text)
}
