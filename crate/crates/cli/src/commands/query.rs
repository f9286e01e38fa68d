use std::fmt::Write as _;

use hardy_rellich::spectral::{oracle_constant, SpectralResult};
use hardy_rellich::verify::oracle_gap;
use hardy_rellich::{
    classify_regime, improvement_report, prior_constant_tz, sharp_constant, validate_parameters,
    ConstantReport, ImprovementReport, ModeMinimum, Parameters, Regime,
};
use serde::Serialize;

use crate::args::{OracleArgs, Output, Point};
use crate::error::CliResult;
use crate::format::{csv_text, emit, json, sig};

use super::sweep::{SweepRow, SWEEP_HEADER};
use super::grid_from;

const DIGITS: usize = 15;

fn single_row_csv(p: &Point) -> CliResult<String> {
    let row = SweepRow::compute(p.n, p.m, None)?;
    csv_text(&SWEEP_HEADER, &[row.csv_fields()])
}

#[derive(Serialize)]
struct OracleDoc {
    value: f64,
    gap: f64,
    #[serde(flatten)]
    result: SpectralResult<f64>,
}

#[derive(Serialize)]
struct ConstantDoc<'a> {
    #[serde(rename = "N")]
    n: u32,
    m: f64,
    upper_bound: f64,
    #[serde(flatten)]
    report: &'a ConstantReport<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleDoc>,
}

pub fn constant(point: &Point, output: &Output, oracle: &OracleArgs) -> CliResult<()> {
    let p = validate_parameters(point.n, point.m)?;
    let report = sharp_constant(&p)?;
    let oracle_doc = if oracle.oracle {
        let r = oracle_constant(&p, oracle.grid.kmax, grid_from(&oracle.grid)?)?;
        Some(OracleDoc {
            value: r.overall_min,
            gap: oracle_gap(&p, r.overall_min, report.value),
            result: r,
        })
    } else {
        None
    };

    let text = if output.json {
        json(
            "constant",
            &ConstantDoc {
                n: point.n,
                m: point.m,
                upper_bound: p.upper_bound(),
                report: &report,
                oracle: oracle_doc,
            },
        )?
    } else if output.csv {
        single_row_csv(point)?
    } else {
        constant_text(&p, &report, oracle_doc.as_ref())
    };
    emit(output.out.as_deref(), &text)
}

fn constant_text(p: &Parameters<f64>, r: &ConstantReport<f64>, oracle: Option<&OracleDoc>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "N = {}, m = {}", p.n(), sig(p.m(), DIGITS));
    let _ = writeln!(s, "value:        {}", sig(r.value, DIGITS));
    let _ = writeln!(s, "regime:       {} (proof case {})", r.regime.branch, r.regime.proof_case);
    let _ = writeln!(s, "l_min:        {}", r.l_min);
    if let Some(k) = r.k_m {
        let _ = writeln!(s, "k(m):         {k}");
    }
    let _ = writeln!(s, "upper bound:  {}", sig(p.upper_bound(), DIGITS));
    if r.vanishing {
        let _ = writeln!(s, "note:         the constant vanishes");
    }
    if !r.branch_values.is_empty() {
        let _ = writeln!(s, "branch values:");
        for b in &r.branch_values {
            let mark = if b.degree == r.l_min { "  <- min" } else { "" };
            let _ = writeln!(s, "  l = {}: {}{mark}", b.degree, sig(b.value, DIGITS));
        }
    }
    if let Some(o) = oracle {
        let g = o.result.grid;
        let _ = writeln!(
            s,
            "oracle:       {} (gap {}, argmin mode {}, t in [{}, {}], {} points)",
            sig(o.value, 10),
            sig(o.gap, 4),
            o.result.argmin_mode,
            g.t_min,
            g.t_max,
            g.points
        );
        for mv in &o.result.per_mode {
            let _ = writeln!(s, "  mode {}: {}", mv.mode, sig(mv.value, 10));
        }
    }
    s
}

#[derive(Serialize)]
struct ClassifyDoc {
    #[serde(rename = "N")]
    n: u32,
    m: f64,
    #[serde(flatten)]
    regime: Regime,
}

pub fn classify(point: &Point, output: &Output) -> CliResult<()> {
    let p = validate_parameters(point.n, point.m)?;
    let regime = classify_regime(&p);
    let text = if output.json {
        json(
            "classify",
            &ClassifyDoc {
                n: point.n,
                m: point.m,
                regime,
            },
        )?
    } else if output.csv {
        single_row_csv(point)?
    } else {
        format!(
            "N = {}, m = {}\nregime:     {}\nproof case: {}\n",
            point.n,
            sig(point.m, DIGITS),
            regime.branch,
            regime.proof_case
        )
    };
    emit(output.out.as_deref(), &text)
}

#[derive(Serialize)]
struct CompareDoc {
    #[serde(rename = "N")]
    n: u32,
    m: f64,
    #[serde(flatten)]
    report: ImprovementReport<f64>,
    mode_minimum: Option<ModeMinimum<f64>>,
}

pub fn compare(point: &Point, output: &Output) -> CliResult<()> {
    let p = validate_parameters(point.n, point.m)?;
    let report = improvement_report(&p)?;
    let tz = prior_constant_tz(&p).ok();
    let text = if output.json {
        json(
            "compare",
            &CompareDoc {
                n: point.n,
                m: point.m,
                report,
                mode_minimum: tz,
            },
        )?
    } else if output.csv {
        single_row_csv(point)?
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "N = {}, m = {}", point.n, sig(point.m, DIGITS));
        let _ = writeln!(s, "radial-derivative constant: {}", sig(report.tilde, DIGITS));
        match (report.prior, report.prior_source) {
            (Some(v), Some(src)) => {
                let _ = writeln!(s, "full-gradient constant:     {} ({src:?})", sig(v, DIGITS));
            }
            _ => {
                let _ = writeln!(s, "full-gradient constant:     not on record");
            }
        }
        if let Some(mm) = tz {
            let _ = writeln!(
                s,
                "mode minimum:               {} at k = {}",
                sig(mm.value, DIGITS),
                mm.minimizer
            );
        }
        let verdict = match report.strict_improvement {
            Some(true) => "strict improvement",
            Some(false) => "no strict improvement",
            None => "undetermined",
        };
        let _ = writeln!(s, "comparison:                 {verdict}");
        s
    };
    emit(output.out.as_deref(), &text)
}
