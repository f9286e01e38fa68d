use std::fmt::Write as _;

use hardy_rellich::verify::{run_suite, Suite, SuiteReport, VerifyOptions};
use serde::Serialize;

use crate::args::{GridArgs, Output, SuiteArg};
use crate::error::{CliError, CliResult};
use crate::format::{emit, json, sig};

use super::grid_from;

fn suites(arg: SuiteArg) -> Vec<Suite> {
    match arg {
        SuiteArg::Trial => vec![Suite::Trial],
        SuiteArg::Oracle => vec![Suite::Oracle],
        SuiteArg::Identities => vec![Suite::Identities],
        SuiteArg::Fulldim => vec![Suite::Fulldim],
        SuiteArg::All => Suite::ALL.to_vec(),
    }
}

fn options(eps: Option<Vec<f64>>, tol: Option<f64>, grid: &GridArgs) -> CliResult<VerifyOptions> {
    let mut opts = VerifyOptions::default();
    if let Some(eps) = eps {
        if eps.len() < 2 {
            return Err(CliError::Usage("--eps needs at least two values".to_string()));
        }
        opts.eps = eps;
    }
    if let Some(tol) = tol {
        if !(tol > 0.0) {
            return Err(CliError::Usage(format!("--tol must be positive, got {tol}")));
        }
        opts.tol = tol;
    }
    opts.grid = grid_from(grid)?;
    opts.k_max = grid.kmax;
    Ok(opts)
}

fn report_text(r: &SuiteReport) -> String {
    let mut s = String::new();
    for c in &r.cases {
        let _ = writeln!(
            s,
            "{} {:<36} measured {:<10} tol {:<8} {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.case,
            sig(c.measured, 3),
            sig(c.tolerance, 3),
            c.detail
        );
    }
    let passed = r.cases.iter().filter(|c| c.passed).count();
    let _ = writeln!(
        s,
        "{}: {} ({passed}/{} cases)",
        r.suite,
        if r.passed() { "PASS" } else { "FAIL" },
        r.cases.len()
    );
    s
}

#[derive(Serialize)]
struct VerifyDoc<'a> {
    passed: bool,
    reports: &'a [SuiteReport],
}

/// Returns whether every case passed.
pub fn verify(
    suite: SuiteArg,
    output: &Output,
    eps: Option<Vec<f64>>,
    tol: Option<f64>,
    grid: &GridArgs,
) -> CliResult<bool> {
    let opts = options(eps, tol, grid)?;
    let reports: Vec<SuiteReport> = suites(suite)
        .into_iter()
        .map(|s| run_suite(s, &opts))
        .collect();
    let passed = reports.iter().all(SuiteReport::passed);
    let text = if output.json {
        json(
            "verify",
            &VerifyDoc {
                passed,
                reports: &reports,
            },
        )?
    } else {
        reports.iter().map(report_text).collect()
    };
    emit(output.out.as_deref(), &text)?;
    Ok(passed)
}
