//! Verification batteries over a fixed parameter panel covering every
//! branch of the sharp constant.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::constants::{branch_constant, sharp_constant, validate_parameters, Parameters};
use crate::error::{Error, Result};
use crate::fulldim::{eigenrelation_defect, fulldim_compare, orthonormality_defect};
use crate::spectral::{hardy_pencils, oracle_constant, GridSpec};
use crate::trial::{
    ibp_identity_check, limit_extrapolate, onedim_hardy_check, onedim_hardy_trial, BumpProfile,
};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PanelCase {
    pub n: u32,
    pub m: f64,
    pub degree: u32,
}

impl PanelCase {
    const fn new(n: u32, m: f64, degree: u32) -> Self {
        Self { n, m, degree }
    }

    pub fn params(&self) -> Result<Parameters<f64>> {
        validate_parameters(self.n, self.m)
    }

    pub fn label(&self) -> String {
        format!("N={} m={} l={}", self.n, self.m, self.degree)
    }
}

/// Middle, low bad, high bad, degenerate high bad and one-dimensional cases.
pub const PANEL: [PanelCase; 6] = [
    PanelCase::new(5, 0.0, 0),
    PanelCase::new(3, 0.0, 0),
    PanelCase::new(5, -2.5, 1),
    PanelCase::new(5, 8.0, 1),
    PanelCase::new(2, 4.0, 1),
    PanelCase::new(1, 2.0, 0),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Trial,
    Oracle,
    Identities,
    Fulldim,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Trial, Suite::Oracle, Suite::Identities, Suite::Fulldim];

    pub fn label(self) -> &'static str {
        match self {
            Suite::Trial => "trial",
            Suite::Oracle => "oracle",
            Suite::Identities => "identities",
            Suite::Fulldim => "fulldim",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.label() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseOutcome {
    pub case: String,
    pub measured: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub detail: String,
}

impl CaseOutcome {
    fn check(case: String, measured: f64, tolerance: f64, detail: String) -> Self {
        Self {
            case,
            measured,
            tolerance,
            passed: measured.is_finite() && measured <= tolerance,
            detail,
        }
    }

    fn failed(case: String, err: &Error) -> Self {
        Self {
            case,
            measured: f64::NAN,
            tolerance: f64::NAN,
            passed: false,
            detail: err.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: Vec<CaseOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOptions {
    pub eps: Vec<f64>,
    pub tol: f64,
    pub grid: GridSpec,
    pub k_max: Option<u32>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            eps: vec![0.02, 0.01, 0.005],
            tol: 1e-13,
            grid: GridSpec::verification(),
            k_max: None,
        }
    }
}

pub const TRIAL_REL_TOL: f64 = 1e-4;
pub const TRIAL_ABS_TOL: f64 = 1e-6;
pub const INEQUALITY_SLACK: f64 = 1e-9;
pub const ORACLE_REL_TOL: f64 = 0.02;
pub const IBP_TOL: f64 = 1e-8;
pub const FULLDIM_TOL: f64 = 1e-6;

/// Error of an extrapolated limit: relative, or absolute when the limit is zero.
pub fn limit_error(value: f64, exact: f64) -> (f64, f64) {
    if exact == 0.0 {
        ((value - exact).abs(), TRIAL_ABS_TOL)
    } else {
        ((value - exact).abs() / exact.abs(), TRIAL_REL_TOL)
    }
}

/// Gap of an oracle value above the constant, relative to the constant or
/// to `((N-m)/2)^2` when the constant vanishes.
pub fn oracle_gap(params: &Parameters<f64>, value: f64, exact: f64) -> f64 {
    let scale = if exact == 0.0 { params.upper_bound() } else { exact };
    (value - exact) / scale
}

fn trial_case(case: &PanelCase, opts: &VerifyOptions) -> Result<Vec<CaseOutcome>> {
    let p = case.params()?;
    let exact = branch_constant(&p, case.degree)?;
    let sharp = sharp_constant(&p)?.value;
    let ex = limit_extrapolate(&p, case.degree, &opts.eps, opts.tol)?;
    let (err, tol) = limit_error(ex.limit, exact);
    let lowest = ex
        .quotients
        .iter()
        .map(|q| q.1)
        .fold(f64::INFINITY, f64::min);
    Ok(vec![
        CaseOutcome::check(
            format!("{} limit", case.label()),
            err,
            tol,
            format!("limit {:.12} vs {:.12}", ex.limit, exact),
        ),
        CaseOutcome::check(
            format!("{} inequality", case.label()),
            (sharp - lowest).max(0.0),
            INEQUALITY_SLACK,
            format!("smallest quotient {lowest:.12} vs constant {sharp:.12}"),
        ),
    ])
}

fn oracle_case(case: &PanelCase, opts: &VerifyOptions) -> Result<Vec<CaseOutcome>> {
    let p = case.params()?;
    let report = sharp_constant(&p)?;
    let r = oracle_constant(&p, opts.k_max, opts.grid)?;
    let gap = oracle_gap(&p, r.overall_min, report.value);
    let below = gap < -1e-8;
    Ok(vec![
        CaseOutcome {
            passed: !below && gap <= ORACLE_REL_TOL,
            ..CaseOutcome::check(
                format!("{} gap", case.label()),
                gap.abs(),
                ORACLE_REL_TOL,
                format!("oracle {:.8} vs {:.8}", r.overall_min, report.value),
            )
        },
        CaseOutcome::check(
            format!("{} argmin", case.label()),
            f64::from(u8::from(r.argmin_mode != report.l_min)),
            0.0,
            format!("argmin mode {} vs l_min {}", r.argmin_mode, report.l_min),
        ),
    ])
}

/// `(N, m)` pairs spread over every branch, used by the identity suite.
pub const IDENTITY_GRID: [(u32, f64); 10] = [
    (1, 1.5),
    (1, 4.0),
    (2, 0.3),
    (2, 2.0),
    (2, 5.0),
    (3, -0.5),
    (3, 1.0),
    (5, -2.5),
    (5, 0.0),
    (5, 8.0),
];

fn identity_cases(opts: &VerifyOptions) -> Result<Vec<CaseOutcome>> {
    let mut out = Vec::new();
    for seed in 0..20u64 {
        let (n, m) = IDENTITY_GRID[seed as usize % IDENTITY_GRID.len()];
        let p = validate_parameters(n, m)?;
        let profile = BumpProfile::random(0.25, 4.0, seed);
        let r = ibp_identity_check(&p, &profile, opts.tol)?;
        out.push(CaseOutcome::check(
            format!("ibp N={n} m={m} seed={seed}"),
            r.residual1.max(r.residual2),
            IBP_TOL,
            format!("residuals {:.2e} {:.2e}", r.residual1, r.residual2),
        ));
        let h = onedim_hardy_check(&p, &profile, opts.tol)?;
        out.push(CaseOutcome::check(
            format!("hardy N={n} m={m} seed={seed}"),
            f64::from(u8::from(!h.holds(1e-12))),
            0.0,
            format!(
                "ratios {:.6} >= {:.6}, {:.6} >= {:.6}",
                h.ratio1, h.bound1, h.ratio2, h.bound2
            ),
        ));
    }

    let p = validate_parameters(5, 0.0)?;
    let h = onedim_hardy_trial(&p, 0.01, opts.tol)?;
    out.push(CaseOutcome::check(
        "hardy trial N=5 m=0 eps=0.01".to_string(),
        if h.ratio2 >= h.bound2 { h.ratio2 - h.bound2 } else { f64::INFINITY },
        0.05,
        format!("ratio2 {:.6} vs {:.6}", h.ratio2, h.bound2),
    ));

    for &(n, m) in &[(5, 0.0), (3, 1.0), (2, 5.0)] {
        let p = validate_parameters(n, m)?;
        let base = n as f64 + m;
        let bounds = (((base - 2.0) / 2.0).powi(2), ((base - 4.0) / 2.0).powi(2));
        let mut values = Vec::new();
        for t in [5.0, 10.0, 20.0] {
            values.push(hardy_pencils(&p, &GridSpec::symmetric(t, (200.0 * t) as usize)?)?);
        }
        let above = values
            .iter()
            .all(|v| v.0 >= bounds.0 - 1e-9 && v.1 >= bounds.1 - 1e-9);
        let decreasing = values
            .windows(2)
            .all(|w| w[1].0 <= w[0].0 + 1e-9 && w[1].1 <= w[0].1 + 1e-9);
        let last = values[2];
        let gap = (last.0 - bounds.0).max(last.1 - bounds.1);
        out.push(CaseOutcome {
            passed: above && decreasing && gap <= 0.05,
            ..CaseOutcome::check(
                format!("hardy pencils N={n} m={m}"),
                gap,
                0.05,
                format!(
                    "T=20: {:.6} vs {:.6}, {:.6} vs {:.6}",
                    last.0, bounds.0, last.1, bounds.1
                ),
            )
        });
    }
    Ok(out)
}

/// Three weights per branch for `N = 2, 3`.
pub const FULLDIM_WEIGHTS: [(u32, [f64; 9]); 2] = [
    (2, [0.1, 0.3, 0.5, 1.0, 2.0, 3.0, 4.0, 5.0, 7.0]),
    (3, [-0.9, -0.6, -0.3, 0.0, 2.0, 4.0, 5.0, 6.0, 8.0]),
];

fn fulldim_cases(opts: &VerifyOptions) -> Result<Vec<CaseOutcome>> {
    let mut out = Vec::new();
    for &(n, weights) in &FULLDIM_WEIGHTS {
        let ortho = orthonormality_defect::<f64>(n, 6)?;
        out.push(CaseOutcome::check(
            format!("orthonormality N={n}"),
            ortho,
            1e-10,
            format!("max Gram defect {ortho:.2e}"),
        ));
        for l in 0..=4 {
            let d = eigenrelation_defect(n, l)?;
            out.push(CaseOutcome::check(
                format!("eigenrelation N={n} l={l}"),
                d,
                1e-6,
                format!("relative defect {d:.2e}"),
            ));
        }
        for (i, &m) in weights.iter().enumerate() {
            let p = validate_parameters(n, m)?;
            let profile = BumpProfile::random(0.4, 3.5, 100 + i as u64);
            for l in 0..=4 {
                let c = fulldim_compare(&p, l, &profile, opts.tol)?;
                out.push(CaseOutcome::check(
                    format!("decomposition N={n} m={m} l={l}"),
                    c.max_gap(),
                    FULLDIM_TOL,
                    format!("lhs gap {:.2e}, rhs gap {:.2e}", c.lhs_gap, c.rhs_gap),
                ));
            }
        }
    }
    Ok(out)
}

fn panel_suite<F>(f: F, opts: &VerifyOptions) -> Vec<CaseOutcome>
where
    F: Fn(&PanelCase, &VerifyOptions) -> Result<Vec<CaseOutcome>> + Sync,
{
    PANEL
        .par_iter()
        .map(|c| f(c, opts).unwrap_or_else(|e| vec![CaseOutcome::failed(c.label(), &e)]))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> SuiteReport {
    let cases = match suite {
        Suite::Trial => panel_suite(trial_case, opts),
        Suite::Oracle => panel_suite(oracle_case, opts),
        Suite::Identities => identity_cases(opts)
            .unwrap_or_else(|e| vec![CaseOutcome::failed("identities".to_string(), &e)]),
        Suite::Fulldim => fulldim_cases(opts)
            .unwrap_or_else(|e| vec![CaseOutcome::failed("fulldim".to_string(), &e)]),
    };
    SuiteReport { suite, cases }
}
