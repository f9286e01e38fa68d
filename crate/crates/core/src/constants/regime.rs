use std::fmt;

use serde::Serialize;

use super::formulas::regime_boundaries;
use super::params::Parameters;
use crate::scalar::Real;

/// Which closed form gives the sharp constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Branch {
    /// `N = 1`, `m > 1`.
    OneDim,
    /// `N >= 2`, `m` in `[2 - sqrt((N-1)^2+1), 2 + sqrt((N-1)^2+1)]`.
    Middle,
    /// `N >= 2`, `m` in `(2 - N, 2 - sqrt((N-1)^2+1))`.
    LowBad,
    /// `N >= 2`, `m > 2 + sqrt((N-1)^2+1)`.
    HighBad,
}

impl Branch {
    pub fn label(self) -> &'static str {
        match self {
            Branch::OneDim => "OneDim",
            Branch::Middle => "Middle",
            Branch::LowBad => "LowBad",
            Branch::HighBad => "HighBad",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Case split of the lower-bound argument. Diagnostic only; the value of the
/// constant depends on [`Branch`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ProofCase {
    /// `(2 - m)(N + m - 4) >= 0`, i.e. `4 - N <= m <= 2`.
    A,
    /// `2 - N < m < 4 - N` with `I_1 >= 0`.
    #[serde(rename = "B1_good")]
    B1Good,
    /// `2 - N < m < 4 - N` with `I_1 < 0`.
    #[serde(rename = "B1_bad")]
    B1Bad,
    /// `m > 2` with `I_1 >= 0`.
    #[serde(rename = "B2_good")]
    B2Good,
    /// `m > 2` with `I_1 < 0`.
    #[serde(rename = "B2_bad")]
    B2Bad,
    /// One-dimensional problem.
    N1,
}

impl ProofCase {
    pub fn label(self) -> &'static str {
        match self {
            ProofCase::A => "A",
            ProofCase::B1Good => "B1_good",
            ProofCase::B1Bad => "B1_bad",
            ProofCase::B2Good => "B2_good",
            ProofCase::B2Bad => "B2_bad",
            ProofCase::N1 => "N1",
        }
    }
}

impl fmt::Display for ProofCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Regime {
    pub branch: Branch,
    pub proof_case: ProofCase,
}

/// Classifies a validated `(N, m)`.
///
/// The middle interval is closed; inputs within a relative `1e-12` of either
/// endpoint are treated as lying on it.
pub fn classify_regime<T: Real>(params: &Parameters<T>) -> Regime {
    if params.n() == 1 {
        return Regime {
            branch: Branch::OneDim,
            proof_case: ProofCase::N1,
        };
    }
    let m = params.m();
    let b = regime_boundaries::<T>(params.n());
    let tol = T::boundary_tol();
    let branch = if m < b.lower_middle - tol * b.lower_middle.abs().max(T::one()) {
        Branch::LowBad
    } else if m > b.upper_middle + tol * b.upper_middle.abs().max(T::one()) {
        Branch::HighBad
    } else {
        Branch::Middle
    };
    let good = branch == Branch::Middle;
    let proof_case = if m < b.degenerate_weight {
        if good {
            ProofCase::B1Good
        } else {
            ProofCase::B1Bad
        }
    } else if m > T::lit(2.0) {
        if good {
            ProofCase::B2Good
        } else {
            ProofCase::B2Bad
        }
    } else {
        ProofCase::A
    };
    Regime { branch, proof_case }
}
