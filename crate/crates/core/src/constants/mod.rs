//! Closed-form constants, regime classification and comparison with the
//! full-gradient inequality.

mod formulas;
mod params;
mod prior;
mod regime;
mod sharp;

pub use formulas::{
    branch_constant, eigenvalue_ck, epsilon_k, epsilon_one_explicit, index_term, prior_threshold,
    regime_boundaries, threshold_k, RegimeBoundaries,
};
pub use params::{validate_parameters, Parameters};
pub use prior::{
    hardy_constant, hardy_rellich_constant, improvement_report, mode_quotient, prior_constant,
    prior_constant_catalog, prior_constant_tz, rellich_constant, ImprovementReport, ModeMinimum,
    PriorConstant, PriorSource,
};
pub use regime::{classify_regime, Branch, ProofCase, Regime};
pub use sharp::{sharp_constant, BranchValue, ConstantReport};
