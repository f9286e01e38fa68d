use thiserror::Error;

/// Errors raised by the library. Scalars are reported as `f64` regardless of
/// the precision the computation ran in.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension N = {n} is invalid: N must be at least 1")]
    DimensionTooSmall { n: u32 },

    #[error("weight exponent m = {m} violates m > 2 - N = {bound} (|x|^(m-2) is not locally integrable in dimension {n})")]
    NonIntegrableWeight { n: u32, m: f64, bound: f64 },

    #[error("weight exponent m = {m} is not a finite number")]
    NonFiniteWeight { m: f64 },

    #[error("threshold index k(m) is only defined in the high-bad regime (N = {n}, m = {m})")]
    ThresholdUndefined { n: u32, m: f64 },

    #[error("N + m - 4 = 0 (N = {n}, m = {m}); the expression divides by (N + m - 4)^2")]
    DegenerateWeight { n: u32, m: f64 },

    #[error("operation requires {requirement}; got N = {n}, m = {m}")]
    OutsideValidity {
        n: u32,
        m: f64,
        requirement: &'static str,
    },

    #[error("invalid trial function: {0}")]
    InvalidTrial(String),

    #[error("quadrature did not reach tolerance {tol:e} after {panels} panels (last estimate {estimate:e})")]
    QuadratureNotConverged { tol: f64, panels: usize, estimate: f64 },

    #[error("invalid extrapolation input: {0}")]
    InvalidExtrapolation(String),

    #[error("Rayleigh quotients are not monotone in epsilon: {quotients:?}")]
    NonMonotone { quotients: Vec<f64> },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid mode {mode} for dimension N = {n}")]
    InvalidMode { n: u32, mode: u32 },

    #[error("banded factorization broke down at shift {shift:e} (pivot {pivot:e} in row {row})")]
    Factorization { shift: f64, row: usize, pivot: f64 },

    #[error("eigenvalue bracket search failed: {0}")]
    EigenBracket(String),

    #[error("dimension N = {n} not supported here (expected 2 or 3)")]
    UnsupportedDimension { n: u32 },

    #[error("K_max = {k_max} is below the required {required}")]
    ModeRangeTooSmall { k_max: u32, required: u32 },

    #[error("unknown verification suite {0:?} (expected trial, oracle, identities or fulldim)")]
    UnknownSuite(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
