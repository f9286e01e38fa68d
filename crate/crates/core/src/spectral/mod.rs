//! Discrete spectral oracle: per-mode generalized eigenvalue problems on a
//! log-radius grid, minimized over spherical-harmonic degrees.

mod banded;
mod forms;
mod oracle;

pub use banded::{min_generalized_eig, BandedSym, EIG_REL_TOL};
pub use forms::{
    assemble_forms, hardy_pencils, mode_minimum, sample_unknowns, GridSpec, ModeProblem,
    MIN_POINTS,
};
pub use oracle::{
    convergence_study, default_modes, oracle_constant, required_modes, ConvergenceRow,
    ConvergenceTable, ModeValue, SpectralResult,
};
