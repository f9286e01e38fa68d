//! Sharp constants of the weighted Hardy-Rellich inequality with radial derivative
//!
//! ```text
//! int |Lap u|^2 |x|^m dx >= C(N, m) int |x . grad u|^2 |x|^(m-4) dx
//! ```
//!
//! for `N >= 1`, `m > 2 - N`, together with three independent numerical checks
//! of sharpness: trial-function quadrature, a discrete spectral oracle, and a
//! full-dimensional cross-check of the spherical-harmonics reduction.
//!
//! Every routine is generic over the scalar type through [`Real`]
//! (`f32` or `f64`); the `*64` aliases fix double precision.

pub mod constants;
pub mod error;
pub mod fulldim;
pub mod quadrature;
pub mod scalar;
pub mod spectral;
pub mod trial;
pub mod verify;

pub use constants::*;
pub use error::{Error, Result};
pub use scalar::Real;

pub type Parameters64 = Parameters<f64>;
pub type ConstantReport64 = ConstantReport<f64>;
pub type ImprovementReport64 = ImprovementReport<f64>;
pub type TrialSpec64 = trial::TrialSpec<f64>;
pub type QuadratureResult64 = trial::QuadratureResult<f64>;
pub type RadialIntegrals64 = trial::RadialIntegrals<f64>;
pub type Extrapolation64 = trial::Extrapolation<f64>;
pub type SpectralResult64 = spectral::SpectralResult<f64>;
pub type FullDimComparison64 = fulldim::FullDimComparison<f64>;

pub type Parameters32 = Parameters<f32>;
pub type ConstantReport32 = ConstantReport<f32>;
