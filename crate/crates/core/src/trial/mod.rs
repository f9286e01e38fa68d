//! Trial-function quadrature: the approximating sequences, their Rayleigh
//! quotients and `eps -> 0` limits, and checks of the radial identities used
//! in the reduction.

mod cutoff;
mod extrapolate;
mod identities;
mod profiles;
mod sequence;

pub use cutoff::{cutoff_eval, CutoffSpec, RadialJet};
pub use extrapolate::{hermite_at, limit_extrapolate, Extrapolation};
pub use identities::{
    ibp_identity_check, onedim_hardy_check, onedim_hardy_trial, HardyRatios, IbpResiduals,
};
pub use profiles::{Bump, BumpProfile, RadialProfile};
pub use sequence::{
    asymptotic_leading, mode_coefficients, radial_integrals, rayleigh_quotient, scaled_forms,
    trial_eval, AsymptoticLeading, QuadratureResult, RadialIntegrals, ScaledForms, TrialSpec,
};
