//! Closed-form field configurations, sampling grids and convergence fits.

mod configs;
mod faraday;
mod grid;
mod random;

pub use crate::field::{DerivMode, FieldConfig, Stencil, StencilOrder};
pub use configs::{
    detuned_plane_wave, massless_plane_wave, monopole_config, proca_plane_wave, yukawa_config, PlaneWave,
    RadialPotential,
};
pub use faraday::{faraday_sign_experiment, FaradayCombination, FaradaySignReport, MetricKind};
pub use grid::{convergence_study, fit_loglog, ConvergenceResult, GridSpec, SLOPE_TOLERANCE};
pub use random::{
    periodic_smooth_config, random_events, random_smooth_config, SmoothConfig, TrigMode, TrigPolynomial,
};
