//! Geometric-algebra kernel for finite-range electrodynamics with electric
//! and magnetic charges.
//!
//! The crate is layered bottom-up:
//!
//! * [`ga_core`]: dense multivectors over any non-degenerate Cl(p, q), n ≤ 6.
//! * [`field`]: spacetime field configurations with exact or finite-difference
//!   derivatives.
//! * [`aps`]: the Pauli algebra Cl(3) read as the algebra of physical space
//!   (paravectors, Lorentz rotors, duality rotations).
//! * [`sta`]: the spacetime algebra Cl(1,3) and its γ0 bridge to Cl(3).
//! * [`em_fields`]: the two-potential Maxwell–Proca–Dirac system evaluated as
//!   residuals in component, APS and STA form.
//! * [`analytic_lab`]: closed-form configurations, grids, convergence studies.

#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic_lab;
pub mod aps;
pub mod em_fields;
pub mod error;
pub mod field;
pub mod ga_core;
pub mod sta;

pub use error::{Error, Result};
pub use ga_core::{Blade, Multivector, Signature};

/// Real 3-vector used for spatial quantities.
pub type Vec3 = nalgebra::Vector3<f64>;
