use thiserror::Error;

use crate::ga_core::Signature;

/// Errors raised by the algebra kernel and the field machinery built on it.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unsupported signature Cl({p},{q}): dimension must be at most 6")]
    UnsupportedSignature { p: u8, q: u8 },

    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("grade {grade} out of range for a {dim}-dimensional algebra")]
    GradeOutOfRange { grade: usize, dim: usize },

    #[error("coefficient vector has length {got}, expected {expected}")]
    CoefficientLength { got: usize, expected: usize },

    #[error("multivector has non-finite coefficients")]
    NonFinite,

    #[error("exponential series did not converge after {terms} terms (last term norm {last_term_norm:e})")]
    NonConvergence { terms: usize, last_term_norm: f64 },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("rotor is not unimodular: |L L' - 1| = {defect:e}")]
    NotUnimodular { defect: f64 },

    #[error("derivative unavailable: {0}")]
    DerivativeUnavailable(&'static str),

    #[error("Lorenz gauge condition violated: gA = {electric:e}, gZ = {magnetic:e} (tolerance {tol:e})")]
    GaugeCondition { electric: f64, magnetic: f64, tol: f64 },

    #[error("invalid grid: {0}")]
    Grid(String),

    #[error("invalid spacing ladder: {0}")]
    Ladder(String),
}

pub type Result<T> = std::result::Result<T, Error>;
