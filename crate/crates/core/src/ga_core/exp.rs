use super::Multivector;
use crate::error::{Error, Result};

/// Inputs are halved until their sup norm is at most this before the series.
const SQUARING_THRESHOLD: f64 = 0.5;
/// The series stops once a term's sup norm drops below this.
const TERM_CUTOFF: f64 = 1e-16;
const MAX_TERMS: usize = 256;

/// Exponential of a multivector by scaling and squaring of its power series.
pub fn exp_mv(m: &Multivector) -> Result<Multivector> {
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    let norm = m.norm_inf();
    let mut squarings = 0u32;
    while norm / 2f64.powi(squarings as i32) > SQUARING_THRESHOLD {
        squarings += 1;
    }
    let x = m.scale(2f64.powi(-(squarings as i32)));

    let sig = m.sig();
    let mut sum = Multivector::scalar(sig, 1.0);
    let mut term = sum.clone();
    let mut converged = false;
    let mut terms = 1;
    for k in 1..=MAX_TERMS {
        term = term.gp_unchecked(&x).scale(1.0 / k as f64);
        sum += &term;
        terms = k + 1;
        if term.norm_inf() < TERM_CUTOFF {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NonConvergence {
            terms,
            last_term_norm: term.norm_inf(),
        });
    }
    for _ in 0..squarings {
        sum = sum.gp_unchecked(&sum);
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ga_core::{Blade, Signature};

    #[test]
    fn exp_of_zero_is_one() {
        let one = Multivector::scalar(Signature::CL3, 1.0);
        assert_eq!(exp_mv(&Multivector::zero(Signature::CL3)).unwrap(), one);
    }

    #[test]
    fn vector_exponential_is_hyperbolic() {
        let eta: f64 = 0.7;
        let w = Multivector::basis_vector(Signature::CL3, 0).scale(eta / 2.0);
        let e = exp_mv(&w).unwrap();
        assert!((e.scalar_part() - (eta / 2.0).cosh()).abs() < 1e-14);
        assert!((e.coeff(Blade::vector(0)) - (eta / 2.0).sinh()).abs() < 1e-14);
    }

    #[test]
    fn bivector_exponential_is_trigonometric() {
        let w = Multivector::blade(Signature::CL3, Blade(0b011), 2.5);
        let e = exp_mv(&w).unwrap();
        assert!((e.scalar_part() - 2.5f64.cos()).abs() < 1e-13);
        assert!((e.coeff(Blade(0b011)) - 2.5f64.sin()).abs() < 1e-13);
    }

    #[test]
    fn non_finite_input_is_rejected() {
        let w = Multivector::scalar(Signature::CL3, f64::INFINITY);
        assert_eq!(exp_mv(&w), Err(Error::NonFinite));
    }
}
