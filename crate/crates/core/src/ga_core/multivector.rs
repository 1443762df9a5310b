use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use smallvec::SmallVec;

use super::blade::{product_sign, Blade};
use super::Signature;
use crate::error::{Error, Result};

pub(crate) type Coeffs = SmallVec<[f64; 16]>;

/// A general element of Cl(p, q): one real coefficient per basis blade,
/// indexed by blade bitmap (ascending-bitmap order).
#[derive(Clone, PartialEq)]
pub struct Multivector {
    sig: Signature,
    coeffs: Coeffs,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            coeffs: SmallVec::from_elem(0.0, sig.blade_count()),
        }
    }

    pub fn scalar(sig: Signature, value: f64) -> Self {
        Self::blade(sig, Blade::SCALAR, value)
    }

    pub fn blade(sig: Signature, blade: Blade, coeff: f64) -> Self {
        let mut m = Self::zero(sig);
        m.coeffs[blade.bitmap()] = coeff;
        m
    }

    /// Basis vector `k` with unit coefficient.
    pub fn basis_vector(sig: Signature, k: usize) -> Self {
        Self::blade(sig, Blade::vector(k), 1.0)
    }

    /// Grade-1 element with the given components on the basis vectors.
    pub fn vector(sig: Signature, components: &[f64]) -> Self {
        assert_eq!(components.len(), sig.dim(), "vector length must equal dim");
        let mut m = Self::zero(sig);
        for (k, &c) in components.iter().enumerate() {
            m.coeffs[1 << k] = c;
        }
        m
    }

    pub fn from_coeffs(sig: Signature, coeffs: &[f64]) -> Result<Self> {
        if coeffs.len() != sig.blade_count() {
            return Err(Error::CoefficientLength {
                got: coeffs.len(),
                expected: sig.blade_count(),
            });
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Multivector {
            sig,
            coeffs: SmallVec::from_slice(coeffs),
        })
    }

    /// Top-grade blade e_0 e_1 ... e_{n-1} with coefficient +1.
    pub fn pseudoscalar(sig: Signature) -> Self {
        Self::blade(sig, Blade(((1u16 << sig.dim()) - 1) as u8), 1.0)
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, blade: Blade) -> f64 {
        self.coeffs[blade.bitmap()]
    }

    pub fn set_coeff(&mut self, blade: Blade, value: f64) {
        self.coeffs[blade.bitmap()] = value;
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    /// Iterator over (blade, coefficient) pairs with nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (Blade, f64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0.0)
            .map(|(b, &c)| (Blade(b as u8), c))
    }

    fn check_sig(&self, other: &Multivector) -> Result<()> {
        if self.sig != other.sig {
            Err(Error::SignatureMismatch {
                left: self.sig,
                right: other.sig,
            })
        } else {
            Ok(())
        }
    }

    /// Geometric product.
    pub fn gp(&self, other: &Multivector) -> Result<Multivector> {
        self.check_sig(other)?;
        Ok(self.gp_unchecked(other))
    }

    pub(crate) fn gp_unchecked(&self, other: &Multivector) -> Multivector {
        let neg = self.sig.negative_mask();
        let mut out = Multivector::zero(self.sig);
        for (a, &ca) in self.coeffs.iter().enumerate() {
            if ca == 0.0 {
                continue;
            }
            for (b, &cb) in other.coeffs.iter().enumerate() {
                if cb == 0.0 {
                    continue;
                }
                let s = product_sign(a as u8, b as u8, neg);
                out.coeffs[a ^ b] += s * ca * cb;
            }
        }
        out
    }

    /// Sum of products of blade pairs whose result grade satisfies `keep`.
    fn filtered_product(
        &self,
        other: &Multivector,
        keep: impl Fn(usize, usize, usize) -> bool,
    ) -> Result<Multivector> {
        self.check_sig(other)?;
        let neg = self.sig.negative_mask();
        let mut out = Multivector::zero(self.sig);
        for (a, &ca) in self.coeffs.iter().enumerate() {
            if ca == 0.0 {
                continue;
            }
            let ga = (a as u8).count_ones() as usize;
            for (b, &cb) in other.coeffs.iter().enumerate() {
                if cb == 0.0 {
                    continue;
                }
                let gb = (b as u8).count_ones() as usize;
                let gr = ((a ^ b) as u8).count_ones() as usize;
                if keep(ga, gb, gr) {
                    out.coeffs[a ^ b] += product_sign(a as u8, b as u8, neg) * ca * cb;
                }
            }
        }
        Ok(out)
    }

    /// Outer product: the grade-raising part of the geometric product.
    pub fn wedge(&self, other: &Multivector) -> Result<Multivector> {
        self.filtered_product(other, |ga, gb, gr| gr == ga + gb)
    }

    /// Inner product: the grade-lowering part, keeping grade |ga - gb|.
    pub fn dot(&self, other: &Multivector) -> Result<Multivector> {
        self.filtered_product(other, |ga, gb, gr| gr == ga.abs_diff(gb))
    }

    /// Commutator product (ab - ba) / 2.
    pub fn commutator(&self, other: &Multivector) -> Result<Multivector> {
        let ab = self.gp(other)?;
        let ba = other.gp_unchecked(self);
        Ok((ab - ba) * 0.5)
    }

    /// Grade-k part.
    pub fn grade(&self, k: usize) -> Result<Multivector> {
        if k > self.sig.dim() {
            return Err(Error::GradeOutOfRange {
                grade: k,
                dim: self.sig.dim(),
            });
        }
        Ok(self.map_by_grade(|g, c| if g == k { c } else { 0.0 }))
    }

    /// Parts of the given grades summed together.
    pub fn grades(&self, ks: &[usize]) -> Multivector {
        self.map_by_grade(|g, c| if ks.contains(&g) { c } else { 0.0 })
    }

    fn map_by_grade(&self, f: impl Fn(usize, f64) -> f64) -> Multivector {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(b, &c)| f((b as u8).count_ones() as usize, c))
            .collect();
        Multivector {
            sig: self.sig,
            coeffs,
        }
    }

    /// Reversion: grade k picks up (-1)^(k(k-1)/2).
    pub fn reverse(&self) -> Multivector {
        self.map_by_grade(|g, c| if g % 4 >= 2 { -c } else { c })
    }

    /// Grade involution: odd grades negate.
    pub fn grade_involution(&self) -> Multivector {
        self.map_by_grade(|g, c| if g % 2 == 1 { -c } else { c })
    }

    /// Clifford conjugate, the composition of reversion and grade involution.
    pub fn clifford_conjugate(&self) -> Multivector {
        self.map_by_grade(|g, c| if matches!(g % 4, 1 | 2) { -c } else { c })
    }

    pub fn scale(&self, s: f64) -> Multivector {
        Multivector {
            sig: self.sig,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Largest absolute coefficient.
    pub fn norm_inf(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Coefficientwise comparison in the sup norm.
    pub fn approx_eq(&self, other: &Multivector, tol: f64) -> bool {
        self.sig == other.sig && self.distance(other) <= tol
    }

    /// Sup-norm distance between two elements of the same algebra.
    pub fn distance(&self, other: &Multivector) -> f64 {
        assert_eq!(self.sig, other.sig, "distance across algebras");
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    pub fn add_scaled(&mut self, other: &Multivector, s: f64) {
        assert_eq!(self.sig, other.sig, "signature mismatch in add");
        for (a, b) in self.coeffs.iter_mut().zip(other.coeffs.iter()) {
            *a += s * b;
        }
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.sig, self)
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (b, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if b == Blade::SCALAR {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{b}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// Operators panic on signature mismatch; use `gp` for the fallible form.

impl Add<&Multivector> for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        let mut out = self.clone();
        out.add_scaled(rhs, 1.0);
        out
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(mut self, rhs: Multivector) -> Multivector {
        self.add_scaled(&rhs, 1.0);
        self
    }
}

impl Add<&Multivector> for Multivector {
    type Output = Multivector;
    fn add(mut self, rhs: &Multivector) -> Multivector {
        self.add_scaled(rhs, 1.0);
        self
    }
}

impl Sub<&Multivector> for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        let mut out = self.clone();
        out.add_scaled(rhs, -1.0);
        out
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(mut self, rhs: Multivector) -> Multivector {
        self.add_scaled(&rhs, -1.0);
        self
    }
}

impl Sub<&Multivector> for Multivector {
    type Output = Multivector;
    fn sub(mut self, rhs: &Multivector) -> Multivector {
        self.add_scaled(rhs, -1.0);
        self
    }
}

impl AddAssign<&Multivector> for Multivector {
    fn add_assign(&mut self, rhs: &Multivector) {
        self.add_scaled(rhs, 1.0);
    }
}

impl SubAssign<&Multivector> for Multivector {
    fn sub_assign(&mut self, rhs: &Multivector) {
        self.add_scaled(rhs, -1.0);
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, s: f64) -> Multivector {
        self.scale(s)
    }
}

impl Mul<f64> for &Multivector {
    type Output = Multivector;
    fn mul(self, s: f64) -> Multivector {
        self.scale(s)
    }
}

impl Mul<&Multivector> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.sig, rhs.sig, "signature mismatch in geometric product");
        self.gp_unchecked(rhs)
    }
}

impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        &self * &rhs
    }
}

impl Mul<&Multivector> for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        &self * rhs
    }
}

impl Mul<Multivector> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        self * &rhs
    }
}
