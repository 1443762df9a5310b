use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vector-space dimension.
pub const MAX_DIM: usize = 6;

/// Metric descriptor of a non-degenerate Clifford algebra Cl(p, q).
///
/// Basis vectors are ordered with the `p` positive-norm vectors first, so
/// `metric(k)` is `+1` for `k < p` and `-1` otherwise. In Cl(1,3) this puts
/// γ0 at index 0 and γ1..γ3 at indices 1..3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    p: u8,
    q: u8,
}

impl Signature {
    /// Euclidean three-space, the Pauli algebra.
    pub const CL3: Signature = Signature { p: 3, q: 0 };
    /// Minkowski spacetime with metric (+,-,-,-).
    pub const STA: Signature = Signature { p: 1, q: 3 };

    pub fn new(p: u8, q: u8) -> Result<Self> {
        if usize::from(p) + usize::from(q) > MAX_DIM {
            return Err(Error::UnsupportedSignature { p, q });
        }
        Ok(Signature { p, q })
    }

    pub fn p(&self) -> usize {
        self.p as usize
    }

    pub fn q(&self) -> usize {
        self.q as usize
    }

    /// Dimension n = p + q of the generating vector space.
    pub fn dim(&self) -> usize {
        self.p() + self.q()
    }

    /// s = p - q.
    pub fn signature_number(&self) -> i32 {
        self.p as i32 - self.q as i32
    }

    /// Number of basis blades, 2^n.
    pub fn blade_count(&self) -> usize {
        1 << self.dim()
    }

    /// Square of basis vector `k`.
    #[inline]
    pub fn metric(&self, k: usize) -> f64 {
        debug_assert!(k < self.dim());
        if k < self.p() {
            1.0
        } else {
            -1.0
        }
    }

    /// Bitmap whose set bits are the negative-norm basis vectors.
    #[inline]
    pub(crate) fn negative_mask(&self) -> u8 {
        let all = (1u16 << self.dim()) - 1;
        let pos = (1u16 << self.p()) - 1;
        (all & !pos) as u8
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn metric_orders_positive_vectors_first() {
        let sta = Signature::STA;
        assert_eq!(sta.metric(0), 1.0);
        for k in 1..4 {
            assert_eq!(sta.metric(k), -1.0);
        }
        assert_eq!(sta.negative_mask(), 0b1110);
        assert_eq!(Signature::CL3.negative_mask(), 0);
        assert_eq!(sta.signature_number(), -2);
    }

    #[test]
    fn rejects_large_dimensions() {
        assert!(Signature::new(4, 2).is_ok());
        assert_eq!(
            Signature::new(5, 2),
            Err(Error::UnsupportedSignature { p: 5, q: 2 })
        );
    }
}
