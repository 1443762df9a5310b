use std::fmt;

use super::Signature;

/// A basis blade, identified by the bitmap of the basis vectors it contains.
///
/// Bit `k` set means basis vector `k` is present; factors are always taken
/// in ascending index order, so `Blade(0b101)` in Cl(3) is e1e3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Blade(pub u8);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    /// The basis vector with index `k`.
    pub fn vector(k: usize) -> Blade {
        Blade(1 << k)
    }

    /// Blade built from a list of distinct basis-vector indices.
    pub fn from_indices(indices: &[usize]) -> Blade {
        Blade(indices.iter().fold(0u8, |acc, &k| acc | (1 << k)))
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn bitmap(self) -> usize {
        self.0 as usize
    }

    /// Indices of the basis vectors in ascending order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..8).filter(move |k| self.0 & (1 << k) != 0)
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        write!(f, "e")?;
        for k in self.indices() {
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

/// Sign picked up by moving every factor of `b` to its canonical position
/// among the factors of `a`.
#[inline]
pub(crate) fn reorder_sign(a: u8, b: u8) -> f64 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps & 1 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Geometric product of two basis blades.
///
/// Returns the sign (always ±1 for the non-degenerate metrics supported here)
/// and the resulting blade, whose bitmap is `a XOR b`.
#[inline]
pub fn blade_product(a: Blade, b: Blade, sig: Signature) -> (i8, Blade) {
    debug_assert!(a.bitmap() < sig.blade_count() && b.bitmap() < sig.blade_count());
    let mut sign = reorder_sign(a.0, b.0);
    if (a.0 & b.0 & sig.negative_mask()).count_ones() & 1 == 1 {
        sign = -sign;
    }
    (sign as i8, Blade(a.0 ^ b.0))
}

/// Sign of `blade_product` as a float, for the inner loops.
#[inline]
pub(crate) fn product_sign(a: u8, b: u8, negative_mask: u8) -> f64 {
    let s = reorder_sign(a, b);
    if (a & b & negative_mask).count_ones() & 1 == 1 {
        -s
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cl3_e1_e2_is_e12() {
        assert_eq!(
            blade_product(Blade(0b001), Blade(0b010), Signature::CL3),
            (1, Blade(0b011))
        );
        assert_eq!(
            blade_product(Blade(0b010), Blade(0b001), Signature::CL3),
            (-1, Blade(0b011))
        );
    }

    #[test]
    fn cl3_e13_e3_is_e1() {
        assert_eq!(
            blade_product(Blade(0b101), Blade(0b100), Signature::CL3),
            (1, Blade(0b001))
        );
    }

    #[test]
    fn sta_spatial_vectors_square_to_minus_one() {
        for k in 1..4 {
            let g = Blade::vector(k);
            assert_eq!(blade_product(g, g, Signature::STA), (-1, Blade::SCALAR));
        }
        let g0 = Blade::vector(0);
        assert_eq!(blade_product(g0, g0, Signature::STA), (1, Blade::SCALAR));
    }

    #[test]
    fn display_lists_indices() {
        assert_eq!(Blade(0).to_string(), "1");
        assert_eq!(Blade::from_indices(&[0, 2]).to_string(), "e02");
    }
}
