//! Signature-generic Clifford algebra engine.
//!
//! Multivectors are dense coefficient arrays over the 2^n basis blades of
//! Cl(p, q), n ≤ 6. Blade `b` lives at index `b.bitmap()`. Every operation is
//! a pure function of immutable values.

mod blade;
mod exp;
mod multivector;
mod signature;

pub use blade::{blade_product, Blade};
pub use exp::exp_mv;
pub use multivector::Multivector;
pub use signature::{Signature, MAX_DIM};

/// Unit pseudoscalar of the algebra, e_0 e_1 ... e_{n-1}.
pub fn pseudoscalar(sig: Signature) -> Multivector {
    Multivector::pseudoscalar(sig)
}

/// Grade-k projection.
pub fn grade_project(m: &Multivector, k: usize) -> crate::Result<Multivector> {
    m.grade(k)
}
