//! The spacetime algebra Cl(1,3).
//!
//! Basis vector γ_μ sits at bitmap `1 << μ`, so γ0 squares to +1 and the
//! spatial γ_k to -1. The even subalgebra is identified with Cl(3) through
//! the relative vectors γ_kγ_0 ↔ e_k, under which i_sta ↔ i_cl3.

use std::sync::OnceLock;

use crate::aps::{self, Biparavector, Paravector, CL3};
use crate::error::{Error, Result};
use crate::ga_core::{Blade, Multivector, Signature};
use crate::Vec3;

pub const STA: Signature = Signature::STA;

/// Minkowski metric diag(+1, -1, -1, -1).
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

fn check_index(mu: usize) -> Result<()> {
    if mu > 3 {
        return Err(Error::Contract(format!("spacetime index {mu} out of 0..4")));
    }
    Ok(())
}

/// γ_μ.
pub fn gamma(mu: usize) -> Result<Multivector> {
    check_index(mu)?;
    Ok(Multivector::basis_vector(STA, mu))
}

/// γ^μ = η^{μμ} γ_μ.
pub fn gamma_upper(mu: usize) -> Result<Multivector> {
    Ok(gamma(mu)?.scale(METRIC[mu]))
}

/// i = γ0γ1γ2γ3.
pub fn i4() -> Multivector {
    Multivector::pseudoscalar(STA)
}

/// Symmetrized products ½(γ_μγ_ν + γ_νγ_μ), as scalars.
pub fn metric_check() -> [[f64; 4]; 4] {
    let mut table = [[0.0; 4]; 4];
    for (mu, row) in table.iter_mut().enumerate() {
        for (nu, entry) in row.iter_mut().enumerate() {
            let a = Multivector::basis_vector(STA, mu);
            let b = Multivector::basis_vector(STA, nu);
            let sym = (&a * &b + &b * &a).scale(0.5);
            *entry = sym.scalar_part();
        }
    }
    table
}

/// Largest deviation of i² from -1 and of iγ_μ + γ_μ i from 0.
pub fn pseudoscalar_check() -> f64 {
    let i = i4();
    let mut worst = (&i * &i).distance(&Multivector::scalar(STA, -1.0));
    for mu in 0..4 {
        let g = Multivector::basis_vector(STA, mu);
        worst = worst.max((&i * &g + &g * &i).norm_inf());
    }
    worst
}

/// Grade-1 element a^μ γ_μ with contravariant components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpacetimeVector {
    pub components: [f64; 4],
}

impl SpacetimeVector {
    pub fn new(components: [f64; 4]) -> Self {
        SpacetimeVector { components }
    }

    /// cρ γ0 + j^k γ_k from a density and a spatial current.
    pub fn current(c_rho: f64, j: &Vec3) -> Self {
        SpacetimeVector::new([c_rho, j.x, j.y, j.z])
    }

    pub fn to_multivector(&self) -> Multivector {
        Multivector::vector(STA, &self.components)
    }

    pub fn try_from_multivector(m: &Multivector, tol: f64) -> Result<Self> {
        if m.sig() != STA {
            return Err(Error::SignatureMismatch {
                left: m.sig(),
                right: STA,
            });
        }
        let v = m.grade(1)?;
        let rest = m.distance(&v);
        if rest > tol {
            return Err(Error::Contract(format!(
                "not a spacetime vector: off-grade {rest:e}"
            )));
        }
        let mut components = [0.0; 4];
        for (mu, c) in components.iter_mut().enumerate() {
            *c = v.coeff(Blade::vector(mu));
        }
        Ok(SpacetimeVector { components })
    }

    /// Covariant components a_μ = η_μν a^ν.
    pub fn lower(&self) -> [f64; 4] {
        let mut out = self.components;
        for (o, g) in out.iter_mut().zip(METRIC) {
            *o *= g;
        }
        out
    }
}

struct BridgeTable {
    /// For each even STA blade bitmap: sign and Cl(3) blade.
    to_cl3: [Option<(f64, Blade)>; 16],
    /// For each Cl(3) blade bitmap: sign and STA blade.
    from_cl3: [(f64, Blade); 8],
}

fn bridge_table() -> &'static BridgeTable {
    static TABLE: OnceLock<BridgeTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut to_cl3 = [None; 16];
        let mut from_cl3 = [(0.0, Blade::SCALAR); 8];
        for subset in 0u8..8 {
            // Product of B_k = γ_kγ_0 over the members of the subset, in order.
            let mut prod = Multivector::scalar(STA, 1.0);
            for k in 0..3 {
                if subset & (1 << k) != 0 {
                    let bk = Multivector::basis_vector(STA, k + 1) * Multivector::basis_vector(STA, 0);
                    prod = prod * bk;
                }
            }
            let (bitmap, sign) = prod
                .terms()
                .find(|(_, v)| *v != 0.0)
                .map(|(b, v)| (b.bitmap(), v))
                .expect("relative-vector products are nonzero blades");
            to_cl3[bitmap] = Some((sign, Blade(subset)));
            from_cl3[subset as usize] = (sign, Blade(bitmap as u8));
        }
        BridgeTable { to_cl3, from_cl3 }
    })
}

/// Maps an even element of Cl(1,3) to Cl(3).
pub fn to_cl3(m: &Multivector, tol: f64) -> Result<Multivector> {
    if m.sig() != STA {
        return Err(Error::SignatureMismatch {
            left: m.sig(),
            right: STA,
        });
    }
    let table = bridge_table();
    let mut out = Multivector::zero(CL3);
    for (blade, value) in m.terms() {
        match table.to_cl3[blade.bitmap()] {
            Some((sign, target)) => out.set_coeff(target, out.coeff(target) + sign * value),
            None if value.abs() > tol => {
                return Err(Error::Contract(format!(
                    "odd blade {blade} with coefficient {value:e} has no even-subalgebra image"
                )))
            }
            None => {}
        }
    }
    Ok(out)
}

/// Maps a Cl(3) element into the even subalgebra of Cl(1,3).
pub fn from_cl3(m: &Multivector) -> Result<Multivector> {
    if m.sig() != CL3 {
        return Err(Error::SignatureMismatch {
            left: m.sig(),
            right: CL3,
        });
    }
    let table = bridge_table();
    let mut out = Multivector::zero(STA);
    for (blade, value) in m.terms() {
        let (sign, target) = table.from_cl3[blade.bitmap()];
        out.set_coeff(target, sign * value);
    }
    Ok(out)
}

/// v γ0 read in Cl(3): (c⁻¹∂t - ∇⃗) for v = ∇, cρ + j⃗ for a current.
pub fn split_forward(v: &SpacetimeVector) -> Paravector {
    let even = v.to_multivector() * Multivector::basis_vector(STA, 0);
    read_paravector(&even)
}

/// γ0 v read in Cl(3): the bar conjugate of [`split_forward`].
pub fn split_backward(v: &SpacetimeVector) -> Paravector {
    let even = Multivector::basis_vector(STA, 0) * v.to_multivector();
    read_paravector(&even)
}

fn read_paravector(even: &Multivector) -> Paravector {
    let cl3 = to_cl3(even, 0.0).expect("product of two vectors is even");
    let p = aps::parts_unchecked(&cl3);
    Paravector::new(p.rs, p.rv)
}

/// Multivector-level split; rejects anything that is not grade 1.
pub fn split_forward_mv(v: &Multivector, tol: f64) -> Result<Paravector> {
    Ok(split_forward(&SpacetimeVector::try_from_multivector(v, tol)?))
}

pub fn split_backward_mv(v: &Multivector, tol: f64) -> Result<Paravector> {
    Ok(split_backward(&SpacetimeVector::try_from_multivector(v, tol)?))
}

/// F = E^i γ_iγ_0 - B¹γ2γ3 - B²γ3γ1 - B³γ1γ2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FaradayBivector {
    pub e: Vec3,
    pub b: Vec3,
}

impl FaradayBivector {
    pub fn to_multivector(&self) -> Multivector {
        let g = |mu: usize| Multivector::basis_vector(STA, mu);
        let mut f = Multivector::zero(STA);
        for k in 0..3 {
            f.add_scaled(&(g(k + 1) * g(0)), self.e[k]);
        }
        f.add_scaled(&(g(2) * g(3)), -self.b.x);
        f.add_scaled(&(g(3) * g(1)), -self.b.y);
        f.add_scaled(&(g(1) * g(2)), -self.b.z);
        f
    }

    /// Inverts the packing of a pure bivector.
    pub fn try_from_multivector(m: &Multivector, tol: f64) -> Result<Self> {
        let f = m.grade(2)?;
        let rest = m.distance(&f);
        if rest > tol {
            return Err(Error::Contract(format!("not a bivector: off-grade {rest:e}")));
        }
        let t = tensor_of(&f);
        Ok(FaradayBivector {
            e: Vec3::new(t[1][0], t[2][0], t[3][0]),
            b: Vec3::new(-t[2][3], -t[3][1], -t[1][2]),
        })
    }

    /// Contravariant components F^{μν} = ⟨(γ^ν ∧ γ^μ) F⟩₀.
    pub fn tensor(&self) -> [[f64; 4]; 4] {
        tensor_of(&self.to_multivector())
    }

    /// The Cl(3) field E⃗ + iB⃗ it corresponds to.
    pub fn to_biparavector(&self) -> Biparavector {
        Biparavector::field(self.e, self.b)
    }
}

fn tensor_of(f: &Multivector) -> [[f64; 4]; 4] {
    let mut t = [[0.0; 4]; 4];
    for (mu, row) in t.iter_mut().enumerate() {
        for (nu, entry) in row.iter_mut().enumerate() {
            let up = |k: usize| Multivector::basis_vector(STA, k).scale(METRIC[k]);
            *entry = (up(nu).wedge(&up(mu)).expect("same algebra") * f).scalar_part();
        }
    }
    t
}

pub fn faraday_sta(e: &Vec3, b: &Vec3) -> FaradayBivector {
    FaradayBivector { e: *e, b: *b }
}

/// ∇ = γ^μ ∂_μ acting on a multivector field, given its four partials
/// with respect to x^μ (x⁰ = ct).
pub fn spacetime_derivative(partials: &[Multivector; 4]) -> Multivector {
    let mut out = Multivector::zero(STA);
    for (mu, d) in partials.iter().enumerate() {
        out += &(Multivector::basis_vector(STA, mu).scale(METRIC[mu]) * d);
    }
    out
}

/// Splits a grade-{1,3} element into its vector and trivector parts.
pub fn grade_13_decompose(m: &Multivector, tol: f64) -> Result<(Multivector, Multivector)> {
    let v = m.grade(1)?;
    let t = m.grade(3)?;
    let rest = m.distance(&(&v + &t));
    if rest > tol {
        return Err(Error::Contract(format!(
            "expected grades 1 and 3 only: even content {rest:e}"
        )));
    }
    Ok((v, t))
}

/// Relative bivector B_j = γ_jγ_0 for j in 1..=3.
pub fn relative_bivector(j: usize) -> Result<Multivector> {
    if !(1..=3).contains(&j) {
        return Err(Error::Contract(format!("relative index {j} out of 1..=3")));
    }
    Ok(Multivector::basis_vector(STA, j) * Multivector::basis_vector(STA, 0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommutatorFamily {
    /// B_j × B_k = ε_jkm i B_m.
    RealReal,
    /// (iB_j) × (iB_k) = -ε_jkm i B_m.
    ImagImag,
    /// (iB_j) × B_k = -ε_jkm B_m.
    ImagReal,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommutatorCheck {
    pub family: CommutatorFamily,
    pub j: usize,
    pub k: usize,
    pub error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommutatorReport {
    pub checks: Vec<CommutatorCheck>,
    pub tol: f64,
}

impl CommutatorReport {
    pub fn max_error(&self) -> f64 {
        self.checks.iter().map(|c| c.error).fold(0.0, f64::max)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CommutatorCheck> {
        self.checks.iter().filter(move |c| !(c.error <= self.tol))
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

/// Levi-Civita symbol on 1-based indices.
pub fn levi_civita3(j: usize, k: usize, m: usize) -> f64 {
    match (j, k, m) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1.0,
        (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1.0,
        _ => 0.0,
    }
}

/// Checks the complex structure of the relative bivectors under the
/// commutator product a × b = ½(ab - ba).
pub fn bivector_commutator_table(tol: f64) -> CommutatorReport {
    let i = i4();
    let b = |j: usize| relative_bivector(j).expect("index in range");
    let mut checks = Vec::with_capacity(27);
    for family in [
        CommutatorFamily::RealReal,
        CommutatorFamily::ImagImag,
        CommutatorFamily::ImagReal,
    ] {
        for j in 1..=3 {
            for k in 1..=3 {
                let (lhs, rhs) = match family {
                    CommutatorFamily::RealReal => {
                        let rhs = sum_over_m(j, k, |m| &i * &b(m));
                        (b(j).commutator(&b(k)), rhs)
                    }
                    CommutatorFamily::ImagImag => {
                        let rhs = sum_over_m(j, k, |m| -(&i * &b(m)));
                        ((&i * &b(j)).commutator(&(&i * &b(k))), rhs)
                    }
                    CommutatorFamily::ImagReal => {
                        let rhs = sum_over_m(j, k, |m| -b(m));
                        ((&i * &b(j)).commutator(&b(k)), rhs)
                    }
                };
                checks.push(CommutatorCheck {
                    family,
                    j,
                    k,
                    error: lhs.expect("same algebra").distance(&rhs),
                });
            }
        }
    }
    CommutatorReport { checks, tol }
}

fn sum_over_m(j: usize, k: usize, term: impl Fn(usize) -> Multivector) -> Multivector {
    let mut out = Multivector::zero(STA);
    for m in 1..=3 {
        let eps = levi_civita3(j, k, m);
        if eps != 0.0 {
            out.add_scaled(&term(m), eps);
        }
    }
    out
}
