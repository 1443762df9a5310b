//! The Pauli algebra Cl(3) read as the algebra of physical space (APS).
//!
//! A general element is written α + a⃗ + i b⃗ + i β with i = e1e2e3 central.
//! Reversion `†` plays complex conjugation and Clifford conjugation `‡`
//! (bar conjugation) maps a paravector p̄ = p⁰ + p⃗ to p̲ = p⁰ - p⃗. Spacetime
//! four-vectors are real paravectors; the field F = E⃗ + iB⃗ is a biparavector.

use nalgebra::Matrix4;

use crate::error::{Error, Result};
use crate::field::{DerivMode, Event, FieldConfig};
use crate::ga_core::{exp_mv, Blade, Multivector, Signature};
use crate::Vec3;

pub const CL3: Signature = Signature::CL3;

/// ΛΛ‡ must equal 1 to this tolerance for Λ to be accepted as a rotor.
pub const UNIMODULAR_TOL: f64 = 1e-10;

const E23: Blade = Blade(0b110);
const E13: Blade = Blade(0b101);
const E12: Blade = Blade(0b011);
const E123: Blade = Blade(0b111);

/// The central pseudoscalar i = e1e2e3.
pub fn i3() -> Multivector {
    Multivector::pseudoscalar(CL3)
}

pub fn scalar(s: f64) -> Multivector {
    Multivector::scalar(CL3, s)
}

pub fn vector(v: &Vec3) -> Multivector {
    Multivector::vector(CL3, v.as_slice())
}

/// The bivector i b⃗ = b1 e2e3 + b2 e3e1 + b3 e1e2.
pub fn imag_vector(b: &Vec3) -> Multivector {
    let mut m = Multivector::zero(CL3);
    m.set_coeff(E23, b.x);
    m.set_coeff(E13, -b.y);
    m.set_coeff(E12, b.z);
    m
}

/// The trivector i β.
pub fn imag_scalar(beta: f64) -> Multivector {
    Multivector::blade(CL3, E123, beta)
}

/// Real-scalar, real-vector, imaginary-vector and imaginary-scalar parts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Parts {
    pub rs: f64,
    pub rv: Vec3,
    pub iv: Vec3,
    pub is: f64,
}

impl Parts {
    pub fn to_multivector(&self) -> Multivector {
        scalar(self.rs) + vector(&self.rv) + imag_vector(&self.iv) + imag_scalar(self.is)
    }

    /// Largest absolute component.
    pub fn norm_inf(&self) -> f64 {
        self.rs
            .abs()
            .max(self.is.abs())
            .max(self.rv.amax())
            .max(self.iv.amax())
    }

    pub fn max_diff(&self, other: &Parts) -> f64 {
        (self.rs - other.rs)
            .abs()
            .max((self.is - other.is).abs())
            .max((self.rv - other.rv).amax())
            .max((self.iv - other.iv).amax())
    }
}

fn check_cl3(m: &Multivector) -> Result<()> {
    if m.sig() != CL3 {
        return Err(Error::SignatureMismatch {
            left: m.sig(),
            right: CL3,
        });
    }
    Ok(())
}

/// Reads the four parts off the blade coefficients.
pub fn parts(m: &Multivector) -> Result<Parts> {
    check_cl3(m)?;
    Ok(parts_unchecked(m))
}

pub(crate) fn parts_unchecked(m: &Multivector) -> Parts {
    let c = m.coeffs();
    Parts {
        rs: c[0],
        rv: Vec3::new(c[1], c[2], c[4]),
        iv: Vec3::new(c[E23.bitmap()], -c[E13.bitmap()], c[E12.bitmap()]),
        is: c[E123.bitmap()],
    }
}

/// The same four parts computed only from m, m†, m‡ and (m†)‡.
///
/// rs = ¼[m + m† + m‡ + m†‡], rv = ¼[m + m† - m‡ - m†‡],
/// is = ¼[m - m† + m‡ - m†‡], iv = ¼[m - m† - m‡ + m†‡].
/// The imaginary combinations are multiplied by -i to read off real values.
pub fn parts_via_involutions(m: &Multivector) -> Result<Parts> {
    check_cl3(m)?;
    let dag = m.reverse();
    let ddag = m.clifford_conjugate();
    let both = dag.clifford_conjugate();
    let combo = |s1: f64, s2: f64, s3: f64| {
        let mut out = m.clone();
        out.add_scaled(&dag, s1);
        out.add_scaled(&ddag, s2);
        out.add_scaled(&both, s3);
        out.scale(0.25)
    };
    let minus_i = -i3();
    let rs = combo(1.0, 1.0, 1.0);
    let rv = combo(1.0, -1.0, -1.0);
    let is = &minus_i * combo(-1.0, 1.0, -1.0);
    let iv = &minus_i * combo(-1.0, -1.0, 1.0);
    let read_vec = |v: &Multivector| {
        Vec3::new(
            v.coeff(Blade::vector(0)),
            v.coeff(Blade::vector(1)),
            v.coeff(Blade::vector(2)),
        )
    };
    Ok(Parts {
        rs: rs.scalar_part(),
        rv: read_vec(&rv),
        iv: read_vec(&iv),
        is: is.scalar_part(),
    })
}

/// Parity inversion, m ↦ [(m)‡]†.
///
/// Real paravectors map to their bar conjugate and pseudoparavectors i p̄
/// map to -i p̄‡; on a general element this is the grade involution.
pub fn parity(m: &Multivector) -> Result<Multivector> {
    check_cl3(m)?;
    Ok(m.clifford_conjugate().reverse())
}

/// Grade-{0,1} element p⁰ + p⃗, housing four-vectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Paravector {
    pub scalar: f64,
    pub vec: Vec3,
}

impl Paravector {
    pub fn new(scalar: f64, vec: Vec3) -> Self {
        Paravector { scalar, vec }
    }

    pub fn from_components(c: [f64; 4]) -> Self {
        Paravector::new(c[0], Vec3::new(c[1], c[2], c[3]))
    }

    pub fn components(&self) -> [f64; 4] {
        [self.scalar, self.vec.x, self.vec.y, self.vec.z]
    }

    pub fn to_multivector(&self) -> Multivector {
        scalar(self.scalar) + vector(&self.vec)
    }

    /// Accepts `m` if its grade-2 and grade-3 parts vanish to `tol`.
    pub fn try_from_multivector(m: &Multivector, tol: f64) -> Result<Self> {
        let p = parts(m)?;
        if p.iv.amax() > tol || p.is.abs() > tol {
            return Err(Error::Contract(format!(
                "not a paravector: imaginary parts {:e}",
                p.iv.amax().max(p.is.abs())
            )));
        }
        Ok(Paravector::new(p.rs, p.rv))
    }

    /// Bar (Clifford) conjugate p⁰ - p⃗.
    pub fn conjugate(&self) -> Paravector {
        Paravector::new(self.scalar, -self.vec)
    }

    pub fn scale(&self, s: f64) -> Paravector {
        Paravector::new(self.scalar * s, self.vec * s)
    }

    pub fn max_diff(&self, other: &Paravector) -> f64 {
        (self.scalar - other.scalar)
            .abs()
            .max((self.vec - other.vec).amax())
    }
}

impl std::ops::Add for Paravector {
    type Output = Paravector;
    fn add(self, rhs: Paravector) -> Paravector {
        Paravector::new(self.scalar + rhs.scalar, self.vec + rhs.vec)
    }
}

impl std::ops::Sub for Paravector {
    type Output = Paravector;
    fn sub(self, rhs: Paravector) -> Paravector {
        Paravector::new(self.scalar - rhs.scalar, self.vec - rhs.vec)
    }
}

/// Grade-{1,2} element v⃗ + i w⃗; the field F = E⃗ + iB⃗ is one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Biparavector {
    pub real: Vec3,
    pub imag: Vec3,
}

impl Biparavector {
    pub fn new(real: Vec3, imag: Vec3) -> Self {
        Biparavector { real, imag }
    }

    /// F = E⃗ + iB⃗.
    pub fn field(e: Vec3, b: Vec3) -> Self {
        Biparavector::new(e, b)
    }

    pub fn to_multivector(&self) -> Multivector {
        vector(&self.real) + imag_vector(&self.imag)
    }

    pub fn try_from_multivector(m: &Multivector, tol: f64) -> Result<Self> {
        let p = parts(m)?;
        if p.rs.abs() > tol || p.is.abs() > tol {
            return Err(Error::Contract(format!(
                "not a biparavector: scalar parts {:e}",
                p.rs.abs().max(p.is.abs())
            )));
        }
        Ok(Biparavector::new(p.rv, p.iv))
    }

    pub fn max_diff(&self, other: &Biparavector) -> f64 {
        (self.real - other.real)
            .amax()
            .max((self.imag - other.imag).amax())
    }
}

/// A restricted Lorentz transformation Λ with ΛΛ‡ = 1.
#[derive(Debug, Clone, PartialEq)]
pub struct LorentzRotor {
    value: Multivector,
}

impl LorentzRotor {
    pub fn identity() -> Self {
        LorentzRotor { value: scalar(1.0) }
    }

    /// Wraps `value` after checking unimodularity.
    pub fn new(value: Multivector) -> Result<Self> {
        check_cl3(&value)?;
        let defect = unimodular_defect(&value);
        if !(defect <= UNIMODULAR_TOL) {
            return Err(Error::NotUnimodular { defect });
        }
        Ok(LorentzRotor { value })
    }

    pub fn value(&self) -> &Multivector {
        &self.value
    }

    /// Λ⁻¹ = Λ‡.
    pub fn inverse(&self) -> LorentzRotor {
        LorentzRotor {
            value: self.value.clifford_conjugate(),
        }
    }

    /// Rotor of `self` followed by `next`.
    pub fn then(&self, next: &LorentzRotor) -> LorentzRotor {
        LorentzRotor {
            value: &next.value * &self.value,
        }
    }

    /// Active transformation m̂ ↦ Λ m̂ Λ† of a general element.
    pub fn conjugate_upper(&self, m: &Multivector) -> Multivector {
        &(&self.value * m) * &self.value.reverse()
    }

    /// m ↦ (Λ†)⁻¹ m Λ⁻¹ of a general element; (Λ†)⁻¹ = Λ†‡.
    pub fn conjugate_lower(&self, m: &Multivector) -> Multivector {
        let left = self.value.reverse().clifford_conjugate();
        &(&left * m) * &self.value.clifford_conjugate()
    }

    /// m ↦ Λ m Λ⁻¹.
    pub fn conjugate_field(&self, m: &Multivector) -> Multivector {
        &(&self.value * m) * &self.value.clifford_conjugate()
    }

    pub fn apply_upper(&self, p: &Paravector) -> Paravector {
        let out = parts_unchecked(&self.conjugate_upper(&p.to_multivector()));
        Paravector::new(out.rs, out.rv)
    }

    pub fn apply_lower(&self, p: &Paravector) -> Paravector {
        let out = parts_unchecked(&self.conjugate_lower(&p.to_multivector()));
        Paravector::new(out.rs, out.rv)
    }

    pub fn apply_field(&self, f: &Biparavector) -> Biparavector {
        let out = parts_unchecked(&self.conjugate_field(&f.to_multivector()));
        Biparavector::new(out.rv, out.iv)
    }

    /// Matrix L with (Λ p̄ Λ†)^μ = L^μ_ν p^ν.
    pub fn lorentz_matrix(&self) -> Matrix4<f64> {
        let mut l = Matrix4::zeros();
        for nu in 0..4 {
            let mut basis = [0.0; 4];
            basis[nu] = 1.0;
            let col = self.apply_upper(&Paravector::from_components(basis));
            for (mu, v) in col.components().into_iter().enumerate() {
                l[(mu, nu)] = v;
            }
        }
        l
    }

    /// |Λ† - Λ|, zero for pure boosts.
    pub fn hermiticity_defect(&self) -> f64 {
        self.value.reverse().distance(&self.value)
    }

    /// |Λ†Λ - 1|, zero for pure rotations.
    pub fn unitarity_defect(&self) -> f64 {
        (&self.value.reverse() * &self.value).distance(&scalar(1.0))
    }
}

/// |ΛΛ‡ - 1| in the sup norm.
pub fn unimodular_defect(value: &Multivector) -> f64 {
    (value * &value.clifford_conjugate()).distance(&Multivector::scalar(value.sig(), 1.0))
}

/// Λ = exp(½(η⃗ - iθ⃗)): boost rapidity vector η⃗, rotation vector θ⃗.
pub fn rotor(boost: &Vec3, rotation: &Vec3) -> Result<LorentzRotor> {
    let xi = vector(boost) - imag_vector(rotation);
    LorentzRotor::new(exp_mv(&xi.scale(0.5))?)
}

pub fn lt_apply_upper(rotor: &LorentzRotor, p: &Paravector) -> Paravector {
    rotor.apply_upper(p)
}

pub fn lt_apply_lower(rotor: &LorentzRotor, p: &Paravector) -> Paravector {
    rotor.apply_lower(p)
}

pub fn lt_apply_field(rotor: &LorentzRotor, f: &Biparavector) -> Biparavector {
    rotor.apply_field(f)
}

/// e^{-iθ}.
pub fn duality_phase(theta: f64) -> Multivector {
    scalar(theta.cos()) - imag_scalar(theta.sin())
}

/// F ↦ F e^{-iθ}.
pub fn duality_rotate_field(f: &Biparavector, theta: f64) -> Biparavector {
    let rotated = parts_unchecked(&(f.to_multivector() * duality_phase(theta)));
    Biparavector::new(rotated.rv, rotated.iv)
}

/// (J̲e, J̲m) ↦ (J̲e cos θ + J̲m sin θ, -J̲e sin θ + J̲m cos θ).
pub fn duality_rotate_currents(
    electric: &Paravector,
    magnetic: &Paravector,
    theta: f64,
) -> (Paravector, Paravector) {
    let (s, c) = theta.sin_cos();
    (
        electric.scale(c) + magnetic.scale(s),
        magnetic.scale(c) - electric.scale(s),
    )
}

/// Overall sign ε of the paravector quadratic form.
///
/// ε = +1 gives paravector space of signature (1,3), Lorentz (+,-,-,-);
/// ε = -1 gives (3,1), i.e. (+,+,+,-).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParavectorMetric {
    epsilon: f64,
}

impl Default for ParavectorMetric {
    fn default() -> Self {
        ParavectorMetric { epsilon: 1.0 }
    }
}

impl ParavectorMetric {
    pub fn new(epsilon: i8) -> Result<Self> {
        match epsilon {
            1 | -1 => Ok(ParavectorMetric {
                epsilon: f64::from(epsilon),
            }),
            _ => Err(Error::Contract(format!("epsilon must be ±1, got {epsilon}"))),
        }
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// M̲ = ε M̄‡.
    pub fn lower(&self, m: &Paravector) -> Paravector {
        m.conjugate().scale(self.epsilon)
    }

    /// M̄M̲ = ε(M₀² - M⃗²), evaluated as a geometric product.
    pub fn quadratic_form(&self, m: &Paravector) -> f64 {
        (m.to_multivector() * self.lower(m).to_multivector()).scalar_part()
    }
}

pub fn quadratic_form(m: &Paravector, epsilon: i8) -> Result<f64> {
    Ok(ParavectorMetric::new(epsilon)?.quadratic_form(m))
}

/// Multivector-valued partials of a paravector field, with the time partial
/// taken with respect to ct.
fn paravector_partials(
    f: &dyn FieldConfig<4>,
    x: &Event,
    mode: &DerivMode,
    c: f64,
) -> Result<(Vec<Multivector>, Vec<Vec<Multivector>>)> {
    let jets = mode.jets(f, x)?.map(|j| j.to_ct(c));
    let mv = |get: &dyn Fn(usize) -> f64| {
        Paravector::from_components([get(0), get(1), get(2), get(3)]).to_multivector()
    };
    let d = (0..4).map(|mu| mv(&|k| jets[k].d[mu])).collect();
    let dd = (0..4)
        .map(|mu| (0..4).map(|nu| mv(&|k| jets[k].dd[mu][nu])).collect())
        .collect();
    Ok((d, dd))
}

/// ∂̄M = (c⁻¹∂t - ∇⃗)M for a paravector field M.
pub fn paravector_derivative_forward(
    f: &dyn FieldConfig<4>,
    x: &Event,
    mode: &DerivMode,
    c: f64,
) -> Result<Multivector> {
    let (d, _) = paravector_partials(f, x, mode, c)?;
    let mut out = d[0].clone();
    for k in 0..3 {
        out -= &(Multivector::basis_vector(CL3, k) * &d[k + 1]);
    }
    Ok(out)
}

/// ∂̲M = (c⁻¹∂t + ∇⃗)M for a paravector field M.
pub fn paravector_derivative_backward(
    f: &dyn FieldConfig<4>,
    x: &Event,
    mode: &DerivMode,
    c: f64,
) -> Result<Multivector> {
    let (d, _) = paravector_partials(f, x, mode, c)?;
    let mut out = d[0].clone();
    for k in 0..3 {
        out += &(Multivector::basis_vector(CL3, k) * &d[k + 1]);
    }
    Ok(out)
}

/// □M = ∂̲(∂̄M), formed from the operator product of the two derivatives.
pub fn dalembertian(f: &dyn FieldConfig<4>, x: &Event, mode: &DerivMode, c: f64) -> Result<Multivector> {
    let (_, dd) = paravector_partials(f, x, mode, c)?;
    // ∂̲ = Σ_μ u_μ ∂_μ with u = (1, e1, e2, e3); ∂̄ = Σ_ν w_ν ∂_ν with w = (1, -e1, -e2, -e3).
    let unit = |mu: usize, sign: f64| {
        if mu == 0 {
            scalar(1.0)
        } else {
            Multivector::basis_vector(CL3, mu - 1).scale(sign)
        }
    };
    let mut out = Multivector::zero(CL3);
    for mu in 0..4 {
        for nu in 0..4 {
            let op = unit(mu, 1.0) * unit(nu, -1.0);
            out += &(op * &dd[mu][nu]);
        }
    }
    Ok(out)
}
