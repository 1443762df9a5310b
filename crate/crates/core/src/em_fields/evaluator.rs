use std::f64::consts::PI;

use rayon::prelude::*;

use super::{Potentials, Sources};
use crate::aps::{self, Paravector, Parts, CL3};
use crate::error::{Error, Result};
use crate::field::{DerivMode, Event, FieldConfig, Jet};
use crate::ga_core::Multivector;
use crate::sta::{self, levi_civita3, METRIC, STA};
use crate::Vec3;

/// Deliberate defects for checking that the verification suites notice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    /// Flips the sign of the mass term in the Cl(3) residual.
    ApsMassSign,
}

/// Evaluation context: speed of light, derivative mode, gauge tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluator {
    c: f64,
    mode: DerivMode,
    gauge_tol: f64,
    mutation: Option<Mutation>,
}

impl Default for Evaluator {
    fn default() -> Self {
        Evaluator {
            c: 1.0,
            mode: DerivMode::Analytic,
            gauge_tol: 1e-9,
            mutation: None,
        }
    }
}

/// E⃗, B⃗ and their partials ∂_ν with respect to x^ν = (ct, x, y, z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldJets {
    pub e: Vec3,
    pub b: Vec3,
    pub de: [Vec3; 4],
    pub db: [Vec3; 4],
}

/// The four generalized Maxwell equations written as residuals.
///
/// r1 = ∇⃗·E⃗ - 4πρe + m²A₀          r2 = ∇⃗×B⃗ - c⁻¹∂ₜE⃗ + m²A⃗ - 4πc⁻¹j⃗e
/// r3 = ∇⃗·B⃗ - 4πρm                 r4 = ∇⃗×E⃗ + c⁻¹∂ₜB⃗ + 4πc⁻¹j⃗m
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComponentResiduals {
    pub r1: f64,
    pub r2: Vec3,
    pub r3: f64,
    pub r4: Vec3,
}

impl ComponentResiduals {
    /// The Cl(3) parts these should equal: (rs, rv, is, iv) = (r1, -r2, r3, r4).
    pub fn as_aps_parts(&self) -> Parts {
        Parts {
            rs: self.r1,
            rv: -self.r2,
            iv: self.r4,
            is: self.r3,
        }
    }

    pub fn norms(&self) -> [f64; 4] {
        [self.r1.abs(), self.r2.amax(), self.r3.abs(), self.r4.amax()]
    }
}

/// Residuals of (□ + m²)A^μ = 4πc⁻¹Je^μ and □Z^μ = 4πc⁻¹Jm^μ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveResiduals {
    pub a: Paravector,
    pub z: Paravector,
}

/// Sup norms of residual parts over a set of points.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ResidualReport {
    pub rs: f64,
    pub rv: f64,
    pub is: f64,
    pub iv: f64,
    /// |r1|, |r2|, |r3|, |r4|.
    pub equations: [f64; 4],
    pub points: usize,
}

impl ResidualReport {
    pub fn record(&mut self, aps: &Parts, components: &ComponentResiduals) {
        self.rs = self.rs.max(aps.rs.abs());
        self.rv = self.rv.max(aps.rv.amax());
        self.is = self.is.max(aps.is.abs());
        self.iv = self.iv.max(aps.iv.amax());
        for (acc, v) in self.equations.iter_mut().zip(components.norms()) {
            *acc = acc.max(v);
        }
        self.points += 1;
    }

    pub fn merge(mut self, other: ResidualReport) -> ResidualReport {
        self.rs = self.rs.max(other.rs);
        self.rv = self.rv.max(other.rv);
        self.is = self.is.max(other.is);
        self.iv = self.iv.max(other.iv);
        for (a, b) in self.equations.iter_mut().zip(other.equations) {
            *a = a.max(b);
        }
        self.points += other.points;
        self
    }

    pub fn max_norm(&self) -> f64 {
        self.equations
            .iter()
            .fold(self.rs.max(self.rv).max(self.is).max(self.iv), |m, v| m.max(*v))
    }
}

struct PotentialJets {
    a: [Jet; 4],
    z: [Jet; 4],
}

fn lower_mv(v: [f64; 4]) -> Multivector {
    Paravector::from_components(v).conjugate().to_multivector()
}

fn values(j: &[Jet; 4]) -> [f64; 4] {
    j.map(|j| j.value)
}

/// Unit paravectors of ∂̲ = ∂₀ + e_k∂_k (sign +1) or ∂̄ = ∂₀ - e_k∂_k (sign -1).
fn aps_unit(mu: usize, sign: f64) -> Multivector {
    if mu == 0 {
        aps::scalar(1.0)
    } else {
        Multivector::basis_vector(CL3, mu - 1).scale(sign)
    }
}

fn gamma_upper(mu: usize) -> Multivector {
    Multivector::basis_vector(STA, mu).scale(METRIC[mu])
}

fn sta_vector(v: [f64; 4]) -> Multivector {
    Multivector::vector(STA, &v)
}

/// ε_ijk ∂_j X_k with `d(k, j) = ∂_j X^k`.
fn curl(d: &dyn Fn(usize, usize) -> f64, i: usize) -> f64 {
    let mut s = 0.0;
    for j in 1..=3 {
        for k in 1..=3 {
            let eps = levi_civita3(i, j, k);
            if eps != 0.0 {
                s += eps * d(k, j);
            }
        }
    }
    s
}

/// E⃗ and B⃗ from first partials `da(μ, ν) = ∂_ν A^μ` and likewise `dz`.
fn fields_from_partials(da: &dyn Fn(usize, usize) -> f64, dz: &dyn Fn(usize, usize) -> f64) -> (Vec3, Vec3) {
    let mut e = Vec3::zeros();
    let mut b = Vec3::zeros();
    for i in 1..=3 {
        e[i - 1] = -da(0, i) - da(i, 0) - curl(dz, i);
        b[i - 1] = -dz(0, i) - dz(i, 0) + curl(da, i);
    }
    (e, b)
}

impl Evaluator {
    pub fn new(c: f64, mode: DerivMode) -> Result<Self> {
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::Contract(format!(
                "speed of light must be positive, got {c}"
            )));
        }
        Ok(Evaluator {
            c,
            mode,
            ..Evaluator::default()
        })
    }

    pub fn with_mode(mut self, mode: DerivMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_gauge_tol(mut self, tol: f64) -> Self {
        self.gauge_tol = tol;
        self
    }

    pub fn with_mutation(mut self, mutation: Option<Mutation>) -> Self {
        self.mutation = mutation;
        self
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn mode(&self) -> DerivMode {
        self.mode
    }

    pub fn gauge_tol(&self) -> f64 {
        self.gauge_tol
    }

    pub fn mutation(&self) -> Option<Mutation> {
        self.mutation
    }

    /// Jets with time partials taken with respect to ct.
    pub(crate) fn jets_ct(&self, f: &dyn FieldConfig<4>, x: &Event) -> Result<[Jet; 4]> {
        Ok(self.mode.jets(f, x)?.map(|j| j.to_ct(self.c)))
    }

    fn potential_jets(&self, p: &Potentials, x: &Event) -> Result<PotentialJets> {
        Ok(PotentialJets {
            a: self.jets_ct(&*p.a, x)?,
            z: self.jets_ct(&*p.z, x)?,
        })
    }

    /// Four-current J^μ = (cρ, j⃗) at `x`.
    fn current(&self, f: &dyn FieldConfig<4>, x: &Event) -> [f64; 4] {
        let mut v = f.eval(x);
        v[0] *= self.c;
        v
    }

    pub fn field_jets(&self, p: &Potentials, x: &Event) -> Result<FieldJets> {
        let pj = self.potential_jets(p, x)?;
        let (e, b) = fields_from_partials(&|mu, nu| pj.a[mu].d[nu], &|mu, nu| pj.z[mu].d[nu]);
        let mut de = [Vec3::zeros(); 4];
        let mut db = [Vec3::zeros(); 4];
        for rho in 0..4 {
            let (e_r, b_r) =
                fields_from_partials(&|mu, nu| pj.a[mu].dd[nu][rho], &|mu, nu| pj.z[mu].dd[nu][rho]);
            de[rho] = e_r;
            db[rho] = b_r;
        }
        Ok(FieldJets { e, b, de, db })
    }

    pub fn fields_from_potentials(&self, p: &Potentials, x: &Event) -> Result<(Vec3, Vec3)> {
        let f = self.field_jets(p, x)?;
        Ok((f.e, f.b))
    }

    pub(crate) fn potential_first_partials(&self, p: &Potentials, x: &Event) -> Result<([Jet; 4], [Jet; 4])> {
        let pj = self.potential_jets(p, x)?;
        Ok((pj.a, pj.z))
    }

    pub fn mpd_residual_components(
        &self,
        p: &Potentials,
        s: &Sources,
        x: &Event,
    ) -> Result<ComponentResiduals> {
        let f = self.field_jets(p, x)?;
        let a = values(&self.jets_ct(&*p.a, x)?);
        let m2 = p.mass() * p.mass();
        let je = s.electric.eval(x);
        let jm = s.magnetic.eval(x);
        let jvec = |j: [f64; 4]| Vec3::new(j[1], j[2], j[3]);
        let div = |d: &[Vec3; 4]| d[1].x + d[2].y + d[3].z;
        let curl3 = |d: &[Vec3; 4]| Vec3::from_fn(|i, _| curl(&|k, j| d[j][k - 1], i + 1));
        let k = 4.0 * PI / self.c;
        Ok(ComponentResiduals {
            r1: div(&f.de) - 4.0 * PI * je[0] + m2 * a[0],
            r2: curl3(&f.db) - f.de[0] + Vec3::new(a[1], a[2], a[3]) * m2 - jvec(je) * k,
            r3: div(&f.db) - 4.0 * PI * jm[0],
            r4: curl3(&f.de) + f.db[0] + jvec(jm) * k,
        })
    }

    /// ∂̲F - 4πc⁻¹(J̲e + iJ̲m) + m²A̲ in Cl(3).
    ///
    /// F is assembled from the potentials as ⟨∂̄A̲⟩_V + i⟨∂̄Z̲⟩_V and differentiated
    /// by geometric products, independently of [`Evaluator::field_jets`].
    pub fn mpd_residual_aps(&self, p: &Potentials, s: &Sources, x: &Event) -> Result<Multivector> {
        let pj = self.potential_jets(p, x)?;
        let i = aps::i3();
        let mut dunder_f = Multivector::zero(CL3);
        for nu in 0..4 {
            let mut sum_a = Multivector::zero(CL3);
            let mut sum_z = Multivector::zero(CL3);
            for mu in 0..4 {
                let w = aps_unit(mu, -1.0);
                sum_a += &(&w * lower_mv(pj.a.map(|j| j.dd[mu][nu])));
                sum_z += &(&w * lower_mv(pj.z.map(|j| j.dd[mu][nu])));
            }
            let d_nu_f = sum_a.grades(&[1, 2]) + &i * sum_z.grades(&[1, 2]);
            dunder_f += &(aps_unit(nu, 1.0) * d_nu_f);
        }
        let m2 = p.mass() * p.mass();
        let mass_sign = match self.mutation {
            Some(Mutation::ApsMassSign) => -1.0,
            None => 1.0,
        };
        let je = lower_mv(self.current(&*s.electric, x));
        let jm = lower_mv(self.current(&*s.magnetic, x));
        let a_low = lower_mv(values(&pj.a));
        let source = (je + &i * jm).scale(4.0 * PI / self.c);
        Ok(dunder_f - source + a_low.scale(mass_sign * m2))
    }

    pub fn mpd_residual_aps_parts(&self, p: &Potentials, s: &Sources, x: &Event) -> Result<Parts> {
        aps::parts(&self.mpd_residual_aps(p, s, x)?)
    }

    /// ∇F - 4πc⁻¹(je - i jm) + m²A in Cl(1,3), with F = ∇∧A + i(∇∧Z).
    pub fn mpd_residual_sta(&self, p: &Potentials, s: &Sources, x: &Event) -> Result<Multivector> {
        let pj = self.potential_jets(p, x)?;
        let i = sta::i4();
        let wedge = |a: &Multivector, b: &Multivector| a.wedge(b).expect("same algebra");
        let mut nabla_f = Multivector::zero(STA);
        for mu in 0..4 {
            let mut fa = Multivector::zero(STA);
            let mut fz = Multivector::zero(STA);
            for nu in 0..4 {
                let g = gamma_upper(nu);
                fa += &wedge(&g, &sta_vector(pj.a.map(|j| j.dd[nu][mu])));
                fz += &wedge(&g, &sta_vector(pj.z.map(|j| j.dd[nu][mu])));
            }
            let d_mu_f = fa + &i * fz;
            nabla_f += &(gamma_upper(mu) * d_mu_f);
        }
        let m2 = p.mass() * p.mass();
        let je = sta_vector(self.current(&*s.electric, x));
        let jm = sta_vector(self.current(&*s.magnetic, x));
        let source = (je - &i * jm).scale(4.0 * PI / self.c);
        Ok(nabla_f - source + sta_vector(values(&pj.a)).scale(m2))
    }

    /// The Cl(1,3) residual brought to Cl(3) as γ0·R through the even subalgebra.
    pub fn mpd_residual_sta_bridged(&self, p: &Potentials, s: &Sources, x: &Event) -> Result<Multivector> {
        let r = self.mpd_residual_sta(p, s, x)?;
        sta::to_cl3(&(Multivector::basis_vector(STA, 0) * r), 0.0)
    }

    /// (c⁻¹∂ₜA₀ + ∇⃗·A⃗, c⁻¹∂ₜZ₀ + ∇⃗·Z⃗).
    pub fn lorenz_gauge_residual(&self, p: &Potentials, x: &Event) -> Result<(f64, f64)> {
        let pj = self.potential_jets(p, x)?;
        let g = |j: &[Jet; 4]| (0..4).map(|mu| j[mu].d[mu]).sum::<f64>();
        Ok((g(&pj.a), g(&pj.z)))
    }

    /// Wave-equation residuals with □ = c⁻²∂ₜ² - ∇⃗²; requires the Lorenz gauge.
    pub fn wave_residuals(&self, p: &Potentials, s: &Sources, x: &Event) -> Result<WaveResiduals> {
        let (ga, gz) = self.lorenz_gauge_residual(p, x)?;
        if !(ga.abs() <= self.gauge_tol && gz.abs() <= self.gauge_tol) {
            return Err(Error::GaugeCondition {
                electric: ga,
                magnetic: gz,
                tol: self.gauge_tol,
            });
        }
        let pj = self.potential_jets(p, x)?;
        let m2 = p.mass() * p.mass();
        let k = 4.0 * PI / self.c;
        let je = self.current(&*s.electric, x);
        let jm = self.current(&*s.magnetic, x);
        let boxed = |j: &Jet| j.dd[0][0] - j.laplacian();
        let mut ra = [0.0; 4];
        let mut rz = [0.0; 4];
        for mu in 0..4 {
            ra[mu] = boxed(&pj.a[mu]) + m2 * pj.a[mu].value - k * je[mu];
            rz[mu] = boxed(&pj.z[mu]) - k * jm[mu];
        }
        Ok(WaveResiduals {
            a: Paravector::from_components(ra),
            z: Paravector::from_components(rz),
        })
    }

    /// (∂ₜρe + ∇⃗·j⃗e, ∂ₜρm + ∇⃗·j⃗m).
    pub fn charge_conservation_residual(&self, s: &Sources, x: &Event) -> Result<(f64, f64)> {
        let cont = |f: &dyn FieldConfig<4>| -> Result<f64> {
            let j = self.mode.jets(f, x)?;
            Ok((0..4).map(|mu| j[mu].d[mu]).sum())
        };
        Ok((cont(&*s.electric)?, cont(&*s.magnetic)?))
    }

    /// Real- and imaginary-scalar parts of ⟨∂̄S⟩ with S = 4πc⁻¹(J̲e + iJ̲m) - m²A̲.
    ///
    /// On solutions ∂̲F = S, so this is ⟨□F⟩_s read through the field
    /// equation; it vanishes exactly when charge is conserved and the
    /// Lorenz condition holds.
    pub fn wave_scalar_projection(&self, p: &Potentials, s: &Sources, x: &Event) -> Result<(f64, f64)> {
        let i = aps::i3();
        let m2 = p.mass() * p.mass();
        let current_ct = |f: &dyn FieldConfig<4>| -> Result<[Jet; 4]> {
            let mut j = self.jets_ct(f, x)?;
            j[0] = j[0].scale(self.c);
            Ok(j)
        };
        let je = current_ct(&*s.electric)?;
        let jm = current_ct(&*s.magnetic)?;
        let a = self.jets_ct(&*p.a, x)?;
        let k = 4.0 * PI / self.c;
        let mut out = Multivector::zero(CL3);
        for mu in 0..4 {
            let d = |j: &[Jet; 4]| lower_mv(j.map(|j| j.d[mu]));
            let ds = (d(&je) + &i * d(&jm)).scale(k) - d(&a).scale(m2);
            out += &(aps_unit(mu, -1.0) * ds);
        }
        let parts = aps::parts(&out)?;
        Ok((parts.rs, parts.is))
    }

    /// Residual sup norms over `points`, reduced in parallel.
    pub fn residual_report(&self, p: &Potentials, s: &Sources, points: &[Event]) -> Result<ResidualReport> {
        points
            .par_iter()
            .map(|x| {
                let mut r = ResidualReport::default();
                let aps_parts = self.mpd_residual_aps_parts(p, s, x)?;
                let comps = self.mpd_residual_components(p, s, x)?;
                r.record(&aps_parts, &comps);
                Ok(r)
            })
            .try_reduce(ResidualReport::default, |a, b| Ok(a.merge(b)))
    }
}
