use std::sync::Arc;

use crate::em_fields::Potentials;
use crate::error::{Error, Result};
use crate::field::{zero4, Event, FieldConfig, Jet};
use crate::Vec3;

/// Static time component q e^{-mr}/r; the spatial components vanish.
///
/// m = 0 gives the Coulomb potential. Singular at the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialPotential {
    pub q: f64,
    pub m: f64,
}

impl RadialPotential {
    /// f, f', f'' as functions of r.
    fn radial(&self, r: f64) -> (f64, f64, f64) {
        let e = (-self.m * r).exp();
        let mr = self.m * r;
        let f = self.q * e / r;
        let f1 = -self.q * e * (mr + 1.0) / (r * r);
        let f2 = self.q * e * (mr * mr + 2.0 * mr + 2.0) / (r * r * r);
        (f, f1, f2)
    }
}

impl FieldConfig<4> for RadialPotential {
    fn eval(&self, x: &Event) -> [f64; 4] {
        [self.radial(x.r().norm()).0, 0.0, 0.0, 0.0]
    }

    fn exact_jets(&self, x: &Event) -> Option<[Jet; 4]> {
        let rv = x.r();
        let r = rv.norm();
        let (f, f1, f2) = self.radial(r);
        let mut j = Jet::constant(f);
        for a in 0..3 {
            j.d[a + 1] = f1 * rv[a] / r;
            for b in 0..3 {
                let xx = rv[a] * rv[b] / (r * r);
                let delta = if a == b { 1.0 } else { 0.0 };
                j.dd[a + 1][b + 1] = f2 * xx + f1 * (delta - xx) / r;
            }
        }
        Some([j, Jet::default(), Jet::default(), Jet::default()])
    }
}

/// A₀ = q e^{-mr}/r, A⃗ = 0, Z = 0.
pub fn yukawa_config(q_e: f64, m: f64) -> Result<Potentials> {
    Potentials::new(Arc::new(RadialPotential { q: q_e, m }), zero4(), m)
}

/// Z₀ = q/r with A = 0, a string-free point monopole with B⃗ = q r̂/r².
pub fn monopole_config(q_m: f64) -> Potentials {
    Potentials::new(zero4(), Arc::new(RadialPotential { q: q_m, m: 0.0 }), 0.0).expect("zero mass is valid")
}

/// amplitude · cos(k⃗·x⃗ - ωt + phase), componentwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneWave {
    pub amplitude: [f64; 4],
    pub k: Vec3,
    pub omega: f64,
    pub phase: f64,
}

impl PlaneWave {
    fn wavevector(&self) -> [f64; 4] {
        [-self.omega, self.k.x, self.k.y, self.k.z]
    }

    fn phase_at(&self, x: &Event) -> f64 {
        let kv = self.wavevector();
        (0..4).map(|mu| kv[mu] * x.0[mu]).sum::<f64>() + self.phase
    }
}

impl FieldConfig<4> for PlaneWave {
    fn eval(&self, x: &Event) -> [f64; 4] {
        let c = self.phase_at(x).cos();
        self.amplitude.map(|a| a * c)
    }

    fn exact_jets(&self, x: &Event) -> Option<[Jet; 4]> {
        let kv = self.wavevector();
        let (s, c) = self.phase_at(x).sin_cos();
        Some(self.amplitude.map(|a| {
            let mut j = Jet::constant(a * c);
            for mu in 0..4 {
                j.d[mu] = -a * kv[mu] * s;
                for nu in 0..4 {
                    j.dd[mu][nu] = -a * kv[mu] * kv[nu] * c;
                }
            }
            j
        }))
    }
}

fn transverse_wave(k: &Vec3, polarization: &Vec3, omega: f64) -> Result<PlaneWave> {
    let overlap = k.dot(polarization).abs();
    if overlap > 1e-12 * (k.norm() * polarization.norm()).max(1.0) {
        return Err(Error::Contract(format!(
            "polarization is not transverse to k (k·ε = {overlap:e}); Lorenz gauge fails"
        )));
    }
    Ok(PlaneWave {
        amplitude: [0.0, polarization.x, polarization.y, polarization.z],
        k: *k,
        omega,
        phase: 0.0,
    })
}

/// A⃗ = ε cos(k⃗·x⃗ - ωt) with ω² = c²(k² + m²), Z = 0.
pub fn proca_plane_wave(k: &Vec3, polarization: &Vec3, m: f64, c: f64) -> Result<Potentials> {
    let omega = c * (k.norm_squared() + m * m).sqrt();
    detuned_plane_wave(k, polarization, m, omega)
}

/// Z⃗ = ε cos(k⃗·x⃗ - c|k⃗|t), A = 0.
pub fn massless_plane_wave(k: &Vec3, polarization: &Vec3, c: f64) -> Result<Potentials> {
    let wave = transverse_wave(k, polarization, c * k.norm())?;
    Potentials::new(zero4(), Arc::new(wave), 0.0)
}

/// Electric plane wave with an arbitrary frequency.
pub fn detuned_plane_wave(k: &Vec3, polarization: &Vec3, m: f64, omega: f64) -> Result<Potentials> {
    let wave = transverse_wave(k, polarization, omega)?;
    Potentials::new(Arc::new(wave), zero4(), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Stencil, StencilOrder};

    #[test]
    fn yukawa_values() {
        let p = yukawa_config(1.0, 1.0).unwrap();
        let v = p.a.eval(&Event::new(0.0, 2.0, 0.0, 0.0));
        assert!((v[0] - (-2.0f64).exp() / 2.0).abs() < 1e-15);
        let coulomb = yukawa_config(3.0, 0.0).unwrap();
        assert!((coulomb.a.eval(&Event::new(0.0, 0.0, 1.5, 0.0))[0] - 2.0).abs() < 1e-15);
    }

    #[test]
    fn radial_jets_match_differences() {
        let f = RadialPotential { q: 1.3, m: 0.7 };
        let x = Event::new(0.0, 0.6, -0.4, 0.9);
        let exact = f.exact_jets(&x).unwrap()[0];
        let [fd, ..] = Stencil::uniform(1e-3, StencilOrder::Fourth).jets(&f, &x);
        for mu in 1..4 {
            assert!((exact.d[mu] - fd.d[mu]).abs() < 1e-9);
            for nu in 1..4 {
                assert!((exact.dd[mu][nu] - fd.dd[mu][nu]).abs() < 1e-6);
            }
        }
    }

    #[test]
    fn yukawa_laplacian_identity() {
        let f = RadialPotential { q: 1.0, m: 1.0 };
        for x in [Event::new(0.0, 2.0, 0.0, 0.0), Event::new(0.0, 0.3, 0.5, -0.2)] {
            let j = f.exact_jets(&x).unwrap()[0];
            assert!((j.laplacian() - j.value).abs() < 1e-12 * j.value.abs().max(1.0));
        }
    }

    #[test]
    fn longitudinal_polarization_is_rejected() {
        let k = Vec3::new(1.0, 0.0, 0.0);
        assert!(proca_plane_wave(&k, &k, 1.0, 1.0).is_err());
        assert!(massless_plane_wave(&k, &Vec3::y(), 1.0).is_ok());
    }
}
