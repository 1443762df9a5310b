use std::sync::Arc;

use nalgebra::Matrix4;

use super::{Potentials, Sources};
use crate::aps::LorentzRotor;
use crate::field::{Event, Field4, FieldConfig, Jet, LinearCombination};

/// A four-vector field seen in the frame reached by a Lorentz transformation:
/// V'(x') = L·V(L⁻¹x'), with events mapped through x⁰ = ct.
///
/// `time_scale` converts the stored time component into the four-vector's
/// time component, c for (ρ, j⃗) sources and 1 for potentials.
pub struct LorentzTransformed {
    inner: Field4,
    l: Matrix4<f64>,
    l_inv: Matrix4<f64>,
    c: f64,
    time_scale: f64,
}

impl LorentzTransformed {
    pub fn new(inner: Field4, rotor: &LorentzRotor, c: f64, time_scale: f64) -> Self {
        LorentzTransformed {
            inner,
            l: rotor.lorentz_matrix(),
            l_inv: rotor.inverse().lorentz_matrix(),
            c,
            time_scale,
        }
    }

    fn source_event(&self, x: &Event) -> Event {
        let xp = [self.c * x.0[0], x.0[1], x.0[2], x.0[3]];
        let mut src = [0.0; 4];
        for (mu, s) in src.iter_mut().enumerate() {
            *s = (0..4).map(|nu| self.l_inv[(mu, nu)] * xp[nu]).sum();
        }
        Event::new(src[0] / self.c, src[1], src[2], src[3])
    }
}

impl FieldConfig<4> for LorentzTransformed {
    fn eval(&self, x: &Event) -> [f64; 4] {
        let mut v = self.inner.eval(&self.source_event(x));
        v[0] *= self.time_scale;
        let mut out = [0.0; 4];
        for (a, o) in out.iter_mut().enumerate() {
            *o = (0..4).map(|b| self.l[(a, b)] * v[b]).sum();
        }
        out[0] /= self.time_scale;
        out
    }

    fn exact_jets(&self, x: &Event) -> Option<[Jet; 4]> {
        let mut j = self
            .inner
            .exact_jets(&self.source_event(x))?
            .map(|j| j.to_ct(self.c));
        j[0] = j[0].scale(self.time_scale);
        let m = &self.l_inv;
        let mut out = [Jet::default(); 4];
        for (a, o) in out.iter_mut().enumerate() {
            for (b, jb) in j.iter().enumerate() {
                let lab = self.l[(a, b)];
                if lab == 0.0 {
                    continue;
                }
                o.value += lab * jb.value;
                for mu in 0..4 {
                    o.d[mu] += lab * (0..4).map(|r| jb.d[r] * m[(r, mu)]).sum::<f64>();
                    for nu in 0..4 {
                        let mut h = 0.0;
                        for r in 0..4 {
                            for s in 0..4 {
                                h += m[(r, mu)] * m[(s, nu)] * jb.dd[r][s];
                            }
                        }
                        o.dd[mu][nu] += lab * h;
                    }
                }
            }
        }
        out[0] = out[0].scale(1.0 / self.time_scale);
        Some(out.map(|j| j.from_ct(self.c)))
    }
}

pub fn lorentz_transform_potentials(p: &Potentials, rotor: &LorentzRotor, c: f64) -> Potentials {
    Potentials {
        a: Arc::new(LorentzTransformed::new(p.a.clone(), rotor, c, 1.0)),
        z: Arc::new(LorentzTransformed::new(p.z.clone(), rotor, c, 1.0)),
        mass: p.mass(),
    }
}

pub fn lorentz_transform_sources(s: &Sources, rotor: &LorentzRotor, c: f64) -> Sources {
    Sources::new(
        Arc::new(LorentzTransformed::new(s.electric.clone(), rotor, c, c)),
        Arc::new(LorentzTransformed::new(s.magnetic.clone(), rotor, c, c)),
    )
}

fn rotate_pair(first: &Field4, second: &Field4, theta: f64) -> (Field4, Field4) {
    let (s, c) = theta.sin_cos();
    let new_first: Field4 = Arc::new(LinearCombination::new(vec![
        (c, first.clone()),
        (s, second.clone()),
    ]));
    let new_second: Field4 = Arc::new(LinearCombination::new(vec![
        (c, second.clone()),
        (-s, first.clone()),
    ]));
    (new_first, new_second)
}

/// A ↦ A cos θ + Z sin θ, Z ↦ Z cos θ - A sin θ, so that F ↦ F e^{-iθ}.
pub fn duality_rotate_potentials(p: &Potentials, theta: f64) -> Potentials {
    let (a, z) = rotate_pair(&p.a, &p.z, theta);
    Potentials { a, z, mass: p.mass() }
}

/// Je ↦ Je cos θ + Jm sin θ, Jm ↦ Jm cos θ - Je sin θ.
pub fn duality_rotate_sources(s: &Sources, theta: f64) -> Sources {
    let (e, m) = rotate_pair(&s.electric, &s.magnetic, theta);
    Sources::new(e, m)
}
