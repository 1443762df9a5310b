use std::f64::consts::TAU;
use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::em_fields::{Potentials, Sources};
use crate::field::{Event, FieldConfig, Jet};

const MODES_PER_FIELD: usize = 3;
const MAX_WAVENUMBER: f64 = 1.2;

/// One term amplitude · cos(k_μ x^μ + phase) with x^μ = (t, x, y, z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigMode<const N: usize> {
    pub k: [f64; 4],
    pub phase: f64,
    pub amplitude: [f64; N],
}

/// Finite sum of cosine modes with exact partials.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigPolynomial<const N: usize> {
    pub modes: Vec<TrigMode<N>>,
}

impl<const N: usize> TrigPolynomial<N> {
    /// Σ|amplitude| per component, an upper bound on |value|.
    pub fn bound(&self) -> f64 {
        (0..N)
            .map(|c| self.modes.iter().map(|m| m.amplitude[c].abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    fn random(rng: &mut ChaCha8Rng, wavenumber: &mut dyn FnMut(&mut ChaCha8Rng) -> f64) -> Self {
        let modes = (0..MODES_PER_FIELD)
            .map(|_| TrigMode {
                k: std::array::from_fn(|_| wavenumber(rng)),
                phase: rng.gen_range(0.0..TAU),
                amplitude: std::array::from_fn(|_| rng.gen_range(-1.0..1.0) / MODES_PER_FIELD as f64),
            })
            .collect();
        TrigPolynomial { modes }
    }
}

impl<const N: usize> FieldConfig<N> for TrigPolynomial<N> {
    fn eval(&self, x: &Event) -> [f64; N] {
        let mut out = [0.0; N];
        for m in &self.modes {
            let c = ((0..4).map(|mu| m.k[mu] * x.0[mu]).sum::<f64>() + m.phase).cos();
            for (o, a) in out.iter_mut().zip(m.amplitude) {
                *o += a * c;
            }
        }
        out
    }

    fn exact_jets(&self, x: &Event) -> Option<[Jet; N]> {
        let mut out = [Jet::default(); N];
        for m in &self.modes {
            let (s, c) = ((0..4).map(|mu| m.k[mu] * x.0[mu]).sum::<f64>() + m.phase).sin_cos();
            for (o, a) in out.iter_mut().zip(m.amplitude) {
                o.value += a * c;
                for mu in 0..4 {
                    o.d[mu] -= a * m.k[mu] * s;
                    for nu in 0..4 {
                        o.dd[mu][nu] -= a * m.k[mu] * m.k[nu] * c;
                    }
                }
            }
        }
        Some(out)
    }
}

/// Smooth potentials and sources that are not, in general, a solution.
#[derive(Debug, Clone)]
pub struct SmoothConfig {
    pub potentials: Potentials,
    pub sources: Sources,
    /// The four trigonometric fields: A, Z, electric and magnetic sources.
    pub fields: [TrigPolynomial<4>; 4],
    pub mass: f64,
}

impl SmoothConfig {
    /// Upper bound on every component of every field.
    pub fn bound(&self) -> f64 {
        self.fields.iter().map(|f| f.bound()).fold(0.0, f64::max)
    }

    fn assemble(fields: [TrigPolynomial<4>; 4], mass: f64) -> Self {
        let [a, z, je, jm] = fields.clone();
        SmoothConfig {
            potentials: Potentials::new(Arc::new(a), Arc::new(z), mass).expect("mass drawn non-negative"),
            sources: Sources::new(Arc::new(je), Arc::new(jm)),
            fields,
            mass,
        }
    }
}

/// Deterministic random trigonometric configuration for `seed`.
pub fn random_smooth_config(seed: u64) -> SmoothConfig {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut wavenumber = |r: &mut ChaCha8Rng| r.gen_range(-MAX_WAVENUMBER..MAX_WAVENUMBER);
    let fields = std::array::from_fn(|_| TrigPolynomial::random(&mut rng, &mut wavenumber));
    let mass = rng.gen_range(0.2..1.5);
    SmoothConfig::assemble(fields, mass)
}

/// Like [`random_smooth_config`] but with integer wavenumbers in
/// [-max_wavenumber, max_wavenumber], so every field is periodic on
/// [0, 2π]⁴ in (t, x, y, z).
pub fn periodic_smooth_config(seed: u64, max_wavenumber: i32) -> SmoothConfig {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut wavenumber = |r: &mut ChaCha8Rng| f64::from(r.gen_range(-max_wavenumber..=max_wavenumber));
    let fields = std::array::from_fn(|_| TrigPolynomial::random(&mut rng, &mut wavenumber));
    let mass = rng.gen_range(0.2..1.5);
    SmoothConfig::assemble(fields, mass)
}

/// `n` events uniform in [-half_extent, half_extent]⁴.
pub fn random_events(seed: u64, n: usize, half_extent: f64) -> Vec<Event> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| Event(std::array::from_fn(|_| rng.gen_range(-half_extent..half_extent))))
        .collect()
}
