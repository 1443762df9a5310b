use std::sync::Arc;

use super::Potentials;
use crate::field::{Event, Field4, FieldConfig, Jet};
use crate::Vec3;

/// A gauge function χ supplying its gradient together with the gradient's
/// own first and second partials, all along (t, x, y, z).
pub trait GaugeFunction: Send + Sync {
    fn value(&self, x: &Event) -> f64;

    /// Jets of (∂ₜχ, ∂ₓχ, ∂ᵧχ, ∂_zχ).
    fn gradient_jets(&self, x: &Event) -> [Jet; 4];
}

/// χ = amplitude · cos(k⃗·x⃗ - c|k⃗|t + phase), which satisfies □χ = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarmonicGauge {
    pub amplitude: f64,
    pub k: Vec3,
    pub phase: f64,
    pub c: f64,
}

impl HarmonicGauge {
    fn wavevector(&self) -> [f64; 4] {
        [-self.c * self.k.norm(), self.k.x, self.k.y, self.k.z]
    }

    fn phase_at(&self, x: &Event) -> f64 {
        let kv = self.wavevector();
        (0..4).map(|mu| kv[mu] * x.0[mu]).sum::<f64>() + self.phase
    }
}

impl GaugeFunction for HarmonicGauge {
    fn value(&self, x: &Event) -> f64 {
        self.amplitude * self.phase_at(x).cos()
    }

    fn gradient_jets(&self, x: &Event) -> [Jet; 4] {
        let kv = self.wavevector();
        let (s, c) = self.phase_at(x).sin_cos();
        let amp = self.amplitude;
        std::array::from_fn(|a| {
            let mut j = Jet::constant(-amp * kv[a] * s);
            for b in 0..4 {
                j.d[b] = -amp * kv[a] * kv[b] * c;
                for d in 0..4 {
                    j.dd[b][d] = amp * kv[a] * kv[b] * kv[d] * s;
                }
            }
            j
        })
    }
}

/// χ = g_μ x^μ + offset with x^μ = (t, x, y, z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearGauge {
    pub gradient: [f64; 4],
    pub offset: f64,
}

impl GaugeFunction for LinearGauge {
    fn value(&self, x: &Event) -> f64 {
        (0..4).map(|mu| self.gradient[mu] * x.0[mu]).sum::<f64>() + self.offset
    }

    fn gradient_jets(&self, _x: &Event) -> [Jet; 4] {
        self.gradient.map(Jet::constant)
    }
}

struct GaugeShifted {
    inner: Field4,
    chi: Arc<dyn GaugeFunction>,
    c: f64,
}

impl FieldConfig<4> for GaugeShifted {
    fn eval(&self, x: &Event) -> [f64; 4] {
        let g = self.chi.gradient_jets(x);
        let mut v = self.inner.eval(x);
        v[0] += g[0].value / self.c;
        for k in 1..4 {
            v[k] -= g[k].value;
        }
        v
    }

    fn exact_jets(&self, x: &Event) -> Option<[Jet; 4]> {
        let g = self.chi.gradient_jets(x);
        let mut j = self.inner.exact_jets(x)?;
        j[0].add_scaled(&g[0], 1.0 / self.c);
        for k in 1..4 {
            j[k].add_scaled(&g[k], -1.0);
        }
        Some(j)
    }
}

/// A₀ ↦ A₀ + c⁻¹∂ₜχ, A⃗ ↦ A⃗ - ∇⃗χ, i.e. A̲ ↦ A̲ + ∂̲χ; Z is untouched.
pub fn gauge_transform(p: &Potentials, chi: Arc<dyn GaugeFunction>, c: f64) -> Potentials {
    Potentials {
        a: Arc::new(GaugeShifted {
            inner: p.a.clone(),
            chi,
            c,
        }),
        z: p.z.clone(),
        mass: p.mass(),
    }
}
