//! Spacetime field configurations and their derivatives.
//!
//! A [`FieldConfig`] maps an [`Event`] to `N` real components. Configurations
//! may supply exact first and second partials ([`Jet`]s); a [`DerivMode`]
//! decides whether those are used or whether the partials are estimated by
//! central differences on grid nodes around the event.
//!
//! Time derivatives in a [`Jet`] are with respect to `t`, not `ct`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::Vec3;

/// Spacetime point `(t, x, y, z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Event(pub [f64; 4]);

impl Event {
    pub fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        Event([t, x, y, z])
    }

    pub fn at(t: f64, r: Vec3) -> Self {
        Event([t, r.x, r.y, r.z])
    }

    pub fn t(&self) -> f64 {
        self.0[0]
    }

    pub fn r(&self) -> Vec3 {
        Vec3::new(self.0[1], self.0[2], self.0[3])
    }

    pub fn offset(&self, axis: usize, delta: f64) -> Event {
        let mut e = *self;
        e.0[axis] += delta;
        e
    }
}

/// Value with first and second partials along `(t, x, y, z)`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Jet {
    pub value: f64,
    pub d: [f64; 4],
    pub dd: [[f64; 4]; 4],
}

impl Jet {
    pub fn constant(value: f64) -> Self {
        Jet {
            value,
            ..Jet::default()
        }
    }

    pub fn scale(&self, s: f64) -> Jet {
        let mut out = *self;
        out.value *= s;
        for mu in 0..4 {
            out.d[mu] *= s;
            for nu in 0..4 {
                out.dd[mu][nu] *= s;
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &Jet, s: f64) {
        self.value += s * other.value;
        for mu in 0..4 {
            self.d[mu] += s * other.d[mu];
            for nu in 0..4 {
                self.dd[mu][nu] += s * other.dd[mu][nu];
            }
        }
    }

    /// Re-expresses time derivatives with respect to x⁰ = ct.
    pub fn to_ct(&self, c: f64) -> Jet {
        self.rescale_time(1.0 / c)
    }

    /// Inverse of [`Jet::to_ct`].
    pub fn from_ct(&self, c: f64) -> Jet {
        self.rescale_time(c)
    }

    fn rescale_time(&self, f: f64) -> Jet {
        let mut out = *self;
        out.d[0] *= f;
        for k in 0..4 {
            out.dd[0][k] *= f;
            out.dd[k][0] *= f;
        }
        out
    }

    /// Spatial Laplacian.
    pub fn laplacian(&self) -> f64 {
        self.dd[1][1] + self.dd[2][2] + self.dd[3][3]
    }

    pub fn gradient(&self) -> Vec3 {
        Vec3::new(self.d[1], self.d[2], self.d[3])
    }
}

/// A field with `N` real components defined on spacetime.
pub trait FieldConfig<const N: usize>: Send + Sync {
    fn eval(&self, x: &Event) -> [f64; N];

    /// Exact value, first and second partials, when available in closed form.
    fn exact_jets(&self, _x: &Event) -> Option<[Jet; N]> {
        None
    }
}

/// Shared handle to a four-component (paravector-valued) field.
pub type Field4 = Arc<dyn FieldConfig<4>>;
/// Shared handle to a scalar field.
pub type Field1 = Arc<dyn FieldConfig<1>>;

/// Accuracy of a central-difference stencil.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StencilOrder {
    Second,
    Fourth,
}

impl StencilOrder {
    pub fn from_order(order: u32) -> Option<Self> {
        match order {
            2 => Some(StencilOrder::Second),
            4 => Some(StencilOrder::Fourth),
            _ => None,
        }
    }

    pub fn order(self) -> u32 {
        match self {
            StencilOrder::Second => 2,
            StencilOrder::Fourth => 4,
        }
    }

    /// Number of grid steps the stencil reaches on either side.
    pub fn half_width(self) -> usize {
        match self {
            StencilOrder::Second => 1,
            StencilOrder::Fourth => 2,
        }
    }

    fn first(self) -> &'static [(f64, f64)] {
        match self {
            StencilOrder::Second => &[(1.0, 0.5), (-1.0, -0.5)],
            StencilOrder::Fourth => &[
                (1.0, 8.0 / 12.0),
                (-1.0, -8.0 / 12.0),
                (2.0, -1.0 / 12.0),
                (-2.0, 1.0 / 12.0),
            ],
        }
    }

    fn second(self) -> &'static [(f64, f64)] {
        match self {
            StencilOrder::Second => &[(0.0, -2.0), (1.0, 1.0), (-1.0, 1.0)],
            StencilOrder::Fourth => &[
                (0.0, -30.0 / 12.0),
                (1.0, 16.0 / 12.0),
                (-1.0, 16.0 / 12.0),
                (2.0, -1.0 / 12.0),
                (-2.0, -1.0 / 12.0),
            ],
        }
    }
}

/// Central-difference stencil with a spacing per axis `(t, x, y, z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Stencil {
    pub spacing: [f64; 4],
    pub order: StencilOrder,
}

impl Stencil {
    pub fn uniform(h: f64, order: StencilOrder) -> Self {
        Stencil {
            spacing: [h; 4],
            order,
        }
    }

    /// Partials of `f` at `x` from samples at grid nodes `x + k·Δ`.
    pub fn jets<const N: usize>(&self, f: &dyn FieldConfig<N>, x: &Event) -> [Jet; N] {
        let mut jets = [Jet::default(); N];
        let center = f.eval(x);
        for (j, v) in jets.iter_mut().zip(center.iter()) {
            j.value = *v;
        }
        for mu in 0..4 {
            let h = self.spacing[mu];
            for &(o, w) in self.order.first() {
                let s = f.eval(&x.offset(mu, o * h));
                for (j, v) in jets.iter_mut().zip(s.iter()) {
                    j.d[mu] += w * v / h;
                }
            }
            for &(o, w) in self.order.second() {
                let s = if o == 0.0 {
                    center
                } else {
                    f.eval(&x.offset(mu, o * h))
                };
                for (j, v) in jets.iter_mut().zip(s.iter()) {
                    j.dd[mu][mu] += w * v / (h * h);
                }
            }
        }
        for mu in 0..4 {
            for nu in (mu + 1)..4 {
                let (hm, hn) = (self.spacing[mu], self.spacing[nu]);
                for &(a, wa) in self.order.first() {
                    for &(b, wb) in self.order.first() {
                        let s = f.eval(&x.offset(mu, a * hm).offset(nu, b * hn));
                        for (j, v) in jets.iter_mut().zip(s.iter()) {
                            j.dd[mu][nu] += wa * wb * v / (hm * hn);
                        }
                    }
                }
                for j in jets.iter_mut() {
                    j.dd[nu][mu] = j.dd[mu][nu];
                }
            }
        }
        jets
    }
}

/// How partial derivatives of field configurations are obtained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DerivMode {
    /// Use the configuration's closed-form partials.
    Analytic,
    /// Central differences of sampled values.
    Grid(Stencil),
}

impl DerivMode {
    pub fn jets<const N: usize>(&self, f: &dyn FieldConfig<N>, x: &Event) -> Result<[Jet; N]> {
        match self {
            DerivMode::Analytic => f.exact_jets(x).ok_or(Error::DerivativeUnavailable(
                "configuration has no closed-form partials",
            )),
            DerivMode::Grid(stencil) => Ok(stencil.jets(f, x)),
        }
    }
}

/// The identically zero field.
#[derive(Debug, Clone, Copy, Default)]
pub struct ZeroField;

impl<const N: usize> FieldConfig<N> for ZeroField {
    fn eval(&self, _x: &Event) -> [f64; N] {
        [0.0; N]
    }

    fn exact_jets(&self, _x: &Event) -> Option<[Jet; N]> {
        Some([Jet::default(); N])
    }
}

pub fn zero4() -> Field4 {
    Arc::new(ZeroField)
}

/// Componentwise linear combination Σ cᵢ fᵢ.
pub struct LinearCombination<const N: usize> {
    terms: Vec<(f64, Arc<dyn FieldConfig<N>>)>,
}

impl<const N: usize> LinearCombination<N> {
    pub fn new(terms: Vec<(f64, Arc<dyn FieldConfig<N>>)>) -> Self {
        LinearCombination { terms }
    }
}

impl<const N: usize> FieldConfig<N> for LinearCombination<N> {
    fn eval(&self, x: &Event) -> [f64; N] {
        let mut out = [0.0; N];
        for (c, f) in &self.terms {
            for (o, v) in out.iter_mut().zip(f.eval(x)) {
                *o += c * v;
            }
        }
        out
    }

    fn exact_jets(&self, x: &Event) -> Option<[Jet; N]> {
        let mut out = [Jet::default(); N];
        for (c, f) in &self.terms {
            for (o, j) in out.iter_mut().zip(f.exact_jets(x)?) {
                o.add_scaled(&j, *c);
            }
        }
        Some(out)
    }
}

/// Closure-backed field without closed-form partials (grid mode only).
pub struct SampledField<F> {
    f: F,
}

impl<F> SampledField<F> {
    pub fn new(f: F) -> Self {
        SampledField { f }
    }
}

impl<const N: usize, F> FieldConfig<N> for SampledField<F>
where
    F: Fn(&Event) -> [f64; N] + Send + Sync,
{
    fn eval(&self, x: &Event) -> [f64; N] {
        (self.f)(x)
    }
}
