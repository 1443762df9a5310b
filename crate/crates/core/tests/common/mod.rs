#![allow(dead_code)]

use std::sync::Arc;

use proca_ga::field::{Event, Field4, FieldConfig, Jet};

/// Affine four-component field v(x) = offset + Σ_μ slope[μ] x^μ, exact jets.
pub struct Affine {
    pub offset: [f64; 4],
    pub slope: [[f64; 4]; 4],
}

impl FieldConfig<4> for Affine {
    fn eval(&self, x: &Event) -> [f64; 4] {
        std::array::from_fn(|c| self.offset[c] + (0..4).map(|mu| self.slope[c][mu] * x.0[mu]).sum::<f64>())
    }

    fn exact_jets(&self, x: &Event) -> Option<[Jet; 4]> {
        let v = self.eval(x);
        Some(std::array::from_fn(|c| {
            let mut j = Jet::constant(v[c]);
            j.d = self.slope[c];
            j
        }))
    }
}

/// A single component `comp` equal to `coef · x^axis`.
pub fn linear(comp: usize, axis: usize, coef: f64) -> Field4 {
    let mut slope = [[0.0; 4]; 4];
    slope[comp][axis] = coef;
    Arc::new(Affine {
        offset: [0.0; 4],
        slope,
    })
}

pub fn events(seed: u64, n: usize) -> Vec<Event> {
    proca_ga::analytic_lab::random_events(seed, n, 2.0)
}
