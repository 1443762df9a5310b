use crate::aps::ParavectorMetric;
use crate::error::Result;
use crate::field::{Event, FieldConfig, Jet};
use crate::sta::levi_civita3;
use crate::Vec3;

use super::configs::PlaneWave;

/// Metric used to lower the potential before forming F_μν.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetricKind {
    /// (+, -, -, -).
    Lorentzian,
    /// (+, +, +, +).
    Euclidean,
}

impl MetricKind {
    pub fn diagonal(self) -> [f64; 4] {
        match self {
            MetricKind::Lorentzian => [1.0, -1.0, -1.0, -1.0],
            MetricKind::Euclidean => [1.0; 4],
        }
    }
}

/// The two candidate forms of Faraday's law.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaradayCombination {
    /// ∇⃗×E⃗ + c⁻¹∂ₜB⃗.
    Plus,
    /// ∇⃗×E⃗ - c⁻¹∂ₜB⃗.
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FaradaySignReport {
    pub epsilon: i8,
    pub metric: MetricKind,
    pub plus_norm: f64,
    pub minus_norm: f64,
    pub tol: f64,
}

impl FaradaySignReport {
    /// The combination that vanishes, when exactly one does.
    pub fn vanishing(&self) -> Option<FaradayCombination> {
        match (self.plus_norm <= self.tol, self.minus_norm <= self.tol) {
            (true, false) => Some(FaradayCombination::Plus),
            (false, true) => Some(FaradayCombination::Minus),
            _ => None,
        }
    }
}

const FARADAY_TOL: f64 = 1e-10;

/// Raised field tensor F^{μν} and its partials from potential jets and a metric.
fn raised_tensor(a: &[Jet; 4], g: [f64; 4], rho: Option<usize>) -> [[f64; 4]; 4] {
    let d = |comp: usize, axis: usize| match rho {
        None => a[comp].d[axis],
        Some(r) => a[comp].dd[axis][r],
    };
    let mut t = [[0.0; 4]; 4];
    for mu in 0..4 {
        for nu in 0..4 {
            let lower = g[nu] * d(nu, mu) - g[mu] * d(mu, nu);
            t[mu][nu] = g[mu] * g[nu] * lower;
        }
    }
    t
}

fn e_and_b(t: &[[f64; 4]; 4]) -> (Vec3, Vec3) {
    let e = Vec3::from_fn(|i, _| t[i + 1][0]);
    let b = Vec3::from_fn(|i, _| {
        let mut s = 0.0;
        for j in 1..=3 {
            for k in 1..=3 {
                s += levi_civita3(i + 1, j, k) * t[j][k];
            }
        }
        -0.5 * s
    });
    (e, b)
}

/// Evaluates both Faraday combinations on a vacuum plane wave with the field
/// tensor built in the metric selected by ε: +1 Lorentzian, -1 Euclidean.
pub fn faraday_sign_experiment(epsilon: i8) -> Result<FaradaySignReport> {
    let sign = ParavectorMetric::new(epsilon)?;
    let metric = if sign.epsilon() > 0.0 {
        MetricKind::Lorentzian
    } else {
        MetricKind::Euclidean
    };
    let g = metric.diagonal();
    let wave = PlaneWave {
        amplitude: [0.0, 0.0, 1.0, -0.5],
        k: Vec3::new(0.8, 0.3, 0.6),
        omega: 1.09f64.sqrt(),
        phase: 0.2,
    };
    let mut plus: f64 = 0.0;
    let mut minus: f64 = 0.0;
    for x in [
        Event::new(0.0, 0.1, 0.2, 0.3),
        Event::new(0.7, -0.4, 1.1, 0.5),
        Event::new(-1.3, 0.9, -0.2, -0.8),
    ] {
        let a = wave.exact_jets(&x).expect("plane waves have exact jets");
        let mut curl_e = Vec3::zeros();
        let mut d0_b = Vec3::zeros();
        let mut de = [Vec3::zeros(); 4];
        for (rho, slot) in de.iter_mut().enumerate() {
            let (e_r, b_r) = e_and_b(&raised_tensor(&a, g, Some(rho)));
            *slot = e_r;
            if rho == 0 {
                d0_b = b_r;
            }
        }
        for i in 1..=3 {
            for j in 1..=3 {
                for k in 1..=3 {
                    curl_e[i - 1] += levi_civita3(i, j, k) * de[j][k - 1];
                }
            }
        }
        plus = plus.max((curl_e + d0_b).amax());
        minus = minus.max((curl_e - d0_b).amax());
    }
    Ok(FaradaySignReport {
        epsilon,
        metric,
        plus_norm: plus,
        minus_norm: minus,
        tol: FARADAY_TOL,
    })
}
