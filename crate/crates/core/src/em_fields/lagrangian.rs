use std::f64::consts::PI;

use super::tensors::{contract, levi_civita4};
use super::{Evaluator, Potentials, Sources};
use crate::error::Result;
use crate::field::Event;
use crate::sta::METRIC;

/// Coefficient of F_μνF^μν and of W_μνW^μν.
pub const ALPHA_F2: f64 = -1.0 / (16.0 * PI);
/// Coefficient of J_μA^μ and of J^m_μZ^μ, in units of 1/c.
pub const ALPHA_J: f64 = -1.0;

/// The three pieces of the two-potential Lagrangian density.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct LagrangianDensity {
    /// α_F²F_μνF^μν - c⁻¹J^e_μA^μ + (m²/8π)A_μA^μ.
    pub maxwell_proca: f64,
    /// α_W²W_μνW^μν - c⁻¹J^m_μZ^μ.
    pub dual: f64,
    /// α_FW ε^{μνρσ}F_μνW_ρσ.
    pub interaction: f64,
}

impl LagrangianDensity {
    pub fn total(&self) -> f64 {
        self.maxwell_proca + self.dual + self.interaction
    }
}

fn minkowski(u: &[f64; 4], v: &[f64; 4]) -> f64 {
    (0..4).map(|mu| METRIC[mu] * u[mu] * v[mu]).sum()
}

impl Evaluator {
    pub fn lagrangian_density(
        &self,
        p: &Potentials,
        s: &Sources,
        x: &Event,
        alpha_fw: f64,
    ) -> Result<LagrangianDensity> {
        let t = self.field_tensors(p, x)?;
        let (a, z) = self.potential_first_partials(p, x)?;
        let av = a.map(|j| j.value);
        let zv = z.map(|j| j.value);
        let current = |v: [f64; 4]| [self.c() * v[0], v[1], v[2], v[3]];
        let je = current(s.electric.eval(x));
        let jm = current(s.magnetic.eval(x));
        let m2 = p.mass() * p.mass();

        let mut eps_fw = 0.0;
        for mu in 0..4 {
            for nu in 0..4 {
                for rho in 0..4 {
                    for sigma in 0..4 {
                        let e = levi_civita4([mu, nu, rho, sigma]);
                        if e != 0.0 {
                            eps_fw += e * t.f[mu][nu] * t.w[rho][sigma];
                        }
                    }
                }
            }
        }
        Ok(LagrangianDensity {
            maxwell_proca: ALPHA_F2 * contract(&t.f, &t.f)
                + ALPHA_J / self.c() * minkowski(&je, &av)
                + m2 / (8.0 * PI) * minkowski(&av, &av),
            dual: ALPHA_F2 * contract(&t.w, &t.w) + ALPHA_J / self.c() * minkowski(&jm, &zv),
            interaction: alpha_fw * eps_fw,
        })
    }

    /// 4α_FW ∂_μ(ε^{μνρσ}A_ν∂_ρZ_σ), expanded with the product rule.
    pub fn interaction_total_derivative(&self, p: &Potentials, x: &Event, alpha_fw: f64) -> Result<f64> {
        let (a, z) = self.potential_first_partials(p, x)?;
        let mut acc = 0.0;
        for mu in 0..4 {
            for nu in 0..4 {
                for rho in 0..4 {
                    for sigma in 0..4 {
                        let e = levi_civita4([mu, nu, rho, sigma]);
                        if e == 0.0 {
                            continue;
                        }
                        let g = METRIC[nu] * METRIC[sigma];
                        let first = a[nu].d[mu] * z[sigma].d[rho];
                        let second = a[nu].value * z[sigma].dd[mu][rho];
                        acc += e * g * (first + second);
                    }
                }
            }
        }
        Ok(4.0 * alpha_fw * acc)
    }
}
