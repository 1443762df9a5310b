use crate::error::{Error, Result};
use crate::field::Event;
use crate::sta::METRIC;
use crate::Vec3;

use super::{Evaluator, Potentials};

/// Field-strength tensors of both potentials and their duals.
///
/// `f` and `w` carry lower indices, F_μν = ∂_μA_ν - ∂_νA_μ with x⁰ = ct.
/// The duals carry upper indices, ℱ^{αβ} = ½ε^{αβγδ}F_γδ with ε^{0123} = +1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldTensors {
    pub f: [[f64; 4]; 4],
    pub w: [[f64; 4]; 4],
    pub f_dual: [[f64; 4]; 4],
    pub w_dual: [[f64; 4]; 4],
}

/// ε^{μνρσ} with ε^{0123} = +1.
pub fn levi_civita4(idx: [usize; 4]) -> f64 {
    for a in 0..4 {
        if idx[a] > 3 {
            return 0.0;
        }
        for b in a + 1..4 {
            if idx[a] == idx[b] {
                return 0.0;
            }
        }
    }
    let mut inversions = 0;
    for a in 0..4 {
        for b in a + 1..4 {
            if idx[a] > idx[b] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

pub(crate) fn raise(t: &[[f64; 4]; 4]) -> [[f64; 4]; 4] {
    let mut out = *t;
    for (mu, row) in out.iter_mut().enumerate() {
        for (nu, v) in row.iter_mut().enumerate() {
            *v *= METRIC[mu] * METRIC[nu];
        }
    }
    out
}

pub(crate) fn dual(lower: &[[f64; 4]; 4]) -> [[f64; 4]; 4] {
    let mut out = [[0.0; 4]; 4];
    for (a, row) in out.iter_mut().enumerate() {
        for (b, v) in row.iter_mut().enumerate() {
            let mut s = 0.0;
            for g in 0..4 {
                for d in 0..4 {
                    s += levi_civita4([a, b, g, d]) * lower[g][d];
                }
            }
            *v = 0.5 * s;
        }
    }
    out
}

/// Full contraction T_μν S^μν of two lower-index tensors.
pub(crate) fn contract(t: &[[f64; 4]; 4], s_lower: &[[f64; 4]; 4]) -> f64 {
    let s = raise(s_lower);
    let mut acc = 0.0;
    for mu in 0..4 {
        for nu in 0..4 {
            acc += t[mu][nu] * s[mu][nu];
        }
    }
    acc
}

fn antisymmetry_defect(t: &[[f64; 4]; 4]) -> f64 {
    let mut worst: f64 = 0.0;
    for mu in 0..4 {
        for nu in 0..4 {
            worst = worst.max((t[mu][nu] + t[nu][mu]).abs());
        }
    }
    worst
}

const ANTISYMMETRY_TOL: f64 = 1e-12;

/// E_i = F^{i0} - 𝒢^{i0}, B_i = W^{i0} + ℱ^{i0}.
pub fn fields_from_tensors(t: &FieldTensors) -> Result<(Vec3, Vec3)> {
    for (name, m) in [
        ("F", &t.f),
        ("W", &t.w),
        ("dual F", &t.f_dual),
        ("dual W", &t.w_dual),
    ] {
        let defect = antisymmetry_defect(m);
        if !(defect <= ANTISYMMETRY_TOL) {
            return Err(Error::Contract(format!(
                "{name} is not antisymmetric: {defect:e}"
            )));
        }
    }
    let f_up = raise(&t.f);
    let w_up = raise(&t.w);
    let e = Vec3::from_fn(|i, _| f_up[i + 1][0] - t.w_dual[i + 1][0]);
    let b = Vec3::from_fn(|i, _| w_up[i + 1][0] + t.f_dual[i + 1][0]);
    Ok((e, b))
}

impl Evaluator {
    pub fn field_tensors(&self, p: &Potentials, x: &Event) -> Result<FieldTensors> {
        let (a, z) = self.potential_first_partials(p, x)?;
        let strength = |j: &[crate::field::Jet; 4]| {
            let mut t = [[0.0; 4]; 4];
            for mu in 0..4 {
                for nu in 0..4 {
                    t[mu][nu] = METRIC[nu] * j[nu].d[mu] - METRIC[mu] * j[mu].d[nu];
                }
            }
            t
        };
        let f = strength(&a);
        let w = strength(&z);
        Ok(FieldTensors {
            f,
            w,
            f_dual: dual(&f),
            w_dual: dual(&w),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn levi_civita_signs() {
        assert_eq!(levi_civita4([0, 1, 2, 3]), 1.0);
        assert_eq!(levi_civita4([1, 0, 2, 3]), -1.0);
        assert_eq!(levi_civita4([1, 2, 3, 0]), -1.0);
        assert_eq!(levi_civita4([0, 0, 2, 3]), 0.0);
    }

    #[test]
    fn zero_tensors_give_zero_fields() {
        let z = [[0.0; 4]; 4];
        let t = FieldTensors {
            f: z,
            w: z,
            f_dual: z,
            w_dual: z,
        };
        assert_eq!(fields_from_tensors(&t).unwrap(), (Vec3::zeros(), Vec3::zeros()));
    }

    #[test]
    fn symmetric_tensor_is_rejected() {
        let mut f = [[0.0; 4]; 4];
        f[0][1] = 1.0;
        f[1][0] = 1.0;
        let z = [[0.0; 4]; 4];
        let t = FieldTensors {
            f,
            w: z,
            f_dual: z,
            w_dual: z,
        };
        assert!(fields_from_tensors(&t).is_err());
    }
}
