use crate::aps::{self, Biparavector, Paravector, ParavectorMetric};
use crate::error::{Error, Result};
use crate::field::Event;
use crate::Vec3;

/// Four-velocities must satisfy ūu̲ = 1 to this tolerance.
const NORMALIZATION_TOL: f64 = 1e-9;

/// u = γ(1 + v⃗/c).
pub fn four_velocity(v: &Vec3, c: f64) -> Result<Paravector> {
    let beta = v / c;
    let b2 = beta.norm_squared();
    if !(b2 < 1.0) {
        return Err(Error::Contract(format!(
            "speed {} is not below c = {c}",
            v.norm()
        )));
    }
    let gamma = 1.0 / (1.0 - b2).sqrt();
    Ok(Paravector::new(gamma, beta * gamma))
}

/// Electric and magnetic force paravectors: scalar parts are the powers
/// γ(E⃗·v⃗/c), γ(B⃗·v⃗/c); vector parts are γ(E⃗ + v⃗/c×B⃗), γ(B⃗ - v⃗/c×E⃗),
/// each times its charge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzForce {
    pub electric: Paravector,
    pub magnetic: Paravector,
}

impl LorentzForce {
    pub fn total(&self) -> Paravector {
        self.electric + self.magnetic
    }
}

/// Splits q_e⟨Fū⟩_R + q_m⟨Fū⟩_I for a unit four-velocity u.
pub fn lorentz_force(q_e: f64, q_m: f64, u: &Paravector, f: &Biparavector) -> Result<LorentzForce> {
    let norm = ParavectorMetric::default().quadratic_form(u);
    if !((norm - 1.0).abs() <= NORMALIZATION_TOL && u.scalar > 0.0) {
        return Err(Error::Contract(format!(
            "four-velocity must be future-pointing with unit norm, got norm {norm}"
        )));
    }
    let fu = aps::parts_unchecked(&(f.to_multivector() * u.to_multivector()));
    Ok(LorentzForce {
        electric: Paravector::new(fu.rs, fu.rv).scale(q_e),
        magnetic: Paravector::new(fu.is, fu.iv).scale(q_m),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DyonParams {
    pub q_e: f64,
    pub q_m: f64,
    pub mass: f64,
    pub c: f64,
}

/// Proper time, position paravector (ct, r⃗) and four-velocity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DyonState {
    pub tau: f64,
    pub x: Paravector,
    pub u: Paravector,
}

impl DyonState {
    pub fn at_rest(t: f64, r: Vec3, c: f64) -> Self {
        DyonState {
            tau: 0.0,
            x: Paravector::new(c * t, r),
            u: Paravector::new(1.0, Vec3::zeros()),
        }
    }

    pub fn event(&self, c: f64) -> Event {
        Event::at(self.x.scalar / c, self.x.vec)
    }
}

fn acceleration(
    params: &DyonParams,
    x: &Paravector,
    u: &Paravector,
    field: &dyn Fn(&Event) -> Biparavector,
) -> Paravector {
    let f = field(&Event::at(x.scalar / params.c, x.vec));
    let fu = aps::parts_unchecked(&(f.to_multivector() * u.to_multivector()));
    let force =
        Paravector::new(fu.rs, fu.rv).scale(params.q_e) + Paravector::new(fu.is, fu.iv).scale(params.q_m);
    force.scale(1.0 / (params.mass * params.c))
}

/// One midpoint step in proper time of m c du/dτ = q_e⟨Fū⟩_R + q_m⟨Fū⟩_I,
/// dx/dτ = c u.
pub fn dyon_push(
    params: &DyonParams,
    state: &DyonState,
    field: &dyn Fn(&Event) -> Biparavector,
    dtau: f64,
) -> Result<DyonState> {
    if !(params.mass > 0.0 && params.c > 0.0 && dtau.is_finite()) {
        return Err(Error::Contract(
            "dyon push needs positive mass and c and a finite step".into(),
        ));
    }
    let half = 0.5 * dtau;
    let a0 = acceleration(params, &state.x, &state.u, field);
    let u_mid = state.u + a0.scale(half);
    let x_mid = state.x + state.u.scale(params.c * half);
    let a_mid = acceleration(params, &x_mid, &u_mid, field);
    Ok(DyonState {
        tau: state.tau + dtau,
        x: state.x + u_mid.scale(params.c * dtau),
        u: state.u + a_mid.scale(dtau),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rest_charge_feels_electric_field() {
        let u = four_velocity(&Vec3::zeros(), 1.0).unwrap();
        let f = Biparavector::field(Vec3::new(3.0, 0.0, 0.0), Vec3::zeros());
        let force = lorentz_force(2.0, 0.0, &u, &f).unwrap();
        assert_eq!(force.electric, Paravector::new(0.0, Vec3::new(6.0, 0.0, 0.0)));
        assert_eq!(force.magnetic, Paravector::new(0.0, Vec3::zeros()));
    }

    #[test]
    fn rest_monopole_feels_magnetic_field() {
        let u = four_velocity(&Vec3::zeros(), 1.0).unwrap();
        let f = Biparavector::field(Vec3::zeros(), Vec3::new(0.0, 1.5, 0.0));
        let force = lorentz_force(0.0, 2.0, &u, &f).unwrap();
        assert_eq!(force.magnetic, Paravector::new(0.0, Vec3::new(0.0, 3.0, 0.0)));
    }

    #[test]
    fn moving_charge_matches_vector_formula() {
        let c = 2.0;
        let v = Vec3::new(0.3, -0.5, 0.8);
        let u = four_velocity(&v, c).unwrap();
        let e = Vec3::new(0.1, 0.7, -0.2);
        let b = Vec3::new(-0.4, 0.2, 0.9);
        let f = lorentz_force(1.3, -0.6, &u, &Biparavector::field(e, b)).unwrap();
        let gamma = u.scalar;
        let fe = (e + (v / c).cross(&b)) * (gamma * 1.3);
        let fm = (b - (v / c).cross(&e)) * (gamma * -0.6);
        assert!((f.electric.vec - fe).amax() < 1e-14);
        assert!((f.magnetic.vec - fm).amax() < 1e-14);
        assert!((f.electric.scalar - gamma * 1.3 * e.dot(&v) / c).abs() < 1e-14);
        assert!((f.magnetic.scalar + gamma * 0.6 * b.dot(&v) / c).abs() < 1e-14);
    }

    #[test]
    fn superluminal_speed_is_rejected() {
        assert!(four_velocity(&Vec3::new(1.0, 0.0, 0.0), 1.0).is_err());
        let bad = Paravector::new(2.0, Vec3::zeros());
        let f = Biparavector::field(Vec3::x(), Vec3::zeros());
        assert!(lorentz_force(1.0, 0.0, &bad, &f).is_err());
    }
}
