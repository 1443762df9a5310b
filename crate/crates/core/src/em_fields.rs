//! Two-potential massive electrodynamics with electric and magnetic sources.
//!
//! The electric potential A^μ carries a photon mass m, the magnetic potential
//! Z^μ is massless. Fields are
//!
//! E⃗ = -∇⃗A₀ - c⁻¹∂ₜA⃗ - ∇⃗×Z⃗,   B⃗ = -∇⃗Z₀ - c⁻¹∂ₜZ⃗ + ∇⃗×A⃗,
//!
//! and the field equations are evaluated as residuals in three independent
//! ways: componentwise, as one Cl(3) equation ∂̲F = 4πc⁻¹(J̲e + iJ̲m) - m²A̲,
//! and as one Cl(1,3) equation ∇F = 4πc⁻¹(je - i jm) - m²A. Gaussian units.

mod evaluator;
mod force;
mod gauge;
mod lagrangian;
mod tensors;
mod transform;

use crate::error::{Error, Result};
use crate::field::{zero4, Field4};

pub use evaluator::{ComponentResiduals, Evaluator, FieldJets, Mutation, ResidualReport, WaveResiduals};
pub use force::{dyon_push, four_velocity, lorentz_force, DyonParams, DyonState, LorentzForce};
pub use gauge::{gauge_transform, GaugeFunction, HarmonicGauge, LinearGauge};
pub use lagrangian::{LagrangianDensity, ALPHA_F2, ALPHA_J};
pub use tensors::{fields_from_tensors, levi_civita4, FieldTensors};
pub use transform::{
    duality_rotate_potentials, duality_rotate_sources, lorentz_transform_potentials,
    lorentz_transform_sources, LorentzTransformed,
};

/// The pair of four-potentials and the photon mass (an inverse length).
///
/// Both fields have components (A₀, A_x, A_y, A_z).
#[derive(Clone)]
pub struct Potentials {
    pub a: Field4,
    pub z: Field4,
    mass: f64,
}

impl Potentials {
    pub fn new(a: Field4, z: Field4, mass: f64) -> Result<Self> {
        if !(mass >= 0.0 && mass.is_finite()) {
            return Err(Error::Contract(format!(
                "photon mass must be finite and non-negative, got {mass}"
            )));
        }
        Ok(Potentials { a, z, mass })
    }

    pub fn vacuum() -> Self {
        Potentials {
            a: zero4(),
            z: zero4(),
            mass: 0.0,
        }
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn with_mass(&self, mass: f64) -> Result<Self> {
        Potentials::new(self.a.clone(), self.z.clone(), mass)
    }
}

impl std::fmt::Debug for Potentials {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Potentials")
            .field("mass", &self.mass)
            .finish_non_exhaustive()
    }
}

/// Electric and magnetic sources, each with components (ρ, j_x, j_y, j_z).
#[derive(Clone)]
pub struct Sources {
    pub electric: Field4,
    pub magnetic: Field4,
}

impl Sources {
    pub fn new(electric: Field4, magnetic: Field4) -> Self {
        Sources { electric, magnetic }
    }

    pub fn vacuum() -> Self {
        Sources::new(zero4(), zero4())
    }

    /// Same electric sources, no magnetic ones.
    pub fn electric_only(&self) -> Self {
        Sources::new(self.electric.clone(), zero4())
    }
}

impl std::fmt::Debug for Sources {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Sources").finish_non_exhaustive()
    }
}
