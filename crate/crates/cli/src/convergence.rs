use std::io::Write;

use proca_ga::analytic_lab::{
    convergence_study, monopole_config, proca_plane_wave, yukawa_config, ConvergenceResult, GridSpec,
    StencilOrder,
};
use proca_ga::em_fields::{Evaluator, Potentials, Sources};
use proca_ga::Vec3;
use serde::Serialize;

use crate::config::SuiteConfig;
use crate::error::Result;

/// Default mass of the analytic configurations.
pub const DEFAULT_MASS: f64 = 0.7;

/// A known solution paired with one of its nontrivial equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    /// Gauss law with mass term on the static Yukawa potential.
    YukawaGauss,
    /// ∇⃗·B⃗ on the point monopole.
    MonopoleDivergence,
    /// Ampère law with mass term on a transverse Proca plane wave.
    ProcaAmpere,
}

impl Case {
    pub const ALL: [Case; 3] = [Case::YukawaGauss, Case::MonopoleDivergence, Case::ProcaAmpere];

    pub fn config_name(self) -> &'static str {
        match self {
            Case::YukawaGauss => "yukawa",
            Case::MonopoleDivergence => "monopole",
            Case::ProcaAmpere => "proca_wave",
        }
    }

    pub fn equation(self) -> &'static str {
        match self {
            Case::YukawaGauss => "gauss",
            Case::MonopoleDivergence => "div_b",
            Case::ProcaAmpere => "ampere",
        }
    }

    fn potentials(self, mass: f64, c: f64) -> proca_ga::Result<Potentials> {
        match self {
            Case::YukawaGauss => yukawa_config(1.0, mass),
            Case::MonopoleDivergence => Ok(monopole_config(1.0)),
            Case::ProcaAmpere => {
                let k = Vec3::new(0.9, -0.5, 0.4);
                let pol = Vec3::z().cross(&k).normalize();
                proca_plane_wave(&k, &pol, mass, c)
            }
        }
    }

    /// Sample box x ∈ [0.4, 1], y, z ∈ [-0.3, 0.3] keeps the nodes at least
    /// 0.4 from the Yukawa and monopole singularities.
    pub fn grid(self, spacing: f64, order: StencilOrder) -> GridSpec {
        GridSpec::new([0.4, -0.3, -0.3], [1.0, 0.3, 0.3], spacing, order).with_exclusion(0.3)
    }

    pub fn run(
        self,
        cfg: &SuiteConfig,
        ladder: &[f64],
        order: StencilOrder,
    ) -> proca_ga::Result<ConvergenceResult> {
        let mass = cfg.mass.unwrap_or(DEFAULT_MASS);
        let p = self.potentials(mass, cfg.c)?;
        let first = *ladder
            .first()
            .ok_or_else(|| proca_ga::Error::Ladder("empty ladder".into()))?;
        let spec = self.grid(first, order);
        for &h in ladder {
            spec.with_spacing(h).validate_singular()?;
        }
        let base = Evaluator::new(cfg.c, proca_ga::field::DerivMode::Analytic)?;
        let vacuum = Sources::vacuum();
        convergence_study(
            |mode, x| {
                let r = base.with_mode(*mode).mpd_residual_components(&p, &vacuum, x)?;
                Ok(match self {
                    Case::YukawaGauss => r.r1.abs(),
                    Case::MonopoleDivergence => r.r3.abs(),
                    Case::ProcaAmpere => r.r2.amax(),
                })
            },
            &spec,
            ladder,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub config: &'static str,
    pub equation: &'static str,
    pub order: u32,
    pub spacing: f64,
    pub residual_norm: f64,
    pub slope: f64,
    pub accepted: bool,
}

/// Runs every case; one row per (case, spacing) with the case's fitted slope.
pub fn convergence_table(
    cfg: &SuiteConfig,
    ladder: &[f64],
    order: StencilOrder,
) -> proca_ga::Result<Vec<ConvergenceRow>> {
    let mut rows = Vec::new();
    for case in Case::ALL {
        let result = case.run(cfg, ladder, order)?;
        for (&spacing, &norm) in result.spacings.iter().zip(&result.norms) {
            rows.push(ConvergenceRow {
                config: case.config_name(),
                equation: case.equation(),
                order: result.stencil_order,
                spacing,
                residual_norm: norm,
                slope: result.slope,
                accepted: result.accepted(),
            });
        }
    }
    Ok(rows)
}

pub fn write_csv<W: Write>(rows: &[ConvergenceRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()
        .map_err(|e| crate::error::CliError::io("csv output", e))?;
    Ok(())
}
