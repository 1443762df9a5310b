use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{DerivMode, Event, Stencil, StencilOrder};

/// A fitted slope within this of the stencil order is accepted.
pub const SLOPE_TOLERANCE: f64 = 0.3;

/// Sampling nodes in a box at fixed time, and the stencil used at each node.
///
/// The nodes are `samples_per_axis` evenly spaced points per axis and do not
/// change with `spacing`, so a ladder of spacings measures truncation error
/// at the same points. Nodes inside the exclusion ball are skipped.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub lo: [f64; 3],
    pub hi: [f64; 3],
    pub t: f64,
    pub spacing: f64,
    pub samples_per_axis: usize,
    pub order: StencilOrder,
    pub exclusion_radius: f64,
}

impl GridSpec {
    pub fn new(lo: [f64; 3], hi: [f64; 3], spacing: f64, order: StencilOrder) -> Self {
        GridSpec {
            lo,
            hi,
            t: 0.0,
            spacing,
            samples_per_axis: 9,
            order,
            exclusion_radius: 0.0,
        }
    }

    pub fn with_exclusion(mut self, radius: f64) -> Self {
        self.exclusion_radius = radius;
        self
    }

    pub fn with_samples(mut self, n: usize) -> Self {
        self.samples_per_axis = n;
        self
    }

    pub fn with_spacing(&self, spacing: f64) -> Self {
        GridSpec {
            spacing,
            ..self.clone()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.spacing > 0.0 && self.spacing.is_finite()) {
            return Err(Error::Grid(format!(
                "spacing must be positive, got {}",
                self.spacing
            )));
        }
        if self.samples_per_axis < 2 {
            return Err(Error::Grid("need at least two samples per axis".into()));
        }
        for a in 0..3 {
            if !(self.lo[a] < self.hi[a]) {
                return Err(Error::Grid(format!("empty extent on axis {a}")));
            }
        }
        if !(self.exclusion_radius >= 0.0) {
            return Err(Error::Grid("exclusion radius must be non-negative".into()));
        }
        Ok(())
    }

    /// Checks that no stencil reaches inside the excluded ball's centre
    /// region: radius ≥ half-width × spacing.
    pub fn validate_singular(&self) -> Result<()> {
        self.validate()?;
        let reach = self.order.half_width() as f64 * self.spacing;
        if self.exclusion_radius < reach {
            return Err(Error::Grid(format!(
                "exclusion radius {} is inside the stencil reach {reach}",
                self.exclusion_radius
            )));
        }
        Ok(())
    }

    pub fn stencil(&self) -> Stencil {
        Stencil::uniform(self.spacing, self.order)
    }

    pub fn mode(&self) -> DerivMode {
        DerivMode::Grid(self.stencil())
    }

    pub fn points(&self) -> Vec<Event> {
        let n = self.samples_per_axis;
        let coord = |a: usize, i: usize| self.lo[a] + (self.hi[a] - self.lo[a]) * i as f64 / (n - 1) as f64;
        let mut out = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let e = Event::new(self.t, coord(0, i), coord(1, j), coord(2, k));
                    if e.r().norm() >= self.exclusion_radius {
                        out.push(e);
                    }
                }
            }
        }
        out
    }
}

/// Residual sup norms along a ladder of spacings and the fitted order.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceResult {
    pub spacings: Vec<f64>,
    pub norms: Vec<f64>,
    pub stencil_order: u32,
    pub slope: f64,
    /// Root-mean-square deviation of ln(norm) from the fitted line.
    pub fit_residual: f64,
    /// False when some refinement failed to decrease the norm.
    pub monotone: bool,
}

impl ConvergenceResult {
    pub fn accepted(&self) -> bool {
        self.monotone && self.slope >= f64::from(self.stencil_order) - SLOPE_TOLERANCE
    }
}

/// Least-squares slope of ln(y) against ln(x), with the RMS fit residual.
pub fn fit_loglog(x: &[f64], y: &[f64]) -> (f64, f64) {
    let lx: Vec<f64> = x.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = y.iter().map(|v| v.max(f64::MIN_POSITIVE).ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = lx.iter().map(|a| (a - mx) * (a - mx)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let rss: f64 = lx
        .iter()
        .zip(&ly)
        .map(|(a, b)| (b - intercept - slope * a).powi(2))
        .sum();
    (slope, (rss / n).sqrt())
}

fn check_ladder(ladder: &[f64]) -> Result<()> {
    if ladder.len() < 3 {
        return Err(Error::Ladder(format!(
            "need at least 3 spacings, got {}",
            ladder.len()
        )));
    }
    for w in ladder.windows(2) {
        if !(w[0] > 0.0 && ((w[0] / w[1]) - 2.0).abs() < 1e-9) {
            return Err(Error::Ladder(format!("{} does not halve {}", w[1], w[0])));
        }
    }
    Ok(())
}

/// Sup norm of `residual` over the grid nodes for each spacing in `ladder`.
///
/// `residual(mode, x)` evaluates one non-negative residual norm at `x` using
/// derivatives from `mode`.
pub fn convergence_study<R>(residual: R, grid: &GridSpec, ladder: &[f64]) -> Result<ConvergenceResult>
where
    R: Fn(&DerivMode, &Event) -> Result<f64> + Sync,
{
    check_ladder(ladder)?;
    let mut norms = Vec::with_capacity(ladder.len());
    for &h in ladder {
        let spec = grid.with_spacing(h);
        spec.validate()?;
        let mode = spec.mode();
        let points = spec.points();
        let norm = points
            .par_iter()
            .map(|x| residual(&mode, x))
            .try_reduce(|| 0.0, |a, b| Ok(a.max(b)))?;
        norms.push(norm);
    }
    let (slope, fit_residual) = fit_loglog(ladder, &norms);
    let monotone = norms.windows(2).all(|w| w[1] < w[0]);
    Ok(ConvergenceResult {
        spacings: ladder.to_vec(),
        norms,
        stencil_order: grid.order.order(),
        slope,
        fit_residual,
        monotone,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fit_recovers_power_law() {
        let x = [0.04, 0.02, 0.01];
        let y: Vec<f64> = x.iter().map(|h: &f64| 3.0 * h.powi(2)).collect();
        let (slope, res) = fit_loglog(&x, &y);
        assert!((slope - 2.0).abs() < 1e-12);
        assert!(res < 1e-12);
    }

    #[test]
    fn ladder_rules() {
        assert!(check_ladder(&[0.04, 0.02]).is_err());
        assert!(check_ladder(&[0.04, 0.03, 0.01]).is_err());
        assert!(check_ladder(&[0.04, 0.02, 0.01]).is_ok());
    }

    #[test]
    fn exclusion_removes_inner_nodes() {
        let g = GridSpec::new([-1.0; 3], [1.0; 3], 0.1, StencilOrder::Second).with_samples(5);
        assert_eq!(g.points().len(), 125);
        let g = g.with_exclusion(0.6);
        assert!(g.points().iter().all(|e| e.r().norm() >= 0.6));
        assert_eq!(g.points().len(), 125 - 7);
        assert!(g.with_spacing(1.0).validate_singular().is_err());
    }

    #[test]
    fn non_monotone_is_flagged() {
        let g = GridSpec::new([0.0; 3], [1.0; 3], 0.1, StencilOrder::Second).with_samples(2);
        let r = convergence_study(|_, _| Ok(1.0), &g, &[0.04, 0.02, 0.01]).unwrap();
        assert!(!r.monotone);
        assert!(!r.accepted());
        assert!(r.slope.abs() < 1e-12);
    }
}
