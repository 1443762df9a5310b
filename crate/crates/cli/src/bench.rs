//! Cl(3) against Cl(1,3) timings on deterministic workloads.

use std::hash::{DefaultHasher, Hash, Hasher};
use std::hint::black_box;
use std::io::Write;
use std::time::{Duration, Instant};

use proca_ga::analytic_lab::{random_events, random_smooth_config, SmoothConfig};
use proca_ga::em_fields::Evaluator;
use proca_ga::field::Event;
use proca_ga::{Multivector, Signature};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{CliError, Result};

pub const MIN_REPS: usize = 100;
pub const DEFAULT_REPS: usize = 2000;
pub const BATCHES: usize = 7;
/// A batch shorter than this is below useful timer resolution.
const MIN_BATCH: Duration = Duration::from_millis(1);
const MAX_DOUBLINGS: u32 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Formalism {
    #[serde(rename = "APS")]
    Aps,
    #[serde(rename = "STA")]
    Sta,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub formalism: Formalism,
    pub operation: &'static str,
    pub reps: usize,
    pub batches: usize,
    pub median_ns: f64,
    pub iqr_ns: f64,
    /// Median over the APS median for the same operation.
    pub ratio_to_aps: f64,
    /// Hash of the workload results, independent of timing.
    pub checksum: String,
}

/// Median and interquartile range with linear interpolation.
pub fn median_iqr(samples: &[f64]) -> (f64, f64) {
    let mut s = samples.to_vec();
    s.sort_by(f64::total_cmp);
    let q = |p: f64| {
        let pos = p * (s.len() - 1) as f64;
        let lo = pos.floor() as usize;
        let hi = pos.ceil() as usize;
        s[lo] + (s[hi] - s[lo]) * (pos - lo as f64)
    };
    (q(0.5), q(0.75) - q(0.25))
}

fn checksum(results: &[Multivector]) -> String {
    let mut h = DefaultHasher::new();
    for m in results {
        for c in m.coeffs() {
            c.to_bits().hash(&mut h);
        }
    }
    format!("{:016x}", h.finish())
}

/// Times `op(k)` for k cycling through the workload; returns per-op
/// batch times in ns and the reps finally used.
fn time_batches(reps: usize, len: usize, op: &dyn Fn(usize) -> Multivector) -> (Vec<f64>, usize) {
    let mut reps = reps;
    for _ in 0..MAX_DOUBLINGS {
        let mut times = Vec::with_capacity(BATCHES);
        let mut short = false;
        for _ in 0..BATCHES {
            let start = Instant::now();
            for k in 0..reps {
                black_box(op(k % len));
            }
            let elapsed = start.elapsed();
            short |= elapsed < MIN_BATCH;
            times.push(elapsed.as_nanos() as f64 / reps as f64);
        }
        if !short {
            return (times, reps);
        }
        eprintln!("warning: batch of {reps} reps is below timer resolution; doubling");
        reps *= 2;
    }
    let times = (0..BATCHES)
        .map(|_| {
            let start = Instant::now();
            for k in 0..reps {
                black_box(op(k % len));
            }
            start.elapsed().as_nanos() as f64 / reps as f64
        })
        .collect();
    (times, reps)
}

/// Inputs for one benchmark run, drawn from a single seed.
pub struct Workload {
    pub cl3_pairs: Vec<(Multivector, Multivector)>,
    pub sta_pairs: Vec<(Multivector, Multivector)>,
    pub configs: Vec<SmoothConfig>,
    pub events: Vec<Event>,
}

impl Workload {
    pub fn new(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mv = |sig: Signature, rng: &mut ChaCha8Rng| {
            let c: Vec<f64> = (0..sig.blade_count()).map(|_| rng.gen_range(-1.0..1.0)).collect();
            Multivector::from_coeffs(sig, &c).expect("finite coefficients")
        };
        let cl3_pairs = (0..256)
            .map(|_| (mv(Signature::CL3, &mut rng), mv(Signature::CL3, &mut rng)))
            .collect();
        let sta_pairs = (0..256)
            .map(|_| (mv(Signature::STA, &mut rng), mv(Signature::STA, &mut rng)))
            .collect();
        let configs = (0..16).map(|_| random_smooth_config(rng.gen())).collect();
        let events = random_events(rng.gen(), 16, 2.0);
        Workload {
            cl3_pairs,
            sta_pairs,
            configs,
            events,
        }
    }

    fn residual(&self, ev: &Evaluator, formalism: Formalism, k: usize) -> Multivector {
        let cfg = &self.configs[k % self.configs.len()];
        let x = &self.events[(k / self.configs.len()) % self.events.len()];
        let r = match formalism {
            Formalism::Aps => ev.mpd_residual_aps(&cfg.potentials, &cfg.sources, x),
            Formalism::Sta => ev.mpd_residual_sta(&cfg.potentials, &cfg.sources, x),
        };
        r.expect("workload configurations have exact jets")
    }

    fn residual_count(&self) -> usize {
        self.configs.len() * self.events.len()
    }

    /// Results of every operation over one pass through the workload.
    pub fn checksums(&self, ev: &Evaluator) -> [String; 4] {
        let gp = |pairs: &[(Multivector, Multivector)]| {
            checksum(&pairs.iter().map(|(a, b)| a * b).collect::<Vec<_>>())
        };
        let res = |f: Formalism| {
            checksum(
                &(0..self.residual_count())
                    .map(|k| self.residual(ev, f, k))
                    .collect::<Vec<_>>(),
            )
        };
        [
            gp(&self.cl3_pairs),
            gp(&self.sta_pairs),
            res(Formalism::Aps),
            res(Formalism::Sta),
        ]
    }
}

/// Formalism, operation, reps, workload length and the timed operation.
type Run<'a> = (
    Formalism,
    &'static str,
    usize,
    usize,
    &'a dyn Fn(usize) -> Multivector,
);

pub fn run_bench(seed: u64, reps: usize) -> Result<Vec<BenchRecord>> {
    if reps < MIN_REPS {
        return Err(CliError::Config(format!(
            "reps must be at least {MIN_REPS}, got {reps}"
        )));
    }
    let w = Workload::new(seed);
    let ev = Evaluator::default();
    let sums = w.checksums(&ev);
    let gp_cl3 = |k: usize| &w.cl3_pairs[k].0 * &w.cl3_pairs[k].1;
    let gp_sta = |k: usize| &w.sta_pairs[k].0 * &w.sta_pairs[k].1;
    let res_aps = |k: usize| w.residual(&ev, Formalism::Aps, k);
    let res_sta = |k: usize| w.residual(&ev, Formalism::Sta, k);
    let residual_reps = (reps / 10).max(MIN_REPS);
    let runs: [Run; 4] = [
        (Formalism::Aps, "gp", reps, w.cl3_pairs.len(), &gp_cl3),
        (Formalism::Sta, "gp", reps, w.sta_pairs.len(), &gp_sta),
        (
            Formalism::Aps,
            "mpd_residual",
            residual_reps,
            w.residual_count(),
            &res_aps,
        ),
        (
            Formalism::Sta,
            "mpd_residual",
            residual_reps,
            w.residual_count(),
            &res_sta,
        ),
    ];
    let mut records: Vec<BenchRecord> = Vec::new();
    for ((formalism, operation, reps, len, op), sum) in runs.into_iter().zip(sums) {
        let (times, reps) = time_batches(reps, len, op);
        let (median_ns, iqr_ns) = median_iqr(&times);
        let base = records
            .iter()
            .find(|r| r.operation == operation && r.formalism == Formalism::Aps)
            .map_or(median_ns, |r| r.median_ns);
        records.push(BenchRecord {
            formalism,
            operation,
            reps,
            batches: BATCHES,
            median_ns,
            iqr_ns,
            ratio_to_aps: median_ns / base,
            checksum: sum,
        });
    }
    Ok(records)
}

pub fn write_csv<W: Write>(records: &[BenchRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    w.flush().map_err(|e| CliError::io("csv output", e))?;
    Ok(())
}
