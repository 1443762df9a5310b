use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// One verified property. `error` is `null` in JSON when the measurement
/// itself failed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyResult {
    pub suite: String,
    pub property: String,
    pub paper_ref: String,
    pub error: Option<f64>,
    pub tol: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
    pub seed: u64,
    pub passed: bool,
    pub results: Vec<PropertyResult>,
}

impl Report {
    pub fn new(seed: u64, results: Vec<PropertyResult>) -> Self {
        let timestamp = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        Report {
            timestamp,
            seed,
            passed: results.iter().all(|r| r.pass),
            results,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyResult> {
        self.results.iter().filter(|r| !r.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json() + "\n").map_err(|e| CliError::io(path.display().to_string(), e))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path.display().to_string(), e))?;
        serde_json::from_str(&text).map_err(|source| CliError::Report {
            path: path.display().to_string(),
            source,
        })
    }

    /// Aligned plain-text table.
    pub fn pretty(&self) -> String {
        let width = |f: fn(&PropertyResult) -> usize, min: usize| {
            self.results.iter().map(f).max().unwrap_or(0).max(min)
        };
        let ws = width(|r| r.suite.len(), 5);
        let wp = width(|r| r.property.len(), 8);
        let mut out = String::new();
        let _ = writeln!(out, "seed {}  timestamp {}", self.seed, self.timestamp);
        let _ = writeln!(
            out,
            "{:<ws$}  {:<wp$}  {:>10}  {:>10}  result",
            "suite", "property", "error", "tol"
        );
        for r in &self.results {
            let error = r.error.map_or_else(|| "n/a".to_string(), |e| format!("{e:.3e}"));
            let verdict = if r.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{:<ws$}  {:<wp$}  {error:>10}  {:>10.3e}  {verdict}",
                r.suite, r.property, r.tol
            );
        }
        let failed = self.failures().count();
        let _ = writeln!(
            out,
            "{} of {} properties passed{}",
            self.results.len() - failed,
            self.results.len(),
            if failed == 0 {
                String::new()
            } else {
                format!("; {failed} failed")
            }
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn result(pass: bool, error: Option<f64>) -> PropertyResult {
        PropertyResult {
            suite: "gauge".into(),
            property: "massive_shift".into(),
            paper_ref: "residual shift under a gauge change".into(),
            error,
            tol: 1e-10,
            pass,
        }
    }

    #[test]
    fn json_round_trip_keeps_keys() {
        let report = Report::new(3, vec![result(true, Some(1e-12)), result(false, None)]);
        assert!(!report.passed);
        let json = report.to_json();
        for key in [
            "suite",
            "property",
            "paper_ref",
            "error",
            "tol",
            "pass",
            "timestamp",
        ] {
            assert!(json.contains(&format!("\"{key}\"")), "{key}");
        }
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn pretty_marks_failures() {
        let text = Report::new(3, vec![result(true, Some(1e-12)), result(false, None)]).pretty();
        assert!(text.contains("PASS") && text.contains("FAIL") && text.contains("n/a"));
        assert!(text.contains("1 of 2 properties passed; 1 failed"));
    }
}
