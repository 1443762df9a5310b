//! Flat `key = value` suite configuration.
//!
//! ```text
//! # comment
//! seed = 7
//! c = 1.0
//! mass = 0.5
//! ladder = 0.04, 0.02, 0.01
//! order = 2
//! suites = algebra, equivalence
//! mutation = aps_mass_sign
//! tol.equivalence.aps_vs_components = 1e-9
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use proca_ga::analytic_lab::StencilOrder;
use proca_ga::em_fields::Mutation;

use crate::error::{CliError, Result};
use crate::suites::PROPERTIES;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Algebra,
    Involutions,
    Equivalence,
    CrossFormalism,
    Covariance,
    Duality,
    Gauge,
    Conservation,
    Analytic,
    Structure,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Algebra,
        Suite::Involutions,
        Suite::Equivalence,
        Suite::CrossFormalism,
        Suite::Covariance,
        Suite::Duality,
        Suite::Gauge,
        Suite::Conservation,
        Suite::Analytic,
        Suite::Structure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Involutions => "involutions",
            Suite::Equivalence => "equivalence",
            Suite::CrossFormalism => "cross_formalism",
            Suite::Covariance => "covariance",
            Suite::Duality => "duality",
            Suite::Gauge => "gauge",
            Suite::Conservation => "conservation",
            Suite::Analytic => "analytic",
            Suite::Structure => "structure",
        }
    }

    /// Random stream index; each suite draws from its own stream of the seed.
    pub fn stream(self) -> u64 {
        Suite::ALL.iter().position(|&s| s == self).expect("listed") as u64
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| CliError::Config(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub c: f64,
    /// Overrides the mass drawn for random configurations and sets the mass
    /// of the analytic ones.
    pub mass: Option<f64>,
    pub ladder: Vec<f64>,
    pub order: StencilOrder,
    pub suites: Vec<Suite>,
    pub mutation: Option<Mutation>,
    /// Keyed by `suite.property`.
    pub tolerances: BTreeMap<String, f64>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 1,
            c: 1.0,
            mass: None,
            ladder: vec![0.04, 0.02, 0.01],
            order: StencilOrder::Second,
            suites: Suite::ALL.to_vec(),
            mutation: None,
            tolerances: BTreeMap::new(),
        }
    }
}

fn number<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| CliError::Config(format!("`{key}`: cannot parse `{value}`")))
}

pub fn parse_ladder(value: &str) -> Result<Vec<f64>> {
    let ladder = value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| number::<f64>("ladder", s))
        .collect::<Result<Vec<_>>>()?;
    if ladder.is_empty() {
        return Err(CliError::Config("ladder is empty".into()));
    }
    if let Some(bad) = ladder.iter().find(|h| !(h.is_finite() && **h > 0.0)) {
        return Err(CliError::Config(format!("ladder spacing {bad} is not positive")));
    }
    Ok(ladder)
}

pub fn parse_order(value: &str) -> Result<StencilOrder> {
    number::<u32>("order", value)
        .ok()
        .and_then(StencilOrder::from_order)
        .ok_or_else(|| CliError::Config(format!("order must be 2 or 4, got `{value}`")))
}

impl SuiteConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = SuiteConfig::default();
        let mut seen = std::collections::HashSet::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("line {}: expected key = value", n + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            if !seen.insert(key.to_string()) {
                return Err(CliError::Config(format!("line {}: duplicate key `{key}`", n + 1)));
            }
            match key {
                "seed" => cfg.seed = number(key, value)?,
                "c" => cfg.c = number(key, value)?,
                "mass" => cfg.mass = Some(number(key, value)?),
                "ladder" => cfg.ladder = parse_ladder(value)?,
                "order" => cfg.order = parse_order(value)?,
                "suites" => {
                    cfg.suites = value
                        .split(',')
                        .map(str::trim)
                        .filter(|s| !s.is_empty())
                        .map(str::parse)
                        .collect::<Result<_>>()?;
                }
                "mutation" => {
                    cfg.mutation = match value {
                        "none" => None,
                        "aps_mass_sign" => Some(Mutation::ApsMassSign),
                        other => return Err(CliError::Config(format!("unknown mutation `{other}`"))),
                    }
                }
                _ => match key.strip_prefix("tol.") {
                    Some(property) => {
                        cfg.tolerances.insert(property.to_string(), number(key, value)?);
                    }
                    None => return Err(CliError::Config(format!("line {}: unknown key `{key}`", n + 1))),
                },
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path.display().to_string(), e))?;
        SuiteConfig::parse(&text)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.c.is_finite() && self.c > 0.0) {
            return Err(CliError::Config(format!("c must be positive, got {}", self.c)));
        }
        if let Some(m) = self.mass {
            if !(m.is_finite() && m >= 0.0) {
                return Err(CliError::Config(format!("mass must be non-negative, got {m}")));
            }
        }
        if self.suites.is_empty() {
            return Err(CliError::Config("no suites enabled".into()));
        }
        if self.ladder.is_empty() {
            return Err(CliError::Config("ladder is empty".into()));
        }
        for (property, &tol) in &self.tolerances {
            if !PROPERTIES.iter().any(|p| p.id() == *property) {
                return Err(CliError::Config(format!(
                    "tolerance for unknown property `{property}`"
                )));
            }
            if !(tol.is_finite() && tol > 0.0) {
                return Err(CliError::Config(format!(
                    "tolerance for `{property}` must be positive"
                )));
            }
        }
        Ok(())
    }

    pub fn tolerance(&self, id: &str, default: f64) -> f64 {
        self.tolerances.get(id).copied().unwrap_or(default)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_key() {
        let cfg = SuiteConfig::parse(
            "# header\nseed = 9\nc=2.5\nmass = 0.3\nladder = 0.08, 0.04, 0.02\norder = 4\n\
             suites = algebra, gauge\nmutation = aps_mass_sign\ntol.gauge.massive_shift = 1e-8\n",
        )
        .unwrap();
        assert_eq!(cfg.seed, 9);
        assert_eq!(cfg.c, 2.5);
        assert_eq!(cfg.mass, Some(0.3));
        assert_eq!(cfg.ladder, vec![0.08, 0.04, 0.02]);
        assert_eq!(cfg.order, StencilOrder::Fourth);
        assert_eq!(cfg.suites, vec![Suite::Algebra, Suite::Gauge]);
        assert_eq!(cfg.mutation, Some(Mutation::ApsMassSign));
        assert_eq!(cfg.tolerance("gauge.massive_shift", 1.0), 1e-8);
    }

    #[test]
    fn empty_text_is_the_default() {
        assert_eq!(
            SuiteConfig::parse("\n   \n# only comments\n").unwrap(),
            SuiteConfig::default()
        );
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in [
            "seed",
            "seed = x",
            "seed = 1\nseed = 2",
            "colour = red",
            "c = -1",
            "mass = -0.1",
            "ladder = ",
            "ladder = 0.1, -0.05",
            "order = 3",
            "suites = algebra, nonsense",
            "suites = ",
            "mutation = other",
            "tol.nope = 1e-3",
            "tol.gauge.massive_shift = 0",
        ] {
            assert!(SuiteConfig::parse(bad).is_err(), "{bad}");
        }
    }
}
