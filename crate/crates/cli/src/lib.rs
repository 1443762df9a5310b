//! Command-line harness for `proca-ga`: verification suites with JSON
//! reports, convergence tables and formalism benchmarks as CSV.

pub mod bench;
pub mod cli;
pub mod config;
pub mod convergence;
pub mod error;
pub mod report;
pub mod suites;

pub use config::{Suite, SuiteConfig};
pub use error::{CliError, Result};
pub use report::{PropertyResult, Report};
