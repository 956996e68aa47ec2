//! Suite runner for the qgroup-core verification engine: configuration,
//! suites of checks and their JSON/text reports.

pub mod acceptance;
pub mod config;
pub mod output;
pub mod suite;

pub use config::{Config, ConfigError, Suite};
pub use output::{CheckRecord, Status, SuiteReport};
pub use suite::run_suite;
