//! Command-line front end: config parsing, instance loading and reports.

pub mod config;
pub mod load;
pub mod run;

pub use config::{ActionSpec, Caps, Command, ExperimentConfig, OutputFormat, SetSpec};
pub use run::{run, Report};
