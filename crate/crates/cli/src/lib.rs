//! Config-driven driver for the `skewgoppa` constructions.

pub mod commands;
pub mod config;

pub use commands::{cmd_build, cmd_distance, cmd_params, cmd_verify, Built, CliError};
pub use config::{parse_config, ConfigError, FactorSpec, Family, InstanceConfig};
