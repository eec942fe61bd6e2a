//! Command-line front end for `wsn-core`: flat config parsing and the
//! `simulate`, `compare` and `analyze` commands.

pub mod cli;
pub mod commands;
pub mod config;
pub mod error;

pub use cli::{execute, run, Cli, Command};
pub use commands::{analyze, cmd_analyze, cmd_compare, cmd_simulate, provenance, Analysis};
pub use config::{parse_config, parse_config_text, AnalysisParams, ResolvedConfig, KEYS};
pub use error::CliError;
