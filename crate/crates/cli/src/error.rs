use std::io;
use std::path::PathBuf;

use thiserror::Error;
use wsn_core::{ConfigError, DomainError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] ConfigError),

    #[error("unknown config key `{key}` in {origin}")]
    UnknownKey { key: String, origin: String },

    #[error("{origin}: expected `key = value`, got `{text}`")]
    Syntax { origin: String, text: String },

    #[error("{0}")]
    Usage(String),

    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },

    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },

    #[error(transparent)]
    Domain(#[from] DomainError),

    #[error(transparent)]
    Core(#[from] wsn_core::Error),
}

impl CliError {
    /// 1 for usage and configuration problems, 2 for failures while running.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_)
            | CliError::UnknownKey { .. }
            | CliError::Syntax { .. }
            | CliError::Usage(_)
            | CliError::Read { .. } => 1,
            CliError::Core(wsn_core::Error::Config(_))
            | CliError::Core(wsn_core::Error::UnknownProtocol(_)) => 1,
            CliError::Write { .. } | CliError::Domain(_) | CliError::Core(_) => 2,
        }
    }
}
