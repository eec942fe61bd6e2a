use thiserror::Error;

/// A configuration value that violates its documented constraint.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("invalid configuration: `{field}` = {value} ({constraint})")]
pub struct ConfigError {
    pub field: &'static str,
    pub value: String,
    pub constraint: &'static str,
}

impl ConfigError {
    pub fn new(field: &'static str, value: impl ToString, constraint: &'static str) -> Self {
        Self {
            field,
            value: value.to_string(),
            constraint,
        }
    }
}

/// An argument outside the domain of a model function.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("domain error: `{argument}` = {value} ({constraint})")]
pub struct DomainError {
    pub argument: &'static str,
    pub value: f64,
    pub constraint: &'static str,
}

impl DomainError {
    pub fn new(argument: &'static str, value: f64, constraint: &'static str) -> Self {
        Self {
            argument,
            value,
            constraint,
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Config(#[from] ConfigError),

    #[error(transparent)]
    Domain(#[from] DomainError),

    #[error("unknown protocol `{0}` (expected one of leach, multihop, multilevel, cidrsn)")]
    UnknownProtocol(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
