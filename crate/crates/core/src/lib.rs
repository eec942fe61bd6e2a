//! Deterministic simulator and analytics for clustered wireless sensor
//! network routing: LEACH, multi-hop LEACH, two-tier LEACH, cluster-ID
//! routing and energy-aware root selection.
//!
//! Every random draw comes from a seeded ChaCha generator owned by the
//! [`model::NetworkState`], so a run is a pure function of its
//! configuration.

pub mod analytics;
pub mod error;
pub mod harness;
pub mod model;
pub mod protocols;

pub use error::{ConfigError, DomainError, Error, Result};
