//! Network geometry, node state, deployment and the two energy models.

pub mod config;
pub mod geometry;
pub mod ledger;
pub mod link;
pub mod node;
pub mod radio;

pub use config::NetworkConfig;
pub use geometry::{Field, Point};
pub use ledger::{Charge, ChargeKind, ChargeLog, Traffic};
pub use link::PerBitLinkParams;
pub use node::{deploy_network, NetworkState, NodeState, Role, DEFAULT_SENSING_RANGE};
pub use radio::RadioEnergyParams;
