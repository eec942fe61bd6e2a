//! Round-stepped protocol engines over a [`NetworkState`].
//!
//! LEACH, multi-hop LEACH and two-tier LEACH share the elect / cluster /
//! gather / aggregate skeleton in `round` and differ only in how aggregated
//! data travels from the heads to the base station. CIDRSN keeps its
//! clusters and routes fixed after the first round and rotates headship as a
//! token. ECHR root selection and leveling live in [`echr`].

pub mod channel;
pub mod cidrsn;
pub mod clusters;
pub mod echr;
pub mod election;
pub mod leach;
pub mod multihop;
pub mod multilevel;
mod round;

use std::fmt;
use std::str::FromStr;

use crate::error::{ConfigError, Error};
use crate::model::{NetworkConfig, NetworkState, RadioEnergyParams};

pub use channel::DropModel;
pub use cidrsn::{cidrsn_init, cidrsn_round, Cidrsn, CidrsnTable};
pub use clusters::{form_clusters, multihop_route, route_path, ClusterAssignment, NextHop};
pub use election::{elect_cluster_heads, Election};
pub use leach::run_leach_round;
pub use multihop::run_multihop_round;
pub use multilevel::{elect_super_heads, run_multilevel_round};

pub const DEFAULT_CONTROL_BITS: u64 = 200;

/// Knobs shared by the LEACH family that the network description does not
/// carry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProtocolOptions {
    /// Size of advertisement and join messages.
    pub control_bits: u64,
    /// Super-head probability for the two-tier protocol; `None` uses `p_opt`.
    pub p2: Option<f64>,
    pub drop_max: f64,
    /// Drop-model reference distance; `None` derives it from the layout.
    pub drop_ref: Option<f64>,
}

impl Default for ProtocolOptions {
    fn default() -> Self {
        Self {
            control_bits: DEFAULT_CONTROL_BITS,
            p2: None,
            drop_max: channel::DEFAULT_DROP_MAX,
            drop_ref: None,
        }
    }
}

/// Everything a round engine needs besides the mutable network.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub network: NetworkConfig,
    pub radio: RadioEnergyParams,
    pub options: ProtocolOptions,
    drop: DropModel,
}

impl Scenario {
    pub fn new(
        network: NetworkConfig,
        radio: RadioEnergyParams,
        options: ProtocolOptions,
    ) -> Result<Self, ConfigError> {
        network.validate()?;
        radio.validate()?;
        if let Some(p2) = options.p2 {
            if !(p2 > 0.0 && p2 <= 1.0) {
                return Err(ConfigError::new("p2", p2, "must satisfy 0 < p2 <= 1"));
            }
        }
        let drop = DropModel::for_config(&network, options.drop_max, options.drop_ref)?;
        Ok(Self {
            network,
            radio,
            options,
            drop,
        })
    }

    pub fn drop_model(&self) -> &DropModel {
        &self.drop
    }

    pub fn p2(&self) -> f64 {
        self.options.p2.unwrap_or(self.network.p_opt)
    }

    /// Replaces the seed, keeping everything else.
    pub fn with_seed(&self, seed: u64) -> Self {
        let mut s = self.clone();
        s.network.seed = seed;
        s
    }
}

impl Default for Scenario {
    fn default() -> Self {
        Self::new(
            NetworkConfig::default(),
            RadioEnergyParams::default(),
            ProtocolOptions::default(),
        )
        .expect("defaults are valid")
    }
}

/// Per-round counters.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RoundOutcome {
    pub round: u64,
    pub ch_count: usize,
    pub packets_to_ch: u64,
    pub packets_to_bs: u64,
    pub packets_dropped: u64,
    /// Over-the-air data transmissions attempted.
    pub packets_offered: u64,
    pub alive_count: usize,
    pub dead_count: usize,
    pub energy_spent: f64,
    /// Portion of `energy_spent` paid for advertisements and joins.
    pub control_energy: f64,
    /// No node was alive when the round started.
    pub terminal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Protocol {
    Leach,
    MultiHop,
    MultiLevel,
    Cidrsn,
}

impl Protocol {
    pub const ALL: [Protocol; 4] = [
        Protocol::Leach,
        Protocol::MultiHop,
        Protocol::MultiLevel,
        Protocol::Cidrsn,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Protocol::Leach => "leach",
            Protocol::MultiHop => "multihop",
            Protocol::MultiLevel => "multilevel",
            Protocol::Cidrsn => "cidrsn",
        }
    }

    pub fn engine(self) -> Box<dyn RoundEngine> {
        match self {
            Protocol::Leach => Box::new(leach::Leach),
            Protocol::MultiHop => Box::new(multihop::MultiHop),
            Protocol::MultiLevel => Box::new(multilevel::MultiLevel),
            Protocol::Cidrsn => Box::new(Cidrsn::default()),
        }
    }
}

impl fmt::Display for Protocol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Protocol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Protocol::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownProtocol(s.to_string()))
    }
}

/// A protocol that advances the network by one round.
pub trait RoundEngine: Send {
    fn run_round(&mut self, state: &mut NetworkState, scenario: &Scenario) -> RoundOutcome;
}
