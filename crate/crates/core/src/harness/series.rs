use std::fmt::Write as _;

use crate::error::Result;
use crate::model::deploy_network;
use crate::protocols::{Protocol, RoundOutcome, Scenario};

pub const CSV_HEADER: &str =
    "round,alive,dead,ch_count,pkts_to_ch,pkts_to_bs,pkts_dropped,energy_spent_j";

/// Per-round metrics of one (protocol, seed) run.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    pub protocol: Protocol,
    pub seed: u64,
    pub node_count: usize,
    pub max_rounds: u64,
    pub rounds: Vec<RoundOutcome>,
    pub initial_energy: f64,
    pub residual_energy: f64,
}

impl TimeSeries {
    pub fn energy_spent(&self) -> f64 {
        self.rounds.iter().map(|r| r.energy_spent).sum()
    }

    pub fn control_energy(&self) -> f64 {
        self.rounds.iter().map(|r| r.control_energy).sum()
    }

    pub fn packets_to_bs(&self) -> u64 {
        self.rounds.iter().map(|r| r.packets_to_bs).sum()
    }

    pub fn packets_dropped(&self) -> u64 {
        self.rounds.iter().map(|r| r.packets_dropped).sum()
    }

    pub fn packets_offered(&self) -> u64 {
        self.rounds.iter().map(|r| r.packets_offered).sum()
    }

    /// Dropped over offered transmissions; zero for an empty run.
    pub fn drop_rate(&self) -> f64 {
        let offered = self.packets_offered();
        if offered == 0 {
            0.0
        } else {
            self.packets_dropped() as f64 / offered as f64
        }
    }

    pub fn ch_count_mean(&self) -> f64 {
        if self.rounds.is_empty() {
            return 0.0;
        }
        self.rounds.iter().map(|r| r.ch_count as f64).sum::<f64>() / self.rounds.len() as f64
    }

    /// One CSV line per round under [`CSV_HEADER`].
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(64 * (self.rounds.len() + 1));
        out.push_str(CSV_HEADER);
        out.push('\n');
        for r in &self.rounds {
            writeln!(
                out,
                "{},{},{},{},{},{},{},{:.12}",
                r.round,
                r.alive_count,
                r.dead_count,
                r.ch_count,
                r.packets_to_ch,
                r.packets_to_bs,
                r.packets_dropped,
                r.energy_spent
            )
            .expect("writing to a String cannot fail");
        }
        out
    }
}

/// Steps `protocol` from a fresh deployment until every node is dead or
/// `max_rounds` rounds have run.
pub fn run_simulation(scenario: &Scenario, protocol: Protocol) -> Result<TimeSeries> {
    let mut state = deploy_network(&scenario.network)?;
    let initial_energy = state.total_energy();
    let mut engine = protocol.engine();
    let mut rounds = Vec::new();
    for _ in 0..scenario.network.max_rounds {
        let outcome = engine.run_round(&mut state, scenario);
        if outcome.terminal {
            break;
        }
        let done = outcome.alive_count == 0;
        rounds.push(outcome);
        if done {
            break;
        }
    }
    Ok(TimeSeries {
        protocol,
        seed: scenario.network.seed,
        node_count: scenario.network.node_count,
        max_rounds: scenario.network.max_rounds,
        rounds,
        initial_energy,
        residual_energy: state.total_energy(),
    })
}
