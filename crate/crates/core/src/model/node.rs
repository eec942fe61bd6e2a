use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::config::NetworkConfig;
use super::geometry::Point;
use super::ledger::{Charge, ChargeKind, ChargeLog, Traffic};
use crate::error::ConfigError;

pub const DEFAULT_SENSING_RANGE: f64 = 15.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Role {
    #[default]
    Member,
    ClusterHead,
    SuperHead,
    Root,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NodeState {
    pub id: usize,
    pub position: Point,
    pub residual_energy: f64,
    pub alive: bool,
    pub role: Role,
    /// Head this node reports to; a head points at itself (or its parent
    /// super-head in the two-tier protocol).
    pub cluster_id: Option<usize>,
    pub level: Option<u32>,
    pub sensing_range: f64,
    /// Round in which the node last served as cluster head.
    pub last_head_round: Option<u64>,
}

impl NodeState {
    /// Rounds since the node last served as head, if ever.
    pub fn rounds_since_head(&self, round: u64) -> Option<u64> {
        self.last_head_round.map(|r| round.saturating_sub(r))
    }
}

#[derive(Debug, Clone)]
pub struct NetworkState {
    pub nodes: Vec<NodeState>,
    pub round: u64,
    pub(crate) rng: ChaCha8Rng,
    charges: ChargeLog,
}

/// Places `node_count` nodes uniformly at random over the field.
///
/// The result is a pure function of `config`: the same seed yields the
/// same positions bit for bit.
pub fn deploy_network(config: &NetworkConfig) -> Result<NetworkState, ConfigError> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let nodes = (0..config.node_count)
        .map(|id| {
            let x = rng.random::<f64>() * config.field_width;
            let y = rng.random::<f64>() * config.field_height;
            NodeState {
                id,
                position: Point::new(x, y),
                residual_energy: config.initial_energy,
                alive: true,
                role: Role::Member,
                cluster_id: None,
                level: None,
                sensing_range: DEFAULT_SENSING_RANGE,
                last_head_round: None,
            }
        })
        .collect();
    Ok(NetworkState {
        nodes,
        round: 0,
        rng,
        charges: ChargeLog::default(),
    })
}

impl NetworkState {
    /// Builds a state from explicit positions; used for hand-built topologies.
    pub fn from_positions(positions: &[Point], initial_energy: f64, seed: u64) -> Self {
        let nodes = positions
            .iter()
            .enumerate()
            .map(|(id, &position)| NodeState {
                id,
                position,
                residual_energy: initial_energy,
                alive: initial_energy > 0.0,
                role: Role::Member,
                cluster_id: None,
                level: None,
                sensing_range: DEFAULT_SENSING_RANGE,
                last_head_round: None,
            })
            .collect();
        Self {
            nodes,
            round: 0,
            rng: ChaCha8Rng::seed_from_u64(seed),
            charges: ChargeLog::default(),
        }
    }

    pub fn alive_ids(&self) -> Vec<usize> {
        self.nodes
            .iter()
            .filter(|n| n.alive)
            .map(|n| n.id)
            .collect()
    }

    pub fn alive_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.alive).count()
    }

    pub fn total_energy(&self) -> f64 {
        self.nodes.iter().map(|n| n.residual_energy).sum()
    }

    pub fn positions(&self) -> Vec<Point> {
        self.nodes.iter().map(|n| n.position).collect()
    }

    pub fn rng_mut(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn charges(&self) -> &ChargeLog {
        &self.charges
    }

    /// Clears per-round election history so the next election behaves like
    /// the first round of a fresh epoch.
    pub fn reset_epoch(&mut self) {
        self.round = 0;
        for n in &mut self.nodes {
            n.last_head_round = None;
        }
    }

    /// Draws `joules` from `node`'s battery, clamping at zero.
    ///
    /// Returns the energy actually drawn. Dead nodes are never charged; a
    /// node exhausted mid-round keeps `alive` until [`Self::settle_deaths`].
    pub fn charge(&mut self, node: usize, kind: ChargeKind, traffic: Traffic, joules: f64) -> f64 {
        let n = &mut self.nodes[node];
        let applied = if n.alive {
            joules.min(n.residual_energy).max(0.0)
        } else {
            0.0
        };
        n.residual_energy -= applied;
        if n.residual_energy < 0.0 {
            n.residual_energy = 0.0;
        }
        self.charges.push(
            self.round,
            Charge {
                node,
                kind,
                traffic,
                requested: joules,
                applied,
            },
        );
        applied
    }

    /// Marks every exhausted node dead; returns how many died.
    pub fn settle_deaths(&mut self) -> usize {
        let mut died = 0;
        for n in &mut self.nodes {
            if n.alive && n.residual_energy <= 0.0 {
                n.alive = false;
                n.role = Role::Member;
                n.cluster_id = None;
                died += 1;
            }
        }
        died
    }
}
