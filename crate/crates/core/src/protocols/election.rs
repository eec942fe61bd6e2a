//! Randomized head rotation: each eligible node self-elects with the
//! rotation threshold, and a node that served during the current epoch sits
//! out until the epoch ends.

use rand::Rng;

use crate::model::NetworkState;

/// Rounds per epoch, `ceil(1/p)`.
pub fn epoch_length(p: f64) -> u64 {
    ((1.0 / p).ceil() as u64).max(1)
}

/// `p / (1 - p * (round mod epoch))`, capped at 1.
pub fn rotation_threshold(p: f64, round: u64) -> f64 {
    let phase = (round % epoch_length(p)) as f64;
    (p / (1.0 - p * phase)).min(1.0)
}

/// Whether `node` may stand for election in `round`.
pub fn is_eligible(last_head_round: Option<u64>, round: u64, p: f64) -> bool {
    let epoch = epoch_length(p);
    match last_head_round {
        None => true,
        Some(r) => r / epoch < round / epoch,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Election {
    /// Elected node ids in ascending order.
    pub heads: Vec<usize>,
    /// Set when no node was alive to stand.
    pub end_of_network: bool,
}

/// Runs one election round, drawing from the state's generator and
/// recording the winners' service round.
pub fn elect_cluster_heads(state: &mut NetworkState, p: f64) -> Election {
    let round = state.round;
    let threshold = rotation_threshold(p, round);
    let mut heads = Vec::new();
    let mut any_alive = false;
    for i in 0..state.nodes.len() {
        let node = &state.nodes[i];
        if !node.alive {
            continue;
        }
        any_alive = true;
        if !is_eligible(node.last_head_round, round, p) {
            continue;
        }
        if state.rng.random::<f64>() < threshold {
            heads.push(i);
        }
    }
    for &h in &heads {
        state.nodes[h].last_head_round = Some(round);
    }
    Election {
        heads,
        end_of_network: !any_alive,
    }
}
