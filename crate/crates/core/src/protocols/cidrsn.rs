//! Cluster-ID routing. Clusters and the inter-cluster routing table are
//! built once; afterwards headship moves inside each cluster as a token to
//! the member with the most residual energy, and routes keep pointing at
//! cluster ids, so no advertisement or join traffic is ever sent again.

use std::collections::BTreeMap;

use super::clusters::{form_clusters, multihop_route, NextHop};
use super::election::elect_cluster_heads;
use super::multihop::relay;
use super::round::RoundRun;
use super::{RoundEngine, RoundOutcome, Scenario};
use crate::model::{NetworkState, Role};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClusterHop {
    Cluster(usize),
    BaseStation,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClusterEntry {
    /// Every node of the cluster, token holder included, ascending.
    pub members: Vec<usize>,
    pub token_holder: usize,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct CidrsnTable {
    pub clusters: BTreeMap<usize, ClusterEntry>,
    pub next_hop: BTreeMap<usize, ClusterHop>,
    formed_round: u64,
}

impl CidrsnTable {
    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }

    /// Head nodes visited from cluster `start` to the BS.
    fn head_path(&self, start: usize) -> Vec<usize> {
        let mut path = vec![self.clusters[&start].token_holder];
        let mut at = start;
        while let Some(ClusterHop::Cluster(next)) = self.next_hop.get(&at) {
            path.push(self.clusters[next].token_holder);
            at = *next;
        }
        path
    }

    fn remove_cluster(&mut self, id: usize) {
        self.clusters.remove(&id);
        let Some(bypass) = self.next_hop.remove(&id) else {
            return;
        };
        for hop in self.next_hop.values_mut() {
            if *hop == ClusterHop::Cluster(id) {
                *hop = bypass;
            }
        }
    }

    /// Drops dead nodes and clusters with no survivors.
    fn prune(&mut self, state: &NetworkState) {
        let mut empty = Vec::new();
        for (&id, entry) in &mut self.clusters {
            entry.members.retain(|&m| state.nodes[m].alive);
            if entry.members.is_empty() {
                empty.push(id);
            }
        }
        for id in empty {
            self.remove_cluster(id);
        }
    }

    /// Hands each cluster's token to its richest member; ties go to the
    /// lower id.
    fn pass_tokens(&mut self, state: &NetworkState) {
        for entry in self.clusters.values_mut() {
            let mut best = entry.members[0];
            for &m in &entry.members[1..] {
                if state.nodes[m].residual_energy > state.nodes[best].residual_energy {
                    best = m;
                }
            }
            entry.token_holder = best;
        }
    }
}

/// Forms the permanent clusters and routing table, charging the one-off
/// advertisement and join traffic to the current round.
pub fn cidrsn_init(state: &mut NetworkState, scenario: &Scenario) -> CidrsnTable {
    let formed_round = state.round;
    let mut run = match RoundRun::begin(state, scenario) {
        Ok(run) => run,
        Err(_) => return CidrsnTable::default(),
    };
    let heads = loop {
        let e = elect_cluster_heads(run.state, scenario.network.p_opt);
        if !e.heads.is_empty() {
            break e.heads;
        }
    };
    let assignment = form_clusters(run.state, &heads);
    run.signal_all_clusters(&assignment);

    let cluster_of: BTreeMap<usize, usize> =
        heads.iter().enumerate().map(|(cid, &h)| (h, cid)).collect();
    let mut clusters = BTreeMap::new();
    for (&h, &cid) in &cluster_of {
        let mut members = assignment.members_of(h);
        members.push(h);
        members.sort_unstable();
        clusters.insert(
            cid,
            ClusterEntry {
                members,
                token_holder: h,
            },
        );
    }
    let next_hop = multihop_route(&heads, scenario.network.bs_position, &run.state.positions())
        .into_iter()
        .map(|(h, hop)| {
            let hop = match hop {
                NextHop::Head(n) => ClusterHop::Cluster(cluster_of[&n]),
                NextHop::BaseStation => ClusterHop::BaseStation,
            };
            (cluster_of[&h], hop)
        })
        .collect();
    CidrsnTable {
        clusters,
        next_hop,
        formed_round,
    }
}

/// One data round over a fixed cluster table.
pub fn cidrsn_round(
    state: &mut NetworkState,
    scenario: &Scenario,
    table: &mut CidrsnTable,
) -> RoundOutcome {
    table.prune(state);
    let mut run = match RoundRun::begin(state, scenario) {
        Ok(run) => run,
        Err(terminal) => return terminal,
    };
    if run.state.round > table.formed_round {
        table.pass_tokens(run.state);
    }
    if table.is_empty() {
        run.direct_to_bs();
        return run.finish();
    }

    let mut membership = BTreeMap::new();
    for entry in table.clusters.values() {
        let h = entry.token_holder;
        for &m in &entry.members {
            let node = &mut run.state.nodes[m];
            node.cluster_id = Some(h);
            if m == h {
                node.role = Role::ClusterHead;
                node.last_head_round = Some(run.out.round);
            } else {
                membership.insert(m, h);
            }
        }
    }
    run.out.ch_count = table.clusters.len();

    let received = run.gather(&membership);
    let holders: Vec<usize> = table.clusters.values().map(|e| e.token_holder).collect();
    run.aggregate_heads(holders.iter().copied(), &received);
    let ids: Vec<usize> = table.clusters.keys().copied().collect();
    for cid in ids {
        relay(&mut run, &table.head_path(cid));
    }
    run.finish()
}

#[derive(Debug, Default, Clone)]
pub struct Cidrsn {
    table: Option<CidrsnTable>,
}

impl Cidrsn {
    pub fn table(&self) -> Option<&CidrsnTable> {
        self.table.as_ref()
    }
}

impl RoundEngine for Cidrsn {
    fn run_round(&mut self, state: &mut NetworkState, scenario: &Scenario) -> RoundOutcome {
        let table = self
            .table
            .get_or_insert_with(|| cidrsn_init(state, scenario));
        cidrsn_round(state, scenario, table)
    }
}
