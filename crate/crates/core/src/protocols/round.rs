//! Shared per-round machinery for the clustered protocols.

use std::collections::BTreeMap;

use super::clusters::{form_clusters, ClusterAssignment};
use super::election::elect_cluster_heads;
use super::{RoundOutcome, Scenario};
use crate::model::{ChargeKind, NetworkState, Point, Role, Traffic};

pub(crate) struct RoundRun<'a> {
    pub state: &'a mut NetworkState,
    pub sc: &'a Scenario,
    pub out: RoundOutcome,
}

impl<'a> RoundRun<'a> {
    /// Starts a round, or returns the terminal outcome if nothing is alive.
    pub fn begin(state: &'a mut NetworkState, sc: &'a Scenario) -> Result<Self, RoundOutcome> {
        let alive = state.alive_count();
        if alive == 0 {
            return Err(RoundOutcome {
                round: state.round,
                alive_count: 0,
                dead_count: state.nodes.len(),
                terminal: true,
                ..Default::default()
            });
        }
        for n in state.nodes.iter_mut().filter(|n| n.alive) {
            n.role = Role::Member;
            n.cluster_id = None;
        }
        let out = RoundOutcome {
            round: state.round,
            ..Default::default()
        };
        Ok(Self { state, sc, out })
    }

    pub fn bits(&self) -> u64 {
        self.sc.network.packet_bits
    }

    fn pos(&self, id: usize) -> Point {
        self.state.nodes[id].position
    }

    fn bs(&self) -> Point {
        self.sc.network.bs_position
    }

    fn tx(&mut self, from: usize, bits: u64, distance: f64, traffic: Traffic) {
        let e = self
            .sc
            .radio
            .tx_energy(bits, distance)
            .expect("distances are non-negative");
        self.state.charge(from, ChargeKind::Transmit, traffic, e);
    }

    fn rx(&mut self, at: usize, bits: u64, traffic: Traffic) {
        let e = self.sc.radio.rx_energy(bits);
        self.state.charge(at, ChargeKind::Receive, traffic, e);
    }

    /// Sends one data packet node to node; the receiver pays only if the
    /// packet survives the channel.
    pub fn send_to_node(&mut self, from: usize, to: usize) -> bool {
        let (a, b) = (self.pos(from), self.pos(to));
        self.tx(from, self.bits(), a.distance(b), Traffic::Data);
        self.out.packets_offered += 1;
        let ok = self.sc.drop_model().delivers(&mut self.state.rng, a, b);
        if ok {
            self.rx(to, self.bits(), Traffic::Data);
        } else {
            self.out.packets_dropped += 1;
        }
        ok
    }

    pub fn send_to_bs(&mut self, from: usize) -> bool {
        let (a, b) = (self.pos(from), self.bs());
        self.tx(from, self.bits(), a.distance(b), Traffic::Data);
        self.out.packets_offered += 1;
        let ok = self.sc.drop_model().delivers(&mut self.state.rng, a, b);
        if ok {
            self.out.packets_to_bs += 1;
        } else {
            self.out.packets_dropped += 1;
        }
        ok
    }

    pub fn aggregate(&mut self, head: usize, signals: u64) {
        let e = self.sc.radio.aggregation_energy(self.bits(), signals);
        self.state
            .charge(head, ChargeKind::Aggregate, Traffic::Data, e);
    }

    /// Head advertisement sized to reach its farthest joiner, then one
    /// advertisement reception and one join request per joiner.
    pub fn signal_cluster(&mut self, head: usize, joiners: &[usize]) {
        let bits = self.sc.options.control_bits;
        if bits == 0 {
            return;
        }
        let hp = self.pos(head);
        let radius = joiners
            .iter()
            .map(|&m| hp.distance(self.pos(m)))
            .fold(0.0, f64::max);
        self.tx(head, bits, radius, Traffic::Control);
        for &m in joiners {
            let d = hp.distance(self.pos(m));
            self.rx(m, bits, Traffic::Control);
            self.tx(m, bits, d, Traffic::Control);
            self.rx(head, bits, Traffic::Control);
        }
    }

    /// Elects heads, forms clusters and marks roles. `None` when no head was
    /// elected.
    pub fn elect_and_cluster(&mut self) -> Option<ClusterAssignment> {
        let election = elect_cluster_heads(self.state, self.sc.network.p_opt);
        if election.heads.is_empty() {
            return None;
        }
        let assignment = form_clusters(self.state, &election.heads);
        for &h in &assignment.heads {
            let n = &mut self.state.nodes[h];
            n.role = Role::ClusterHead;
            n.cluster_id = Some(h);
        }
        for (&m, &h) in &assignment.membership {
            self.state.nodes[m].cluster_id = Some(h);
        }
        self.out.ch_count = assignment.heads.len();
        Some(assignment)
    }

    pub fn signal_all_clusters(&mut self, assignment: &ClusterAssignment) {
        for &h in &assignment.heads {
            let members = assignment.members_of(h);
            self.signal_cluster(h, &members);
        }
    }

    /// Members send one packet each to their head; returns packets received
    /// per head.
    pub fn gather(&mut self, membership: &BTreeMap<usize, usize>) -> BTreeMap<usize, u64> {
        let mut received = BTreeMap::new();
        for (&m, &h) in membership {
            let slot = received.entry(h).or_insert(0);
            if self.send_to_node(m, h) {
                *slot += 1;
                self.out.packets_to_ch += 1;
            }
        }
        received
    }

    /// Each head fuses what it received plus its own reading.
    pub fn aggregate_heads(
        &mut self,
        heads: impl IntoIterator<Item = usize>,
        received: &BTreeMap<usize, u64>,
    ) {
        for h in heads {
            let r = received.get(&h).copied().unwrap_or(0);
            self.aggregate(h, r + 1);
        }
    }

    /// Fallback when no head exists: every alive node reports directly.
    pub fn direct_to_bs(&mut self) {
        for id in self.state.alive_ids() {
            self.send_to_bs(id);
        }
    }

    pub fn finish(self) -> RoundOutcome {
        let RoundRun { state, mut out, .. } = self;
        let round = state.round;
        out.energy_spent = state.charges().total_for(round);
        out.control_energy = state.charges().traffic_total_for(round, Traffic::Control);
        state.settle_deaths();
        out.alive_count = state.alive_count();
        out.dead_count = state.nodes.len() - out.alive_count;
        state.round += 1;
        out
    }
}
