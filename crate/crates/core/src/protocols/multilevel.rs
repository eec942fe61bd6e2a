use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;

use super::clusters::nearest;
use super::round::RoundRun;
use super::{RoundEngine, RoundOutcome, Scenario};
use crate::model::{NetworkState, Role};

/// Picks second-tier heads among `heads`, each with probability `p2`,
/// redrawing until at least one wins. `p2 >= 1` promotes every head without
/// consuming randomness.
pub fn elect_super_heads<R: Rng + ?Sized>(
    heads: &[usize],
    p2: f64,
    rng: &mut R,
) -> BTreeSet<usize> {
    if heads.is_empty() {
        return BTreeSet::new();
    }
    if p2 >= 1.0 {
        return heads.iter().copied().collect();
    }
    loop {
        let picked: BTreeSet<usize> = heads
            .iter()
            .copied()
            .filter(|_| rng.random::<f64>() < p2)
            .collect();
        if !picked.is_empty() {
            return picked;
        }
    }
}

/// Two-tier LEACH: heads form clusters of heads around super-heads, and
/// only super-heads talk to the base station. Aggregation happens at both
/// tiers.
pub fn run_multilevel_round(state: &mut NetworkState, scenario: &Scenario) -> RoundOutcome {
    let mut run = match RoundRun::begin(state, scenario) {
        Ok(run) => run,
        Err(terminal) => return terminal,
    };
    let Some(mut assignment) = run.elect_and_cluster() else {
        run.direct_to_bs();
        return run.finish();
    };
    let heads: Vec<usize> = assignment.heads.iter().copied().collect();
    let supers = elect_super_heads(&heads, scenario.p2(), &mut run.state.rng);

    // level-1 head -> super-head
    let mut parent = BTreeMap::new();
    for &h in heads.iter().filter(|h| !supers.contains(h)) {
        let from = run.state.nodes[h].position;
        let s = nearest(
            from,
            supers.iter().map(|&s| (s, run.state.nodes[s].position)),
        )
        .expect("at least one super-head");
        parent.insert(h, s);
        run.state.nodes[h].cluster_id = Some(s);
    }
    for &s in &supers {
        run.state.nodes[s].role = Role::SuperHead;
    }
    assignment.super_heads = Some(supers.clone());

    run.signal_all_clusters(&assignment);
    for &s in &supers {
        let joiners: Vec<usize> = parent
            .iter()
            .filter(|&(_, &p)| p == s)
            .map(|(&h, _)| h)
            .collect();
        if !joiners.is_empty() {
            run.signal_cluster(s, &joiners);
        }
    }

    let received = run.gather(&assignment.membership);
    run.aggregate_heads(heads.iter().copied(), &received);

    let upper = run.gather(&parent);
    for &s in &supers {
        // a super-head with no level-1 packets forwards its own aggregate unchanged
        if let Some(&r) = upper.get(&s) {
            if r > 0 {
                run.aggregate(s, r + 1);
            }
        }
    }
    for &s in &supers {
        run.send_to_bs(s);
    }
    run.finish()
}

#[derive(Debug, Default, Clone, Copy)]
pub struct MultiLevel;

impl RoundEngine for MultiLevel {
    fn run_round(&mut self, state: &mut NetworkState, scenario: &Scenario) -> RoundOutcome {
        run_multilevel_round(state, scenario)
    }
}
