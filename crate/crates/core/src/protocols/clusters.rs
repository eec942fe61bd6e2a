use std::collections::{BTreeMap, BTreeSet};

use crate::model::{NetworkState, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NextHop {
    Head(usize),
    BaseStation,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ClusterAssignment {
    pub heads: BTreeSet<usize>,
    /// Member node id to its head.
    pub membership: BTreeMap<usize, usize>,
    /// Upstream hop of every head; empty for single-hop protocols.
    pub next_hop: BTreeMap<usize, NextHop>,
    pub super_heads: Option<BTreeSet<usize>>,
}

impl ClusterAssignment {
    /// Members of `head`, ascending.
    pub fn members_of(&self, head: usize) -> Vec<usize> {
        self.membership
            .iter()
            .filter(|&(_, &h)| h == head)
            .map(|(&m, _)| m)
            .collect()
    }

    /// True when no head exists: every alive node reports straight to the BS.
    pub fn is_direct(&self) -> bool {
        self.heads.is_empty()
    }
}

/// Index of the candidate nearest to `from`; ties go to the lower id.
pub(crate) fn nearest(
    from: Point,
    candidates: impl IntoIterator<Item = (usize, Point)>,
) -> Option<usize> {
    let mut best: Option<(usize, f64)> = None;
    for (id, p) in candidates {
        let d = from.distance_sq(p);
        match best {
            Some((bid, bd)) if d > bd || (d == bd && id > bid) => {}
            _ => best = Some((id, d)),
        }
    }
    best.map(|(id, _)| id)
}

/// Attaches every alive non-head to its nearest head. With no heads the
/// assignment is empty and callers fall back to direct transmission.
pub fn form_clusters(state: &NetworkState, heads: &[usize]) -> ClusterAssignment {
    let head_set: BTreeSet<usize> = heads.iter().copied().collect();
    let mut membership = BTreeMap::new();
    if !head_set.is_empty() {
        for node in state
            .nodes
            .iter()
            .filter(|n| n.alive && !head_set.contains(&n.id))
        {
            let h = nearest(
                node.position,
                head_set.iter().map(|&h| (h, state.nodes[h].position)),
            )
            .expect("head set is non-empty");
            membership.insert(node.id, h);
        }
    }
    ClusterAssignment {
        heads: head_set,
        membership,
        next_hop: BTreeMap::new(),
        super_heads: None,
    }
}

/// Greedy relay tree toward the base station.
///
/// A head forwards to the nearest head that is strictly closer to the BS
/// and also closer to it than the BS itself; otherwise it sends straight to
/// the BS. Distance to the BS strictly decreases along every edge, so the
/// graph is acyclic.
pub fn multihop_route(heads: &[usize], bs: Point, positions: &[Point]) -> BTreeMap<usize, NextHop> {
    let mut sorted: Vec<usize> = heads.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted
        .iter()
        .map(|&h| {
            let here = positions[h];
            let to_bs = here.distance_sq(bs);
            let candidates = sorted
                .iter()
                .filter(|&&c| c != h)
                .map(|&c| (c, positions[c]))
                .filter(|&(_, p)| p.distance_sq(bs) < to_bs && here.distance_sq(p) < to_bs);
            let hop = nearest(here, candidates).map_or(NextHop::BaseStation, NextHop::Head);
            (h, hop)
        })
        .collect()
}

/// Follows `next_hop` from `start` and returns the visited heads, ending
/// with the one that delivers to the BS.
pub fn route_path(next_hop: &BTreeMap<usize, NextHop>, start: usize) -> Vec<usize> {
    let mut path = vec![start];
    let mut at = start;
    while let Some(NextHop::Head(n)) = next_hop.get(&at) {
        debug_assert!(path.len() <= next_hop.len(), "relay graph has a cycle");
        path.push(*n);
        at = *n;
    }
    path
}
