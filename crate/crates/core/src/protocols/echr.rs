//! Energy-aware, coverage-preserving root selection and beacon leveling.
//!
//! The base station scores every alive node by residual energy, the share
//! of its covered points of interest that nobody else covers, and inverse
//! distance to the BS; the best-scoring node becomes the root that starts
//! the hierarchical beacon flood.

use std::collections::VecDeque;

use rand::Rng;

use crate::model::{Field, NetworkState, Point, Role};

pub const DEFAULT_TAU: f64 = 1.0;

/// Smallest distance used in the inverse-distance factor.
const MIN_BS_DISTANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EchrWeightInputs {
    pub residual_energy: f64,
    pub exclusive_coverage: usize,
    pub total_coverage: usize,
    pub dist_to_bs: f64,
    pub tau1: f64,
    pub tau2: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EchrWeight {
    pub value: f64,
    /// The node covers no point of interest; `value` is forced to zero.
    pub degenerate_coverage: bool,
}

pub fn echr_weight(inputs: &EchrWeightInputs) -> EchrWeight {
    if inputs.total_coverage == 0 {
        return EchrWeight {
            value: 0.0,
            degenerate_coverage: true,
        };
    }
    let share = inputs.exclusive_coverage as f64 / inputs.total_coverage as f64;
    let value = inputs.residual_energy.powf(inputs.tau1) * share.powf(inputs.tau2)
        / inputs.dist_to_bs.max(MIN_BS_DISTANCE);
    EchrWeight {
        value,
        degenerate_coverage: false,
    }
}

/// Uniform scatter of `count` points of interest over the field.
pub fn scatter_pois<R: Rng + ?Sized>(field: Field, count: usize, rng: &mut R) -> Vec<Point> {
    (0..count)
        .map(|_| {
            Point::new(
                rng.random::<f64>() * field.width,
                rng.random::<f64>() * field.height,
            )
        })
        .collect()
}

/// Coverage counts `(exclusive, total)` for every node; dead nodes get
/// `(0, 0)` and cover nothing.
pub fn coverage_counts(state: &NetworkState, pois: &[Point]) -> Vec<(usize, usize)> {
    let mut counts = vec![(0usize, 0usize); state.nodes.len()];
    let mut covering = Vec::new();
    for &poi in pois {
        covering.clear();
        covering.extend(
            state
                .nodes
                .iter()
                .filter(|n| n.alive && n.position.distance(poi) <= n.sensing_range)
                .map(|n| n.id),
        );
        for &id in &covering {
            counts[id].1 += 1;
        }
        if let [only] = covering[..] {
            counts[only].0 += 1;
        }
    }
    counts
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootSelection {
    pub root: usize,
    pub weight: f64,
}

/// Alive node with maximal weight, lower id on ties; `None` once the
/// network is dead.
pub fn echr_select_root(
    state: &NetworkState,
    bs: Point,
    pois: &[Point],
    tau1: f64,
    tau2: f64,
) -> Option<RootSelection> {
    let counts = coverage_counts(state, pois);
    let mut best: Option<RootSelection> = None;
    for n in state.nodes.iter().filter(|n| n.alive) {
        let (exclusive, total) = counts[n.id];
        let w = echr_weight(&EchrWeightInputs {
            residual_energy: n.residual_energy,
            exclusive_coverage: exclusive,
            total_coverage: total,
            dist_to_bs: n.position.distance(bs),
            tau1,
            tau2,
        })
        .value;
        match best {
            Some(b) if w.is_nan() || w <= b.weight => {}
            _ => {
                best = Some(RootSelection {
                    root: n.id,
                    weight: w,
                })
            }
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct LevelMap {
    /// Beacon level per node id; `None` for dead or unreachable nodes.
    pub levels: Vec<Option<u32>>,
    /// Alive nodes the beacon flood never reached.
    pub disconnected: Vec<usize>,
}

/// Breadth-first beacon flood from `root`: the root is level 0 and every
/// unlabeled alive node within `comm_range` of a level-L node is L + 1.
/// Writes levels and the root role into `state`.
pub fn echr_assign_levels(state: &mut NetworkState, root: usize, comm_range: f64) -> LevelMap {
    let n = state.nodes.len();
    let mut levels = vec![None; n];
    let mut queue = VecDeque::new();
    if state.nodes[root].alive {
        levels[root] = Some(0);
        queue.push_back(root);
    }
    while let Some(u) = queue.pop_front() {
        let next = levels[u].expect("queued nodes are labeled") + 1;
        let pu = state.nodes[u].position;
        for (v, node) in state.nodes.iter().enumerate() {
            if levels[v].is_none() && node.alive && pu.distance(node.position) <= comm_range {
                levels[v] = Some(next);
                queue.push_back(v);
            }
        }
    }
    let disconnected = (0..n)
        .filter(|&i| state.nodes[i].alive && levels[i].is_none())
        .collect();
    for (node, &level) in state.nodes.iter_mut().zip(&levels) {
        node.level = level;
    }
    if state.nodes[root].alive {
        state.nodes[root].role = Role::Root;
    }
    LevelMap {
        levels,
        disconnected,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RangedHead {
    pub position: Point,
    pub range: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RedundancyOutcome {
    pub redundant: bool,
    /// Head 1's transmission range after the check.
    pub range: f64,
}

/// Shrinks head 1's range when `node` sits inside both heads' equal ranges.
///
/// The new range is the distance to head 1's farthest member, so no member
/// is orphaned, and never more than the old range.
pub fn coverage_redundancy(
    node: Point,
    head1: RangedHead,
    head2: RangedHead,
    head1_members: &[Point],
) -> RedundancyOutcome {
    let inside_both =
        node.distance(head1.position) < head1.range && node.distance(head2.position) < head2.range;
    if !(inside_both && head1.range == head2.range) {
        return RedundancyOutcome {
            redundant: false,
            range: head1.range,
        };
    }
    let farthest = head1_members
        .iter()
        .map(|m| m.distance(head1.position))
        .fold(0.0, f64::max);
    RedundancyOutcome {
        redundant: true,
        range: farthest.min(head1.range),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inputs(q: f64, o: usize, c: usize, d: f64, t1: f64, t2: f64) -> EchrWeightInputs {
        EchrWeightInputs {
            residual_energy: q,
            exclusive_coverage: o,
            total_coverage: c,
            dist_to_bs: d,
            tau1: t1,
            tau2: t2,
        }
    }

    #[test]
    fn weight_examples() {
        assert_eq!(echr_weight(&inputs(1.0, 4, 4, 1.0, 1.0, 1.0)).value, 1.0);
        assert_eq!(echr_weight(&inputs(0.0, 4, 4, 10.0, 1.0, 1.0)).value, 0.0);
        let w = echr_weight(&inputs(0.5, 3, 4, 50.0, 2.0, 1.0)).value;
        assert!((w - 0.00375).abs() < 1e-15);
        let d = echr_weight(&inputs(0.5, 0, 0, 50.0, 1.0, 1.0));
        assert!(d.degenerate_coverage && d.value == 0.0);
    }

    #[test]
    fn lone_alive_node_is_root() {
        let pts = [
            Point::new(1.0, 1.0),
            Point::new(5.0, 5.0),
            Point::new(9.0, 9.0),
        ];
        let mut s = NetworkState::from_positions(&pts, 0.5, 0);
        s.nodes[0].alive = false;
        s.nodes[2].alive = false;
        let r = echr_select_root(&s, Point::new(0.0, 20.0), &[], 1.0, 1.0).unwrap();
        assert_eq!(r.root, 1);
        s.nodes[1].alive = false;
        assert!(echr_select_root(&s, Point::new(0.0, 20.0), &[], 1.0, 1.0).is_none());
    }

    #[test]
    fn all_within_range_are_level_one() {
        let pts = [
            Point::new(0.0, 0.0),
            Point::new(3.0, 0.0),
            Point::new(0.0, 4.0),
            Point::new(-2.0, -2.0),
        ];
        let mut s = NetworkState::from_positions(&pts, 0.5, 0);
        let m = echr_assign_levels(&mut s, 0, 10.0);
        assert_eq!(m.levels, vec![Some(0), Some(1), Some(1), Some(1)]);
        assert!(m.disconnected.is_empty());
        assert_eq!(s.nodes[0].role, Role::Root);
    }

    #[test]
    fn chain_levels_and_disconnection() {
        let pts: Vec<Point> = (0..5)
            .map(|i| Point::new(i as f64 * 9.9, 0.0))
            .chain([Point::new(500.0, 0.0)])
            .collect();
        let mut s = NetworkState::from_positions(&pts, 0.5, 0);
        let m = echr_assign_levels(&mut s, 0, 10.0);
        assert_eq!(
            &m.levels[..5],
            &[Some(0), Some(1), Some(2), Some(3), Some(4)]
        );
        assert_eq!(m.levels[5], None);
        assert_eq!(m.disconnected, vec![5]);
    }

    #[test]
    fn redundancy_cases() {
        let h1 = RangedHead {
            position: Point::new(0.0, 0.0),
            range: 40.0,
        };
        let h2 = RangedHead {
            position: Point::new(50.0, 0.0),
            range: 40.0,
        };
        let members = [Point::new(20.0, 0.0), Point::new(0.0, 12.0)];

        let out = coverage_redundancy(Point::new(-5.0, 0.0), h1, h2, &members);
        assert_eq!(
            out,
            RedundancyOutcome {
                redundant: false,
                range: 40.0
            }
        );

        let wide = RangedHead { range: 45.0, ..h2 };
        let out = coverage_redundancy(Point::new(25.0, 0.0), h1, wide, &members);
        assert_eq!(
            out,
            RedundancyOutcome {
                redundant: false,
                range: 40.0
            }
        );

        let out = coverage_redundancy(Point::new(25.0, 0.0), h1, h2, &members);
        assert!(out.redundant);
        assert_eq!(out.range, 20.0);
    }
}
