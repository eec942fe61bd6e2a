//! Independent brute-force oracles shared by the integration tests. None of
//! these call into the implementation paths they check.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wsn_core::model::{NetworkState, Point};
use wsn_core::protocols::NextHop;

/// Random instance: up to `max_n` nodes on a 100 x 100 field, random
/// energies, roughly a tenth of them dead.
pub fn random_state(seed: u64, max_n: usize) -> NetworkState {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(2..=max_n);
    let pts: Vec<Point> = (0..n)
        .map(|_| Point::new(rng.random::<f64>() * 100.0, rng.random::<f64>() * 100.0))
        .collect();
    let mut s = NetworkState::from_positions(&pts, 0.5, seed);
    for node in &mut s.nodes {
        node.residual_energy = rng.random_range(0.01..0.5);
        node.sensing_range = rng.random_range(5.0..25.0);
        if rng.random::<f64>() < 0.1 {
            node.alive = false;
            node.residual_energy = 0.0;
        }
    }
    if s.alive_count() == 0 {
        s.nodes[0].alive = true;
        s.nodes[0].residual_energy = 0.3;
    }
    s
}

pub fn random_heads(seed: u64, s: &NetworkState) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
    let alive = s.alive_ids();
    let k = rng.random_range(1..=alive.len().min(10));
    let mut heads: Vec<usize> = Vec::new();
    while heads.len() < k {
        let h = alive[rng.random_range(0..alive.len())];
        if !heads.contains(&h) {
            heads.push(h);
        }
    }
    heads
}

pub fn dist(a: Point, b: Point) -> f64 {
    ((a.x - b.x).powi(2) + (a.y - b.y).powi(2)).sqrt()
}

/// O(n k) scan: each alive non-head to its closest head, lower id on ties.
pub fn nearest_head_oracle(s: &NetworkState, heads: &[usize]) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for node in &s.nodes {
        if !node.alive || heads.contains(&node.id) {
            continue;
        }
        let mut all: Vec<(f64, usize)> = heads
            .iter()
            .map(|&h| (dist(node.position, s.nodes[h].position), h))
            .collect();
        all.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then(a.1.cmp(&b.1)));
        out.insert(node.id, all[0].1);
    }
    out
}

/// Exhaustive search over every head closer to the BS.
pub fn relay_oracle(heads: &[usize], bs: Point, pos: &[Point]) -> BTreeMap<usize, NextHop> {
    let mut out = BTreeMap::new();
    for &h in heads {
        let own = dist(pos[h], bs);
        let mut best: Option<(f64, usize)> = None;
        for &c in heads {
            if c == h {
                continue;
            }
            let hop = dist(pos[h], pos[c]);
            if dist(pos[c], bs) < own && hop < own {
                let better = match best {
                    None => true,
                    Some((bd, bid)) => hop < bd || (hop == bd && c < bid),
                };
                if better {
                    best = Some((hop, c));
                }
            }
        }
        out.insert(
            h,
            best.map_or(NextHop::BaseStation, |(_, c)| NextHop::Head(c)),
        );
    }
    out
}

pub fn random_pois(seed: u64, count: usize) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(31).wrapping_add(7));
    (0..count)
        .map(|_| Point::new(rng.random::<f64>() * 100.0, rng.random::<f64>() * 100.0))
        .collect()
}

/// Evaluates the root weight of every alive node from explicit coverage
/// sets and returns the argmax (lowest id on ties).
pub fn root_oracle(
    s: &NetworkState,
    bs: Point,
    pois: &[Point],
    tau1: f64,
    tau2: f64,
) -> Option<usize> {
    let cover: Vec<BTreeSet<usize>> = s
        .nodes
        .iter()
        .map(|n| {
            if !n.alive {
                return BTreeSet::new();
            }
            (0..pois.len())
                .filter(|&i| dist(n.position, pois[i]) <= n.sensing_range)
                .collect()
        })
        .collect();
    let mut best: Option<(f64, usize)> = None;
    for n in s.nodes.iter().filter(|n| n.alive) {
        let c = &cover[n.id];
        let others: BTreeSet<usize> = cover
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != n.id)
            .flat_map(|(_, set)| set.iter().copied())
            .collect();
        let o = c.difference(&others).count();
        let w = if c.is_empty() {
            0.0
        } else {
            n.residual_energy.powf(tau1)
                * (o as f64 / c.len() as f64).powf(tau2)
                * (1.0 / dist(n.position, bs))
        };
        if best.is_none_or(|(bw, _)| w > bw) {
            best = Some((w, n.id));
        }
    }
    best.map(|(_, id)| id)
}

/// Level labels by repeated relaxation until a fixed point, no queue.
pub fn levels_oracle(s: &NetworkState, root: usize, range: f64) -> Vec<Option<u32>> {
    let n = s.nodes.len();
    let mut lv: Vec<Option<u32>> = vec![None; n];
    if !s.nodes[root].alive {
        return lv;
    }
    lv[root] = Some(0);
    loop {
        let mut changed = false;
        for v in 0..n {
            if !s.nodes[v].alive {
                continue;
            }
            for u in 0..n {
                if let Some(lu) = lv[u] {
                    if dist(s.nodes[u].position, s.nodes[v].position) <= range
                        && lv[v].is_none_or(|lvv| lu + 1 < lvv)
                    {
                        lv[v] = Some(lu + 1);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return lv;
        }
    }
}

/// Exact pmf of the head count by enumerating all 2^n election outcomes.
pub fn enumerate_pmf(n: usize, p: f64) -> Vec<f64> {
    let mut pmf = vec![0.0; n + 1];
    for mask in 0u32..(1u32 << n) {
        let k = mask.count_ones() as usize;
        let mut prob = 1.0;
        for bit in 0..n {
            prob *= if mask >> bit & 1 == 1 { p } else { 1.0 - p };
        }
        pmf[k] += prob;
    }
    pmf
}

/// Mean center-to-point distance of a square of the given side by plain
/// Monte Carlo.
pub fn mc_center_distance(side: f64, samples: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut acc = 0.0;
    for _ in 0..samples {
        let x = (rng.random::<f64>() - 0.5) * side;
        let y = (rng.random::<f64>() - 0.5) * side;
        acc += (x * x + y * y).sqrt();
    }
    acc / samples as f64
}
