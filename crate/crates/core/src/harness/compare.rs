use std::fmt::Write as _;

use super::metrics::{network_lifetime, stability_period, Milestone};
use super::series::{run_simulation, TimeSeries};
use crate::error::Result;
use crate::protocols::{Protocol, Scenario};

/// Scalars extracted from one run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunSummary {
    pub seed: u64,
    pub stability: Milestone,
    pub lifetime: Milestone,
    pub packets_to_bs: u64,
    pub packets_dropped: u64,
    pub packets_offered: u64,
    pub drop_rate: f64,
    pub ch_count_mean: f64,
    pub energy_spent: f64,
    pub control_energy: f64,
}

impl RunSummary {
    pub fn from_series(ts: &TimeSeries) -> Self {
        Self {
            seed: ts.seed,
            stability: stability_period(ts),
            lifetime: network_lifetime(ts),
            packets_to_bs: ts.packets_to_bs(),
            packets_dropped: ts.packets_dropped(),
            packets_offered: ts.packets_offered(),
            drop_rate: ts.drop_rate(),
            ch_count_mean: ts.ch_count_mean(),
            energy_spent: ts.energy_spent(),
            control_energy: ts.control_energy(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProtocolSummary {
    pub protocol: Protocol,
    /// One entry per seed, in seed-list order.
    pub runs: Vec<RunSummary>,
    pub stability_median: f64,
    pub lifetime_median: f64,
    pub packets_to_bs_total: u64,
    pub packets_dropped_total: u64,
    pub packets_offered_total: u64,
    pub drop_rate_median: f64,
    pub ch_count_mean: f64,
}

/// Median of the values; the mean of the middle pair for even counts.
pub fn median(values: &[f64]) -> f64 {
    assert!(!values.is_empty(), "median of nothing");
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let mid = v.len() / 2;
    if v.len() % 2 == 1 {
        v[mid]
    } else {
        (v[mid - 1] + v[mid]) / 2.0
    }
}

impl ProtocolSummary {
    pub fn from_runs(protocol: Protocol, runs: Vec<RunSummary>) -> Self {
        let col = |f: fn(&RunSummary) -> f64| runs.iter().map(f).collect::<Vec<_>>();
        Self {
            protocol,
            stability_median: median(&col(|r| r.stability.round as f64)),
            lifetime_median: median(&col(|r| r.lifetime.round as f64)),
            packets_to_bs_total: runs.iter().map(|r| r.packets_to_bs).sum(),
            packets_dropped_total: runs.iter().map(|r| r.packets_dropped).sum(),
            packets_offered_total: runs.iter().map(|r| r.packets_offered).sum(),
            drop_rate_median: median(&col(|r| r.drop_rate)),
            ch_count_mean: col(|r| r.ch_count_mean).iter().sum::<f64>() / runs.len() as f64,
            runs,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub seeds: Vec<u64>,
    pub protocols: Vec<ProtocolSummary>,
}

impl ComparisonReport {
    pub fn get(&self, protocol: Protocol) -> Option<&ProtocolSummary> {
        self.protocols.iter().find(|p| p.protocol == protocol)
    }

    /// `median(a) / median(b)` for the chosen field.
    pub fn median_ratio(
        &self,
        a: Protocol,
        b: Protocol,
        field: fn(&ProtocolSummary) -> f64,
    ) -> Option<f64> {
        Some(field(self.get(a)?) / field(self.get(b)?))
    }

    /// Fraction of seeds on which `key` strictly increases along `chain`.
    pub fn ordering_fraction(
        &self,
        chain: &[Protocol],
        key: fn(&RunSummary) -> f64,
    ) -> Option<f64> {
        let summaries: Vec<&ProtocolSummary> =
            chain.iter().map(|&p| self.get(p)).collect::<Option<_>>()?;
        let hits = (0..self.seeds.len())
            .filter(|&i| {
                summaries
                    .windows(2)
                    .all(|w| key(&w[0].runs[i]) < key(&w[1].runs[i]))
            })
            .count();
        Some(hits as f64 / self.seeds.len() as f64)
    }

    pub fn runs_csv(&self) -> String {
        let mut out = String::from(
            "protocol,seed,stability,stability_reached,lifetime,lifetime_reached,pkts_to_bs,pkts_dropped,pkts_offered,drop_rate,ch_count_mean,energy_spent_j\n",
        );
        for p in &self.protocols {
            for r in &p.runs {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{:.9},{:.6},{:.12}",
                    p.protocol,
                    r.seed,
                    r.stability.round,
                    r.stability.reached,
                    r.lifetime.round,
                    r.lifetime.reached,
                    r.packets_to_bs,
                    r.packets_dropped,
                    r.packets_offered,
                    r.drop_rate,
                    r.ch_count_mean,
                    r.energy_spent
                )
                .expect("writing to a String cannot fail");
            }
        }
        out
    }

    pub fn summary_csv(&self) -> String {
        let mut out = String::from(
            "protocol,stability_median,lifetime_median,pkts_to_bs_total,pkts_dropped_total,pkts_offered_total,drop_rate_median,ch_count_mean\n",
        );
        for p in &self.protocols {
            writeln!(
                out,
                "{},{},{},{},{},{},{:.9},{:.6}",
                p.protocol,
                p.stability_median,
                p.lifetime_median,
                p.packets_to_bs_total,
                p.packets_dropped_total,
                p.packets_offered_total,
                p.drop_rate_median,
                p.ch_count_mean
            )
            .expect("writing to a String cannot fail");
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let first = self.seeds.first().copied().unwrap_or(0);
        let last = self.seeds.last().copied().unwrap_or(0);
        writeln!(
            out,
            "protocol comparison over {} seeds ({first}..{last})",
            self.seeds.len()
        )
        .unwrap();
        writeln!(out).unwrap();
        writeln!(
            out,
            "{:<11} {:>10} {:>10} {:>12} {:>10} {:>9}",
            "protocol", "stability", "lifetime", "pkts_to_bs", "drop_rate", "mean_chs"
        )
        .unwrap();
        for p in &self.protocols {
            writeln!(
                out,
                "{:<11} {:>10.1} {:>10.1} {:>12} {:>10.5} {:>9.3}",
                p.protocol.name(),
                p.stability_median,
                p.lifetime_median,
                p.packets_to_bs_total,
                p.drop_rate_median,
                p.ch_count_mean
            )
            .unwrap();
        }
        if let Some(base) = self.get(Protocol::Leach) {
            writeln!(out).unwrap();
            writeln!(out, "median ratios vs leach").unwrap();
            for p in self
                .protocols
                .iter()
                .filter(|p| p.protocol != Protocol::Leach)
            {
                writeln!(
                    out,
                    "  {:<11} stability x{:.3}  lifetime x{:.3}",
                    p.protocol.name(),
                    p.stability_median / base.stability_median,
                    p.lifetime_median / base.lifetime_median
                )
                .unwrap();
            }
        }
        out
    }
}

/// Runs every (protocol, seed) pair and aggregates per protocol. Runs are
/// spread over threads; results are folded in (protocol, seed) order.
pub fn compare_protocols(
    scenario: &Scenario,
    protocols: &[Protocol],
    seeds: &[u64],
) -> Result<ComparisonReport> {
    let runs = run_matrix(scenario, protocols, seeds)?;
    let summaries = protocols
        .iter()
        .zip(runs)
        .map(|(&p, series)| {
            ProtocolSummary::from_runs(p, series.iter().map(RunSummary::from_series).collect())
        })
        .collect();
    Ok(ComparisonReport {
        seeds: seeds.to_vec(),
        protocols: summaries,
    })
}

/// Full time series for every pair, indexed `[protocol][seed]`.
pub fn run_matrix(
    scenario: &Scenario,
    protocols: &[Protocol],
    seeds: &[u64],
) -> Result<Vec<Vec<TimeSeries>>> {
    let jobs: Vec<(usize, usize)> = (0..protocols.len())
        .flat_map(|p| (0..seeds.len()).map(move |s| (p, s)))
        .collect();
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(jobs.len().max(1));
    let chunk = jobs.len().div_ceil(workers).max(1);
    let results: Vec<Result<TimeSeries>> = std::thread::scope(|scope| {
        let handles: Vec<_> = jobs
            .chunks(chunk)
            .map(|batch| {
                scope.spawn(move || {
                    batch
                        .iter()
                        .map(|&(p, s)| run_simulation(&scenario.with_seed(seeds[s]), protocols[p]))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("simulation thread panicked"))
            .collect()
    });
    let mut series = Vec::with_capacity(protocols.len());
    let mut it = results.into_iter();
    for _ in protocols {
        let row = it.by_ref().take(seeds.len()).collect::<Result<Vec<_>>>()?;
        series.push(row);
    }
    Ok(series)
}
