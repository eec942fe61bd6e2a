//! Multi-round, multi-seed experiment driver and comparison reports.

pub mod compare;
pub mod metrics;
pub mod series;

pub use compare::{
    compare_protocols, median, run_matrix, ComparisonReport, ProtocolSummary, RunSummary,
};
pub use metrics::{network_lifetime, stability_period, Milestone};
pub use series::{run_simulation, TimeSeries, CSV_HEADER};

/// Seeds used when none are given.
pub const DEFAULT_SEEDS: std::ops::RangeInclusive<u64> = 1..=30;
