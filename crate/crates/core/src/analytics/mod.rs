//! Closed-form cluster-head statistics, cluster geometry and the optimal
//! cluster count.

pub mod clusters;
pub mod kopt;
pub mod pmf;
pub mod quadrature;

pub use clusters::{expected_dist_to_ch, expected_members, mean_center_distance};
pub use kopt::{k_opt, Kopt, KoptInputs, KOPT_CONSTANT};
pub use pmf::{
    ch_count_pmf, ch_stats, empirical_distribution, total_variation, ChCountDistribution, ChStats,
};
