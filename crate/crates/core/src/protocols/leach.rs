use super::round::RoundRun;
use super::{RoundEngine, RoundOutcome, Scenario};
use crate::model::NetworkState;

/// Single-hop LEACH: members report to the nearest head, each head fuses
/// and sends one packet straight to the base station.
pub fn run_leach_round(state: &mut NetworkState, scenario: &Scenario) -> RoundOutcome {
    let mut run = match RoundRun::begin(state, scenario) {
        Ok(run) => run,
        Err(terminal) => return terminal,
    };
    let Some(assignment) = run.elect_and_cluster() else {
        run.direct_to_bs();
        return run.finish();
    };
    run.signal_all_clusters(&assignment);
    let received = run.gather(&assignment.membership);
    run.aggregate_heads(assignment.heads.iter().copied(), &received);
    for &h in &assignment.heads {
        run.send_to_bs(h);
    }
    run.finish()
}

#[derive(Debug, Default, Clone, Copy)]
pub struct Leach;

impl RoundEngine for Leach {
    fn run_round(&mut self, state: &mut NetworkState, scenario: &Scenario) -> RoundOutcome {
        run_leach_round(state, scenario)
    }
}
