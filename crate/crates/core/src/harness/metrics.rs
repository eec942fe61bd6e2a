use super::series::TimeSeries;

/// A round index, or the horizon with `reached = false` when the event
/// never happened within the run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Milestone {
    pub round: u64,
    pub reached: bool,
}

fn first_round(
    ts: &TimeSeries,
    pred: impl Fn(&crate::protocols::RoundOutcome) -> bool,
) -> Milestone {
    ts.rounds
        .iter()
        .find(|r| pred(r))
        .map(|r| Milestone {
            round: r.round,
            reached: true,
        })
        .unwrap_or(Milestone {
            round: ts.max_rounds,
            reached: false,
        })
}

/// Round in which the first node died.
pub fn stability_period(ts: &TimeSeries) -> Milestone {
    first_round(ts, |r| r.dead_count >= 1)
}

/// Round in which the last node died.
pub fn network_lifetime(ts: &TimeSeries) -> Milestone {
    first_round(ts, |r| r.alive_count == 0)
}
