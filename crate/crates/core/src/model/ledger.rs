/// What the energy paid for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChargeKind {
    Transmit,
    Receive,
    Aggregate,
}

/// Whether a charge carried sensed data or protocol signalling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Traffic {
    Data,
    Control,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Charge {
    pub node: usize,
    pub kind: ChargeKind,
    pub traffic: Traffic,
    /// Energy the operation asked for.
    pub requested: f64,
    /// Energy actually drawn; less than `requested` only on the charge that
    /// exhausts the battery.
    pub applied: f64,
}

/// Every charge made during one round, tagged with that round's index.
#[derive(Debug, Clone, Default)]
pub struct ChargeLog {
    round: u64,
    entries: Vec<Charge>,
}

impl ChargeLog {
    pub(crate) fn push(&mut self, round: u64, charge: Charge) {
        if self.round != round {
            self.entries.clear();
            self.round = round;
        }
        self.entries.push(charge);
    }

    pub fn round(&self) -> u64 {
        self.round
    }

    pub fn entries(&self) -> &[Charge] {
        &self.entries
    }

    /// Sum of applied charges in `round`, or zero if the log holds a
    /// different round.
    pub fn total_for(&self, round: u64) -> f64 {
        if self.round != round {
            return 0.0;
        }
        self.entries.iter().map(|c| c.applied).sum()
    }

    pub fn traffic_total_for(&self, round: u64, traffic: Traffic) -> f64 {
        if self.round != round {
            return 0.0;
        }
        self.entries
            .iter()
            .filter(|c| c.traffic == traffic)
            .map(|c| c.applied)
            .sum()
    }
}
