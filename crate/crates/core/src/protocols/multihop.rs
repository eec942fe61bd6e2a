use super::clusters::{multihop_route, route_path};
use super::round::RoundRun;
use super::{RoundEngine, RoundOutcome, Scenario};
use crate::model::NetworkState;

/// LEACH with head-to-head relaying. Only the originating head aggregates;
/// relays receive and retransmit the fused packet as-is. A packet lost on
/// any hop is lost for good.
pub fn run_multihop_round(state: &mut NetworkState, scenario: &Scenario) -> RoundOutcome {
    let mut run = match RoundRun::begin(state, scenario) {
        Ok(run) => run,
        Err(terminal) => return terminal,
    };
    let Some(mut assignment) = run.elect_and_cluster() else {
        run.direct_to_bs();
        return run.finish();
    };
    let heads: Vec<usize> = assignment.heads.iter().copied().collect();
    assignment.next_hop =
        multihop_route(&heads, scenario.network.bs_position, &run.state.positions());

    run.signal_all_clusters(&assignment);
    let received = run.gather(&assignment.membership);
    run.aggregate_heads(heads.iter().copied(), &received);
    for &h in &heads {
        relay(&mut run, &route_path(&assignment.next_hop, h));
    }
    run.finish()
}

/// Pushes one packet along `path`, then on to the BS from its last head.
pub(crate) fn relay(run: &mut RoundRun<'_>, path: &[usize]) -> bool {
    for hop in path.windows(2) {
        if !run.send_to_node(hop[0], hop[1]) {
            return false;
        }
    }
    run.send_to_bs(*path.last().expect("path holds its origin"))
}

#[derive(Debug, Default, Clone, Copy)]
pub struct MultiHop;

impl RoundEngine for MultiHop {
    fn run_round(&mut self, state: &mut NetworkState, scenario: &Scenario) -> RoundOutcome {
        run_multihop_round(state, scenario)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{ChargeKind, NetworkConfig, Point, RadioEnergyParams, Traffic};
    use crate::protocols::{run_leach_round, ProtocolOptions};

    fn lossless(nodes: usize, p: f64) -> Scenario {
        let net = NetworkConfig {
            node_count: nodes,
            p_opt: p,
            bs_position: Point::new(0.0, 0.0),
            ..Default::default()
        };
        let opts = ProtocolOptions {
            drop_max: 0.0,
            control_bits: 0,
            ..Default::default()
        };
        Scenario::new(net, RadioEnergyParams::default(), opts).unwrap()
    }

    #[test]
    fn chain_of_three_relays() {
        // every node is a head; 90 -> 60 -> 30 -> BS
        let sc = lossless(3, 1.0);
        let pts = [
            Point::new(90.0, 0.0),
            Point::new(60.0, 0.0),
            Point::new(30.0, 0.0),
        ];
        let mut s = NetworkState::from_positions(&pts, 0.5, 9);
        let o = run_multihop_round(&mut s, &sc);
        assert_eq!(o.packets_to_bs, 3);

        let r = RadioEnergyParams::default();
        let hop = r.tx_energy(4000, 30.0).unwrap();
        let rx = r.rx_energy(4000);
        // the farthest head's packet crosses three hops
        let far_packet = 3.0 * hop + 2.0 * rx;
        let agg = 3.0 * r.aggregation_energy(4000, 1);
        let want = far_packet + (2.0 * hop + rx) + hop + agg;
        assert!(
            (o.energy_spent - want).abs() < 1e-15,
            "{} vs {}",
            o.energy_spent,
            want
        );

        let node0_tx: f64 = s
            .charges()
            .entries()
            .iter()
            .filter(|c| c.node == 0 && c.kind == ChargeKind::Transmit && c.traffic == Traffic::Data)
            .map(|c| c.applied)
            .sum();
        assert!((node0_tx - hop).abs() < 1e-18);
    }

    #[test]
    fn no_relays_matches_leach() {
        // heads nearer to the BS than to each other
        let sc = lossless(4, 1.0);
        let pts = [
            Point::new(0.0, 35.0),
            Point::new(0.0, -30.0),
            Point::new(25.0, 0.0),
            Point::new(-30.0, 0.0),
        ];
        let mut a = NetworkState::from_positions(&pts, 0.5, 4);
        let mut b = a.clone();
        let oa = run_multihop_round(&mut a, &sc);
        let ob = run_leach_round(&mut b, &sc);
        assert_eq!(oa, ob);
        assert_eq!(a.charges().entries(), b.charges().entries());
    }
}
