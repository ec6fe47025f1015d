use super::{build_multi_source, BuildError};
use crate::params::{PolicySpec, Preemption, SleepModel, SystemParams, WakeupPolicy};
use crate::shs::{AgeMap, PowerClass, ShsModel};

/// Three-source chain under the ideal 1-policy, following source 1.
///
/// LCFS-S uses the seven numbered states 0..6: 0 empty and synchronized,
/// 1..3 the source in service with source 1 synchronized (or in service),
/// 4 empty but unsynchronized, 5 and 6 sources 2 and 3 in service while
/// source 1 is unsynchronized.
pub fn build_three_source(params: &SystemParams, preemption: Preemption) -> Result<ShsModel, BuildError> {
    params.check().map_err(BuildError::InvalidParams)?;
    if params.sources() != 3 {
        return Err(BuildError::InvalidParams(format!(
            "three-source chain needs M = 3, got M = {}",
            params.sources()
        )));
    }
    if params.sleep_model() != SleepModel::Ideal || params.n_threshold != 1 {
        return Err(BuildError::UnsupportedConfig(
            "three-source chains cover the ideal 1-policy only; nearest supported: d = 0, theta = 0, N = 1".into(),
        ));
    }
    match preemption {
        Preemption::LcfsS => Ok(lcfs_s(params)),
        _ => build_multi_source(params, PolicySpec::new(WakeupPolicy::NPolicy, preemption), 0),
    }
}

fn lcfs_s(p: &SystemParams) -> ShsModel {
    use AgeMap::{Keep, Reset};
    let [l1, l2, l3] = [p.arrival_rates[0], p.arrival_rates[1], p.arrival_rates[2]];
    let mu = p.service_rate;

    let mut m = ShsModel::new();
    for (q, grows) in [false, true, false, false, true, true, true].into_iter().enumerate() {
        let class = if q == 0 || q == 4 { PowerClass::Sleep } else { PowerClass::Busy };
        m.add_state(q.to_string(), grows, class);
    }
    let table = [
        (0, 1, l1, Keep),
        (0, 2, l2, Keep),
        (0, 3, l3, Keep),
        (1, 0, mu, Reset),
        (1, 5, l2, Keep),
        (1, 6, l3, Keep),
        (2, 0, mu, Keep),
        (2, 1, l1, Keep),
        (2, 3, l3, Keep),
        (3, 0, mu, Keep),
        (3, 1, l1, Keep),
        (3, 2, l2, Keep),
        (4, 1, l1, Keep),
        (4, 5, l2, Keep),
        (4, 6, l3, Keep),
        (5, 1, l1, Keep),
        (5, 4, mu, Keep),
        (5, 6, l3, Keep),
        (6, 1, l1, Keep),
        (6, 4, mu, Keep),
        (6, 5, l2, Keep),
    ];
    for (from, to, rate, map) in table {
        m.add_transition(from, to, rate, map);
    }
    m.tracked_source = Some(0);
    m
}
