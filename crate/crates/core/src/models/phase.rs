//! Phase-type chains for a constant wake-up time and for two-point Zipf
//! inter-arrival times, both under the 1-policy with a single source.

use super::BuildError;
use crate::params::SystemParams;
use crate::shs::{AgeMap, PowerClass, ShsModel};

fn single_source_check(params: &SystemParams, k: usize) -> Result<(), BuildError> {
    params.check().map_err(BuildError::InvalidParams)?;
    if params.sources() != 1 {
        return Err(BuildError::InvalidParams("phase-type chains need M = 1".into()));
    }
    if k == 0 {
        return Err(BuildError::InvalidParams("phase count k must be at least 1".into()));
    }
    Ok(())
}

/// Erlang-k approximation of a constant wake-up time θ.
///
/// States: 0 asleep and empty, 1..k wake-up phases, k+1 busy.
pub fn build_constant_wakeup(params: &SystemParams, k: usize) -> Result<ShsModel, BuildError> {
    single_source_check(params, k)?;
    if params.idle_mean != 0.0 || params.n_threshold != 1 {
        return Err(BuildError::InvalidParams(
            "constant wake-up chain requires d = 0 and N = 1".into(),
        ));
    }
    let lam = params.arrival_rates[0];
    let phases = if params.wakeup_mean > 0.0 { k } else { 0 };
    let phase_rate = k as f64 / params.wakeup_mean;

    let mut m = ShsModel::new();
    m.add_state("0", false, PowerClass::Sleep);
    for i in 1..=phases {
        m.add_state(i.to_string(), true, PowerClass::WakeUp);
    }
    let busy = m.add_state((phases + 1).to_string(), true, PowerClass::Busy);
    m.add_transition(0, 1, lam, AgeMap::Keep);
    for i in 1..=phases {
        m.add_transition(i, i + 1, phase_rate, AgeMap::Keep);
    }
    m.add_transition(busy, 0, params.service_rate, AgeMap::Reset);
    m.tracked_source = Some(0);
    Ok(m)
}

/// Inter-arrival time T ∈ {1, 2} with P(T = 1) = σ, each unit of time split
/// into k exponential phases of rate k.
///
/// Phases 0..2k-1 run while the server sleeps and are mirrored as 0'..(2k-1)'
/// while it is busy. An arrival restarts the clock in busy phase 0'; a service
/// completion returns to the same phase of the sleeping copy.
pub fn build_zipf_arrival(params: &SystemParams, sigma: f64, k: usize) -> Result<ShsModel, BuildError> {
    single_source_check(params, k)?;
    if !(sigma > 0.0 && sigma <= 1.0) {
        return Err(BuildError::InvalidParams(format!("sigma must lie in (0, 1], got {sigma}")));
    }
    let rate = k as f64;
    let mu = params.service_rate;
    // With σ = 1 the second unit is never entered.
    let len = if sigma < 1.0 { 2 * k } else { k };

    let mut m = ShsModel::new();
    for j in 0..len {
        m.add_state(j.to_string(), false, PowerClass::Sleep);
    }
    for j in 0..len {
        m.add_state(format!("{j}'"), true, PowerClass::Busy);
    }
    let arrival = len;
    for copy in 0..2 {
        for j in 0..len {
            let me = copy * len + j;
            if j == k - 1 {
                m.add_transition(me, arrival, sigma * rate, AgeMap::Keep);
                if sigma < 1.0 {
                    m.add_transition(me, copy * len + j + 1, (1.0 - sigma) * rate, AgeMap::Keep);
                }
            } else if j == len - 1 {
                m.add_transition(me, arrival, rate, AgeMap::Keep);
            } else {
                m.add_transition(me, copy * len + j + 1, rate, AgeMap::Keep);
            }
            if copy == 1 {
                m.add_transition(me, j, mu, AgeMap::Reset);
            }
        }
    }
    m.tracked_source = Some(0);
    Ok(m)
}
