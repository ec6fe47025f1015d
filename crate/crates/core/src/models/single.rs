use super::{rate_of_mean, BuildError};
use crate::params::{SystemParams, WakeupPolicy};
use crate::shs::{AgeMap, PowerClass, ShsModel};

use AgeMap::{Keep, Reset};
use PowerClass::{Busy, Idle, Sleep, WakeUp};

/// Single-source chain of the given wake-up policy.
///
/// `d = 0` removes `ID` (service completion goes straight to `SL`) and
/// `θ = 0` removes the wake-up states (their exit is taken immediately).
pub fn build_single_source(params: &SystemParams, wakeup: WakeupPolicy) -> Result<ShsModel, BuildError> {
    params.check().map_err(BuildError::InvalidParams)?;
    if params.sources() != 1 {
        return Err(BuildError::InvalidParams(format!(
            "single-source chain needs M = 1, got M = {}",
            params.sources()
        )));
    }
    let mut m = match wakeup {
        WakeupPolicy::NPolicy => n_policy(params),
        WakeupPolicy::SingleSleep => single_sleep(params),
        WakeupPolicy::MultiSleep => multi_sleep(params),
    };
    m.tracked_source = Some(0);
    Ok(m)
}

fn n_policy(p: &SystemParams) -> ShsModel {
    let (lam, mu) = (p.arrival_rates[0], p.service_rate);
    let n = p.n_threshold as usize;
    let has_id = p.idle_mean > 0.0;
    let has_wk = p.wakeup_mean > 0.0;

    let mut m = ShsModel::new();
    let b = m.add_state("B", true, Busy);
    let id = has_id.then(|| m.add_state("ID", false, Idle));
    let sl = m.add_state("SL", false, Sleep);
    // States 1..N-1 hold packets while asleep; state N is the wake-up.
    let mut counted = Vec::new();
    for k in 1..n {
        counted.push(m.add_state(k.to_string(), true, Sleep));
    }
    let wk = has_wk.then(|| m.add_state(n.to_string(), true, WakeUp));

    match id {
        Some(id) => {
            m.add_transition(b, id, mu, Reset);
            m.add_transition(id, b, lam, Keep);
            m.add_transition(id, sl, rate_of_mean(p.idle_mean), Keep);
        }
        None => m.add_transition(b, sl, mu, Reset),
    }
    let mut prev = sl;
    for &k in &counted {
        m.add_transition(prev, k, lam, Keep);
        prev = k;
    }
    match wk {
        Some(wk) => {
            m.add_transition(prev, wk, lam, Keep);
            m.add_transition(wk, b, rate_of_mean(p.wakeup_mean), Keep);
        }
        None => m.add_transition(prev, b, lam, Keep),
    }
    m
}

fn single_sleep(p: &SystemParams) -> ShsModel {
    let (lam, mu) = (p.arrival_rates[0], p.service_rate);
    let rs = rate_of_mean(p.sleep_mean);
    let has_wk = p.wakeup_mean > 0.0;

    let mut m = ShsModel::new();
    let sl = m.add_state("SL", false, Sleep);
    let sl1 = m.add_state("SL1", true, Sleep);
    let (wk, wk1) = if has_wk {
        (
            Some(m.add_state("WK", false, WakeUp)),
            Some(m.add_state("WK1", true, WakeUp)),
        )
    } else {
        (None, None)
    };
    let b = m.add_state("B", true, Busy);
    let id0 = m.add_state("ID0", false, Idle);
    let id = (p.idle_mean > 0.0).then(|| m.add_state("ID", false, Idle));

    m.add_transition(sl, sl1, lam, Keep);
    match (wk, wk1) {
        (Some(wk), Some(wk1)) => {
            let rw = rate_of_mean(p.wakeup_mean);
            m.add_transition(sl, wk, rs, Keep);
            m.add_transition(sl1, wk1, rs, Keep);
            m.add_transition(wk, wk1, lam, Keep);
            m.add_transition(wk, id0, rw, Keep);
            m.add_transition(wk1, b, rw, Keep);
        }
        _ => {
            m.add_transition(sl, id0, rs, Keep);
            m.add_transition(sl1, b, rs, Keep);
        }
    }
    m.add_transition(id0, b, lam, Keep);
    match id {
        Some(id) => {
            m.add_transition(b, id, mu, Reset);
            m.add_transition(id, b, lam, Keep);
            m.add_transition(id, sl, rate_of_mean(p.idle_mean), Keep);
        }
        None => m.add_transition(b, sl, mu, Reset),
    }
    m
}

fn multi_sleep(p: &SystemParams) -> ShsModel {
    let (lam, mu) = (p.arrival_rates[0], p.service_rate);
    let rs = rate_of_mean(p.sleep_mean);

    let mut m = ShsModel::new();
    let sl = m.add_state("SL", false, Sleep);
    let sl1 = m.add_state("SL1", true, Sleep);
    let wk = (p.wakeup_mean > 0.0).then(|| m.add_state("WK", true, WakeUp));
    let b = m.add_state("B", true, Busy);
    let id = (p.idle_mean > 0.0).then(|| m.add_state("ID", false, Idle));

    m.add_transition(sl, sl1, lam, Keep);
    // An empty sleep period ends in another sleep period.
    m.add_transition(sl, sl, rs, Keep);
    match wk {
        Some(wk) => {
            m.add_transition(sl1, wk, rs, Keep);
            m.add_transition(wk, b, rate_of_mean(p.wakeup_mean), Keep);
        }
        None => m.add_transition(sl1, b, rs, Keep),
    }
    match id {
        Some(id) => {
            m.add_transition(b, id, mu, Reset);
            m.add_transition(id, b, lam, Keep);
            m.add_transition(id, sl, rate_of_mean(p.idle_mean), Keep);
        }
        None => m.add_transition(b, sl, mu, Reset),
    }
    m
}
