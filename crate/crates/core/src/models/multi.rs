//! Generic multi-source chains.
//!
//! A state is (server mode, packets held, sync flag of the tracked source).
//! While the server is not busy, the packet that will enter service first is
//! held in the same slot as a packet in service, so the preemption rules apply
//! uniformly in every mode. The simulator implements the same rules.

use std::collections::{HashMap, VecDeque};

use super::{rate_of_mean, BuildError};
use crate::params::{PolicySpec, Preemption, SystemParams, WakeupPolicy};
use crate::shs::{AgeMap, PowerClass, ShsModel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Mode {
    Busy,
    /// Idle after a service completion (`ID`).
    Idle,
    /// Idle after an empty wake-up; waits for an arrival (`ID0`).
    IdleAfterWake,
    Sleep,
    /// N-policy sleep that has seen `k < N` arrivals.
    Counting(u32),
    WakeUp,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Key {
    mode: Mode,
    /// Head first: the packet in service (or next to be served), then waiting ones.
    content: Vec<usize>,
    unsync: bool,
}

struct Builder<'a> {
    p: &'a SystemParams,
    policy: PolicySpec,
    tracked: usize,
    has_idle: bool,
    has_wake: bool,
}

impl Builder<'_> {
    fn arrive(&self, content: &[usize], j: usize) -> Vec<usize> {
        match self.policy.preemption {
            Preemption::LcfsS => vec![j],
            Preemption::LcfsW => match content.first() {
                None => vec![j],
                Some(&h) if h == j => {
                    let mut c = content.to_vec();
                    c[0] = j;
                    c
                }
                Some(&h) => vec![h, j],
            },
            Preemption::LcfsQ => {
                // A queued packet of the same source is replaced where it stands.
                if content.contains(&j) {
                    content.to_vec()
                } else {
                    let mut c = content.to_vec();
                    c.push(j);
                    c
                }
            }
        }
    }

    fn mode_after_arrival(&self, mode: Mode) -> Mode {
        let n = self.p.n_threshold;
        let wake_or_busy = if self.has_wake { Mode::WakeUp } else { Mode::Busy };
        match (self.policy.wakeup, mode) {
            (_, Mode::Busy) => Mode::Busy,
            (_, Mode::Idle) | (_, Mode::IdleAfterWake) => Mode::Busy,
            (_, Mode::WakeUp) => Mode::WakeUp,
            (WakeupPolicy::NPolicy, Mode::Sleep) => {
                if n == 1 {
                    wake_or_busy
                } else {
                    Mode::Counting(1)
                }
            }
            (WakeupPolicy::NPolicy, Mode::Counting(k)) => {
                if k + 1 == n {
                    wake_or_busy
                } else {
                    Mode::Counting(k + 1)
                }
            }
            (_, Mode::Sleep) | (_, Mode::Counting(_)) => Mode::Sleep,
        }
    }

    fn after_service(&self) -> Mode {
        if self.has_idle {
            Mode::Idle
        } else {
            Mode::Sleep
        }
    }

    fn successors(&self, q: &Key) -> Vec<(Key, f64, AgeMap)> {
        let mut out = Vec::new();
        for (j, &lam) in self.p.arrival_rates.iter().enumerate() {
            let t = Key {
                mode: self.mode_after_arrival(q.mode),
                content: self.arrive(&q.content, j),
                unsync: q.unsync || j == self.tracked,
            };
            if t != *q {
                out.push((t, lam, AgeMap::Keep));
            }
        }

        let empty = q.content.is_empty();
        let rs = rate_of_mean(self.p.sleep_mean);
        let rw = rate_of_mean(self.p.wakeup_mean);
        match q.mode {
            Mode::Busy => {
                let served = q.content[0];
                let rest = q.content[1..].to_vec();
                let synced = served == self.tracked;
                let t = Key {
                    mode: if rest.is_empty() { self.after_service() } else { Mode::Busy },
                    content: rest,
                    unsync: q.unsync && !synced,
                };
                let map = if synced { AgeMap::Reset } else { AgeMap::Keep };
                out.push((t, self.p.service_rate, map));
            }
            Mode::Idle => {
                let t = Key { mode: Mode::Sleep, ..q.clone() };
                out.push((t, rate_of_mean(self.p.idle_mean), AgeMap::Keep));
            }
            Mode::WakeUp => {
                let mode = if !empty {
                    Mode::Busy
                } else {
                    Mode::IdleAfterWake
                };
                out.push((Key { mode, ..q.clone() }, rw, AgeMap::Keep));
            }
            Mode::Sleep => match self.policy.wakeup {
                WakeupPolicy::NPolicy => {}
                WakeupPolicy::SingleSleep => {
                    let mode = match (self.has_wake, empty) {
                        (true, _) => Mode::WakeUp,
                        (false, true) => Mode::IdleAfterWake,
                        (false, false) => Mode::Busy,
                    };
                    out.push((Key { mode, ..q.clone() }, rs, AgeMap::Keep));
                }
                WakeupPolicy::MultiSleep => {
                    if !empty {
                        let mode = if self.has_wake { Mode::WakeUp } else { Mode::Busy };
                        out.push((Key { mode, ..q.clone() }, rs, AgeMap::Keep));
                    }
                }
            },
            Mode::Counting(_) | Mode::IdleAfterWake => {}
        }
        out
    }

    fn label(&self, q: &Key) -> String {
        let n = self.p.n_threshold;
        let mode = match (self.policy.wakeup, q.mode) {
            (_, Mode::Busy) => "B".to_string(),
            (_, Mode::Idle) => "ID".to_string(),
            (_, Mode::IdleAfterWake) => "ID0".to_string(),
            (WakeupPolicy::NPolicy, Mode::WakeUp) => n.to_string(),
            (WakeupPolicy::NPolicy, Mode::Counting(k)) => k.to_string(),
            (WakeupPolicy::NPolicy, Mode::Sleep) => "SL".to_string(),
            (WakeupPolicy::SingleSleep, Mode::WakeUp) if q.content.is_empty() => "WK".into(),
            (WakeupPolicy::SingleSleep, Mode::WakeUp) => "WK1".into(),
            (_, Mode::WakeUp) => "WK".into(),
            (_, Mode::Sleep) if q.content.is_empty() => "SL".into(),
            (_, Mode::Sleep) => "SL1".into(),
            (_, Mode::Counting(_)) => unreachable!(),
        };
        let sep = if self.p.sources() >= 10 { "." } else { "" };
        let mut tag: Vec<String> = Vec::new();
        if q.unsync && !q.content.contains(&self.tracked) {
            tag.push((self.tracked + 1).to_string());
        }
        if q.content.is_empty() {
            tag.push("0".into());
        } else {
            tag.extend(q.content.iter().map(|c| (c + 1).to_string()));
        }
        format!("{mode}_{}", tag.join(sep))
    }

    fn class(&self, q: &Key) -> PowerClass {
        match q.mode {
            Mode::Busy => PowerClass::Busy,
            Mode::Idle | Mode::IdleAfterWake => PowerClass::Idle,
            Mode::Sleep | Mode::Counting(_) => PowerClass::Sleep,
            Mode::WakeUp => PowerClass::WakeUp,
        }
    }

    fn build(&self) -> ShsModel {
        let start = Key {
            mode: Mode::Sleep,
            content: Vec::new(),
            unsync: false,
        };
        let mut index: HashMap<Key, usize> = HashMap::new();
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        index.insert(start.clone(), 0);
        order.push(start.clone());
        queue.push_back(start);
        let mut edges = Vec::new();
        while let Some(q) = queue.pop_front() {
            let from = index[&q];
            for (t, rate, map) in self.successors(&q) {
                let to = match index.get(&t) {
                    Some(&i) => i,
                    None => {
                        let i = order.len();
                        index.insert(t.clone(), i);
                        order.push(t.clone());
                        queue.push_back(t);
                        i
                    }
                };
                edges.push((from, to, rate, map));
            }
        }

        let mut m = ShsModel::new();
        for q in &order {
            m.add_state(self.label(q), q.unsync, self.class(q));
        }
        for (from, to, rate, map) in edges {
            m.add_transition(from, to, rate, map);
        }
        m.tracked_source = Some(self.tracked);
        m
    }
}

/// Chain for any number of sources, following source `tracked` (zero-based).
///
/// Supported: LCFS-S for any M; LCFS-W/Q for M ≤ 2 with any wake-up policy
/// and for M = 3 with ideal sleep and the 1-policy. M ≥ 3 needs ideal sleep.
pub fn build_multi_source(
    params: &SystemParams,
    policy: PolicySpec,
    tracked: usize,
) -> Result<ShsModel, BuildError> {
    params.check().map_err(BuildError::InvalidParams)?;
    let m = params.sources();
    if tracked >= m {
        return Err(BuildError::InvalidParams(format!(
            "tracked source {} out of range for M = {m}",
            tracked + 1
        )));
    }
    scope_gate(params, policy)?;
    Ok(Builder {
        p: params,
        policy,
        tracked,
        has_idle: params.idle_mean > 0.0,
        has_wake: params.wakeup_mean > 0.0,
    }
    .build())
}

pub(crate) fn scope_gate(params: &SystemParams, policy: PolicySpec) -> Result<(), BuildError> {
    let m = params.sources();
    let ideal = params.sleep_model() == crate::params::SleepModel::Ideal;
    if m >= 3 && !ideal {
        return Err(BuildError::UnsupportedConfig(format!(
            "M = {m} requires the ideal sleep model; nearest supported: d = 0, theta = 0"
        )));
    }
    if policy.preemption != Preemption::LcfsS && m >= 3 {
        if m > 3 {
            return Err(BuildError::UnsupportedConfig(format!(
                "{} chains are limited to M <= 3; nearest supported: lcfs-s with M = {m}, or M = 3",
                policy.preemption
            )));
        }
        let one_policy = policy.wakeup == WakeupPolicy::NPolicy && params.n_threshold == 1;
        if !one_policy {
            return Err(BuildError::UnsupportedConfig(format!(
                "{} with M = 3 requires the ideal 1-policy; nearest supported: n-policy with N = 1",
                policy.preemption
            )));
        }
    }
    Ok(())
}

/// Two-source LCFS-S chain following source 1.
pub fn build_two_source_lcfs_s(params: &SystemParams, wakeup: WakeupPolicy) -> Result<ShsModel, BuildError> {
    if params.sources() != 2 {
        return Err(BuildError::InvalidParams(format!(
            "two-source chain needs M = 2, got M = {}",
            params.sources()
        )));
    }
    build_multi_source(params, PolicySpec::lcfs_s(wakeup), 0)
}

/// Merges sources 2..M into one source with the summed rate.
pub fn super_source_reduction(params: &SystemParams, preemption: Preemption) -> Result<SystemParams, BuildError> {
    if preemption != Preemption::LcfsS {
        return Err(BuildError::UnsupportedStrategy(format!(
            "super-source reduction does not hold under {preemption}"
        )));
    }
    params.check().map_err(BuildError::InvalidParams)?;
    if params.sources() < 2 {
        return Err(BuildError::InvalidParams("reduction needs at least two sources".into()));
    }
    let mut p = params.clone();
    let rest: f64 = params.arrival_rates[1..].iter().sum();
    p.arrival_rates = vec![params.arrival_rates[0], rest];
    Ok(p)
}
