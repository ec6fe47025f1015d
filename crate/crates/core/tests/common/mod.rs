#![allow(dead_code)]

use aos_core::models::{build_multi_source, super_source_reduction};
use aos_core::params::{PolicySpec, Preemption, SystemParams, WakeupPolicy};
use aos_core::shs::{balance_residual, solve, solve_stationary, AgeMap, PowerClass, ShsModel};
use aos_core::sim::{run_simulation, sample_path_export, EventKind, SimConfig};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CASES: u32 = 100;

/// Strongly connected chain with `n` states: a random cycle through every
/// state plus extra random edges, at least one of them a reset.
pub fn chain_from_seed(n: usize, seed: u64) -> ShsModel {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = ShsModel::new();
    let classes = PowerClass::ALL;
    for i in 0..n {
        let class = classes[rng.random_range(0..4)];
        m.add_state(i.to_string(), rng.random_bool(0.6), class);
    }
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.random_range(0..=i));
    }
    let map = |rng: &mut ChaCha8Rng| if rng.random_bool(0.3) { AgeMap::Reset } else { AgeMap::Keep };
    for i in 0..n {
        let (a, b) = (order[i], order[(i + 1) % n]);
        let mp = map(&mut rng);
        m.add_transition(a, b, rng.random_range(0.1..10.0), mp);
    }
    for _ in 0..rng.random_range(0..=2 * n) {
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        if a != b {
            let mp = map(&mut rng);
            m.add_transition(a, b, rng.random_range(0.1..10.0), mp);
        }
    }
    if m.reset_count() == 0 {
        m.transitions[0].map = AgeMap::Reset;
    }
    m
}

pub fn random_chain() -> impl Strategy<Value = ShsModel> {
    (2usize..=30, any::<u64>()).prop_map(|(n, seed)| chain_from_seed(n, seed))
}

pub fn wakeup_policy() -> impl Strategy<Value = WakeupPolicy> {
    prop_oneof![
        Just(WakeupPolicy::NPolicy),
        Just(WakeupPolicy::SingleSleep),
        Just(WakeupPolicy::MultiSleep)
    ]
}

pub fn preemption() -> impl Strategy<Value = Preemption> {
    prop_oneof![Just(Preemption::LcfsS), Just(Preemption::LcfsW), Just(Preemption::LcfsQ)]
}

fn optional_mean() -> impl Strategy<Value = f64> {
    prop_oneof![Just(0.0), 0.1f64..2.0]
}

/// Any system with up to three sources, ideal or not.
pub fn system() -> impl Strategy<Value = (SystemParams, PolicySpec)> {
    (
        prop::collection::vec(0.2f64..3.0, 1..=3),
        0.3f64..3.0,
        optional_mean(),
        optional_mean(),
        0.1f64..3.0,
        1u32..=4,
        wakeup_policy(),
        preemption(),
    )
        .prop_map(|(rates, mu, d, th, s, n, w, pre)| {
            let p = SystemParams::new(rates, mu).with_idle(d).with_wakeup(th).with_sleep(s).with_threshold(n);
            (p, PolicySpec::new(w, pre))
        })
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

pub fn check_stationary(m: &ShsModel) -> Result<(), TestCaseError> {
    let pi = solve_stationary(m).map_err(|e| TestCaseError::fail(e.to_string()))?.probabilities;
    let sum: f64 = pi.iter().sum();
    prop_assert!((sum - 1.0).abs() < 1e-12, "sum = {sum}");
    prop_assert!(pi.iter().all(|&p| p >= 0.0), "negative probability in {pi:?}");
    let max_rate = m.out_rates().into_iter().fold(0.0, f64::max);
    prop_assert!(balance_residual(m, &pi) <= 1e-10 * max_rate);
    Ok(())
}

pub fn check_self_loop(m: &ShsModel, state: usize, rate: f64) -> Result<(), TestCaseError> {
    let power = Default::default();
    let a = solve(m, &power).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let mut looped = m.clone();
    let q = state % m.len();
    looped.add_transition(q, q, rate, AgeMap::Keep);
    let b = solve(&looped, &power).map_err(|e| TestCaseError::fail(e.to_string()))?;
    for (x, y) in a.stationary.probabilities.iter().zip(&b.stationary.probabilities) {
        prop_assert!((x - y).abs() < 1e-10);
    }
    prop_assert!(rel(b.avg_aos, a.avg_aos) < 1e-9);
    prop_assert!(rel(b.avg_power, a.avg_power) < 1e-9 || (a.avg_power - b.avg_power).abs() < 1e-12);
    Ok(())
}

pub fn check_rescaling(m: &ShsModel, c: f64) -> Result<(), TestCaseError> {
    let power = Default::default();
    let a = solve(m, &power).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let b = solve(&m.scaled(c), &power).map_err(|e| TestCaseError::fail(e.to_string()))?;
    for (x, y) in a.stationary.probabilities.iter().zip(&b.stationary.probabilities) {
        prop_assert!((x - y).abs() < 1e-10);
    }
    prop_assert!(rel(b.avg_aos * c, a.avg_aos) < 1e-9, "{} vs {}", b.avg_aos * c, a.avg_aos);
    Ok(())
}

/// Direct M-source LCFS-S solve against the two-source reduction, source 1.
pub fn check_reduction(p: &SystemParams, wakeup: WakeupPolicy) -> Result<(), TestCaseError> {
    let policy = PolicySpec::lcfs_s(wakeup);
    let direct = solve(&build_multi_source(p, policy, 0).unwrap(), &p.power).unwrap();
    let reduced = super_source_reduction(p, Preemption::LcfsS).unwrap();
    let two = solve(&build_multi_source(&reduced, policy, 0).unwrap(), &p.power).unwrap();
    prop_assert!(rel(two.avg_aos, direct.avg_aos) < 1e-9, "{} vs {}", two.avg_aos, direct.avg_aos);
    prop_assert!(rel(two.avg_power, direct.avg_power) < 1e-9);
    Ok(())
}

pub fn ideal_system(m: usize) -> impl Strategy<Value = (SystemParams, WakeupPolicy)> {
    (prop::collection::vec(0.1f64..3.0, m), 0.3f64..3.0, 0.1f64..3.0, 1u32..=4, wakeup_policy()).prop_map(
        |(rates, mu, s, n, w)| (SystemParams::new(rates, mu).with_sleep(s).with_threshold(n), w),
    )
}

/// Between events every age grows at slope 0 or 1, and drops only to zero at
/// a departure of that source.
pub fn check_sample_path(p: &SystemParams, policy: PolicySpec, seed: u64) -> Result<(), TestCaseError> {
    let cfg = SimConfig::default().with_seed(seed);
    let recs = sample_path_export(p, policy, &cfg, 2000).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert!(!recs.is_empty());
    let m = p.sources();
    let mut prev_t = 0.0;
    let mut prev_after = vec![0.0; m];
    for r in &recs {
        let dt = r.time - prev_t;
        let tol = 1e-9 * r.time.max(1.0);
        for i in 0..m {
            let rise = r.aos_before[i] - prev_after[i];
            prop_assert!(rise.abs() <= tol || (rise - dt).abs() <= tol, "slope at t = {}", r.time);
            let after = r.aos_after[i];
            if after != r.aos_before[i] {
                prop_assert_eq!(after, 0.0);
                prop_assert_eq!(r.kind, EventKind::Departure);
                prop_assert_eq!(r.source, Some(i));
            }
            if r.kind == EventKind::Arrival && r.source == Some(i) && r.aos_before[i] == 0.0 {
                prop_assert_eq!(after, 0.0);
            }
            prev_after[i] = after;
        }
        prev_t = r.time;
    }
    Ok(())
}

pub fn check_determinism(p: &SystemParams, policy: PolicySpec, seed: u64) -> Result<(), TestCaseError> {
    let cfg = SimConfig::default().with_horizon(2000.0).with_seed(seed);
    let a = run_simulation(p, policy, &cfg).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let b = run_simulation(p, policy, &cfg).unwrap();
    prop_assert_eq!(a, b);
    Ok(())
}
