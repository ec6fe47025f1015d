//! Flat `key = value` config files.
//!
//! Lines are `key = value`; `#` starts a comment. Parameter keys:
//!
//! | key | meaning |
//! |---|---|
//! | `policy` | `n-policy`, `single-sleep`, `multi-sleep` |
//! | `strategy` | `lcfs-s`, `lcfs-w`, `lcfs-q` |
//! | `lambda` | comma-separated per-source rates; sets M |
//! | `lambda_all` | every source's rate, M unchanged |
//! | `lambda_<i>` | rate of source i (1-based) |
//! | `lambda_diff` | λ1 − λ2 with λ1 + λ2 held fixed |
//! | `M` | number of sources, each at the rate of source 1 |
//! | `mu`, `d`, `theta`, `s`, `N` | service rate, idle, wake-up and sleep means, threshold |
//! | `p_busy`, `p_idle`, `p_sleep`, `p_wakeup` | power levels |
//! | `wakeup_dist` | `exponential` or `constant` |
//! | `arrival_dist` | `poisson` or `zipf` |
//! | `sigma` | zipf parameter |
//!
//! Run keys: `mode` (`analytic`, `closed_form`, `simulate`, `all`),
//! `k_phases`, `horizon`, `seed`.
//!
//! Axes: `series.<key> = values` (any number, outermost first) and one
//! `sweep.<key> = values` (innermost). Values are a comma list or an
//! inclusive `start:step:stop` range.

use super::{EvalMode, Point, RunError, SweepSpec};
use crate::analysis::WakeupDist;
use crate::sim::SimConfig;

fn parse_f64(key: &str, v: &str) -> Result<f64, String> {
    v.trim()
        .parse::<f64>()
        .map_err(|_| format!("{key}: expected a number, got {v:?}"))
}

fn parse_list(key: &str, v: &str) -> Result<Vec<f64>, String> {
    v.split(',').map(|x| parse_f64(key, x)).collect()
}

/// Applies one parameter key to a sweep point.
pub(crate) fn apply(p: &mut Point, key: &str, value: &str) -> Result<(), String> {
    let value = value.trim();
    let num = || parse_f64(key, value);
    let sp = &mut p.params;
    match key {
        "policy" => p.policy.wakeup = value.parse()?,
        "strategy" => p.policy.preemption = value.parse()?,
        "lambda" => sp.arrival_rates = parse_list(key, value)?,
        "lambda_all" => {
            let v = num()?;
            sp.arrival_rates.iter_mut().for_each(|l| *l = v);
        }
        "lambda_diff" => {
            if sp.arrival_rates.len() < 2 {
                return Err("lambda_diff needs at least two sources".into());
            }
            let total = sp.arrival_rates[0] + sp.arrival_rates[1];
            let x = num()?;
            sp.arrival_rates[0] = (total + x) / 2.0;
            sp.arrival_rates[1] = (total - x) / 2.0;
        }
        "M" => {
            let m: usize = value.parse().map_err(|_| format!("M: expected a count, got {value:?}"))?;
            let l1 = *sp.arrival_rates.first().ok_or("M needs lambda to be set first")?;
            sp.arrival_rates = vec![l1; m];
        }
        "mu" => sp.service_rate = num()?,
        "d" => sp.idle_mean = num()?,
        "theta" => sp.wakeup_mean = num()?,
        "s" => sp.sleep_mean = num()?,
        "N" => sp.n_threshold = value.parse().map_err(|_| format!("N: expected a count, got {value:?}"))?,
        "p_busy" => sp.power.busy = num()?,
        "p_idle" => sp.power.idle = num()?,
        "p_sleep" => sp.power.sleep = num()?,
        "p_wakeup" => sp.power.wakeup = num()?,
        "wakeup_dist" => {
            p.wakeup_dist = match value {
                "exponential" => WakeupDist::Exponential,
                "constant" => WakeupDist::Constant,
                _ => return Err(format!("wakeup_dist: expected exponential or constant, got {value:?}")),
            }
        }
        "arrival_dist" => {
            p.zipf = match value {
                "poisson" => false,
                "zipf" => true,
                _ => return Err(format!("arrival_dist: expected poisson or zipf, got {value:?}")),
            }
        }
        "sigma" => p.sigma = num()?,
        _ => {
            if let Some(i) = key.strip_prefix("lambda_") {
                let i: usize = i.parse().map_err(|_| format!("unknown key {key:?}"))?;
                let m = sp.arrival_rates.len();
                if i == 0 || i > m {
                    return Err(format!("{key}: source index out of range for M = {m}"));
                }
                sp.arrival_rates[i - 1] = num()?;
            } else {
                return Err(format!("unknown key {key:?}"));
            }
        }
    }
    Ok(())
}

const AXIS_KEYS: &[&str] = &[
    "policy", "strategy", "lambda_all", "lambda_diff", "M", "mu", "d", "theta", "s", "N", "p_busy", "p_idle",
    "p_sleep", "p_wakeup", "wakeup_dist", "arrival_dist", "sigma",
];

fn check_axis(name: &str) -> Result<(), String> {
    let indexed = name.strip_prefix("lambda_").is_some_and(|i| i.parse::<usize>().is_ok());
    if AXIS_KEYS.contains(&name) || indexed {
        Ok(())
    } else {
        Err(format!("{name:?} cannot be swept"))
    }
}

/// Expands an axis value list: comma list or inclusive `start:step:stop`.
pub(crate) fn axis_values(key: &str, value: &str) -> Result<Vec<String>, String> {
    let value = value.trim();
    if value.is_empty() {
        return Ok(Vec::new());
    }
    let parts: Vec<&str> = value.split(':').collect();
    if parts.len() == 3 {
        let [a, step, b] = [parts[0], parts[1], parts[2]].map(|x| parse_f64(key, x));
        let (a, step, b) = (a?, step?, b?);
        if !(step > 0.0) || b < a {
            return Err(format!("{key}: range needs step > 0 and stop >= start"));
        }
        let n = ((b - a) / step + 1e-9).floor() as usize;
        return Ok((0..=n)
            .map(|i| {
                let v = a + i as f64 * step;
                format!("{}", (v * 1e12).round() / 1e12)
            })
            .collect());
    }
    Ok(value.split(',').map(|s| s.trim().to_string()).collect())
}

pub fn parse_config(text: &str) -> Result<SweepSpec, RunError> {
    let mut base = Point::default();
    let mut spec_mode = EvalMode::Analytic;
    let mut k_phases = crate::analysis::DEFAULT_PHASES;
    let mut sim = SimConfig::default();
    let mut series = Vec::new();
    let mut sweep = None;
    let mut seen = std::collections::HashSet::new();

    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |m: String| RunError::Parse(format!("line {}: {m}", n + 1));
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| err(format!("expected key = value, got {line:?}")))?;
        let (key, value) = (key.trim(), value.trim());
        if !seen.insert(key.to_string()) {
            return Err(err(format!("duplicate key {key:?}")));
        }
        if let Some(name) = key.strip_prefix("series.") {
            check_axis(name).map_err(err)?;
            series.push((name.to_string(), axis_values(name, value).map_err(err)?));
            continue;
        }
        if let Some(name) = key.strip_prefix("sweep.") {
            if sweep.is_some() {
                return Err(err("only one sweep axis is allowed; use series.<key> for outer axes".into()));
            }
            check_axis(name).map_err(err)?;
            sweep = Some((name.to_string(), axis_values(name, value).map_err(err)?));
            continue;
        }
        match key {
            "mode" => spec_mode = value.parse().map_err(err)?,
            "k_phases" => k_phases = value.parse().map_err(|_| err(format!("k_phases: expected a count, got {value:?}")))?,
            "horizon" => sim.horizon = parse_f64(key, value).map_err(err)?,
            "seed" => sim.seed = value.parse().map_err(|_| err(format!("seed: expected an integer, got {value:?}")))?,
            _ => apply(&mut base, key, value).map_err(err)?,
        }
    }
    if base.params.arrival_rates.is_empty() {
        return Err(RunError::Parse("lambda is required".into()));
    }
    Ok(SweepSpec {
        base,
        mode: spec_mode,
        k_phases,
        sim,
        series,
        sweep,
    })
}
