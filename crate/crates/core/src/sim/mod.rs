//! Discrete-event simulation of the physical system.
//!
//! Sources, the service and the timers draw from separate ChaCha streams
//! derived from one seed, so adding a source leaves the other streams alone.
//! Simultaneous events resolve as arrival (lowest source first), then service
//! completion, then timer expiry.

mod engine;
mod stats;

use rand::Rng;
use rand_distr::{Distribution, Exp};
use thiserror::Error;

pub use engine::{sample_path_export, write_event_log, EventKind, PathRecord};
pub use stats::Estimate;

use crate::params::{PolicySpec, SystemParams};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SimError {
    #[error("invalid simulation config: {0}")]
    InvalidConfig(String),
    #[error("unsupported distribution: {0}")]
    UnsupportedDistribution(String),
}

/// Parametric families for inter-arrival, service and wake-up times.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Dist {
    Exponential { rate: f64 },
    Constant { value: f64 },
    Erlang { k: u32, mean: f64 },
    /// T = 1 with probability σ, T = 2 otherwise.
    DiscreteZipf { sigma: f64 },
}

impl Dist {
    pub fn mean(&self) -> f64 {
        match *self {
            Dist::Exponential { rate } => 1.0 / rate,
            Dist::Constant { value } => value,
            Dist::Erlang { mean, .. } => mean,
            Dist::DiscreteZipf { sigma } => 2.0 - sigma,
        }
    }

    fn check(&self) -> Result<(), SimError> {
        let bad = |m: String| Err(SimError::InvalidConfig(m));
        match *self {
            Dist::Exponential { rate } if !(rate > 0.0 && rate.is_finite()) => {
                bad(format!("exponential rate must be positive, got {rate}"))
            }
            Dist::Constant { value } if !(value >= 0.0 && value.is_finite()) => {
                bad(format!("constant must be nonnegative, got {value}"))
            }
            Dist::Erlang { k, mean } if k == 0 || !(mean > 0.0 && mean.is_finite()) => {
                bad(format!("erlang needs k >= 1 and a positive mean, got k={k} mean={mean}"))
            }
            Dist::DiscreteZipf { sigma } if !(sigma > 0.0 && sigma <= 1.0) => {
                bad(format!("sigma must lie in (0, 1], got {sigma}"))
            }
            _ => Ok(()),
        }
    }

    fn sample<R: Rng>(&self, rng: &mut R) -> f64 {
        match *self {
            Dist::Exponential { rate } => Exp::new(rate).expect("checked rate").sample(rng),
            Dist::Constant { value } => value,
            Dist::Erlang { k, mean } => {
                let e = Exp::new(k as f64 / mean).expect("checked mean");
                (0..k).map(|_| e.sample(rng)).sum()
            }
            Dist::DiscreteZipf { sigma } => {
                if rng.random::<f64>() < sigma {
                    1.0
                } else {
                    2.0
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimConfig {
    pub horizon: f64,
    pub warmup_fraction: f64,
    pub seed: u64,
    pub batch_count: usize,
}

impl Default for SimConfig {
    fn default() -> Self {
        Self {
            horizon: 1e6,
            warmup_fraction: 0.1,
            seed: 1,
            batch_count: 20,
        }
    }
}

impl SimConfig {
    pub fn with_horizon(mut self, horizon: f64) -> Self {
        self.horizon = horizon;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    fn check(&self) -> Result<(), SimError> {
        if !(self.horizon > 0.0 && self.horizon.is_finite()) {
            return Err(SimError::InvalidConfig("horizon must be positive".into()));
        }
        if !(0.0..1.0).contains(&self.warmup_fraction) {
            return Err(SimError::InvalidConfig("warm-up fraction must lie in [0, 1)".into()));
        }
        if self.batch_count < 2 {
            return Err(SimError::InvalidConfig("at least two batches are needed".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EventCounts {
    pub arrivals: u64,
    pub services: u64,
    pub preemptions: u64,
    /// Waiting packets overwritten by a fresher one.
    pub discards: u64,
    pub sleeps: u64,
    pub wakeups: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimResult {
    /// Time-average AoS per source.
    pub aos: Vec<Estimate>,
    pub power: Estimate,
    /// Fraction of time per power class, indexed by `PowerClass::index`.
    pub occupancy: [Estimate; 4],
    pub counts: EventCounts,
}

impl SimResult {
    pub fn aos_sum(&self) -> f64 {
        self.aos.iter().map(|e| e.mean).sum()
    }
}

/// Service, wake-up and arrival distributions used by one run.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Timing {
    pub service: Dist,
    pub wakeup: Option<Dist>,
    pub arrivals: Vec<Dist>,
}

impl Timing {
    fn exponential(params: &SystemParams) -> Self {
        Self {
            service: Dist::Exponential { rate: params.service_rate },
            wakeup: (params.wakeup_mean > 0.0).then(|| Dist::Exponential {
                rate: 1.0 / params.wakeup_mean,
            }),
            arrivals: params
                .arrival_rates
                .iter()
                .map(|&rate| Dist::Exponential { rate })
                .collect(),
        }
    }
}

/// Simulation with exponential arrivals, service, idle, sleep and wake-up times.
pub fn run_simulation(params: &SystemParams, policy: PolicySpec, config: &SimConfig) -> Result<SimResult, SimError> {
    params.check().map_err(SimError::InvalidConfig)?;
    config.check()?;
    Ok(engine::run(params, policy, config, &Timing::exponential(params)))
}

/// Simulation with the given service and wake-up distributions. `arrival`
/// replaces the Poisson arrivals of every source when set.
pub fn run_simulation_general(
    params: &SystemParams,
    policy: PolicySpec,
    config: &SimConfig,
    service: Dist,
    wakeup: Dist,
    arrival: Option<Dist>,
) -> Result<SimResult, SimError> {
    params.check().map_err(SimError::InvalidConfig)?;
    config.check()?;
    for (what, d) in [("service", service), ("wake-up", wakeup)] {
        d.check()?;
        if matches!(d, Dist::DiscreteZipf { .. }) {
            return Err(SimError::UnsupportedDistribution(format!(
                "the two-point Zipf family is only available for inter-arrival times, not {what}"
            )));
        }
    }
    if let Some(a) = arrival {
        a.check()?;
    }
    let timing = Timing {
        service,
        wakeup: (wakeup.mean() > 0.0).then_some(wakeup),
        arrivals: match arrival {
            Some(a) => vec![a; params.sources()],
            None => Timing::exponential(params).arrivals,
        },
    };
    Ok(engine::run(params, policy, config, &timing))
}
