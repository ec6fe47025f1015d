use std::fmt;
use std::str::FromStr;

use crate::shs::PowerClass;

/// Power drawn in each server state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLevels {
    pub busy: f64,
    pub idle: f64,
    pub sleep: f64,
    pub wakeup: f64,
}

impl Default for PowerLevels {
    fn default() -> Self {
        Self {
            busy: 1.0,
            idle: 0.5,
            sleep: 0.0,
            wakeup: 0.5,
        }
    }
}

impl PowerLevels {
    pub fn of(&self, class: PowerClass) -> f64 {
        match class {
            PowerClass::Busy => self.busy,
            PowerClass::Idle => self.idle,
            PowerClass::Sleep => self.sleep,
            PowerClass::WakeUp => self.wakeup,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SystemParams {
    /// Per-source Poisson rates λ_i.
    pub arrival_rates: Vec<f64>,
    /// μ.
    pub service_rate: f64,
    /// Mean idle dwell d; zero removes the idle state.
    pub idle_mean: f64,
    /// Mean wake-up time θ; zero removes the wake-up state.
    pub wakeup_mean: f64,
    /// Mean sleep period s.
    pub sleep_mean: f64,
    /// Wake-up threshold N of the N-policy.
    pub n_threshold: u32,
    pub power: PowerLevels,
}

impl SystemParams {
    /// Ideal 1-policy system with default power levels.
    pub fn new(arrival_rates: Vec<f64>, service_rate: f64) -> Self {
        Self {
            arrival_rates,
            service_rate,
            idle_mean: 0.0,
            wakeup_mean: 0.0,
            sleep_mean: 1.0,
            n_threshold: 1,
            power: PowerLevels::default(),
        }
    }

    pub fn single(lambda: f64, mu: f64) -> Self {
        Self::new(vec![lambda], mu)
    }

    pub fn with_idle(mut self, d: f64) -> Self {
        self.idle_mean = d;
        self
    }

    pub fn with_wakeup(mut self, theta: f64) -> Self {
        self.wakeup_mean = theta;
        self
    }

    pub fn with_sleep(mut self, s: f64) -> Self {
        self.sleep_mean = s;
        self
    }

    pub fn with_threshold(mut self, n: u32) -> Self {
        self.n_threshold = n;
        self
    }

    pub fn with_power(mut self, power: PowerLevels) -> Self {
        self.power = power;
        self
    }

    pub fn sources(&self) -> usize {
        self.arrival_rates.len()
    }

    pub fn total_rate(&self) -> f64 {
        self.arrival_rates.iter().sum()
    }

    pub fn sleep_model(&self) -> SleepModel {
        if self.idle_mean == 0.0 && self.wakeup_mean == 0.0 {
            SleepModel::Ideal
        } else {
            SleepModel::NonIdeal
        }
    }

    /// Same system with sources `i` and `j` exchanged.
    pub fn swapped(&self, i: usize, j: usize) -> Self {
        let mut p = self.clone();
        p.arrival_rates.swap(i, j);
        p
    }

    pub fn check(&self) -> Result<(), String> {
        if self.arrival_rates.is_empty() {
            return Err("at least one source is required".into());
        }
        let pos = |v: f64| v > 0.0 && v.is_finite();
        let nonneg = |v: f64| v >= 0.0 && v.is_finite();
        if let Some(i) = self.arrival_rates.iter().position(|&l| !pos(l)) {
            return Err(format!("arrival rate of source {} must be positive", i + 1));
        }
        if !pos(self.service_rate) {
            return Err("service rate must be positive".into());
        }
        if !nonneg(self.idle_mean) || !nonneg(self.wakeup_mean) {
            return Err("idle and wake-up means must be nonnegative".into());
        }
        if !pos(self.sleep_mean) {
            return Err("sleep mean must be positive".into());
        }
        if self.n_threshold == 0 {
            return Err("threshold N must be at least 1".into());
        }
        let p = self.power;
        if ![p.busy, p.idle, p.sleep, p.wakeup].iter().all(|&v| nonneg(v)) {
            return Err("power levels must be nonnegative".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WakeupPolicy {
    /// Wake after `N` arrivals accumulate during sleep; `N` lives in the params.
    NPolicy,
    SingleSleep,
    MultiSleep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preemption {
    /// Any arrival replaces the packet in service.
    LcfsS,
    /// Same-source arrivals replace the packet in service; others wait in a one-slot buffer.
    LcfsW,
    /// Freshest packet per source kept in a FCFS queue.
    LcfsQ,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SleepModel {
    Ideal,
    NonIdeal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PolicySpec {
    pub wakeup: WakeupPolicy,
    pub preemption: Preemption,
}

impl PolicySpec {
    pub fn new(wakeup: WakeupPolicy, preemption: Preemption) -> Self {
        Self { wakeup, preemption }
    }

    pub fn lcfs_s(wakeup: WakeupPolicy) -> Self {
        Self::new(wakeup, Preemption::LcfsS)
    }
}

impl fmt::Display for WakeupPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WakeupPolicy::NPolicy => "n-policy",
            WakeupPolicy::SingleSleep => "single-sleep",
            WakeupPolicy::MultiSleep => "multi-sleep",
        })
    }
}

impl FromStr for WakeupPolicy {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "n-policy" | "npolicy" | "n" => Ok(WakeupPolicy::NPolicy),
            "single-sleep" | "single" => Ok(WakeupPolicy::SingleSleep),
            "multi-sleep" | "multi" => Ok(WakeupPolicy::MultiSleep),
            _ => Err(format!("unknown wake-up policy '{s}'")),
        }
    }
}

impl fmt::Display for Preemption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Preemption::LcfsS => "lcfs-s",
            Preemption::LcfsW => "lcfs-w",
            Preemption::LcfsQ => "lcfs-q",
        })
    }
}

impl FromStr for Preemption {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "lcfs-s" | "s" => Ok(Preemption::LcfsS),
            "lcfs-w" | "w" => Ok(Preemption::LcfsW),
            "lcfs-q" | "q" => Ok(Preemption::LcfsQ),
            _ => Err(format!("unknown preemption strategy '{s}'")),
        }
    }
}
