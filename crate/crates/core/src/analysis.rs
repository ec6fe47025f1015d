//! One evaluation scenario, answered by the solver, the closed forms or the
//! simulator.

use thiserror::Error;

use crate::closed_form::{
    cf_constant_wakeup, cf_single_source, cf_three_source, cf_two_source_lcfs_s, cf_zipf, DomainError,
};
use crate::models::{
    build_constant_wakeup, build_multi_source, build_single_source, build_zipf_arrival, super_source_reduction,
    BuildError,
};
use crate::params::{PolicySpec, Preemption, SleepModel, SystemParams, WakeupPolicy};
use crate::shs::{solve, SolveError};
use crate::sim::{run_simulation, run_simulation_general, Dist, SimConfig, SimError, SimResult};

pub const DEFAULT_PHASES: usize = 256;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnalysisError {
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Sim(#[from] SimError),
}

impl AnalysisError {
    /// True for well-formed requests outside the supported scope.
    pub fn is_unsupported(&self) -> bool {
        matches!(
            self,
            AnalysisError::Build(BuildError::UnsupportedConfig(_) | BuildError::UnsupportedStrategy(_))
                | AnalysisError::Domain(DomainError::NotAvailable(_))
                | AnalysisError::Sim(SimError::UnsupportedDistribution(_))
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WakeupDist {
    #[default]
    Exponential,
    Constant,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum ArrivalDist {
    #[default]
    Poisson,
    /// Inter-arrival time 1 with probability σ, else 2.
    Zipf { sigma: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub aos: Vec<f64>,
    pub power: f64,
}

impl Evaluation {
    pub fn aos_sum(&self) -> f64 {
        self.aos.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub params: SystemParams,
    pub policy: PolicySpec,
    pub wakeup_dist: WakeupDist,
    pub arrival_dist: ArrivalDist,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Family {
    Exponential,
    ConstantWakeup,
    Zipf(f64),
}

fn unsupported(msg: impl Into<String>) -> AnalysisError {
    AnalysisError::Build(BuildError::UnsupportedConfig(msg.into()))
}

impl Scenario {
    pub fn exponential(params: SystemParams, policy: PolicySpec) -> Self {
        Self {
            params,
            policy,
            wakeup_dist: WakeupDist::Exponential,
            arrival_dist: ArrivalDist::Poisson,
        }
    }

    /// Policy column of output records.
    pub fn label(&self) -> String {
        let mut s = self.policy.wakeup.to_string();
        if self.wakeup_dist == WakeupDist::Constant && self.params.wakeup_mean > 0.0 {
            s.push_str("+constant-wakeup");
        }
        if matches!(self.arrival_dist, ArrivalDist::Zipf { .. }) {
            s.push_str("+zipf-arrival");
        }
        s
    }

    fn family(&self) -> Result<Family, AnalysisError> {
        let p = &self.params;
        let constant = self.wakeup_dist == WakeupDist::Constant && p.wakeup_mean > 0.0;
        let one_policy = self.policy.wakeup == WakeupPolicy::NPolicy && p.n_threshold == 1;
        match (constant, self.arrival_dist) {
            (false, ArrivalDist::Poisson) => Ok(Family::Exponential),
            (true, ArrivalDist::Poisson) => {
                if p.sources() != 1 || !one_policy || p.idle_mean != 0.0 {
                    return Err(unsupported(
                        "constant wake-up is analyzed for M = 1 under the 1-policy with d = 0; nearest supported: M = 1, n-policy, N = 1, d = 0",
                    ));
                }
                Ok(Family::ConstantWakeup)
            }
            (false, ArrivalDist::Zipf { sigma }) => {
                if p.sources() != 1 || !one_policy || p.sleep_model() != SleepModel::Ideal {
                    return Err(unsupported(
                        "zipf arrivals are analyzed for M = 1 under the ideal 1-policy; nearest supported: M = 1, n-policy, N = 1, d = 0, theta = 0",
                    ));
                }
                Ok(Family::Zipf(sigma))
            }
            (true, ArrivalDist::Zipf { .. }) => Err(unsupported(
                "constant wake-up with zipf arrivals has no chain; nearest supported: theta = 0",
            )),
        }
    }

    /// SHS solve. `k` is the phase count of phase-type chains.
    pub fn analytic(&self, k: usize) -> Result<Evaluation, AnalysisError> {
        let p = &self.params;
        match self.family()? {
            Family::ConstantWakeup => one(solve(&build_constant_wakeup(p, k)?, &p.power)?),
            Family::Zipf(sigma) => one(solve(&build_zipf_arrival(p, sigma, k)?, &p.power)?),
            Family::Exponential if p.sources() == 1 => {
                one(solve(&build_single_source(p, self.policy.wakeup)?, &p.power)?)
            }
            Family::Exponential => {
                let mut aos = Vec::with_capacity(p.sources());
                let mut power = 0.0;
                for i in 0..p.sources() {
                    let r = solve(&build_multi_source(p, self.policy, i)?, &p.power)?;
                    if i == 0 {
                        power = r.avg_power;
                    }
                    aos.push(r.avg_aos);
                }
                Ok(Evaluation { aos, power })
            }
        }
    }

    /// Closed-form value, where one exists.
    pub fn closed_form(&self) -> Result<Evaluation, AnalysisError> {
        let p = &self.params;
        let w = self.policy.wakeup;
        let from_single = |c: crate::closed_form::ClosedForm| Evaluation { aos: vec![c.aos], power: c.power };
        match self.family()? {
            Family::ConstantWakeup => Ok(from_single(cf_constant_wakeup(p)?)),
            Family::Zipf(sigma) => Ok(from_single(cf_zipf(p.service_rate, sigma, &p.power)?)),
            Family::Exponential => {
                p.check().map_err(DomainError::InvalidParams)?;
                let m = p.sources();
                if m == 1 {
                    return Ok(from_single(cf_single_source(p, w, false)?));
                }
                if m == 3 && w == WakeupPolicy::NPolicy {
                    let r = cf_three_source(p, self.policy.preemption)?;
                    return Ok(Evaluation { aos: r.aos, power: r.power });
                }
                if self.policy.preemption != Preemption::LcfsS {
                    return Err(DomainError::NotAvailable(format!(
                        "no closed form for {} with M = {m} under {w}",
                        self.policy.preemption
                    ))
                    .into());
                }
                if m == 2 {
                    let r = cf_two_source_lcfs_s(p, w)?;
                    return Ok(Evaluation { aos: r.aos, power: r.power });
                }
                // Merge the other sources into one, once per tracked source.
                let mut aos = Vec::with_capacity(m);
                let mut power = 0.0;
                for i in 0..m {
                    let reduced = super_source_reduction(&p.swapped(0, i), Preemption::LcfsS)?;
                    let r = cf_two_source_lcfs_s(&reduced, w)?;
                    power = r.power;
                    aos.push(r.aos[0]);
                }
                Ok(Evaluation { aos, power })
            }
        }
    }

    pub fn simulate(&self, config: &SimConfig) -> Result<SimResult, AnalysisError> {
        let p = &self.params;
        if self.wakeup_dist == WakeupDist::Exponential && self.arrival_dist == ArrivalDist::Poisson {
            return Ok(run_simulation(p, self.policy, config)?);
        }
        let wakeup = match self.wakeup_dist {
            WakeupDist::Exponential if p.wakeup_mean > 0.0 => Dist::Exponential { rate: 1.0 / p.wakeup_mean },
            _ => Dist::Constant { value: p.wakeup_mean },
        };
        let arrival = match self.arrival_dist {
            ArrivalDist::Poisson => None,
            ArrivalDist::Zipf { sigma } => Some(Dist::DiscreteZipf { sigma }),
        };
        let service = Dist::Exponential { rate: p.service_rate };
        Ok(run_simulation_general(p, self.policy, config, service, wakeup, arrival)?)
    }
}

fn one(r: crate::shs::AgeEnergyResult) -> Result<Evaluation, AnalysisError> {
    Ok(Evaluation {
        aos: vec![r.avg_aos],
        power: r.avg_power,
    })
}
