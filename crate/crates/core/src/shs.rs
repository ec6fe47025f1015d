//! Finite-state stochastic hybrid systems with a single age variable.
//!
//! A model is a CTMC over discrete states where the age grows at slope 0 or 1
//! and every transition either keeps the age or resets it to zero. Solving
//! gives the stationary distribution, the age correlation vector and from
//! those the average age and the average power.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::linalg::{lu_solve, Matrix};
use crate::params::PowerLevels;

/// Which power level a discrete state draws.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PowerClass {
    Busy,
    Idle,
    Sleep,
    WakeUp,
}

impl PowerClass {
    pub const ALL: [PowerClass; 4] = [
        PowerClass::Busy,
        PowerClass::Idle,
        PowerClass::Sleep,
        PowerClass::WakeUp,
    ];

    pub fn index(self) -> usize {
        match self {
            PowerClass::Busy => 0,
            PowerClass::Idle => 1,
            PowerClass::Sleep => 2,
            PowerClass::WakeUp => 3,
        }
    }
}

/// Reset map of a transition: keep the age (`A = 1`) or zero it (`A = 0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AgeMap {
    Keep,
    Reset,
}

#[derive(Debug, Clone, PartialEq)]
pub struct State {
    pub label: String,
    /// Age slope is 1 when true, 0 otherwise.
    pub grows: bool,
    pub class: PowerClass,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Transition {
    pub from: usize,
    pub to: usize,
    pub rate: f64,
    pub map: AgeMap,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ShsModel {
    pub states: Vec<State>,
    pub transitions: Vec<Transition>,
    /// Zero-based index of the source whose age this model follows.
    pub tracked_source: Option<usize>,
}

impl ShsModel {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_state(&mut self, label: impl Into<String>, grows: bool, class: PowerClass) -> usize {
        self.states.push(State {
            label: label.into(),
            grows,
            class,
        });
        self.states.len() - 1
    }

    pub fn add_transition(&mut self, from: usize, to: usize, rate: f64, map: AgeMap) {
        self.transitions.push(Transition {
            from,
            to,
            rate,
            map,
        });
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.states.iter().position(|s| s.label == label)
    }

    pub fn labels(&self) -> Vec<&str> {
        self.states.iter().map(|s| s.label.as_str()).collect()
    }

    pub fn reset_count(&self) -> usize {
        self.transitions
            .iter()
            .filter(|t| t.map == AgeMap::Reset)
            .count()
    }

    /// Same chain with every rate multiplied by `c`.
    pub fn scaled(&self, c: f64) -> Self {
        let mut m = self.clone();
        for t in &mut m.transitions {
            t.rate *= c;
        }
        m
    }

    /// Total outgoing rate per state, self-loops included.
    pub fn out_rates(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.len()];
        for t in &self.transitions {
            out[t.from] += t.rate;
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Issue {
    NoStates,
    UnknownState { transition: usize, index: usize },
    NonPositiveRate { transition: usize, rate: f64 },
    NoOutgoing { state: String },
    NoIncoming { state: String },
    NotStronglyConnected { unreachable: Vec<String> },
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::NoStates => write!(f, "model has no states"),
            Issue::UnknownState { transition, index } => {
                write!(f, "transition {transition} references unknown state {index}")
            }
            Issue::NonPositiveRate { transition, rate } => {
                write!(f, "transition {transition} has non-positive rate {rate}")
            }
            Issue::NoOutgoing { state } => write!(f, "dangling state {state}: no outgoing transitions"),
            Issue::NoIncoming { state } => write!(f, "dangling state {state}: no incoming transitions"),
            Issue::NotStronglyConnected { unreachable } => {
                write!(f, "not strongly connected; cut off: {}", unreachable.join(", "))
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn strongly_connected(&self) -> bool {
        !self
            .issues
            .iter()
            .any(|i| matches!(i, Issue::NotStronglyConnected { .. }))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            return write!(f, "valid");
        }
        let msgs: Vec<String> = self.issues.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", msgs.join("; "))
    }
}

pub fn validate_model(model: &ShsModel) -> ValidationReport {
    let mut issues = Vec::new();
    let n = model.len();
    if n == 0 {
        issues.push(Issue::NoStates);
        return ValidationReport { issues };
    }

    let mut fwd = vec![Vec::new(); n];
    let mut rev = vec![Vec::new(); n];
    let mut has_out = vec![false; n];
    let mut has_in = vec![false; n];
    for (l, t) in model.transitions.iter().enumerate() {
        let mut ok = true;
        for idx in [t.from, t.to] {
            if idx >= n {
                issues.push(Issue::UnknownState { transition: l, index: idx });
                ok = false;
            }
        }
        if !(t.rate > 0.0 && t.rate.is_finite()) {
            issues.push(Issue::NonPositiveRate { transition: l, rate: t.rate });
            ok = false;
        }
        if ok && t.from != t.to {
            fwd[t.from].push(t.to);
            rev[t.to].push(t.from);
            has_out[t.from] = true;
            has_in[t.to] = true;
        }
    }
    if n > 1 {
        for (q, s) in model.states.iter().enumerate() {
            if !has_out[q] {
                issues.push(Issue::NoOutgoing { state: s.label.clone() });
            }
            if !has_in[q] {
                issues.push(Issue::NoIncoming { state: s.label.clone() });
            }
        }
    }

    let a = reach(&fwd, 0);
    let b = reach(&rev, 0);
    let cut: Vec<String> = (0..n)
        .filter(|&q| !(a[q] && b[q]))
        .map(|q| model.states[q].label.clone())
        .collect();
    if !cut.is_empty() {
        issues.push(Issue::NotStronglyConnected { unreachable: cut });
    }
    ValidationReport { issues }
}

fn reach(adj: &[Vec<usize>], start: usize) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    while let Some(q) = queue.pop_front() {
        for &p in &adj[q] {
            if !seen[p] {
                seen[p] = true;
                queue.push_back(p);
            }
        }
    }
    seen
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolveError {
    #[error("invalid model: {0}")]
    InvalidModel(ValidationReport),
    #[error("singular linear system while solving for {0}")]
    SingularSystem(&'static str),
    #[error("negative solution {value} in state {state}")]
    NegativeSolution { state: String, value: f64 },
    #[error("{which} residual {residual:e} exceeds tolerance")]
    Residual { which: &'static str, residual: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct StationaryDistribution {
    pub probabilities: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationVector {
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AgeEnergyResult {
    pub avg_aos: f64,
    pub avg_power: f64,
    pub stationary: StationaryDistribution,
    pub correlation: CorrelationVector,
}

const RESIDUAL_TOL: f64 = 1e-10;
const CLAMP_TOL: f64 = 1e-9;

/// Maximum of `|π D − π Q|` over states.
pub fn balance_residual(model: &ShsModel, pi: &[f64]) -> f64 {
    let mut r: Vec<f64> = model
        .out_rates()
        .iter()
        .zip(pi)
        .map(|(o, p)| o * p)
        .collect();
    for t in &model.transitions {
        r[t.to] -= t.rate * pi[t.from];
    }
    r.iter().fold(0.0, |m, v| m.max(v.abs()))
}

/// Maximum residual of the correlation equations.
pub fn correlation_residual(model: &ShsModel, pi: &[f64], v: &[f64]) -> f64 {
    let mut r: Vec<f64> = model
        .out_rates()
        .iter()
        .zip(v)
        .zip(&model.states)
        .zip(pi)
        .map(|(((o, v), s), p)| o * v - if s.grows { *p } else { 0.0 })
        .collect();
    for t in &model.transitions {
        if t.map == AgeMap::Keep {
            r[t.to] -= t.rate * v[t.from];
        }
    }
    r.iter().fold(0.0, |m, v| m.max(v.abs()))
}

fn check(model: &ShsModel) -> Result<(), SolveError> {
    let report = validate_model(model);
    if report.is_valid() {
        Ok(())
    } else {
        Err(SolveError::InvalidModel(report))
    }
}

fn rate_scale(model: &ShsModel) -> f64 {
    model.out_rates().iter().fold(1.0, |m, &v| m.max(v))
}

fn clamp_nonnegative(model: &ShsModel, x: &mut [f64], scale: f64) -> Result<(), SolveError> {
    for (q, v) in x.iter_mut().enumerate() {
        if *v < 0.0 {
            if *v < -CLAMP_TOL * scale {
                return Err(SolveError::NegativeSolution {
                    state: model.states[q].label.clone(),
                    value: *v,
                });
            }
            *v = 0.0;
        }
    }
    Ok(())
}

/// Solves `π D = π Q` with the first balance equation replaced by `Σ π = 1`.
pub fn solve_stationary(model: &ShsModel) -> Result<StationaryDistribution, SolveError> {
    check(model)?;
    let n = model.len();
    let out = model.out_rates();
    // Row q is the balance equation of state q over the unknowns π.
    let mut a = Matrix::zeros(n);
    for (q, o) in out.iter().enumerate() {
        a.add(q, q, *o);
    }
    for t in &model.transitions {
        a.add(t.to, t.from, -t.rate);
    }
    a.set_row(0, 1.0);
    let mut b = vec![0.0; n];
    b[0] = 1.0;
    let mut pi = lu_solve(a, b).ok_or(SolveError::SingularSystem("stationary distribution"))?;
    clamp_nonnegative(model, &mut pi, 1.0)?;

    let res = balance_residual(model, &pi);
    if res > RESIDUAL_TOL * rate_scale(model) {
        return Err(SolveError::Residual {
            which: "balance",
            residual: res,
        });
    }
    Ok(StationaryDistribution { probabilities: pi })
}

/// Solves `v_q out_q = b_q π_q + Σ_{l into q, A_l = 1} rate_l v_{from(l)}`.
pub fn solve_correlation(
    model: &ShsModel,
    pi: &StationaryDistribution,
) -> Result<CorrelationVector, SolveError> {
    check(model)?;
    let n = model.len();
    let out = model.out_rates();
    let mut a = Matrix::zeros(n);
    for (q, o) in out.iter().enumerate() {
        a.add(q, q, *o);
    }
    for t in &model.transitions {
        if t.map == AgeMap::Keep {
            a.add(t.to, t.from, -t.rate);
        }
    }
    let b: Vec<f64> = model
        .states
        .iter()
        .zip(&pi.probabilities)
        .map(|(s, p)| if s.grows { *p } else { 0.0 })
        .collect();
    let mut v = lu_solve(a, b).ok_or(SolveError::SingularSystem("correlation vector"))?;
    let scale = v.iter().fold(1.0, |m: f64, x| m.max(x.abs()));
    clamp_nonnegative(model, &mut v, scale)?;

    let res = correlation_residual(model, &pi.probabilities, &v);
    if res > RESIDUAL_TOL * rate_scale(model) * scale {
        return Err(SolveError::Residual {
            which: "correlation",
            residual: res,
        });
    }
    Ok(CorrelationVector { values: v })
}

pub fn average_aos(v: &CorrelationVector) -> f64 {
    v.values.iter().sum()
}

pub fn average_power(model: &ShsModel, pi: &StationaryDistribution, power: &PowerLevels) -> f64 {
    model
        .states
        .iter()
        .zip(&pi.probabilities)
        .map(|(s, p)| p * power.of(s.class))
        .sum()
}

/// Stationary probability mass per power class, indexed by `PowerClass::index`.
pub fn class_occupancy(model: &ShsModel, pi: &StationaryDistribution) -> [f64; 4] {
    let mut occ = [0.0; 4];
    for (s, p) in model.states.iter().zip(&pi.probabilities) {
        occ[s.class.index()] += p;
    }
    occ
}

/// Full pipeline: validate, solve both linear systems, and reduce.
pub fn solve(model: &ShsModel, power: &PowerLevels) -> Result<AgeEnergyResult, SolveError> {
    let stationary = solve_stationary(model)?;
    let correlation = solve_correlation(model, &stationary)?;
    Ok(AgeEnergyResult {
        avg_aos: average_aos(&correlation),
        avg_power: average_power(model, &stationary, power),
        stationary,
        correlation,
    })
}
