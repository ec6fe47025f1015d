//! Config-driven evaluation, parameter sweeps and trade-off tables.
//!
//! Points are evaluated in parallel and emitted in sweep order: series axes
//! outermost in file order, then the sweep axis, then the evaluation modes.

mod config;
mod csv;

use std::fmt;
use std::io;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

pub use config::parse_config;
pub use csv::{csv_header, write_csv};

use crate::analysis::{AnalysisError, ArrivalDist, Evaluation, Scenario, WakeupDist};
use crate::params::{PolicySpec, SystemParams, WakeupPolicy};
use crate::sim::{sample_path_export, PathRecord, SimConfig, SimResult};

#[derive(Debug, Error)]
pub enum RunError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("{0}")]
    Failed(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl RunError {
    /// 2 for unsupported configurations, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Unsupported(_) => 2,
            _ => 1,
        }
    }
}

impl From<AnalysisError> for RunError {
    fn from(e: AnalysisError) -> Self {
        use crate::models::BuildError;
        use crate::sim::SimError;
        if e.is_unsupported() {
            return RunError::Unsupported(e.to_string());
        }
        match e {
            AnalysisError::Build(BuildError::InvalidParams(m)) | AnalysisError::Sim(SimError::InvalidConfig(m)) => {
                RunError::Parse(m)
            }
            other => RunError::Failed(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalMode {
    Analytic,
    ClosedForm,
    Simulate,
    All,
}

impl EvalMode {
    fn expand(self) -> &'static [EvalMode] {
        match self {
            EvalMode::Analytic => &[EvalMode::Analytic],
            EvalMode::ClosedForm => &[EvalMode::ClosedForm],
            EvalMode::Simulate => &[EvalMode::Simulate],
            EvalMode::All => &[EvalMode::Analytic, EvalMode::ClosedForm, EvalMode::Simulate],
        }
    }
}

impl fmt::Display for EvalMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EvalMode::Analytic => "analytic",
            EvalMode::ClosedForm => "closed_form",
            EvalMode::Simulate => "simulate",
            EvalMode::All => "all",
        })
    }
}

impl FromStr for EvalMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "analytic" => Ok(EvalMode::Analytic),
            "closed_form" | "closed-form" => Ok(EvalMode::ClosedForm),
            "simulate" => Ok(EvalMode::Simulate),
            "all" => Ok(EvalMode::All),
            other => Err(format!("unknown mode {other:?}; expected analytic, closed_form, simulate or all")),
        }
    }
}

/// One parameter point of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    pub params: SystemParams,
    pub policy: PolicySpec,
    pub wakeup_dist: WakeupDist,
    pub zipf: bool,
    pub sigma: f64,
}

impl Default for Point {
    fn default() -> Self {
        Self {
            params: SystemParams::new(Vec::new(), 1.0),
            policy: PolicySpec::lcfs_s(WakeupPolicy::NPolicy),
            wakeup_dist: WakeupDist::Exponential,
            zipf: false,
            sigma: 1.0,
        }
    }
}

impl Point {
    pub fn scenario(&self) -> Scenario {
        Scenario {
            params: self.params.clone(),
            policy: self.policy,
            wakeup_dist: self.wakeup_dist,
            arrival_dist: if self.zipf {
                ArrivalDist::Zipf { sigma: self.sigma }
            } else {
                ArrivalDist::Poisson
            },
        }
    }

    fn check(&self) -> Result<(), String> {
        self.params.check()?;
        if self.zipf && !(self.sigma > 0.0 && self.sigma <= 1.0) {
            return Err(format!("sigma must lie in (0, 1], got {}", self.sigma));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub base: Point,
    pub mode: EvalMode,
    pub k_phases: usize,
    pub sim: SimConfig,
    /// Outer axes, outermost first.
    pub series: Vec<(String, Vec<String>)>,
    pub sweep: Option<(String, Vec<String>)>,
}

impl SweepSpec {
    /// All sweep points in output order. Fails if any point violates the
    /// parameter invariants.
    pub fn points(&self) -> Result<Vec<Point>, RunError> {
        let mut pts = vec![self.base.clone()];
        for (name, values) in self.series.iter().chain(self.sweep.iter()) {
            let mut next = Vec::with_capacity(pts.len() * values.len());
            for p in &pts {
                for v in values {
                    let mut q = p.clone();
                    config::apply(&mut q, name, v).map_err(|e| RunError::Parse(format!("{name} = {v}: {e}")))?;
                    next.push(q);
                }
            }
            pts = next;
        }
        for p in &pts {
            p.check().map_err(|e| RunError::Parse(format!("invalid sweep point: {e}")))?;
        }
        Ok(pts)
    }

    pub fn base_point(&self) -> Result<Point, RunError> {
        self.base.check().map_err(RunError::Parse)?;
        Ok(self.base.clone())
    }
}

/// One output row.
#[derive(Debug, Clone, PartialEq)]
pub struct TradeoffRecord {
    pub policy: String,
    pub strategy: String,
    pub lambdas: Vec<f64>,
    pub mu: f64,
    pub d: f64,
    pub theta: f64,
    pub s: f64,
    pub n: u32,
    /// Evaluation mode, or `<mode>:unsupported` / `<mode>:error` with empty metrics.
    pub mode: String,
    pub aos: Vec<f64>,
    pub power: Option<f64>,
    pub ci_aos: Vec<f64>,
    pub ci_power: Option<f64>,
    pub seed: Option<u64>,
    /// Reason for an unsupported or failed row; not written to CSV.
    pub note: Option<String>,
}

impl TradeoffRecord {
    fn blank(point: &Point, mode: EvalMode) -> Self {
        let p = &point.params;
        Self {
            policy: point.scenario().label(),
            strategy: point.policy.preemption.to_string(),
            lambdas: p.arrival_rates.clone(),
            mu: p.service_rate,
            d: p.idle_mean,
            theta: p.wakeup_mean,
            s: p.sleep_mean,
            n: p.n_threshold,
            mode: mode.to_string(),
            aos: Vec::new(),
            power: None,
            ci_aos: Vec::new(),
            ci_power: None,
            seed: None,
            note: None,
        }
    }

    fn from_eval(point: &Point, mode: EvalMode, e: Evaluation) -> Self {
        Self {
            aos: e.aos,
            power: Some(e.power),
            ..Self::blank(point, mode)
        }
    }

    fn from_sim(point: &Point, r: &SimResult, seed: u64) -> Self {
        Self {
            aos: r.aos.iter().map(|e| e.mean).collect(),
            power: Some(r.power.mean),
            ci_aos: r.aos.iter().map(|e| e.half_width).collect(),
            ci_power: Some(r.power.half_width),
            seed: Some(seed),
            ..Self::blank(point, EvalMode::Simulate)
        }
    }

    fn failed(point: &Point, mode: EvalMode, e: &AnalysisError) -> Self {
        let tag = if e.is_unsupported() { "unsupported" } else { "error" };
        Self {
            mode: format!("{mode}:{tag}"),
            note: Some(e.to_string()),
            ..Self::blank(point, mode)
        }
    }

    pub fn sources(&self) -> usize {
        self.lambdas.len()
    }

    pub fn aos_sum(&self) -> Option<f64> {
        (!self.aos.is_empty()).then(|| self.aos.iter().sum())
    }

    pub fn is_ok(&self) -> bool {
        self.power.is_some()
    }
}

fn evaluate(point: &Point, mode: EvalMode, spec: &SweepSpec) -> TradeoffRecord {
    let sc = point.scenario();
    let r = match mode {
        EvalMode::Analytic => sc.analytic(spec.k_phases).map(|e| TradeoffRecord::from_eval(point, mode, e)),
        EvalMode::ClosedForm => sc.closed_form().map(|e| TradeoffRecord::from_eval(point, mode, e)),
        EvalMode::Simulate => sc
            .simulate(&spec.sim)
            .map(|r| TradeoffRecord::from_sim(point, &r, spec.sim.seed)),
        EvalMode::All => unreachable!("expanded by the caller"),
    };
    r.unwrap_or_else(|e| TradeoffRecord::failed(point, mode, &e))
}

/// Evaluates every point in every mode; unsupported points become tagged rows.
pub fn cmd_sweep(spec: &SweepSpec) -> Result<Vec<TradeoffRecord>, RunError> {
    let points = spec.points()?;
    let modes = spec.mode.expand();
    let jobs: Vec<(&Point, EvalMode)> = points.iter().flat_map(|p| modes.iter().map(move |&m| (p, m))).collect();
    Ok(jobs.par_iter().map(|&(p, m)| evaluate(p, m, spec)).collect())
}

/// Relative deviation of the closed form from the solver: per source, then power.
#[derive(Debug, Clone, PartialEq)]
pub struct Deviation {
    pub aos: Vec<f64>,
    pub power: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnalyzeReport {
    pub analytic: TradeoffRecord,
    pub closed_form: Option<TradeoffRecord>,
    pub deviation: Option<Deviation>,
}

fn rel(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        (a - b).abs() / b.abs()
    }
}

/// Solver values at the base point, optionally with the closed form.
pub fn cmd_analyze(spec: &SweepSpec, with_closed_form: bool) -> Result<AnalyzeReport, RunError> {
    let point = spec.base_point()?;
    let sc = point.scenario();
    let a = sc.analytic(spec.k_phases)?;
    let analytic = TradeoffRecord::from_eval(&point, EvalMode::Analytic, a.clone());
    if !with_closed_form {
        return Ok(AnalyzeReport { analytic, closed_form: None, deviation: None });
    }
    let (closed_form, deviation) = match sc.closed_form() {
        Ok(c) => {
            let dev = Deviation {
                aos: c.aos.iter().zip(&a.aos).map(|(x, y)| rel(*x, *y)).collect(),
                power: rel(c.power, a.power),
            };
            (TradeoffRecord::from_eval(&point, EvalMode::ClosedForm, c), Some(dev))
        }
        Err(e) => (TradeoffRecord::failed(&point, EvalMode::ClosedForm, &e), None),
    };
    Ok(AnalyzeReport { analytic, closed_form: Some(closed_form), deviation })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimulateReport {
    pub simulated: TradeoffRecord,
    pub against: Option<TradeoffRecord>,
    /// `|sim - analytic| / half-width` per source, then power.
    pub z_aos: Vec<f64>,
    pub z_power: Option<f64>,
}

/// Simulation at the base point; `against` adds z-scores versus the solver.
pub fn cmd_simulate(spec: &SweepSpec, against: bool) -> Result<SimulateReport, RunError> {
    let point = spec.base_point()?;
    let sc = point.scenario();
    let r = sc.simulate(&spec.sim)?;
    let simulated = TradeoffRecord::from_sim(&point, &r, spec.sim.seed);
    let mut rep = SimulateReport { simulated, against: None, z_aos: Vec::new(), z_power: None };
    if against {
        match sc.analytic(spec.k_phases) {
            Ok(a) => {
                rep.z_aos = r.aos.iter().zip(&a.aos).map(|(e, x)| e.z(*x)).collect();
                rep.z_power = Some(r.power.z(a.power));
                rep.against = Some(TradeoffRecord::from_eval(&point, EvalMode::Analytic, a));
            }
            Err(e) => rep.against = Some(TradeoffRecord::failed(&point, EvalMode::Analytic, &e)),
        }
    }
    Ok(rep)
}

/// Analytic, closed-form and simulated rows at the base point.
pub fn cmd_compare(spec: &SweepSpec) -> Result<Vec<TradeoffRecord>, RunError> {
    let point = spec.base_point()?;
    let rows: Vec<TradeoffRecord> = EvalMode::All
        .expand()
        .par_iter()
        .map(|&m| evaluate(&point, m, spec))
        .collect();
    if rows.iter().all(|r| !r.is_ok()) {
        let why = rows[0].note.clone().unwrap_or_default();
        return Err(RunError::Unsupported(why));
    }
    Ok(rows)
}

/// Sample-path event log at the base point.
pub fn cmd_paths(spec: &SweepSpec, max_events: usize) -> Result<Vec<PathRecord>, RunError> {
    let point = spec.base_point()?;
    if point.zipf || (point.wakeup_dist == WakeupDist::Constant && point.params.wakeup_mean > 0.0) {
        return Err(RunError::Unsupported(
            "sample paths use exponential timing; nearest supported: wakeup_dist = exponential, arrival_dist = poisson"
                .into(),
        ));
    }
    sample_path_export(&point.params, point.policy, &spec.sim, max_events).map_err(|e| RunError::Parse(e.to_string()))
}
