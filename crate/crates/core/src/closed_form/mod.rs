//! Closed-form average AoS and power.
//!
//! These are evaluated independently of the chain solver and serve as its
//! oracle. The high-degree multi-source results are rational functions whose
//! coefficient polynomials are stored as monomial tables in [`tables`].
//! Double precision is adequate for rate ratios up to about 1e6; beyond that,
//! prefer the solver.

mod tables;

use thiserror::Error;

use crate::params::{PowerLevels, Preemption, SleepModel, SystemParams, WakeupPolicy};

/// One monomial: integer coefficient and per-variable exponents.
pub(crate) type Term<const N: usize> = (i64, [u8; N]);

fn eval_poly<const N: usize>(terms: &[Term<N>], x: &[f64; N]) -> f64 {
    terms
        .iter()
        .map(|(c, e)| {
            let mut v = *c as f64;
            for (xi, ei) in x.iter().zip(e) {
                if *ei > 0 {
                    v *= xi.powi(*ei as i32);
                }
            }
            v
        })
        .sum()
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DomainError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("no closed form for this configuration: {0}")]
    NotAvailable(String),
    #[error("zero denominator in {0}")]
    ZeroDenominator(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedForm {
    pub aos: f64,
    pub power: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MultiClosedForm {
    /// Average AoS per source.
    pub aos: Vec<f64>,
    pub power: f64,
}

/// η and γ coefficients of a rational closed form, already evaluated.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormCoefficients {
    pub eta: Vec<f64>,
    pub gamma: Vec<f64>,
}

fn ratio(num: f64, den: f64, what: &'static str) -> Result<f64, DomainError> {
    if den == 0.0 || !den.is_finite() {
        Err(DomainError::ZeroDenominator(what))
    } else {
        Ok(num / den)
    }
}

fn check(params: &SystemParams, sources: usize) -> Result<(), DomainError> {
    params.check().map_err(DomainError::InvalidParams)?;
    if params.sources() != sources {
        return Err(DomainError::InvalidParams(format!(
            "expected M = {sources}, got M = {}",
            params.sources()
        )));
    }
    Ok(())
}

fn require_ideal(params: &SystemParams) -> Result<(), DomainError> {
    if params.sleep_model() != SleepModel::Ideal {
        return Err(DomainError::NotAvailable(
            "multi-source closed forms exist for the ideal sleep model only".into(),
        ));
    }
    Ok(())
}

/// Single-source results. With `ideal` set, the ideal-model expressions
/// are used and `d`, `θ` are ignored.
pub fn cf_single_source(params: &SystemParams, wakeup: WakeupPolicy, ideal: bool) -> Result<ClosedForm, DomainError> {
    check(params, 1)?;
    let lam = params.arrival_rates[0];
    let mu = params.service_rate;
    let s = params.sleep_mean;
    let pw = &params.power;
    match (wakeup, ideal) {
        (WakeupPolicy::NPolicy, false) => n_policy(lam, mu, params.idle_mean, params.wakeup_mean, params.n_threshold, pw),
        (WakeupPolicy::NPolicy, true) => n_policy_ideal(lam, mu, params.n_threshold, pw),
        (WakeupPolicy::SingleSleep, false) => single_sleep(lam, mu, params.idle_mean, params.wakeup_mean, s, pw),
        (WakeupPolicy::SingleSleep, true) => single_sleep_ideal(lam, mu, s, pw),
        (WakeupPolicy::MultiSleep, false) => multi_sleep(lam, mu, params.idle_mean, params.wakeup_mean, s, pw),
        (WakeupPolicy::MultiSleep, true) => multi_sleep_ideal(lam, mu, s, pw),
    }
}

fn n_policy(lam: f64, mu: f64, d: f64, th: f64, n: u32, pw: &PowerLevels) -> Result<ClosedForm, DomainError> {
    let n = n as f64;
    let den = n / lam + 1.0 / mu + th + d * (1.0 + lam / mu);
    let num = (1.0 + d * lam) / (mu * mu)
        + th / mu
        + th * th
        + n * (n - 1.0) / (2.0 * lam * lam)
        + (n - 1.0) / lam * (th + 1.0 / mu);
    let pnum = (1.0 + d * lam) / mu * pw.busy + d * pw.idle + n / lam * pw.sleep + th * pw.wakeup;
    Ok(ClosedForm {
        aos: ratio(num, den, "n-policy")?,
        power: ratio(pnum, den, "n-policy")?,
    })
}

fn n_policy_ideal(lam: f64, mu: f64, n: u32, pw: &PowerLevels) -> Result<ClosedForm, DomainError> {
    let n = n as f64;
    let den = n / lam + 1.0 / mu;
    let num = n * (n - 1.0) / (2.0 * lam * lam) + (n - 1.0) / (lam * mu) + 1.0 / (mu * mu);
    let pnum = pw.busy / mu + n / lam * pw.sleep;
    Ok(ClosedForm {
        aos: ratio(num, den, "ideal n-policy")?,
        power: ratio(pnum, den, "ideal n-policy")?,
    })
}

fn single_sleep(lam: f64, mu: f64, d: f64, th: f64, s: f64, pw: &PowerLevels) -> Result<ClosedForm, DomainError> {
    let l2 = lam * lam;
    let l3 = l2 * lam;
    let l4 = l3 * lam;
    let b = mu
        + lam
        + d * s * th * l4
        + (d + s + th) * (l2 + mu * lam + s * th * mu * l3)
        + (s * s + th * th + 2.0 * s * th + d * s + d * th) * mu * l2
        + (d * s + s * th + th * d) * l3;
    let c = (mu * mu * l2 * s * th + mu * lam) * (s * s + s * th + th * th)
        + mu * mu * lam * (s * s * s + s * s * th + s * th * th + th * th * th)
        + mu * l2 * s * th * (s + th)
        + l3 * d * s * th
        + l2 * (d * s + s * th + th * d)
        + lam * (d + s + th)
        + 1.0;
    let dd = lam * (s * lam + 1.0) * (th * lam + 1.0);
    let pnum = s * pw.sleep + th * pw.wakeup + (d + 1.0 / dd) * pw.idle + (d * lam + 1.0) / mu * pw.busy;
    Ok(ClosedForm {
        aos: ratio(lam * c, mu * b, "single-sleep")?,
        power: ratio(pnum, b / (mu * dd), "single-sleep")?,
    })
}

fn single_sleep_ideal(lam: f64, mu: f64, s: f64, pw: &PowerLevels) -> Result<ClosedForm, DomainError> {
    let l2 = lam * lam;
    let den = mu * s * s * l2 + s * l2 + mu * s * lam + mu + lam;
    let num = mu * mu * s * s * s * l2 + mu * s * s * l2 + s * l2 + lam;
    let pnum = mu * s * lam * (s * lam + 1.0) * pw.sleep + mu * pw.idle + lam * (s * lam + 1.0) * pw.busy;
    Ok(ClosedForm {
        aos: ratio(num, mu * den, "ideal single-sleep")?,
        power: ratio(pnum, den, "ideal single-sleep")?,
    })
}

fn multi_sleep(lam: f64, mu: f64, d: f64, th: f64, s: f64, pw: &PowerLevels) -> Result<ClosedForm, DomainError> {
    let den = mu + lam + d * lam * lam + d * mu * lam + s * mu * lam + th * mu * lam;
    let num = lam * (s * s * mu * mu + s * th * mu * mu + s * mu + th * th * mu * mu + th * mu + d * lam + 1.0);
    let pnum = mu * (s * lam + 1.0) * pw.sleep
        + th * mu * lam * pw.wakeup
        + lam * (d * lam + 1.0) * pw.busy
        + d * mu * lam * pw.idle;
    Ok(ClosedForm {
        aos: ratio(num, mu * den, "multi-sleep")?,
        power: ratio(pnum, den, "multi-sleep")?,
    })
}

fn multi_sleep_ideal(lam: f64, mu: f64, s: f64, pw: &PowerLevels) -> Result<ClosedForm, DomainError> {
    let den = mu + lam + s * mu * lam;
    let num = lam * (s * s * mu * mu + s * mu + 1.0);
    let pnum = mu * (s * lam + 1.0) * pw.sleep + lam * pw.busy;
    Ok(ClosedForm {
        aos: ratio(num, mu * den, "ideal multi-sleep")?,
        power: ratio(pnum, den, "ideal multi-sleep")?,
    })
}

/// η/γ values of the two-source single-sleep result at `(λ1, λ2, μ, s)`.
pub fn single_sleep_two_source_coefficients(l1: f64, l2: f64, mu: f64, s: f64) -> ClosedFormCoefficients {
    let x = [l1, l2, mu, s];
    ClosedFormCoefficients {
        eta: tables::SINGLE_SLEEP_ETA.iter().map(|p| eval_poly(p, &x)).collect(),
        gamma: tables::SINGLE_SLEEP_GAMMA.iter().map(|p| eval_poly(p, &x)).collect(),
    }
}

/// η values of the two-source multi-sleep result at `(λ1, λ2, μ, s)`.
pub fn multi_sleep_two_source_coefficients(l1: f64, l2: f64, mu: f64, s: f64) -> ClosedFormCoefficients {
    let x = [l1, l2, mu, s];
    ClosedFormCoefficients {
        eta: tables::MULTI_SLEEP_ETA.iter().map(|p| eval_poly(p, &x)).collect(),
        gamma: Vec::new(),
    }
}

/// η/γ values of the three-source LCFS-W result at `(λ1, λ2, λ3)`.
pub fn lcfs_w_three_source_coefficients(l1: f64, l2: f64, l3: f64) -> ClosedFormCoefficients {
    let x = [l1, l2, l3];
    ClosedFormCoefficients {
        eta: tables::PREEMPT_WAIT_ETA.iter().map(|p| eval_poly(p, &x)).collect(),
        gamma: tables::PREEMPT_WAIT_GAMMA.iter().map(|p| eval_poly(p, &x)).collect(),
    }
}

fn two_source_aos(l1: f64, l2: f64, mu: f64, s: f64, wakeup: WakeupPolicy) -> Result<f64, DomainError> {
    let lam = l1 + l2;
    match wakeup {
        WakeupPolicy::NPolicy => ratio(lam * lam + mu * l2, mu * l1 * (mu + lam), "two-source 1-policy"),
        WakeupPolicy::SingleSleep => {
            let c = single_sleep_two_source_coefficients(l1, l2, mu, s);
            let den = mu * l1 * (mu + lam) * (s * lam + 1.0) * horner(&c.gamma, lam);
            ratio(horner(&c.eta, lam), den, "two-source single-sleep")
        }
        WakeupPolicy::MultiSleep => {
            let c = multi_sleep_two_source_coefficients(l1, l2, mu, s);
            let a = s * mu * lam + mu + lam;
            let den = mu * l1 * (mu + lam) * (s * lam + 1.0) * a * (s * l1 * l1 + s * l1 * l2 + a);
            ratio(horner(&c.eta, lam), den, "two-source multi-sleep")
        }
    }
}

/// Two-source LCFS-S under the ideal sleep model (1-policy for the N-policy).
pub fn cf_two_source_lcfs_s(params: &SystemParams, wakeup: WakeupPolicy) -> Result<MultiClosedForm, DomainError> {
    check(params, 2)?;
    require_ideal(params)?;
    if wakeup == WakeupPolicy::NPolicy && params.n_threshold != 1 {
        return Err(DomainError::NotAvailable("two-source n-policy closed form needs N = 1".into()));
    }
    let [l1, l2] = [params.arrival_rates[0], params.arrival_rates[1]];
    let (mu, s) = (params.service_rate, params.sleep_mean);
    let aos = vec![
        two_source_aos(l1, l2, mu, s, wakeup)?,
        two_source_aos(l2, l1, mu, s, wakeup)?,
    ];
    // Power depends on the total rate only and equals the single-source value.
    let single = SystemParams {
        arrival_rates: vec![l1 + l2],
        ..params.clone()
    };
    let power = cf_single_source(&single, wakeup, true)?.power;
    Ok(MultiClosedForm { aos, power })
}

fn three_source_aos(l: [f64; 3], mu: f64, preemption: Preemption) -> Result<f64, DomainError> {
    let [l1, l2, l3] = l;
    let lam = l1 + l2 + l3;
    match preemption {
        Preemption::LcfsS => ratio(lam * lam + mu * l2 + mu * l3, mu * l1 * (mu + lam), "three-source lcfs-s"),
        Preemption::LcfsW => {
            let c = lcfs_w_three_source_coefficients(l1, l2, l3);
            let den = mu * l1 * (mu + l1 + l2) * (mu + l1 + l3) * horner(&c.gamma, mu);
            ratio(horner(&c.eta, mu), den, "three-source lcfs-w")
        }
        Preemption::LcfsQ => {
            let a = lcfs_q_a(l, mu);
            let num = mu * mu * l1 + 3.0 * mu * l1 * l2 + 3.0 * mu * l1 * l3 + 12.0 * l1 * l2 * l3;
            ratio(num, mu * a, "three-source lcfs-q")
        }
    }
}

fn lcfs_q_a(l: [f64; 3], mu: f64) -> f64 {
    let [l1, l2, l3] = l;
    mu * mu * (l1 + l2 + l3) + mu * mu * mu + 2.0 * mu * (l1 * l2 + l1 * l3 + l2 * l3) + 6.0 * l1 * l2 * l3
}

/// Three sources, ideal 1-policy.
pub fn cf_three_source(params: &SystemParams, preemption: Preemption) -> Result<MultiClosedForm, DomainError> {
    check(params, 3)?;
    require_ideal(params)?;
    if params.n_threshold != 1 {
        return Err(DomainError::NotAvailable("three-source closed forms need N = 1".into()));
    }
    let r = &params.arrival_rates;
    let mu = params.service_rate;
    let aos = vec![
        three_source_aos([r[0], r[1], r[2]], mu, preemption)?,
        three_source_aos([r[1], r[2], r[0]], mu, preemption)?,
        three_source_aos([r[2], r[0], r[1]], mu, preemption)?,
    ];
    let pw = &params.power;
    let lam = r[0] + r[1] + r[2];
    let power = match preemption {
        Preemption::LcfsS => ratio(mu * pw.sleep + lam * pw.busy, mu + lam, "three-source lcfs-s")?,
        Preemption::LcfsW => {
            let x = mu * lam + 2.0 * (r[0] * r[1] + r[0] * r[2] + r[1] * r[2]);
            ratio(mu * mu * pw.sleep + x * pw.busy, x + mu * mu, "three-source lcfs-w")?
        }
        Preemption::LcfsQ => {
            let a = lcfs_q_a([r[0], r[1], r[2]], mu);
            let m3 = mu * mu * mu;
            ratio(m3 * pw.sleep + (a - m3) * pw.busy, a, "three-source lcfs-q")?
        }
    };
    Ok(MultiClosedForm { aos, power })
}

/// Constant wake-up time θ, single source, 1-policy, `d = 0`.
///
/// The wake-up interval is charged at the wake-up power level.
pub fn cf_constant_wakeup(params: &SystemParams) -> Result<ClosedForm, DomainError> {
    check(params, 1)?;
    if params.idle_mean != 0.0 {
        return Err(DomainError::NotAvailable("constant wake-up closed form needs d = 0".into()));
    }
    let lam = params.arrival_rates[0];
    let mu = params.service_rate;
    let th = params.wakeup_mean;
    let pw = &params.power;
    let den = 1.0 / lam + 1.0 / mu + th;
    let num = 1.0 / (mu * mu) + th / mu + th * th / 2.0;
    let pnum = pw.sleep / lam + th * pw.wakeup + pw.busy / mu;
    Ok(ClosedForm {
        aos: ratio(num, den, "constant wake-up")?,
        power: ratio(pnum, den, "constant wake-up")?,
    })
}

/// Inter-arrival time T ∈ {1, 2} with P(T = 1) = σ, ideal 1-policy, LCFS-S.
pub fn cf_zipf(mu: f64, sigma: f64, power: &PowerLevels) -> Result<ClosedForm, DomainError> {
    if !(mu > 0.0 && mu.is_finite()) {
        return Err(DomainError::InvalidParams("service rate must be positive".into()));
    }
    if !(sigma > 0.0 && sigma <= 1.0) {
        return Err(DomainError::InvalidParams(format!("sigma must lie in (0, 1], got {sigma}")));
    }
    let e1 = (-mu).exp();
    let e2 = (-2.0 * mu).exp();
    let w = 2.0 - sigma;
    // Probability that the service started by an arrival finishes before the next arrival.
    let done = 1.0 - sigma * e1 - (1.0 - sigma) * e2;
    let aos = done / (w * mu * mu);
    let p_sleep = (mu - 1.0 + e1 + (1.0 - sigma) * (mu - e1 + e2)) / (w * mu);
    let p_busy = (1.0 - e1 + (1.0 - sigma) * (e1 - e2)) / (w * mu);
    Ok(ClosedForm {
        aos,
        power: p_sleep * power.sleep + p_busy * power.busy,
    })
}
