use std::collections::VecDeque;
use std::fmt;
use std::io::{self, Write};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::stats::Estimate;
use super::{Dist, EventCounts, SimConfig, SimError, SimResult, Timing};
use crate::params::{PolicySpec, Preemption, SystemParams, WakeupPolicy};
use crate::shs::PowerClass;

const SERVICE_STREAM: u64 = 0;
const TIMER_STREAM: u64 = 1;
const FIRST_SOURCE_STREAM: u64 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Busy,
    Idle,
    IdleAfterWake,
    Sleep,
    WakeUp,
}

impl Mode {
    fn class(self) -> PowerClass {
        match self {
            Mode::Busy => PowerClass::Busy,
            Mode::Idle | Mode::IdleAfterWake => PowerClass::Idle,
            Mode::Sleep => PowerClass::Sleep,
            Mode::WakeUp => PowerClass::WakeUp,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Mode::Busy => "B",
            Mode::Idle => "ID",
            Mode::IdleAfterWake => "ID0",
            Mode::Sleep => "SL",
            Mode::WakeUp => "WK",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EventKind {
    Arrival,
    /// Arrival that replaced the packet in service.
    Preemption,
    Departure,
    IdleEnd,
    SleepEnd,
    WakeupEnd,
}

impl fmt::Display for EventKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EventKind::Arrival => "arrival",
            EventKind::Preemption => "preemption",
            EventKind::Departure => "departure",
            EventKind::IdleEnd => "idle_end",
            EventKind::SleepEnd => "sleep_end",
            EventKind::WakeupEnd => "wakeup_end",
        })
    }
}

/// One event of a sample path with every source's age just before and after it.
#[derive(Debug, Clone, PartialEq)]
pub struct PathRecord {
    pub time: f64,
    pub kind: EventKind,
    /// Arriving or departing source, zero-based.
    pub source: Option<usize>,
    /// Server state after the event.
    pub server: &'static str,
    pub aos_before: Vec<f64>,
    pub aos_after: Vec<f64>,
}

#[derive(Debug, Clone, Copy)]
struct Packet {
    src: usize,
    generated: f64,
}

#[derive(Debug, Clone, Copy)]
enum Next {
    Arrival(usize),
    Departure,
    Timer,
}

/// Time integrals split into equal batches after the warm-up period.
struct Batches {
    start: f64,
    len: f64,
    count: usize,
    age: Vec<Vec<f64>>,
    energy: Vec<f64>,
    occupancy: Vec<[f64; 4]>,
}

impl Batches {
    fn new(config: &SimConfig, sources: usize) -> Self {
        let start = config.horizon * config.warmup_fraction;
        let count = config.batch_count;
        Self {
            start,
            len: (config.horizon - start) / count as f64,
            count,
            age: vec![vec![0.0; sources]; count],
            energy: vec![0.0; count],
            occupancy: vec![[0.0; 4]; count],
        }
    }

    /// Batch containing `t` and the time it ends; `None` during warm-up.
    fn locate(&self, t: f64) -> (Option<usize>, f64) {
        if t < self.start {
            return (None, self.start);
        }
        let mut i = (((t - self.start) / self.len) as usize).min(self.count - 1);
        let end = |i: usize| {
            if i + 1 == self.count {
                f64::INFINITY
            } else {
                self.start + (i + 1) as f64 * self.len
            }
        };
        while end(i) <= t {
            i += 1;
        }
        (Some(i), end(i))
    }
}

struct Sim<'a> {
    p: &'a SystemParams,
    policy: PolicySpec,
    timing: &'a Timing,
    idle_exp: Option<Dist>,
    sleep_exp: Dist,

    t: f64,
    mode: Mode,
    slept_arrivals: u32,
    content: VecDeque<Packet>,
    next_arrival: Vec<f64>,
    service_end: f64,
    timer: f64,
    latest: Vec<f64>,
    unsync_since: Vec<Option<f64>>,

    source_rng: Vec<ChaCha8Rng>,
    service_rng: ChaCha8Rng,
    timer_rng: ChaCha8Rng,
    counts: EventCounts,
    batches: Option<Batches>,
}

fn stream(seed: u64, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

impl<'a> Sim<'a> {
    fn new(p: &'a SystemParams, policy: PolicySpec, timing: &'a Timing, seed: u64) -> Self {
        let m = p.sources();
        let mut source_rng: Vec<ChaCha8Rng> = (0..m as u64)
            .map(|j| stream(seed, FIRST_SOURCE_STREAM + j))
            .collect();
        let next_arrival = timing
            .arrivals
            .iter()
            .zip(source_rng.iter_mut())
            .map(|(d, rng)| d.sample(rng))
            .collect();
        let mut sim = Self {
            p,
            policy,
            timing,
            idle_exp: (p.idle_mean > 0.0).then(|| Dist::Exponential { rate: 1.0 / p.idle_mean }),
            sleep_exp: Dist::Exponential { rate: 1.0 / p.sleep_mean },
            t: 0.0,
            mode: Mode::Sleep,
            slept_arrivals: 0,
            content: VecDeque::with_capacity(m),
            next_arrival,
            service_end: f64::INFINITY,
            timer: f64::INFINITY,
            latest: vec![f64::NEG_INFINITY; m],
            unsync_since: vec![None; m],
            source_rng,
            service_rng: stream(seed, SERVICE_STREAM),
            timer_rng: stream(seed, TIMER_STREAM),
            counts: EventCounts::default(),
            batches: None,
        };
        sim.enter_sleep();
        sim
    }

    fn ages(&self) -> Vec<f64> {
        self.unsync_since
            .iter()
            .map(|u| u.map_or(0.0, |u| self.t - u))
            .collect()
    }

    fn next_event(&self) -> (f64, Next) {
        let mut best = (f64::INFINITY, Next::Timer);
        for (j, &t) in self.next_arrival.iter().enumerate() {
            if t < best.0 {
                best = (t, Next::Arrival(j));
            }
        }
        if self.service_end < best.0 {
            best = (self.service_end, Next::Departure);
        }
        if self.timer < best.0 {
            best = (self.timer, Next::Timer);
        }
        best
    }

    fn advance(&mut self, to: f64) {
        if let Some(b) = self.batches.as_mut() {
            let power = self.p.power.of(self.mode.class());
            let class = self.mode.class().index();
            let mut a = self.t;
            while a < to {
                let (idx, end) = b.locate(a);
                let e = to.min(end);
                if let Some(i) = idx {
                    let dt = e - a;
                    for (acc, u) in b.age[i].iter_mut().zip(&self.unsync_since) {
                        if let Some(u) = u {
                            *acc += dt * (0.5 * (a + e) - u);
                        }
                    }
                    b.energy[i] += power * dt;
                    b.occupancy[i][class] += dt;
                }
                a = e;
            }
        }
        self.t = to;
    }

    fn handle(&mut self, ev: Next) -> (EventKind, Option<usize>) {
        match ev {
            Next::Arrival(j) => {
                let kind = if self.arrival(j) { EventKind::Preemption } else { EventKind::Arrival };
                (kind, Some(j))
            }
            Next::Departure => {
                let src = self.departure();
                (EventKind::Departure, Some(src))
            }
            Next::Timer => (self.timer_expired(), None),
        }
    }

    fn start_service(&mut self) {
        self.mode = Mode::Busy;
        self.service_end = self.t + self.timing.service.sample(&mut self.service_rng);
    }

    fn enter_sleep(&mut self) {
        self.counts.sleeps += 1;
        self.mode = Mode::Sleep;
        self.slept_arrivals = 0;
        self.timer = match self.policy.wakeup {
            WakeupPolicy::NPolicy => f64::INFINITY,
            _ => self.t + self.sleep_exp.sample(&mut self.timer_rng),
        };
    }

    fn begin_wakeup(&mut self) {
        self.counts.wakeups += 1;
        self.timer = f64::INFINITY;
        match self.timing.wakeup {
            Some(d) => {
                self.mode = Mode::WakeUp;
                self.timer = self.t + d.sample(&mut self.timer_rng);
            }
            None => self.finish_wakeup(),
        }
    }

    fn finish_wakeup(&mut self) {
        self.timer = f64::INFINITY;
        if self.content.is_empty() {
            self.mode = Mode::IdleAfterWake;
        } else {
            self.start_service();
        }
    }

    /// Returns whether the packet in service was preempted.
    fn arrival(&mut self, j: usize) -> bool {
        let t = self.t;
        self.counts.arrivals += 1;
        self.latest[j] = t;
        if self.unsync_since[j].is_none() {
            self.unsync_since[j] = Some(t);
        }
        self.next_arrival[j] = t + self.timing.arrivals[j].sample(&mut self.source_rng[j]);

        let pkt = Packet { src: j, generated: t };
        let c = &mut self.content;
        let head_replaced = if c.is_empty() {
            c.push_back(pkt);
            false
        } else {
            match self.policy.preemption {
                Preemption::LcfsS => {
                    c[0] = pkt;
                    true
                }
                _ if c[0].src == j => {
                    c[0] = pkt;
                    true
                }
                Preemption::LcfsW => {
                    if c.len() > 1 {
                        c[1] = pkt;
                        self.counts.discards += 1;
                    } else {
                        c.push_back(pkt);
                    }
                    false
                }
                Preemption::LcfsQ => {
                    match c.iter().position(|q| q.src == j) {
                        Some(pos) => {
                            c[pos] = pkt;
                            self.counts.discards += 1;
                        }
                        None => c.push_back(pkt),
                    }
                    false
                }
            }
        };
        let preempted = head_replaced && self.mode == Mode::Busy;
        if preempted {
            self.counts.preemptions += 1;
            self.start_service();
        } else if head_replaced {
            self.counts.discards += 1;
        }

        match self.mode {
            Mode::Busy | Mode::WakeUp => {}
            Mode::Idle | Mode::IdleAfterWake => {
                self.timer = f64::INFINITY;
                self.start_service();
            }
            Mode::Sleep => {
                if self.policy.wakeup == WakeupPolicy::NPolicy {
                    self.slept_arrivals += 1;
                    if self.slept_arrivals >= self.p.n_threshold {
                        self.begin_wakeup();
                    }
                }
            }
        }
        preempted
    }

    fn departure(&mut self) -> usize {
        self.service_end = f64::INFINITY;
        let pkt = self.content.pop_front().expect("busy server holds a packet");
        self.counts.services += 1;
        if pkt.generated >= self.latest[pkt.src] {
            self.unsync_since[pkt.src] = None;
        }
        if !self.content.is_empty() {
            self.start_service();
        } else if let Some(d) = self.idle_exp {
            self.mode = Mode::Idle;
            self.timer = self.t + d.sample(&mut self.timer_rng);
        } else {
            self.enter_sleep();
        }
        pkt.src
    }

    fn timer_expired(&mut self) -> EventKind {
        self.timer = f64::INFINITY;
        match self.mode {
            Mode::Idle => {
                self.enter_sleep();
                EventKind::IdleEnd
            }
            Mode::Sleep => {
                match self.policy.wakeup {
                    WakeupPolicy::MultiSleep if self.content.is_empty() => self.enter_sleep(),
                    _ => self.begin_wakeup(),
                }
                EventKind::SleepEnd
            }
            Mode::WakeUp => {
                self.finish_wakeup();
                EventKind::WakeupEnd
            }
            Mode::Busy | Mode::IdleAfterWake => unreachable!("no timer runs in {:?}", self.mode),
        }
    }
}

pub(crate) fn run(p: &SystemParams, policy: PolicySpec, config: &SimConfig, timing: &Timing) -> SimResult {
    let mut sim = Sim::new(p, policy, timing, config.seed);
    sim.batches = Some(Batches::new(config, p.sources()));
    loop {
        let (te, ev) = sim.next_event();
        if te > config.horizon {
            sim.advance(config.horizon);
            break;
        }
        sim.advance(te);
        sim.handle(ev);
    }

    let b = sim.batches.take().expect("batches set above");
    let per_batch = |f: &dyn Fn(usize) -> f64| -> Estimate {
        let xs: Vec<f64> = (0..b.count).map(|i| f(i) / b.len).collect();
        Estimate::from_batches(&xs)
    };
    let aos = (0..p.sources()).map(|j| per_batch(&|i| b.age[i][j])).collect();
    let power = per_batch(&|i| b.energy[i]);
    let occupancy = [0, 1, 2, 3].map(|c| per_batch(&|i| b.occupancy[i][c]));
    SimResult {
        aos,
        power,
        occupancy,
        counts: sim.counts,
    }
}

/// Event-by-event sample path from time zero, with exponential timing.
pub fn sample_path_export(
    params: &SystemParams,
    policy: PolicySpec,
    config: &SimConfig,
    max_events: usize,
) -> Result<Vec<PathRecord>, SimError> {
    params.check().map_err(SimError::InvalidConfig)?;
    if max_events > 1_000_000 {
        return Err(SimError::InvalidConfig("max_events is limited to 1e6".into()));
    }
    let timing = Timing::exponential(params);
    let mut sim = Sim::new(params, policy, &timing, config.seed);
    let mut out = Vec::with_capacity(max_events.min(1 << 16));
    while out.len() < max_events {
        let (te, ev) = sim.next_event();
        if te > config.horizon {
            break;
        }
        sim.advance(te);
        let aos_before = sim.ages();
        let (kind, source) = sim.handle(ev);
        out.push(PathRecord {
            time: te,
            kind,
            source,
            server: sim.mode.label(),
            aos_before,
            aos_after: sim.ages(),
        });
    }
    Ok(out)
}

/// Writes records as comma-separated lines after a `#` header line.
pub fn write_event_log<W: Write>(records: &[PathRecord], sources: usize, mut w: W) -> io::Result<()> {
    write!(w, "# time,kind,source,server")?;
    for j in 1..=sources {
        write!(w, ",aos_pre_{j},aos_post_{j}")?;
    }
    writeln!(w)?;
    for r in records {
        let src = r.source.map_or(String::new(), |s| (s + 1).to_string());
        write!(w, "{:.9},{},{},{}", r.time, r.kind, src, r.server)?;
        for (a, b) in r.aos_before.iter().zip(&r.aos_after) {
            write!(w, ",{a:.9},{b:.9}")?;
        }
        writeln!(w)?;
    }
    Ok(())
}
