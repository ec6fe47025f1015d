use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use aos_core::sim::write_event_log;
use aos_core::sweep::{
    cmd_analyze, cmd_compare, cmd_paths, cmd_simulate, cmd_sweep, parse_config, write_csv, EvalMode, RunError,
    SweepSpec, TradeoffRecord,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Age of synchronization and power of sleep/wake-up servers.
#[derive(Parser)]
#[command(name = "aos", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Flat key = value config file.
    #[arg(long)]
    config: PathBuf,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Overrides the config's evaluation mode.
    #[arg(long)]
    mode: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    horizon: Option<f64>,
    /// Phase count of phase-type chains.
    #[arg(long)]
    k_phases: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Against {
    Analytic,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the base point of the config.
    Analyze {
        #[command(flatten)]
        common: Common,
        /// Also evaluate the closed form and report the relative deviation.
        #[arg(long)]
        closed_form: bool,
    },
    /// Evaluate every sweep point and write a CSV table.
    Sweep {
        #[command(flatten)]
        common: Common,
    },
    /// Simulate the base point.
    Simulate {
        #[command(flatten)]
        common: Common,
        /// Add z-scores against the solver.
        #[arg(long, value_enum)]
        against: Option<Against>,
    },
    /// Write a sample-path event log.
    Paths {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1000)]
        max_events: usize,
    },
    /// Analytic, closed-form and simulated values at the base point.
    Compare {
        #[command(flatten)]
        common: Common,
    },
}

fn load(c: &Common) -> Result<SweepSpec, RunError> {
    let text = fs::read_to_string(&c.config)
        .map_err(|e| RunError::Parse(format!("cannot read {}: {e}", c.config.display())))?;
    let mut spec = parse_config(&text)?;
    if let Some(m) = &c.mode {
        spec.mode = m.parse::<EvalMode>().map_err(RunError::Parse)?;
    }
    if let Some(s) = c.seed {
        spec.sim.seed = s;
    }
    if let Some(h) = c.horizon {
        spec.sim.horizon = h;
    }
    if let Some(k) = c.k_phases {
        spec.k_phases = k;
    }
    Ok(spec)
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>, RunError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn max_sources(rows: &[TradeoffRecord], spec: &SweepSpec) -> usize {
    rows.iter()
        .map(TradeoffRecord::sources)
        .max()
        .unwrap_or(spec.base.params.sources())
}

fn report(w: &mut dyn Write, r: &TradeoffRecord) -> io::Result<()> {
    writeln!(w, "{} {} {} M={}", r.mode, r.policy, r.strategy, r.sources())?;
    if let Some(note) = &r.note {
        return writeln!(w, "  {note}");
    }
    let ci = |v: Option<&f64>| v.map_or(String::new(), |h| format!(" ± {h}"));
    for (i, a) in r.aos.iter().enumerate() {
        writeln!(w, "  aos_src_{:<3} {a}{}", i + 1, ci(r.ci_aos.get(i)))?;
    }
    if let Some(s) = r.aos_sum() {
        writeln!(w, "  aos_sum     {s}")?;
    }
    if let Some(p) = r.power {
        writeln!(w, "  power       {p}{}", ci(r.ci_power.as_ref()))?;
    }
    Ok(())
}

/// Text report on stdout, or CSV when `--out` is given.
fn emit(c: &Common, spec: &SweepSpec, rows: &[TradeoffRecord], extra: &[String]) -> Result<(), RunError> {
    if let Some(p) = &c.out {
        write_csv(rows, max_sources(rows, spec), output(Some(p))?)?;
        return Ok(());
    }
    let mut w = output(None)?;
    for r in rows {
        report(&mut w, r)?;
    }
    for line in extra {
        writeln!(w, "{line}")?;
    }
    w.flush()?;
    Ok(())
}

fn run(cli: Cli) -> Result<(), RunError> {
    match cli.command {
        Command::Analyze { common, closed_form } => {
            let spec = load(&common)?;
            let rep = cmd_analyze(&spec, closed_form)?;
            let mut extra = Vec::new();
            if let Some(d) = &rep.deviation {
                for (i, x) in d.aos.iter().enumerate() {
                    extra.push(format!("rel_dev aos_src_{} {x:e}", i + 1));
                }
                extra.push(format!("rel_dev power {:e}", d.power));
            }
            let rows: Vec<_> = std::iter::once(rep.analytic).chain(rep.closed_form).collect();
            emit(&common, &spec, &rows, &extra)
        }
        Command::Sweep { common } => {
            let spec = load(&common)?;
            let rows = cmd_sweep(&spec)?;
            let mut w = output(common.out.as_deref())?;
            write_csv(&rows, max_sources(&rows, &spec), &mut w)?;
            w.flush()?;
            Ok(())
        }
        Command::Simulate { common, against } => {
            let spec = load(&common)?;
            let rep = cmd_simulate(&spec, against.is_some())?;
            let mut extra = Vec::new();
            for (i, z) in rep.z_aos.iter().enumerate() {
                extra.push(format!("z aos_src_{} {z:.3}", i + 1));
            }
            if let Some(z) = rep.z_power {
                extra.push(format!("z power {z:.3}"));
            }
            let rows: Vec<_> = std::iter::once(rep.simulated).chain(rep.against).collect();
            emit(&common, &spec, &rows, &extra)
        }
        Command::Paths { common, max_events } => {
            let spec = load(&common)?;
            let recs = cmd_paths(&spec, max_events)?;
            let mut w = output(common.out.as_deref())?;
            write_event_log(&recs, spec.base.params.sources(), &mut w)?;
            w.flush()?;
            Ok(())
        }
        Command::Compare { common } => {
            let spec = load(&common)?;
            let rows = cmd_compare(&spec)?;
            emit(&common, &spec, &rows, &[])
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
