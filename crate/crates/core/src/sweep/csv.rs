use std::io::{self, Write};

use super::TradeoffRecord;

/// Header with per-source columns for `m` sources.
pub fn csv_header(m: usize) -> String {
    let mut cols: Vec<String> = vec!["policy".into(), "strategy".into(), "M".into()];
    cols.extend((1..=m).map(|i| format!("lambda_{i}")));
    cols.extend(["mu", "d", "theta", "s", "N", "mode"].map(String::from));
    cols.extend((1..=m).map(|i| format!("aos_src_{i}")));
    cols.extend(["aos_sum", "power"].map(String::from));
    cols.extend((1..=m).map(|i| format!("ci_aos_{i}")));
    cols.extend(["ci_power", "seed"].map(String::from));
    cols.join(",")
}

fn padded(xs: &[f64], m: usize) -> impl Iterator<Item = String> + '_ {
    (0..m).map(move |i| xs.get(i).map_or(String::new(), |x| x.to_string()))
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or(String::new(), |v| v.to_string())
}

/// Writes the rows with columns sized to `m`, the largest M of the sweep;
/// fields a row lacks are left empty.
pub fn write_csv<W: Write>(rows: &[TradeoffRecord], m: usize, mut w: W) -> io::Result<()> {
    writeln!(w, "{}", csv_header(m))?;
    for r in rows {
        let mut f: Vec<String> = vec![r.policy.clone(), r.strategy.clone(), r.sources().to_string()];
        f.extend(padded(&r.lambdas, m));
        f.extend([r.mu, r.d, r.theta, r.s].map(|x| x.to_string()));
        f.push(r.n.to_string());
        f.push(r.mode.clone());
        f.extend(padded(&r.aos, m));
        f.push(opt(r.aos_sum()));
        f.push(opt(r.power));
        f.extend(padded(&r.ci_aos, m));
        f.push(opt(r.ci_power));
        f.push(opt(r.seed));
        writeln!(w, "{}", f.join(","))?;
    }
    Ok(())
}
