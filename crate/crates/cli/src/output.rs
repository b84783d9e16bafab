//! Result files: the row CSV, its `.plot.csv` pivot, the `.table.txt`
//! summary and, for sweeps, `.optimal.csv`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use hyperlap::laplacian::Framework;
use hyperlap::weights::Scheme;
use serde::Serialize;

use crate::error::{CliError, Result};
use crate::experiment::{Metric, OptimalMu, ResultRow};

pub const HEADER: [&str; 9] = ["dataset", "scheme", "framework", "k_list", "mu", "fold", "metric", "value", "seconds"];

/// `results.csv` → `results.<tag>.<ext>`.
pub fn companion_path(path: &Path, tag: &str, ext: &str) -> PathBuf {
    let stem = path.file_stem().map_or_else(|| "results".into(), |s| s.to_string_lossy().into_owned());
    path.with_file_name(format!("{stem}.{tag}.{ext}"))
}

/// Sorts by (scheme, framework, mu, fold, metric); whole-dataset rows come
/// before fold rows.
pub fn sort_rows(rows: &mut [ResultRow]) {
    rows.sort_by(|a, b| {
        a.scheme
            .cmp(&b.scheme)
            .then_with(|| a.framework.cmp(&b.framework))
            .then_with(|| a.mu.total_cmp(&b.mu))
            .then_with(|| a.fold.cmp(&b.fold))
            .then_with(|| a.metric.name().cmp(b.metric.name()))
    });
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path).map(BufWriter::new).map_err(|e| CliError::io(path, e))
}

fn write_csv<T: Serialize>(path: &Path, header: &[&str], records: &[T]) -> Result<()> {
    let io = |e: csv::Error| match e.into_kind() {
        csv::ErrorKind::Io(io) => CliError::io(path, io),
        other => CliError::io(path, std::io::Error::other(format!("{other:?}"))),
    };
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(create(path)?);
    w.write_record(header).map_err(io)?;
    for r in records {
        w.serialize(r).map_err(io)?;
    }
    w.flush().map_err(|e| CliError::io(path, e))
}

pub fn write_rows(rows: &[ResultRow], path: &Path) -> Result<()> {
    let mut sorted = rows.to_vec();
    sort_rows(&mut sorted);
    write_csv(path, &HEADER, &sorted)
}

pub fn read_rows(path: &Path) -> Result<Vec<ResultRow>> {
    let mut r = csv::Reader::from_path(path).map_err(|e| match e.into_kind() {
        csv::ErrorKind::Io(io) => CliError::io(path, io),
        other => CliError::io(path, std::io::Error::other(format!("{other:?}"))),
    })?;
    r.deserialize()
        .map(|row| {
            row.map_err(|e| CliError::Data {
                path: path.to_path_buf(),
                line: e.position().map_or(0, |p| p.line() as usize),
                message: e.to_string(),
            })
        })
        .collect()
}

fn framework_rank(name: &str) -> (usize, String) {
    let idx = Framework::ALL.iter().position(|f| f.name() == name).unwrap_or(usize::MAX);
    (idx, name.to_string())
}

fn scheme_rank(name: &str) -> (usize, String) {
    let idx = Scheme::ALL.iter().position(|s| s.name() == name).unwrap_or(usize::MAX);
    (idx, name.to_string())
}

fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Sample standard deviation; 0 for a single value.
fn std_dev(xs: &[f64]) -> f64 {
    if xs.len() < 2 {
        return 0.0;
    }
    let m = mean(xs);
    (xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (xs.len() - 1) as f64).sqrt()
}

type PivotKey = (String, u64, (usize, String));

/// Mean metric per (metric, mu, scheme) with one column per framework.
pub fn plot_pivot(rows: &[ResultRow]) -> String {
    let mut frameworks: Vec<(usize, String)> = rows.iter().map(|r| framework_rank(&r.framework)).collect();
    frameworks.sort();
    frameworks.dedup();
    let mut groups: BTreeMap<PivotKey, BTreeMap<(usize, String), Vec<f64>>> = BTreeMap::new();
    for r in rows {
        // f64 bits order like the values for positive mu
        let key = (r.metric.name().to_string(), r.mu.to_bits(), scheme_rank(&r.scheme));
        groups
            .entry(key)
            .or_default()
            .entry(framework_rank(&r.framework))
            .or_default()
            .push(r.value);
    }
    let mut out = String::from("metric,mu,scheme");
    for (_, f) in &frameworks {
        write!(out, ",{f}").unwrap();
    }
    out.push('\n');
    for ((metric, mu, (_, scheme)), cols) in &groups {
        write!(out, "{metric},{},{scheme}", f64::from_bits(*mu)).unwrap();
        for f in &frameworks {
            match cols.get(f) {
                Some(v) => write!(out, ",{}", mean(v)).unwrap(),
                None => out.push(','),
            }
        }
        out.push('\n');
    }
    out
}

/// Per-framework tables with datasets as rows and schemes as columns, values
/// in percent. Error rates show mean ± standard deviation over folds.
pub fn summary_table(rows: &[ResultRow]) -> String {
    let mut out = String::new();
    for (metric, title) in [
        (Metric::ErrorRate, "Mean Classification Errors ± Standard deviation (%)"),
        (Metric::Accuracy, "Clustering Accuracy (%)"),
        (Metric::Nmi, "Normalized Mutual Information (%)"),
    ] {
        let selected: Vec<&ResultRow> = rows.iter().filter(|r| r.metric == metric).collect();
        if selected.is_empty() {
            continue;
        }
        let mut schemes: Vec<(usize, String)> = selected.iter().map(|r| scheme_rank(&r.scheme)).collect();
        schemes.sort();
        schemes.dedup();
        let mut frameworks: Vec<(usize, String)> = selected.iter().map(|r| framework_rank(&r.framework)).collect();
        frameworks.sort();
        frameworks.dedup();
        let mut datasets: Vec<&str> = selected.iter().map(|r| r.dataset.as_str()).collect();
        datasets.sort();
        datasets.dedup();

        for (_, fw) in &frameworks {
            writeln!(out, "{title}").unwrap();
            writeln!(out, "Framework: {fw}").unwrap();
            out.push('\n');
            out.push_str("| Database |");
            for (_, s) in &schemes {
                write!(out, " {} |", s.to_uppercase()).unwrap();
            }
            out.push_str("\n|---|");
            out.push_str(&"---|".repeat(schemes.len()));
            out.push('\n');
            for ds in &datasets {
                write!(out, "| {ds} |").unwrap();
                for (_, s) in &schemes {
                    let vals: Vec<f64> = selected
                        .iter()
                        .filter(|r| r.dataset == *ds && &r.scheme == s && &r.framework == fw)
                        .map(|r| r.value * 100.0)
                        .collect();
                    if vals.is_empty() {
                        out.push_str(" - |");
                    } else if metric == Metric::ErrorRate {
                        write!(out, " {:.2} ± {:.2} |", mean(&vals), std_dev(&vals)).unwrap();
                    } else {
                        write!(out, " {:.2} |", mean(&vals)).unwrap();
                    }
                }
                out.push('\n');
            }
            out.push('\n');
        }
    }
    out
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    let mut f = create(path)?;
    f.write_all(text.as_bytes())
        .and_then(|_| f.flush())
        .map_err(|e| CliError::io(path, e))
}

/// Writes the sorted row CSV to `path` and its `.plot.csv` pivot beside it.
pub fn emit_results(rows: &[ResultRow], path: &Path) -> Result<()> {
    write_rows(rows, path)?;
    write_text(&companion_path(path, "plot", "csv"), &plot_pivot(rows))
}

pub fn emit_table(rows: &[ResultRow], path: &Path) -> Result<PathBuf> {
    let p = companion_path(path, "table", "txt");
    write_text(&p, &summary_table(rows))?;
    Ok(p)
}

pub fn emit_optimal(optimal: &[OptimalMu], path: &Path) -> Result<PathBuf> {
    let p = companion_path(path, "optimal", "csv");
    write_csv(
        &p,
        &["dataset", "scheme", "framework", "k_list", "fold", "mu", "criterion", "value"],
        optimal,
    )?;
    Ok(p)
}
