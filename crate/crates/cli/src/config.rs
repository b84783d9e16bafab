//! Experiment configuration: `key = value` files with `#` comments, where
//! command-line flags of the same names override file values.
//!
//! ```text
//! dataset_path = orl.csv
//! labels_path  = orl.labels
//! task         = classify
//! scheme       = table        # binary,sum,centroid,volume-gram,trace,llre
//! framework    = all
//! k_list       = 5
//! mu           = 1.0
//! ```
//!
//! Relative paths in a file are resolved against the file's directory.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use hyperlap::knn::NeighborhoodSpec;
use hyperlap::laplacian::Framework;
use hyperlap::weights::{LlreAggregator, Scheme, SumAggregator};

use crate::error::{CliError, Result};

pub const KEYS: [&str; 18] = [
    "dataset",
    "dataset_path",
    "labels_path",
    "preset",
    "task",
    "scheme",
    "framework",
    "k_list",
    "mu",
    "mu_grid",
    "lambda",
    "llre_aggregator",
    "sum_aggregator",
    "folds",
    "seed",
    "restarts",
    "output_path",
    "timing",
];

/// Neighborhood sizes and λ used for the benchmark databases. Selected with
/// `preset = <name>`; explicit keys win.
pub const PRESETS: [(&str, &str, f64); 6] = [
    ("orl", "5", 1.0),
    ("coil20", "3", 1.0),
    ("jaffe", "5", 1.0),
    ("sheffield", "5", 1.0),
    ("scene15", "10,20,30,40,50", 1.0),
    ("caltech256", "3,5,10,15,20", 1.0),
];

/// The six schemes of the benchmark tables, one volume formula standing for VOLUME.
pub const TABLE_SCHEMES: [Scheme; 6] = [
    Scheme::Binary,
    Scheme::Sum,
    Scheme::Centroid,
    Scheme::VolumeGram,
    Scheme::Trace,
    Scheme::Llre,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Task {
    Cluster,
    Classify,
}

impl FromStr for Task {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cluster" => Ok(Task::Cluster),
            "classify" => Ok(Task::Classify),
            _ => Err(CliError::config(format!("unknown task {s:?} (expected cluster or classify)"))),
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Task::Cluster => "cluster",
            Task::Classify => "classify",
        })
    }
}

/// Raw `key = value` pairs before validation.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigMap {
    values: BTreeMap<String, String>,
    base_dir: Option<PathBuf>,
}

impl ConfigMap {
    pub fn parse(text: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::config(format!("line {}: expected `key = value`, got {line:?}", i + 1)))?;
            let key = key.trim();
            if !KEYS.contains(&key) {
                return Err(CliError::config(format!("line {}: unknown key {key:?}", i + 1)));
            }
            if values.insert(key.to_string(), value.trim().to_string()).is_some() {
                return Err(CliError::config(format!("line {}: duplicate key {key:?}", i + 1)));
            }
        }
        Ok(Self { values, base_dir: None })
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            CliError::config(format!("cannot read config {}: {e}", path.display()))
        })?;
        let mut map = Self::parse(&text)?;
        map.base_dir = path.parent().map(Path::to_path_buf);
        Ok(map)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    /// Sets `key`, replacing any file value.
    pub fn set(&mut self, key: &str, value: impl Into<String>) -> Result<()> {
        if !KEYS.contains(&key) {
            return Err(CliError::config(format!("unknown key {key:?}")));
        }
        self.values.insert(key.to_string(), value.into());
        Ok(())
    }

    /// Like [`ConfigMap::set`], but a relative path stays relative to the
    /// working directory instead of the config file.
    pub fn set_path(&mut self, key: &str, value: &Path) -> Result<()> {
        let abs = if value.is_relative() {
            std::env::current_dir()
                .map_err(|e| CliError::io(".", e))?
                .join(value)
        } else {
            value.to_path_buf()
        };
        self.set(key, abs.to_string_lossy())
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.get(key).map(|v| match &self.base_dir {
            Some(dir) if Path::new(v).is_relative() => dir.join(v),
            _ => PathBuf::from(v),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub dataset: String,
    pub dataset_path: PathBuf,
    pub labels_path: PathBuf,
    pub task: Task,
    pub schemes: Vec<Scheme>,
    pub frameworks: Vec<Framework>,
    pub k_list: NeighborhoodSpec,
    pub mu: f64,
    pub mu_grid: Vec<f64>,
    pub lambda: f64,
    pub llre_aggregator: LlreAggregator,
    pub sum_aggregator: SumAggregator,
    pub folds: usize,
    pub seed: u64,
    pub restarts: usize,
    pub output_path: PathBuf,
    /// Record wall time per row. Off by default so output files are reproducible.
    pub timing: bool,
}

fn parse_value<T: FromStr>(key: &str, v: &str) -> Result<T>
where
    T::Err: fmt::Display,
{
    v.parse()
        .map_err(|e| CliError::config(format!("{key} = {v:?}: {e}")))
}

fn positive(key: &str, v: &str) -> Result<f64> {
    let x: f64 = parse_value(key, v)?;
    if !(x > 0.0 && x.is_finite()) {
        return Err(CliError::config(format!("{key} must be a positive number, got {v}")));
    }
    Ok(x)
}

fn list(v: &str) -> impl Iterator<Item = &str> {
    v.split(',').map(str::trim).filter(|s| !s.is_empty())
}

pub fn parse_schemes(v: &str) -> Result<Vec<Scheme>> {
    let out = match v {
        "all" => Scheme::ALL.to_vec(),
        "table" => TABLE_SCHEMES.to_vec(),
        _ => list(v).map(|s| Ok(s.parse::<Scheme>()?)).collect::<Result<Vec<_>>>()?,
    };
    dedup_nonempty("scheme", out)
}

pub fn parse_frameworks(v: &str) -> Result<Vec<Framework>> {
    let out = if v == "all" {
        Framework::ALL.to_vec()
    } else {
        list(v).map(|s| Ok(s.parse::<Framework>()?)).collect::<Result<Vec<_>>>()?
    };
    dedup_nonempty("framework", out)
}

fn dedup_nonempty<T: PartialEq>(key: &str, items: Vec<T>) -> Result<Vec<T>> {
    if items.is_empty() {
        return Err(CliError::config(format!("{key} list is empty")));
    }
    for (i, a) in items.iter().enumerate() {
        if items[..i].contains(a) {
            return Err(CliError::config(format!("{key} list has a repeated entry")));
        }
    }
    Ok(items)
}

pub fn parse_k_list(v: &str) -> Result<NeighborhoodSpec> {
    let ks = list(v).map(|s| parse_value::<usize>("k_list", s)).collect::<Result<Vec<_>>>()?;
    Ok(NeighborhoodSpec::new(ks)?)
}

pub fn parse_mu_grid(v: &str) -> Result<Vec<f64>> {
    let mut mus = list(v).map(|s| positive("mu_grid", s)).collect::<Result<Vec<_>>>()?;
    if mus.is_empty() {
        return Err(CliError::config("mu_grid is empty"));
    }
    mus.sort_by(f64::total_cmp);
    mus.dedup();
    Ok(mus)
}

fn parse_bool(key: &str, v: &str) -> Result<bool> {
    match v {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(CliError::config(format!("{key} must be true or false, got {v:?}"))),
    }
}

impl ExperimentConfig {
    pub fn from_map(map: &ConfigMap) -> Result<Self> {
        let preset = match map.get("preset") {
            Some(name) => Some(
                PRESETS
                    .iter()
                    .find(|p| p.0 == name)
                    .ok_or_else(|| CliError::config(format!("unknown preset {name:?}")))?,
            ),
            None => None,
        };
        let required = |key: &str| {
            map.path(key)
                .ok_or_else(|| CliError::config(format!("missing required key {key}")))
        };
        let dataset_path = required("dataset_path")?;
        let labels_path = required("labels_path")?;
        let dataset = match map.get("dataset") {
            Some(d) => d.to_string(),
            None => dataset_path
                .file_stem()
                .map_or_else(|| "dataset".to_string(), |s| s.to_string_lossy().into_owned()),
        };
        let k_default = preset.map_or("5", |p| p.1);
        let lambda_default = preset.map_or(1.0, |p| p.2);
        let mu = map.get("mu").map_or(Ok(1.0), |v| positive("mu", v))?;
        let folds: usize = map.get("folds").map_or(Ok(2), |v| parse_value("folds", v))?;
        if folds < 2 {
            return Err(CliError::config(format!("folds must be at least 2, got {folds}")));
        }
        let restarts: usize = map.get("restarts").map_or(Ok(10), |v| parse_value("restarts", v))?;
        if restarts == 0 {
            return Err(CliError::config("restarts must be positive"));
        }
        Ok(Self {
            dataset,
            dataset_path,
            labels_path,
            task: map.get("task").map_or(Ok(Task::Classify), str::parse)?,
            schemes: parse_schemes(map.get("scheme").unwrap_or("trace"))?,
            frameworks: parse_frameworks(map.get("framework").unwrap_or("zhou"))?,
            k_list: parse_k_list(map.get("k_list").unwrap_or(k_default))?,
            mu,
            mu_grid: map.get("mu_grid").map_or(Ok(vec![mu]), parse_mu_grid)?,
            lambda: map.get("lambda").map_or(Ok(lambda_default), |v| positive("lambda", v))?,
            llre_aggregator: parse_value("llre_aggregator", map.get("llre_aggregator").unwrap_or("seed"))?,
            sum_aggregator: parse_value("sum_aggregator", map.get("sum_aggregator").unwrap_or("sum"))?,
            folds,
            seed: map.get("seed").map_or(Ok(42), |v| parse_value("seed", v))?,
            restarts,
            output_path: map.path("output_path").unwrap_or_else(|| PathBuf::from("results.csv")),
            timing: map.get("timing").map_or(Ok(false), |v| parse_bool("timing", v))?,
        })
    }

    pub fn k_label(&self) -> String {
        let ks: Vec<String> = self.k_list.k_list().iter().map(usize::to_string).collect();
        ks.join(";")
    }

    /// Fails if a referenced input file is missing.
    pub fn check_files(&self) -> Result<()> {
        for p in [&self.dataset_path, &self.labels_path] {
            if !p.is_file() {
                return Err(CliError::config(format!("file not found: {}", p.display())));
            }
        }
        Ok(())
    }
}
