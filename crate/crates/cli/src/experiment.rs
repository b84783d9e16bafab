//! Scheme × framework × μ grids for the classification and clustering protocols.
//!
//! Hyperedges are generated once per run and raw dissimilarities once per
//! scheme; every (scheme, framework, μ) cell then builds its own Laplacian and
//! is evaluated independently, so cells run in parallel.

use std::fmt;
use std::time::Instant;

use hyperlap::knn::multi_k_hyperedges_with;
use hyperlap::laplacian::{self, Framework, LaplacianMatrix};
use hyperlap::learn::{accuracy, build_label_matrix, classify, cluster, nmi, KMeansOptions};
use hyperlap::weights::{finalize_weights, raw_dissimilarities_with, Scheme, WeightSchemeConfig};
use hyperlap::{Execution, Hypergraph};
use serde::{Deserialize, Serialize};

use crate::config::{ExperimentConfig, Task};
use crate::dataset::Dataset;
use crate::error::{CliError, Result};
use crate::folds::stratified_folds;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    ErrorRate,
    Accuracy,
    Nmi,
}

impl Metric {
    pub fn name(self) -> &'static str {
        match self {
            Metric::ErrorRate => "error_rate",
            Metric::Accuracy => "accuracy",
            Metric::Nmi => "nmi",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One metric value. `fold` is empty for whole-dataset (clustering) rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub dataset: String,
    pub scheme: String,
    pub framework: String,
    pub k_list: String,
    pub mu: f64,
    pub fold: Option<usize>,
    pub metric: Metric,
    pub value: f64,
    pub seconds: Option<f64>,
}

/// μ selected for one (scheme, framework), and per outer fold for classification.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptimalMu {
    pub dataset: String,
    pub scheme: String,
    pub framework: String,
    pub k_list: String,
    pub fold: Option<usize>,
    pub mu: f64,
    /// `mean_accuracy_nmi` for clustering; `error_rate` (on the outer test fold) for classification.
    pub criterion: String,
    pub value: f64,
}

#[derive(Debug, Clone, Default)]
pub struct Sweep {
    /// One experiment per μ.
    pub rows: Vec<ResultRow>,
    pub optimal: Vec<OptimalMu>,
    /// Rows evaluated at the selected μ.
    pub tuned: Vec<ResultRow>,
}

/// Hyperedges and per-scheme raw dissimilarities shared by every cell.
struct Prepared<'a> {
    cfg: &'a ExperimentConfig,
    data: &'a Dataset,
    graph: Hypergraph,
    raw: Vec<Vec<f64>>,
}

impl<'a> Prepared<'a> {
    fn new(cfg: &'a ExperimentConfig, data: &'a Dataset, exec: Execution) -> Result<Self> {
        let graph = multi_k_hyperedges_with(&data.samples, &cfg.k_list, exec)?;
        let raw = cfg
            .schemes
            .iter()
            .map(|&scheme| {
                if scheme == Scheme::Binary {
                    return Ok(Vec::new());
                }
                let wcfg = WeightSchemeConfig {
                    scheme,
                    mu: 1.0,
                    llre_aggregator: cfg.llre_aggregator,
                    sum_aggregator: cfg.sum_aggregator,
                };
                Ok(raw_dissimilarities_with(&data.samples, &graph, &wcfg, exec)?.values)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { cfg, data, graph, raw })
    }

    fn laplacian(&self, scheme: usize, framework: Framework, mu: f64) -> Result<LaplacianMatrix> {
        let weights = if self.cfg.schemes[scheme] == Scheme::Binary {
            vec![1.0; self.graph.num_edges()]
        } else {
            finalize_weights(&self.raw[scheme], mu)?
        };
        Ok(laplacian::build(&self.graph.with_weights(weights)?, framework))
    }

    fn row(&self, cell: &Cell, fold: Option<usize>, metric: Metric, value: f64, seconds: f64) -> ResultRow {
        ResultRow {
            dataset: self.cfg.dataset.clone(),
            scheme: self.cfg.schemes[cell.scheme].name().to_string(),
            framework: cell.framework.name().to_string(),
            k_list: self.cfg.k_label(),
            mu: cell.mu,
            fold,
            metric,
            value,
            seconds: self.cfg.timing.then(|| (seconds * 1000.0).round() / 1000.0),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Cell {
    scheme: usize,
    framework: Framework,
    mu: f64,
}

fn grid(cfg: &ExperimentConfig, mus: &[f64]) -> Vec<Cell> {
    let mut cells = Vec::new();
    for scheme in 0..cfg.schemes.len() {
        for &framework in &cfg.frameworks {
            for &mu in mus {
                cells.push(Cell { scheme, framework, mu });
            }
        }
    }
    cells
}

/// Error rate on `test` samples with `train` samples seeded.
fn fold_error(
    l: &LaplacianMatrix,
    data: &Dataset,
    lambda: f64,
    train: impl Fn(usize) -> bool,
    test: impl Fn(usize) -> bool,
) -> Result<f64> {
    let n = data.labels.len();
    let seeds: Vec<Option<usize>> = (0..n).map(|i| train(i).then_some(data.labels[i])).collect();
    let y = build_label_matrix(&seeds, data.num_classes)?;
    let pred = classify(l, &y, lambda)?.predictions;
    let (mut wrong, mut total) = (0usize, 0usize);
    for i in (0..n).filter(|&i| test(i)) {
        total += 1;
        wrong += usize::from(pred[i] != data.labels[i]);
    }
    Ok(wrong as f64 / total as f64)
}

/// Inner two-fold split of each outer training set; `None` marks outer test samples.
fn inner_splits(labels: &[usize], outer: &[usize], folds: usize, seed: u64) -> Result<Vec<Vec<Option<usize>>>> {
    (0..folds)
        .map(|f| {
            let train: Vec<usize> = (0..labels.len()).filter(|&i| outer[i] != f).collect();
            let sub: Vec<usize> = train.iter().map(|&i| labels[i]).collect();
            let inner = stratified_folds(&sub, 2, seed.wrapping_add(1 + f as u64)).map_err(|e| {
                CliError::Stratification(format!("inner split of training fold {f}: {e}"))
            })?;
            let mut out = vec![None; labels.len()];
            for (&i, &g) in train.iter().zip(&inner) {
                out[i] = Some(g);
            }
            Ok(out)
        })
        .collect()
}

struct ClassifyCell {
    errors: Vec<f64>,
    /// Mean inner validation error per outer fold, when tuning.
    inner: Option<Vec<f64>>,
    seconds: Vec<f64>,
}

fn classify_grid(
    prep: &Prepared,
    mus: &[f64],
    tune: bool,
    exec: Execution,
) -> Result<(Vec<Cell>, Vec<ClassifyCell>)> {
    let cfg = prep.cfg;
    let data = prep.data;
    let outer = stratified_folds(&data.labels, cfg.folds, cfg.seed)?;
    let inner = if tune {
        Some(inner_splits(&data.labels, &outer, cfg.folds, cfg.seed)?)
    } else {
        None
    };
    let cells = grid(cfg, mus);
    let results = exec.try_map(cells.len(), |c| -> Result<ClassifyCell> {
        let cell = cells[c];
        let start = Instant::now();
        let l = prep.laplacian(cell.scheme, cell.framework, cell.mu)?;
        let setup = start.elapsed().as_secs_f64();
        let mut errors = Vec::with_capacity(cfg.folds);
        let mut seconds = Vec::with_capacity(cfg.folds);
        for f in 0..cfg.folds {
            let t = Instant::now();
            errors.push(fold_error(&l, data, cfg.lambda, |i| outer[i] != f, |i| outer[i] == f)?);
            seconds.push(setup + t.elapsed().as_secs_f64());
        }
        let inner = match &inner {
            Some(splits) => Some(
                splits
                    .iter()
                    .map(|split| {
                        let a = fold_error(&l, data, cfg.lambda, |i| split[i] == Some(1), |i| split[i] == Some(0))?;
                        let b = fold_error(&l, data, cfg.lambda, |i| split[i] == Some(0), |i| split[i] == Some(1))?;
                        Ok((a + b) / 2.0)
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
            None => None,
        };
        Ok(ClassifyCell { errors, inner, seconds })
    })?;
    Ok((cells, results))
}

struct ClusterCell {
    accuracy: f64,
    nmi: f64,
    seconds: f64,
}

fn cluster_grid(prep: &Prepared, mus: &[f64], exec: Execution) -> Result<(Vec<Cell>, Vec<ClusterCell>)> {
    let cfg = prep.cfg;
    let data = prep.data;
    let opts = KMeansOptions {
        seed: cfg.seed,
        restarts: cfg.restarts,
        exec,
        ..KMeansOptions::default()
    };
    let cells = grid(cfg, mus);
    let results = exec.try_map(cells.len(), |c| -> Result<ClusterCell> {
        let cell = cells[c];
        let start = Instant::now();
        let l = prep.laplacian(cell.scheme, cell.framework, cell.mu)?;
        let pred = cluster(&l, data.num_classes, &opts)?;
        Ok(ClusterCell {
            accuracy: accuracy(&pred, &data.labels)?,
            nmi: nmi(&pred, &data.labels)?,
            seconds: start.elapsed().as_secs_f64(),
        })
    })?;
    Ok((cells, results))
}

fn classification_rows(prep: &Prepared, cells: &[Cell], results: &[ClassifyCell]) -> Vec<ResultRow> {
    let mut rows = Vec::new();
    for (cell, r) in cells.iter().zip(results) {
        for (f, (&e, &s)) in r.errors.iter().zip(&r.seconds).enumerate() {
            rows.push(prep.row(cell, Some(f), Metric::ErrorRate, e, s));
        }
    }
    rows
}

fn clustering_rows(prep: &Prepared, cells: &[Cell], results: &[ClusterCell]) -> Vec<ResultRow> {
    let mut rows = Vec::new();
    for (cell, r) in cells.iter().zip(results) {
        rows.push(prep.row(cell, None, Metric::Accuracy, r.accuracy, r.seconds));
        rows.push(prep.row(cell, None, Metric::Nmi, r.nmi, r.seconds));
    }
    rows
}

/// Stratified cross-validated transductive classification at `cfg.mu`; one
/// `error_rate` row per (scheme, framework, fold).
pub fn run_classification(cfg: &ExperimentConfig, data: &Dataset, exec: Execution) -> Result<Vec<ResultRow>> {
    let prep = Prepared::new(cfg, data, exec)?;
    let (cells, results) = classify_grid(&prep, &[cfg.mu], false, exec)?;
    Ok(classification_rows(&prep, &cells, &results))
}

/// Spectral clustering of the whole dataset at `cfg.mu`; `accuracy` and `nmi`
/// rows per (scheme, framework).
pub fn run_clustering(cfg: &ExperimentConfig, data: &Dataset, exec: Execution) -> Result<Vec<ResultRow>> {
    let prep = Prepared::new(cfg, data, exec)?;
    let (cells, results) = cluster_grid(&prep, &[cfg.mu], exec)?;
    Ok(clustering_rows(&prep, &cells, &results))
}

pub fn run(cfg: &ExperimentConfig, data: &Dataset, exec: Execution) -> Result<Vec<ResultRow>> {
    match cfg.task {
        Task::Classify => run_classification(cfg, data, exec),
        Task::Cluster => run_clustering(cfg, data, exec),
    }
}

/// Index of the best score, ties to the earliest (the smallest μ, since grids are sorted).
fn best_by<T>(items: &[T], better: impl Fn(&T, &T) -> bool) -> usize {
    let mut best = 0;
    for i in 1..items.len() {
        if better(&items[i], &items[best]) {
            best = i;
        }
    }
    best
}

/// One experiment per μ in `mus`, plus the selected μ per (scheme, framework).
///
/// Clustering selects the μ maximizing the mean of accuracy and NMI over the
/// whole dataset. Classification selects μ separately for every outer fold by
/// an inner stratified two-fold split of that fold's training samples (lowest
/// mean inner error), and reports the outer test error at the selected μ.
pub fn sweep_mu(cfg: &ExperimentConfig, data: &Dataset, mus: &[f64], exec: Execution) -> Result<Sweep> {
    if mus.is_empty() {
        return Err(CliError::config("mu grid is empty"));
    }
    if let Some(bad) = mus.iter().find(|&&m| !(m > 0.0 && m.is_finite())) {
        return Err(CliError::config(format!("mu grid values must be positive, got {bad}")));
    }
    let mut mus = mus.to_vec();
    mus.sort_by(f64::total_cmp);
    mus.dedup();
    let prep = Prepared::new(cfg, data, exec)?;
    let per_group = mus.len();
    let mut sweep = Sweep::default();
    match cfg.task {
        Task::Cluster => {
            let (cells, results) = cluster_grid(&prep, &mus, exec)?;
            sweep.rows = clustering_rows(&prep, &cells, &results);
            for (cells, results) in cells.chunks(per_group).zip(results.chunks(per_group)) {
                let score = |r: &ClusterCell| (r.accuracy + r.nmi) / 2.0;
                let b = best_by(results, |a, b| score(a) > score(b));
                let cell = &cells[b];
                sweep.optimal.push(OptimalMu {
                    dataset: cfg.dataset.clone(),
                    scheme: cfg.schemes[cell.scheme].name().to_string(),
                    framework: cell.framework.name().to_string(),
                    k_list: cfg.k_label(),
                    fold: None,
                    mu: cell.mu,
                    criterion: "mean_accuracy_nmi".into(),
                    value: score(&results[b]),
                });
                sweep.tuned.extend(clustering_rows(&prep, &cells[b..=b], &results[b..=b]));
            }
        }
        Task::Classify => {
            let (cells, results) = classify_grid(&prep, &mus, true, exec)?;
            sweep.rows = classification_rows(&prep, &cells, &results);
            for (cells, results) in cells.chunks(per_group).zip(results.chunks(per_group)) {
                for f in 0..cfg.folds {
                    let inner = |r: &ClassifyCell| r.inner.as_ref().expect("tuned")[f];
                    let b = best_by(results, |x, y| inner(x) < inner(y));
                    let cell = &cells[b];
                    let err = results[b].errors[f];
                    sweep.optimal.push(OptimalMu {
                        dataset: cfg.dataset.clone(),
                        scheme: cfg.schemes[cell.scheme].name().to_string(),
                        framework: cell.framework.name().to_string(),
                        k_list: cfg.k_label(),
                        fold: Some(f),
                        mu: cell.mu,
                        criterion: "error_rate".into(),
                        value: err,
                    });
                    sweep
                        .tuned
                        .push(prep.row(cell, Some(f), Metric::ErrorRate, err, results[b].seconds[f]));
                }
            }
        }
    }
    Ok(sweep)
}
