//! Experiment harness for `hyperlap`: configuration, dataset loading,
//! stratified folds, the scheme × framework × μ grid and result files.

pub mod config;
pub mod dataset;
pub mod error;
pub mod experiment;
pub mod folds;
pub mod output;

pub use config::{ConfigMap, ExperimentConfig, Task};
pub use dataset::{load_dataset, Dataset};
pub use error::{CliError, Result};
pub use experiment::{run, run_classification, run_clustering, sweep_mu, Metric, OptimalMu, ResultRow, Sweep};
pub use output::emit_results;
