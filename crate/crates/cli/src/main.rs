use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hyperlap::Execution;
use hyperlap_cli::config::{ConfigMap, ExperimentConfig, Task};
use hyperlap_cli::output::{emit_optimal, emit_table};
use hyperlap_cli::{emit_results, load_dataset, run, sweep_mu, Result};

#[derive(Parser)]
#[command(name = "hyperlap", version, about = "Hyperedge weighting experiments on hypergraph Laplacians")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one experiment grid at a fixed mu.
    Run(Overrides),
    /// Check the configuration and input files without running anything.
    Validate(Overrides),
    /// Run the grid once per mu and report the selected mu.
    Sweep {
        #[command(flatten)]
        overrides: Overrides,
        /// Comma-separated mu values, e.g. 0.1,1,10,100.
        #[arg(long)]
        mu_grid: Option<String>,
    },
}

#[derive(Args)]
struct Overrides {
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    dataset: Option<String>,
    #[arg(long)]
    dataset_path: Option<PathBuf>,
    #[arg(long)]
    labels_path: Option<PathBuf>,
    #[arg(long)]
    preset: Option<String>,
    /// cluster or classify
    #[arg(long)]
    task: Option<String>,
    /// Scheme name, comma list, `table` or `all`.
    #[arg(long)]
    scheme: Option<String>,
    /// zhou, clique, star, comma list or `all`.
    #[arg(long)]
    framework: Option<String>,
    /// Neighbor count or increasing comma list, e.g. 10,20,30.
    #[arg(long = "k", alias = "k-list")]
    k_list: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long)]
    llre_aggregator: Option<String>,
    #[arg(long)]
    sum_aggregator: Option<String>,
    #[arg(long)]
    folds: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    seed: Option<String>,
    #[arg(long)]
    restarts: Option<String>,
    #[arg(long = "out", alias = "output-path")]
    output_path: Option<PathBuf>,
    /// Record wall time per row (output is then not reproducible).
    #[arg(long)]
    timing: bool,
    /// Run every loop on the calling thread.
    #[arg(long)]
    sequential: bool,
}

impl Overrides {
    fn config(&self, mu_grid: Option<&str>) -> Result<ExperimentConfig> {
        let mut map = match &self.config {
            Some(p) => ConfigMap::from_file(p)?,
            None => ConfigMap::default(),
        };
        let values = [
            ("dataset", &self.dataset),
            ("preset", &self.preset),
            ("task", &self.task),
            ("scheme", &self.scheme),
            ("framework", &self.framework),
            ("k_list", &self.k_list),
            ("mu", &self.mu),
            ("lambda", &self.lambda),
            ("llre_aggregator", &self.llre_aggregator),
            ("sum_aggregator", &self.sum_aggregator),
            ("folds", &self.folds),
            ("seed", &self.seed),
            ("restarts", &self.restarts),
        ];
        for (key, v) in values {
            if let Some(v) = v {
                map.set(key, v.as_str())?;
            }
        }
        for (key, v) in [
            ("dataset_path", &self.dataset_path),
            ("labels_path", &self.labels_path),
            ("output_path", &self.output_path),
        ] {
            if let Some(p) = v {
                map.set_path(key, p)?;
            }
        }
        if let Some(grid) = mu_grid {
            map.set("mu_grid", grid)?;
        }
        if self.timing {
            map.set("timing", "true")?;
        }
        let cfg = ExperimentConfig::from_map(&map)?;
        cfg.check_files()?;
        Ok(cfg)
    }

    fn exec(&self) -> Execution {
        if self.sequential {
            Execution::Sequential
        } else {
            Execution::default()
        }
    }
}

fn execute(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Validate(o) => {
            let cfg = o.config(None)?;
            let data = load_dataset(&cfg.dataset_path, &cfg.labels_path)?;
            cfg.k_list.check_against(data.samples.nrows())?;
            if cfg.task == Task::Classify {
                hyperlap_cli::folds::stratified_folds(&data.labels, cfg.folds, cfg.seed)?;
            }
            println!(
                "ok: {} samples, {} features, {} classes; {} cell(s) of {} x {}",
                data.samples.nrows(),
                data.samples.ncols(),
                data.num_classes,
                cfg.schemes.len() * cfg.frameworks.len(),
                cfg.schemes.len(),
                cfg.frameworks.len()
            );
            Ok(())
        }
        Command::Run(o) => {
            let cfg = o.config(None)?;
            let data = load_dataset(&cfg.dataset_path, &cfg.labels_path)?;
            let rows = run(&cfg, &data, o.exec())?;
            emit_results(&rows, &cfg.output_path)?;
            let table = emit_table(&rows, &cfg.output_path)?;
            log::info!("wrote {} rows to {} ({})", rows.len(), cfg.output_path.display(), table.display());
            Ok(())
        }
        Command::Sweep { overrides, mu_grid } => {
            let cfg = overrides.config(mu_grid.as_deref())?;
            if mu_grid.is_none() && cfg.mu_grid.len() < 2 {
                log::warn!("sweeping a single mu; pass --mu-grid or set mu_grid");
            }
            let data = load_dataset(&cfg.dataset_path, &cfg.labels_path)?;
            let sweep = sweep_mu(&cfg, &data, &cfg.mu_grid, overrides.exec())?;
            emit_results(&sweep.rows, &cfg.output_path)?;
            emit_table(&sweep.tuned, &cfg.output_path)?;
            let optimal = emit_optimal(&sweep.optimal, &cfg.output_path)?;
            log::info!("wrote {} rows; selected mu in {}", sweep.rows.len(), optimal.display());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage mistakes are configuration errors
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
