//! Command-line driver for the figure sweeps.
//!
//! Exit codes: 0 success, 1 invalid configuration, 2 a sweep check failed,
//! 3 I/O error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use entrob::experiments::{
    emit_csv, emit_plot_script, failed_checks, run_figure, ExperimentConfig, FigureId,
};
use entrob::Error;

#[derive(Debug, Parser)]
#[command(name = "entrob", version, about = "Robustness of multiqubit entanglement under depolarizing noise")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed of the Haar sampler.
    #[arg(long, global = true, default_value_t = 2010)]
    seed: u64,

    /// Number of Haar-random symmetric states in the scatter.
    #[arg(long, global = true)]
    samples: Option<usize>,

    /// Override every grid resolution with this many points per axis.
    #[arg(long, global = true)]
    grid: Option<usize>,

    /// Bisection tolerance on d_crit.
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Output directory for CSV files and plot scripts.
    #[arg(long, global = true, default_value = "results")]
    out: PathBuf,

    /// Also write a matplotlib script next to each CSV.
    #[arg(long, global = true)]
    plot: bool,

    /// Abort the four/five-qubit sweep if its projected runtime exceeds this many seconds.
    #[arg(long, global = true, default_value_t = 600.0)]
    budget: f64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Two-qubit pure states against the closed-form law.
    Fig1,
    /// GHZ-like and W-like families with the Haar scatter.
    Fig2,
    /// Robustness of Z(a, φ) against a for several phases.
    Fig3,
    /// Robustness and three-tangle of Z(a, φ) against φ.
    Fig4,
    /// Period check for four and five qubits.
    Nqubit {
        /// Number of qubits; both 4 and 5 when omitted.
        #[arg(long, value_parser = clap::value_parser!(u8).range(4..=5))]
        n: Option<u8>,
    },
    /// Every sweep above.
    All,
}

impl Cli {
    fn config(&self) -> ExperimentConfig {
        let mut cfg = ExperimentConfig {
            seed: self.seed,
            output_path: self.out.clone(),
            runtime_budget_secs: self.budget,
            ..Default::default()
        };
        if let Some(n) = self.samples {
            cfg.sample_count = n;
        }
        if let Some(g) = self.grid {
            cfg.p_points = g;
            cfg.family_points = g;
            cfg.a_points = g;
            cfg.phi_points = g;
            cfg.nqubit_grid = g;
        }
        if let Some(t) = self.tol {
            cfg.solver.bisection_tol = t;
        }
        cfg
    }

    fn figures(&self) -> Vec<FigureId> {
        match self.command {
            Command::Fig1 => vec![FigureId::Fig1],
            Command::Fig2 => vec![FigureId::Fig2],
            Command::Fig3 => vec![FigureId::Fig3],
            Command::Fig4 => vec![FigureId::Fig4],
            Command::Nqubit { n: Some(n) } => vec![FigureId::NQubit(n as usize)],
            Command::Nqubit { n: None } => vec![FigureId::NQubit(4), FigureId::NQubit(5)],
            Command::All => vec![
                FigureId::Fig1,
                FigureId::Fig2,
                FigureId::Fig3,
                FigureId::Fig4,
                FigureId::NQubit(4),
                FigureId::NQubit(5),
            ],
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Io(_) | Error::Csv(_) => 3,
        _ => 1,
    }
}

fn run(cli: &Cli) -> Result<bool, Error> {
    let cfg = cli.config();
    cfg.validate()?;
    std::fs::create_dir_all(&cfg.output_path)?;
    let mut all_passed = true;
    for fig in cli.figures() {
        let started = Instant::now();
        let records = run_figure(fig, &cfg)?;
        let csv = cfg.output_path.join(fig.csv_file_name());
        emit_csv(&records, &csv)?;
        if cli.plot {
            emit_plot_script(&records, fig, &cfg.output_path.join(fig.plot_file_name()))?;
        }
        let failures = failed_checks(&records);
        eprintln!(
            "{}: {} records, {} failed checks, {:.2?} -> {}",
            fig.stem(),
            records.len(),
            failures.len(),
            started.elapsed(),
            csv.display()
        );
        for (row, check) in &failures {
            eprintln!("  row {row}: {check} failed");
        }
        all_passed &= failures.is_empty();
    }
    Ok(all_passed)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
