use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hcert_cli::commands::{bound, gkp_fidelity, gkp_plan, witness};
use hcert_cli::config::{self, BoundConfig, GkpFidelityConfig, GkpPlanConfig, WitnessConfig};
use hcert_cli::output::{Format, Table};
use hcert_cli::CliError;

/// Certification toolkit for finite-local-oscillator homodyne measurements
/// and GKP error-correction budgets.
#[derive(Parser)]
#[command(name = "hcert", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Path to the JSON run configuration.
    #[arg(long)]
    config: Option<PathBuf>,

    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Output format.
    #[arg(long, default_value = "csv", value_parser = ["csv", "pretty"])]
    format: String,

    /// Worker threads for grid evaluation.
    #[arg(long)]
    threads: Option<usize>,

    /// Seed for randomized property scans.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a closed-form bound over parameter grids.
    Bound {
        #[command(flatten)]
        common: Common,
    },
    /// GKP planning and fidelity commands.
    Gkp {
        #[command(subcommand)]
        sub: GkpCommand,
    },
    /// Exact-witness domination scan against the evolution bounds.
    Witness {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum GkpCommand {
    /// Budget table: resolution, LO photon number, equivalent detector noise.
    Plan {
        #[command(flatten)]
        common: Common,
    },
    /// Entanglement-infidelity curves over a displacement-noise grid.
    Fidelity {
        #[command(flatten)]
        common: Common,
    },
}

fn read_config(common: &Common) -> Result<Vec<u8>, CliError> {
    match &common.config {
        Some(path) => fs::read(path).map_err(|e| {
            CliError::Validation(format!("cannot read config {}: {e}", path.display()))
        }),
        None => Err(CliError::Validation(
            "--config is required for this command".into(),
        )),
    }
}

fn emit(table: &Table, common: &Common) -> Result<(), CliError> {
    let format = match common.format.as_str() {
        "pretty" => Format::Pretty,
        _ => Format::Csv,
    };
    let text = table.render(format);
    match &common.out {
        Some(path) => fs::write(path, text).map_err(|e| {
            CliError::Numeric(format!("cannot write {}: {e}", path.display()))
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn setup_threads(common: &Common) {
    if let Some(n) = common.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
}

fn run() -> Result<(), CliError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Bound { common } => {
            setup_threads(&common);
            let bytes = read_config(&common)?;
            let text = String::from_utf8_lossy(&bytes);
            let cfg: BoundConfig = config::parse(&text)?;
            let table = bound::run(&cfg, &bytes)?;
            emit(&table, &common)
        }
        Command::Gkp { sub } => match sub {
            GkpCommand::Plan { common } => {
                setup_threads(&common);
                let bytes = read_config(&common)?;
                let text = String::from_utf8_lossy(&bytes);
                let cfg: GkpPlanConfig = config::parse(&text)?;
                let table = gkp_plan::run(&cfg, &bytes)?;
                emit(&table, &common)
            }
            GkpCommand::Fidelity { common } => {
                setup_threads(&common);
                let bytes = read_config(&common)?;
                let text = String::from_utf8_lossy(&bytes);
                let cfg: GkpFidelityConfig = config::parse(&text)?;
                let table = gkp_fidelity::run(&cfg, &bytes)?;
                emit(&table, &common)
            }
        },
        Command::Witness { common } => {
            setup_threads(&common);
            // The witness scan has a built-in default grid.
            let bytes = match &common.config {
                Some(path) => fs::read(path).map_err(|e| {
                    CliError::Validation(format!("cannot read config {}: {e}", path.display()))
                })?,
                None => b"{}".to_vec(),
            };
            let text = String::from_utf8_lossy(&bytes);
            let cfg: WitnessConfig = config::parse(&text)?;
            let outcome = witness::run(&cfg, &bytes, common.seed)?;
            emit(&outcome.table, &common)?;
            if outcome.violations > 0 {
                return Err(CliError::Invariant(format!(
                    "{} domination violation(s) detected",
                    outcome.violations
                )));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
