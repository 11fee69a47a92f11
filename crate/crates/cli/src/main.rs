use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use sklyanin_cli::{exit_code, run, AlgebraChoice, CliError, RunConfig, Status, Suite};
use sklyanin_core::gradedmod::DEFAULT_DEPTH;
use sklyanin_core::ncalg::DEFAULT_BOUND;

#[derive(Parser)]
#[command(
    name = "sklyanin",
    version,
    about = "Exact checks on 4-dimensional Sklyanin algebras and their cocycle twists"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and emit a JSON report.
    Verify {
        #[arg(value_enum)]
        suite: Vec<Suite>,
        #[arg(long, default_value = "2")]
        beta: String,
        #[arg(long, default_value = "3")]
        gamma: String,
        /// Defaults to -(beta + gamma) / (1 + beta gamma).
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        /// Degree bound for Hilbert series and ideal computations.
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        degree: usize,
        /// Truncation degree for module slices.
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        module_depth: usize,
        #[arg(long, value_enum, default_value_t = AlgebraChoice::Both)]
        algebra: AlgebraChoice,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn execute(cli: Cli) -> Result<i32, CliError> {
    let Command::Verify {
        suite,
        beta,
        gamma,
        alpha,
        degree,
        module_depth,
        algebra,
        out,
    } = cli.command;
    let mut config = RunConfig::new(&beta, &gamma, alpha.as_deref(), degree, module_depth)?;
    config.algebra = algebra;
    config.suites = if suite.is_empty() {
        vec![Suite::All]
    } else {
        suite
    };
    config.out = out;

    let reports = run(&config)?;
    let json = serde_json::to_string_pretty(&reports).expect("reports serialize");
    match &config.out {
        Some(path) => {
            fs::write(path, json + "\n")?;
            for r in &reports {
                let tag = match r.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Assumption => "assumption",
                };
                eprintln!("{tag:>10}  {} ({} ms)", r.name, r.ms);
            }
        }
        None => println!("{json}"),
    }
    Ok(exit_code(&reports))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
