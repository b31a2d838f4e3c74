//! `nss`: command-line access to the model tables, fusion spaces, braid evaluation,
//! the leakage-suppression recursion, the word search and the verification suite.

mod commands;
mod error;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyon_data::ModelParams;
use clap::{Args, Parser, Subcommand, ValueEnum};

use error::{CliError, EXIT_USAGE, EXIT_VERIFY};
use output::Output;

#[derive(Parser, Debug)]
#[command(name = "nss", version, about = "Non-semisimple Ising anyon simulator")]
struct Cli {
    #[command(flatten)]
    config: CliConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct CliConfig {
    /// Base q-spin alpha; fractions such as 12/5 are kept exact.
    #[arg(long, global = true, default_value = "12/5")]
    pub alpha: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Tolerance for singularity guards and structural checks.
    #[arg(long, global = true, env = "NSS_TOL", default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for the search; all cores when omitted.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dump the B, R and F tables at alpha.
    Model,
    /// Basis, metric and qubit encoding of a fusion space.
    Space(commands::SpaceArgs),
    /// Evaluate a braid word on a fusion space.
    Braid(commands::BraidArgs),
    /// Iterate the leakage-suppressing recursion and trace the leakage norms.
    Reichardt(commands::ReichardtArgs),
    /// Brute-force search for low-leakage seed words on the psi sector.
    Search(commands::SearchArgs),
    /// Run the verification suite; exits 1 when a check fails.
    Verify,
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let cfg = &cli.config;
    if !(cfg.tol > 0.0 && cfg.tol.is_finite()) {
        return Err(CliError::usage(format!("tolerance must be positive, got {}", cfg.tol)));
    }
    let mut params = ModelParams::parse(&cfg.alpha)?;
    params.set_tol(cfg.tol);
    match &cli.command {
        Command::Model => commands::model(&params),
        Command::Space(a) => commands::space(&params, a),
        Command::Braid(a) => commands::braid(&params, a),
        Command::Reichardt(a) => commands::reichardt(&params, a),
        Command::Search(a) => commands::search(&params, cfg, a),
        Command::Verify => Ok(commands::verify(&params, cfg.seed)),
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => std::fs::write(path, text).map_err(CliError::io),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(CliError::io),
    }
}

fn fail(e: &CliError) -> ExitCode {
    eprintln!("{}", e.to_line());
    ExitCode::from(e.code as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ");
            return fail(&CliError { kind: "Usage", message: first.to_string(), code: EXIT_USAGE });
        }
    };
    let format = cli.config.format;
    let out = cli.config.out.clone();
    let result = run(cli).and_then(|o| {
        let text = o.render(format)?;
        emit(&text, out.as_ref())?;
        Ok(o.failed)
    });
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(EXIT_VERIFY as u8),
        Err(e) => fail(&e),
    }
}
