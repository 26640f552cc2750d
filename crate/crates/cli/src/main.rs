//! `chowforms`: formula tables, verification oracles, decompositions and
//! point counts from the command line.

mod cmd;
mod config;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::{Failure, RunConfig};

#[derive(Debug, Parser)]
#[command(name = "chowforms", version, about = "Codimension-one decompositions and Chow varieties", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Prime modulus of the working field.
    #[arg(long, global = true, env = "CHOWFORMS_FIELD_PRIME")]
    prime: Option<u64>,

    /// Work over the rationals instead of a prime field.
    #[arg(long, global = true)]
    rationals: bool,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Fresh seeds tried after a degenerate or failing draw.
    #[arg(long, global = true, default_value_t = 5)]
    retries: usize,

    /// Upper bound on the size of exhaustive enumerations.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    guard: u64,

    /// Emit a JSON document.
    #[arg(long, global = true)]
    json: bool,

    /// Emit CSV (formula tables only).
    #[arg(long, global = true)]
    csv: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form invariants over a grid of (n, d).
    Formulas(cmd::formulas::Args),
    /// Run randomized exact verification oracles.
    Verify(cmd::verify::Args),
    /// Reconstruct a codimension-one decomposition.
    Decompose(cmd::decompose::Args),
    /// Count rational points of VSH over a small prime field.
    Count(cmd::count::Args),
}

fn run(cli: Cli) -> Result<cmd::Outcome, Failure> {
    let config = RunConfig::from_flags(cli.prime, cli.rationals, cli.seed, cli.retries, cli.guard, cli.json, cli.csv)?;
    match cli.command {
        Command::Formulas(args) => cmd::formulas::run(&config, &args),
        Command::Verify(args) => cmd::verify::run(&config, &args),
        Command::Decompose(args) => cmd::decompose::run(&config, &args),
        Command::Count(args) => cmd::count::run(&config, &args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}
