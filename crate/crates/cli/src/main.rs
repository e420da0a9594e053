use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use discdeg::compute::{run_compute, ComputeRequest};
use discdeg::symbolic::run_symbolic;
use discdeg::verify::{run_verify, VerifyRequest};
use discdeg::Failure;

/// Homogeneity degrees of the discriminant of a complete intersection.
#[derive(Parser)]
#[command(name = "discdeg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Degree report for one profile.
    Compute {
        /// Ambient projective dimension N.
        #[arg(long = "N")]
        ambient_dim: usize,
        /// Comma-separated form degrees d_1,...,d_c.
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
        /// Characteristic: 0 or a prime below 2^31.
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Skip the xi_closed and lattice-oracle comparisons.
        #[arg(long)]
        no_cross_check: bool,
    },
    /// The degrees as polynomials in d1..dc.
    Symbolic {
        #[arg(long)]
        c: usize,
        #[arg(long = "N")]
        ambient_dim: usize,
    },
    /// Cross-check every profile up to the given bounds; one JSON line per check.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_k: u64,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_degree: u32,
        /// Add Sylvester and binary-discriminant checks where they apply.
        #[arg(long)]
        with_algebraic_oracle: bool,
    },
}

fn run(command: Command) -> Result<(), Failure> {
    let mut stdout = io::stdout().lock();
    let io_err = |e: io::Error| Failure::Verification(format!("writing output: {e}"));
    match command {
        Command::Compute {
            ambient_dim,
            degrees,
            characteristic,
            format,
            no_cross_check,
        } => {
            let report = run_compute(&ComputeRequest {
                ambient_dim,
                degrees,
                characteristic,
                cross_check: !no_cross_check,
            })?;
            let text = match format {
                Format::Json => report.to_json() + "\n",
                Format::Table => report.to_table(),
            };
            stdout.write_all(text.as_bytes()).map_err(io_err)?;
            if !report.passed() {
                return Err(Failure::Verification(
                    "cross-check disagreed with the closed form".into(),
                ));
            }
        }
        Command::Symbolic { c, ambient_dim } => {
            stdout
                .write_all(run_symbolic(c, ambient_dim)?.as_bytes())
                .map_err(io_err)?;
        }
        Command::Verify {
            max_k,
            max_degree,
            with_algebraic_oracle,
        } => {
            let max_k = usize::try_from(max_k)
                .map_err(|_| Failure::Usage("--max-k is too large".into()))?;
            let outcome = run_verify(&VerifyRequest {
                max_k,
                max_degree,
                algebraic_oracle: with_algebraic_oracle,
            })?;
            for line in &outcome.lines {
                writeln!(stdout, "{}", line.to_json()).map_err(io_err)?;
            }
            writeln!(stdout, "{}", outcome.summary()).map_err(io_err)?;
            let first = outcome.failures().next().map(|l| l.to_json());
            if let Some(first) = first {
                return Err(Failure::Verification(format!(
                    "first counterexample: {first}"
                )));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("discdeg: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}
