//! `sos3`: certificates and exact tools from the command line.
//!
//! Exit codes: 0 success, 2 a check or identity did not hold, 1 bad input.

mod commands;
mod divisor_text;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

#[derive(Parser, Debug)]
#[command(
    name = "sos3",
    version,
    about = "Exact certificates that members of a positive family are not sums of three squares"
)]
pub struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// Family parameters as exact rational literals.
#[derive(Args, Debug, Clone)]
pub struct ParamArgs {
    #[arg(long, default_value = "23", allow_hyphen_values = true)]
    pub eta: String,
    #[arg(long, default_value = "34", allow_hyphen_values = true)]
    pub omega: String,
    #[arg(long, default_value = "547", allow_hyphen_values = true)]
    pub rho: String,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    Positivity,
    Nonvanishing,
    Nonsquares,
    Torsion,
    Descent,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum JacOp {
    Add,
    Sub,
    Neg,
    Double,
    Mul,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the full pipeline and print the certificate.
    Prove {
        #[command(flatten)]
        params: ParamArgs,
        /// Write the JSON certificate to this file.
        #[arg(long)]
        out: Option<String>,
    },
    /// Run one group of checks.
    Check {
        #[arg(value_enum)]
        group: Group,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        out: Option<String>,
    },
    /// Jacobian arithmetic. Without --curve the odd model of the family
    /// member is used, with names d, g1, g2, g3.
    Jac {
        #[arg(value_enum)]
        op: JacOp,
        /// Divisors `<u ; v>` or `id`; for mul, the integer comes first.
        #[arg(required = true, allow_negative_numbers = true)]
        operands: Vec<String>,
        /// Right-hand side f of z^2 = f, in y (or s) over Q(x).
        #[arg(long)]
        curve: Option<String>,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Xi of a divisor given the factorization of f.
    Xi {
        /// Monic coprime factors of f, separated by ';'.
        #[arg(long)]
        factors: String,
        divisor: String,
    },
    /// Richelot dual of z^2 = G1 G2 G3.
    Richelot { g1: String, g2: String, g3: String },
    /// Check the three-square identity, symbolically or at (alpha, beta, gamma).
    Identity {
        #[arg(long, conflicts_with = "values")]
        symbolic: bool,
        #[arg(num_args = 3, allow_hyphen_values = true, value_names = ["ALPHA", "BETA", "GAMMA"])]
        values: Vec<String>,
    },
    /// Whether f in Q(x) is nonnegative on R (a sum of two squares).
    Psd { f: String },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("SOS3_LOG")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // usage errors share exit code 1 with other input errors
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
