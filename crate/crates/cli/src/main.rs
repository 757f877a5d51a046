//! `codlab`: codegree sets of alternating groups and the exception search.
//!
//! Exit status: 0 on success, 2 on a usage error (including an unreadable
//! data file), 3 when a mathematical check fails or cannot be completed.

mod commands;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "codlab",
    version,
    about = "Codegree sets of alternating groups and the simple-group exception search"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Worker threads; output is identical for every value. Defaults to all cores.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,

    /// Largest n considered: the degree limit for cod, min-cod and
    /// check-subset (default 40), the n cap for search (default 200), the
    /// scan end for schur (default 64).
    #[arg(long, global = true)]
    pub max_n: Option<u64>,

    /// Add prime factorisations next to large numbers.
    #[arg(long, global = true)]
    pub factored: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Codegree set of A_n.
    Cod { n: u64 },
    /// Minimal non-trivial codegree a_n for n_lo <= n <= n_hi, and whether it increases.
    MinCod { n_lo: u64, n_hi: u64 },
    /// Exception sweep for a family tag (psl, psu, e6, 2b2, ...), "sporadic", or "all".
    Search { target: String },
    /// The double-cover case: n - 1 = 2^e solutions and |cod(2.A9)| vs |cod(A9)|.
    Schur,
    /// Whether cod(H) is contained in cod(A_n).
    CheckSubset { group: String, n: u64 },
}

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    /// The rendered report is still printed.
    Verification {
        output: String,
        message: String,
    },
    Unverifiable(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Verification { .. } | Failure::Unverifiable(_) => 3,
        }
    }
}

fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    // A closed pipe is not an error worth reporting.
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        builder = builder.num_threads(usize::from(t));
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("codlab: cannot start worker threads: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| commands::run(&cli)) {
        Ok(text) => {
            emit(&text);
            ExitCode::SUCCESS
        }
        Err(f) => {
            let code = f.code();
            match f {
                Failure::Usage(m) | Failure::Unverifiable(m) => eprintln!("codlab: {m}"),
                Failure::Verification { output, message } => {
                    emit(&output);
                    eprintln!("codlab: {message}");
                }
            }
            ExitCode::from(code)
        }
    }
}
