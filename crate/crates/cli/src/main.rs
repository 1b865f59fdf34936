use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use limhodge_cli::{run, Command, JobConfig, Suite};

/// Standard bases, monodromy and limiting Hodge data for MUM operators.
#[derive(Parser)]
#[command(name = "limhodge", version)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Coefficients of f_0, ..., f_{r-1} up to t^nmax.
    Solve(Common),
    /// Indicial polynomial and MUM diagnosis.
    Indicial(Common),
    /// Monodromy matrix and its logarithm over Q[tau].
    Monodromy(Common),
    /// Weight and limiting Hodge filtrations on the dual solution space.
    Filtrations(Common),
    /// Limit of the twisted functional of a symbol.
    Limit(Common),
    /// The functionals pi_z and pi'_z at a point z.
    Functional(Common),
    /// Values of phi_k at t, or at t = exp(2 pi i z).
    Eval(Common),
    /// Run a named numeric or exact verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    HypergeomIdentity,
    Legendre,
    PiSeries,
    MhsChecks,
    Periodicity,
}

#[derive(Args)]
struct Common {
    /// Operator expression, e.g. "theta^2 - (t/(1-t))*theta".
    #[arg(long = "op")]
    operator: Option<String>,
    /// Symbol sum_j v_j(t) theta^j of degree below the operator order.
    #[arg(long)]
    symbol: Option<String>,
    #[arg(long, default_value_t = 200)]
    nmax: usize,
    /// Working precision in bits.
    #[arg(long, default_value_t = 128)]
    precision: u32,
    /// Real evaluation point.
    #[arg(long)]
    t: Option<String>,
    /// Complex point as re,im.
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    #[arg(long)]
    tolerance: Option<String>,
    /// Outer terms summed by the pi-series suite.
    #[arg(long, default_value_t = 50)]
    terms: usize,
    /// Write the JSON document here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include wall-clock timings in the diagnostics.
    #[arg(long)]
    timings: bool,
}

fn job(command: Command, c: Common) -> JobConfig {
    JobConfig {
        command,
        operator: c.operator,
        symbol: c.symbol,
        nmax: c.nmax,
        precision: c.precision,
        t: c.t,
        z: c.z,
        tolerance: c.tolerance,
        terms: c.terms,
        out: c.out,
        timings: c.timings,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match cli.command {
        Sub::Solve(c) => job(Command::Solve, c),
        Sub::Indicial(c) => job(Command::Indicial, c),
        Sub::Monodromy(c) => job(Command::Monodromy, c),
        Sub::Filtrations(c) => job(Command::Filtrations, c),
        Sub::Limit(c) => job(Command::Limit, c),
        Sub::Functional(c) => job(Command::Functional, c),
        Sub::Eval(c) => job(Command::Eval, c),
        Sub::Verify { suite, common } => {
            let suite = match suite {
                SuiteArg::HypergeomIdentity => Suite::HypergeomIdentity,
                SuiteArg::Legendre => Suite::Legendre,
                SuiteArg::PiSeries => Suite::PiSeries,
                SuiteArg::MhsChecks => Suite::MhsChecks,
                SuiteArg::Periodicity => Suite::Periodicity,
            };
            job(Command::Verify(suite), common)
        }
    };
    let outcome = run(&config);
    let text = outcome.render();
    match &config.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("limhodge: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if let Some(err) = outcome.document.get("error") {
        eprintln!("limhodge: {}", err["message"].as_str().unwrap_or("error"));
    }
    ExitCode::from(outcome.exit_code as u8)
}
