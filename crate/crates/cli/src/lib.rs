//! Job runner behind the `limhodge` binary.
//!
//! A [`JobConfig`] names a subcommand and its inputs; [`run`] executes it and
//! returns the exit code together with a single JSON document:
//!
//! ```json
//! { "command": "...", "operator": {"order": 2, "q": ["..."]},
//!   "result": {...}, "diagnostics": {"tail_estimates": {...}, "timings": {...}} }
//! ```
//!
//! Exit code 0 means success, 1 a domain failure (operator not MUM, pole at
//! `t = 0`, failed verification), 2 a usage error.

mod commands;
pub mod decimal;
pub mod json;
mod verify;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::time::Instant;

use limhodge::algebra::ThetaOperator;
use limhodge::syntax::parse_theta_operator;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    HypergeomIdentity,
    Legendre,
    PiSeries,
    MhsChecks,
    Periodicity,
}

impl Suite {
    pub const ALL: [Suite; 5] =
        [Suite::HypergeomIdentity, Suite::Legendre, Suite::PiSeries, Suite::MhsChecks, Suite::Periodicity];

    pub fn name(self) -> &'static str {
        match self {
            Suite::HypergeomIdentity => "hypergeom-identity",
            Suite::Legendre => "legendre",
            Suite::PiSeries => "pi-series",
            Suite::MhsChecks => "mhs-checks",
            Suite::Periodicity => "periodicity",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Solve,
    Indicial,
    Monodromy,
    Filtrations,
    Limit,
    Functional,
    Eval,
    Verify(Suite),
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Solve => "solve",
            Command::Indicial => "indicial",
            Command::Monodromy => "monodromy",
            Command::Filtrations => "filtrations",
            Command::Limit => "limit",
            Command::Functional => "functional",
            Command::Eval => "eval",
            Command::Verify(_) => "verify",
        }
    }
}

/// Inputs of one invocation. Textual fields are parsed by [`run`].
#[derive(Clone, Debug, PartialEq)]
pub struct JobConfig {
    pub command: Command,
    pub operator: Option<String>,
    pub symbol: Option<String>,
    pub nmax: usize,
    pub precision: u32,
    /// Real evaluation point, as a decimal.
    pub t: Option<String>,
    /// Complex point `"re,im"`.
    pub z: Option<String>,
    pub tolerance: Option<String>,
    /// Number of outer terms for the pi series.
    pub terms: usize,
    pub out: Option<PathBuf>,
    /// Record wall-clock timings; off by default so output is reproducible.
    pub timings: bool,
}

impl JobConfig {
    pub fn new(command: Command) -> Self {
        JobConfig {
            command,
            operator: None,
            symbol: None,
            nmax: 200,
            precision: 128,
            t: None,
            z: None,
            tolerance: None,
            terms: 50,
            out: None,
            timings: false,
        }
    }

    pub fn with_operator(mut self, text: &str) -> Self {
        self.operator = Some(text.to_string());
        self
    }

    pub fn with_symbol(mut self, text: &str) -> Self {
        self.symbol = Some(text.to_string());
        self
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    /// Malformed operator, symbol or argument value.
    Input(limhodge::Error),
    Domain(limhodge::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Usage(_) | CliError::Input(_) => 2,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "Usage",
            CliError::Input(e) | CliError::Domain(e) => e.kind(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Input(e) | CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl From<limhodge::Error> for CliError {
    fn from(e: limhodge::Error) -> Self {
        match e {
            limhodge::Error::Syntax { .. } | limhodge::Error::InvalidArgument(_) => CliError::Input(e),
            other => CliError::Domain(other),
        }
    }
}

/// What a subcommand hands back to [`run`].
pub(crate) struct Report {
    pub operator: Option<ThetaOperator>,
    pub result: Value,
    pub tail_estimates: BTreeMap<String, Value>,
    /// `false` turns a finished verification into exit code 1.
    pub passed: bool,
}

impl Report {
    pub(crate) fn new(operator: Option<ThetaOperator>, result: Value) -> Self {
        Report { operator, result, tail_estimates: BTreeMap::new(), passed: true }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub exit_code: i32,
    pub document: Value,
}

impl Outcome {
    /// Pretty-printed document with a trailing newline.
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.document).expect("json values serialize");
        s.push('\n');
        s
    }
}

pub(crate) fn operator_from(job: &JobConfig) -> Result<ThetaOperator, CliError> {
    let text = job.operator.as_deref().ok_or_else(|| CliError::Usage("missing --op".into()))?;
    Ok(parse_theta_operator(text)?)
}

pub fn run(job: &JobConfig) -> Outcome {
    let start = Instant::now();
    let outcome = if job.precision < 64 {
        Err(CliError::Usage(format!("precision {} is below 64 bits", job.precision)))
    } else {
        commands::dispatch(job)
    };
    let mut timings = serde_json::Map::new();
    if job.timings {
        timings.insert("total_seconds".into(), json!(start.elapsed().as_secs_f64()));
    }
    match outcome {
        Ok(report) => {
            let document = json!({
                "command": job.command.name(),
                "operator": report.operator.as_ref().map(json::operator),
                "result": report.result,
                "diagnostics": {
                    "tail_estimates": report.tail_estimates,
                    "timings": timings,
                },
            });
            Outcome { exit_code: if report.passed { 0 } else { 1 }, document }
        }
        Err(e) => {
            let document = json!({
                "command": job.command.name(),
                "operator": Value::Null,
                "result": Value::Null,
                "error": { "kind": e.kind(), "message": e.to_string() },
                "diagnostics": { "tail_estimates": {}, "timings": timings },
            });
            Outcome { exit_code: e.exit_code(), document }
        }
    }
}
