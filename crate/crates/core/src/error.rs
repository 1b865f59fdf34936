use std::fmt;

/// Why a coefficient failed the MUM condition `q_j(0) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MumFailure {
    /// `q_j` has a pole at `t = 0`.
    Pole,
    /// `q_j(0)` is finite but nonzero; carries the value as `"p/q"`.
    NonZero(String),
}

impl fmt::Display for MumFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MumFailure::Pole => f.write_str("pole at t = 0"),
            MumFailure::NonZero(v) => write!(f, "value {v} at t = 0"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("rational function has a pole at t = 0")]
    PoleAtZero,
    #[error("operator is not MUM at t = 0: q_{index} has {failure}{}", indicial_suffix(.indicial))]
    NotMum {
        /// 1-based index of the first failing coefficient.
        index: usize,
        failure: MumFailure,
        /// Indicial polynomial in `rho`, when every `q_j` is finite at 0.
        indicial: Option<String>,
    },
    #[error("matrix is not unipotent")]
    NonUnipotent,
    #[error("symbol coefficient v_{index} is not analytic at t = 0")]
    NotAnalyticAtZero { index: usize },
    #[error("evaluation point outside the disk |t| <= {radius} (|t| = {modulus})")]
    OutOfDisk { modulus: f64, radius: f64 },
    #[error("evaluation at the singular point t = 0")]
    ZeroArgument,
    #[error("symbol coefficient v_{index} has a pole at the evaluation point")]
    PoleInDisk { index: usize },
    #[error("internal mismatch between evaluation routes: {0}")]
    InternalMismatch(String),
    #[error("quadrature did not converge: last two levels differ by {difference:e}")]
    QuadratureNoConvergence { difference: f64 },
    #[error("leading coefficient vanishes after collection")]
    ZeroLeadingCoefficient,
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Variant name, for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::PoleAtZero => "PoleAtZero",
            Error::NotMum { .. } => "NotMUM",
            Error::NonUnipotent => "NonUnipotent",
            Error::NotAnalyticAtZero { .. } => "NotAnalyticAtZero",
            Error::OutOfDisk { .. } => "OutOfDisk",
            Error::ZeroArgument => "ZeroArgument",
            Error::PoleInDisk { .. } => "PoleInDisk",
            Error::InternalMismatch(_) => "InternalMismatch",
            Error::QuadratureNoConvergence { .. } => "QuadratureNoConvergence",
            Error::ZeroLeadingCoefficient => "ZeroLeadingCoefficient",
            Error::Syntax { .. } => "Syntax",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}

fn indicial_suffix(indicial: &Option<String>) -> String {
    match indicial {
        Some(p) => format!(" (indicial polynomial {p})"),
        None => String::new(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
