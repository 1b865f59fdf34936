//! Exact arithmetic over Q: polynomials, rational functions, truncated power
//! series, the formal scalar ring Q[tau], and operators in `theta`.

mod operator;
mod poly;
mod ratfun;
mod scalar;
mod series;

pub use operator::{DiffOperator, TPolyOperator, ThetaOperator};
pub(crate) use operator::factorial;
pub use poly::Poly;
pub use ratfun::RationalFunction;
pub use scalar::FormalScalar;
pub(crate) use scalar::two_pi_i;
pub use series::TruncatedSeries;

/// Re-exported so that callers do not need a direct `rug` dependency for
/// exact coefficients.
pub use rug::Rational;
