//! Exact standard bases, monodromy and limiting mixed Hodge structures for
//! linear differential operators with maximally unipotent monodromy at `t = 0`.
//!
//! The crate is organised bottom-up:
//!
//! - [`algebra`]: exact rationals, polynomials, rational functions, truncated
//!   series and operators in `theta = t d/dt`;
//! - [`frobenius`]: the standard basis `phi_0, ..., phi_{r-1}` and an
//!   independent residual check;
//! - [`mhs`]: the monodromy `gamma`, `N = log gamma`, the weight and limiting
//!   Hodge filtrations, and limits of algebraic families of functionals;
//! - [`numeric`]: multiprecision evaluation and the Legendre period checks;
//! - [`syntax`]: a parser for operator expressions such as
//!   `theta^2 - (t/(1-t))*theta - (1/4)*(t/(1-t))`.
//!
//! ```
//! use limhodge::algebra::{Rational, ThetaOperator};
//! use limhodge::frobenius::standard_basis;
//!
//! let basis = standard_basis(&ThetaOperator::legendre(), 10).unwrap();
//! assert_eq!(basis.f(0).coeff(2), &Rational::from((9, 64)));
//! ```

pub mod algebra;
mod error;
pub mod frobenius;
pub mod mhs;
pub mod numeric;
pub mod syntax;

pub use error::{Error, MumFailure, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/operators.md")]
    mod operators {}
    #[doc = include_str!("../../../book/src/standard-basis.md")]
    mod standard_basis {}
    #[doc = include_str!("../../../book/src/monodromy.md")]
    mod monodromy {}
    #[doc = include_str!("../../../book/src/limits.md")]
    mod limits {}
    #[doc = include_str!("../../../book/src/numerics.md")]
    mod numerics {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
