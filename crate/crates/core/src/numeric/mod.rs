//! Multiprecision evaluation of standard-basis solutions and numerical checks
//! of the Legendre period identities.
//!
//! Everything here works at a configurable binary precision through MPFR.
//! Logarithms use the principal branch (cut along the negative reals), which
//! is real on `(0, 1)`.

mod eval;
mod periods;
mod quadrature;

pub use eval::{eval_phi, eval_phi_at_z, hypergeom_2f1_half, monodromy_defect};
pub use periods::{
    legendre_period_first, legendre_period_second, pi_partial_sums, pi_series, verify_identity_hg,
    IdentityResidual,
};
pub use quadrature::{tanh_sinh, QuadratureResult};

use rug::{Complex, Float};

use crate::error::{Error, Result};

/// Choice of `log t` near the base point.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum LogBranch {
    /// Principal logarithm, imaginary part in `(-pi, pi]`.
    #[default]
    Principal,
    /// Principal logarithm plus `2 pi i * sheet`.
    Sheet(i64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct EvalConfig {
    /// Working precision in bits, at least 64.
    pub precision: u32,
    /// Series truncation order used when a basis has to be computed.
    pub truncation: usize,
    /// Largest admissible `|t|`.
    pub radius: f64,
    pub log_branch: LogBranch,
    /// Target agreement between successive quadrature levels.
    pub quadrature_tolerance: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            precision: 128,
            truncation: 200,
            radius: 0.75,
            log_branch: LogBranch::Principal,
            quadrature_tolerance: 1e-20,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        if self.precision < 64 {
            return Err(Error::InvalidArgument(format!("precision {} is below 64 bits", self.precision)));
        }
        if !(self.radius > 0.0) {
            return Err(Error::InvalidArgument("radius must be positive".into()));
        }
        Ok(())
    }

    pub fn real(&self, x: f64) -> Float {
        Float::with_val(self.precision, x)
    }

    pub fn complex(&self, re: f64, im: f64) -> Complex {
        Complex::with_val(self.precision, (re, im))
    }

    /// `log t` on the configured branch.
    pub fn log(&self, t: &Complex) -> Complex {
        let principal = Complex::with_val(self.precision, t.ln_ref());
        match self.log_branch {
            LogBranch::Principal => principal,
            LogBranch::Sheet(k) => principal + crate::algebra::two_pi_i(self.precision) * k,
        }
    }

    /// Rejects `t = 0` and points outside the configured disk.
    pub(crate) fn check_disk(&self, t: &Complex) -> Result<()> {
        if t.is_zero() {
            return Err(Error::ZeroArgument);
        }
        let modulus = Float::with_val(self.precision, t.abs_ref()).to_f64();
        if modulus > self.radius {
            return Err(Error::OutOfDisk { modulus, radius: self.radius });
        }
        Ok(())
    }
}

/// A computed value with the magnitude of the last retained contribution.
#[derive(Clone, Debug, PartialEq)]
pub struct EvalResult {
    pub value: Complex,
    /// Non-negative heuristic for the truncation error.
    pub tail_estimate: Float,
}
