//! Periods of the Legendre family `y^2 = x(x-1)(x-t)` and the identities that
//! tie them to the standard basis of the hypergeometric operator.

use rug::float::Constant;
use rug::{Complex, Float};

use super::quadrature::tanh_sinh;
use super::{eval_phi, EvalConfig, EvalResult};
use crate::algebra::ThetaOperator;
use crate::error::{Error, Result};
use crate::frobenius::standard_basis;

fn check_unit_interval(t: &Float) -> Result<()> {
    if *t <= 0 || *t >= 1 {
        return Err(Error::InvalidArgument(format!("t = {} must lie in (0, 1)", t.to_f64())));
    }
    Ok(())
}

/// `int_1^oo dx / sqrt(x(x-1)(x-t))` for `0 < t < 1`.
///
/// With `x = 1/u` this is `int_0^1 du / sqrt(u(1-u)(1-tu))`, which has
/// inverse square-root singularities at both ends.
pub fn legendre_period_first(t: &Float, cfg: &EvalConfig) -> Result<EvalResult> {
    check_unit_interval(t)?;
    let prec = cfg.precision;
    let t = Float::with_val(prec, t);
    let res = tanh_sinh(
        |u, du0, du1| {
            let one_minus_tu = Float::with_val(prec, 1u32 - Float::with_val(prec, &t * u));
            let prod = Float::with_val(prec, du0 * du1) * one_minus_tu;
            prod.sqrt().recip()
        },
        &Float::with_val(prec, 0),
        &Float::with_val(prec, 1),
        prec,
        cfg.quadrature_tolerance,
    )?;
    Ok(EvalResult { value: Complex::with_val(prec, res.value), tail_estimate: res.error_estimate })
}

/// `int_t^1 dx / sqrt(x(x-1)(x-t))` for `0 < t < 1`, with the branch
/// `sqrt(x - 1) = i sqrt(1 - x)` on `(t, 1)`. The result is purely imaginary,
/// `-i int_t^1 dx / sqrt(x(1-x)(x-t))`.
pub fn legendre_period_second(t: &Float, cfg: &EvalConfig) -> Result<EvalResult> {
    check_unit_interval(t)?;
    let prec = cfg.precision;
    let t_val = Float::with_val(prec, t);
    let res = tanh_sinh(
        |x, dx_t, dx_1| {
            let prod = Float::with_val(prec, x * dx_1) * dx_t;
            prod.sqrt().recip()
        },
        &t_val,
        &Float::with_val(prec, 1),
        prec,
        cfg.quadrature_tolerance,
    )?;
    let value = Complex::with_val(prec, (Float::new(prec), -res.value));
    Ok(EvalResult { value, tail_estimate: res.error_estimate })
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityResidual {
    pub residual: Float,
    /// Sum of the tail estimates of every series evaluation involved.
    pub tail_estimate: Float,
}

/// `|pi phi_0(1-t) - 4 log(2) phi_0(t) + phi_1(t)|` for the hypergeometric
/// operator, with both sides summed from the standard basis.
pub fn verify_identity_hg(t: &Float, cfg: &EvalConfig) -> Result<IdentityResidual> {
    check_unit_interval(t)?;
    let prec = cfg.precision;
    let basis = standard_basis(&ThetaOperator::legendre(), cfg.truncation)?;
    let t_c = Complex::with_val(prec, t);
    let s_c = Complex::with_val(prec, 1u32 - Float::with_val(prec, t));
    let phi0_s = eval_phi(&basis, 0, &s_c, cfg)?;
    let phi0_t = eval_phi(&basis, 0, &t_c, cfg)?;
    let phi1_t = eval_phi(&basis, 1, &t_c, cfg)?;
    let pi = Float::with_val(prec, Constant::Pi);
    let log2 = Float::with_val(prec, Constant::Log2);
    let lhs = Complex::with_val(prec, &phi0_s.value * &pi);
    let rhs = Complex::with_val(prec, &phi0_t.value * Float::with_val(prec, &log2 * 4u32)) - &phi1_t.value;
    let residual = Float::with_val(prec, (lhs - rhs).abs_ref());
    let tail_estimate = phi0_s.tail_estimate * &pi + phi0_t.tail_estimate * (log2 * 4u32) + phi1_t.tail_estimate;
    Ok(IdentityResidual { residual, tail_estimate })
}

/// Cutoff of the inner sums in [`pi_series`].
const INNER_CUTOFF: u64 = 1 << 16;

fn inner_term(k: u64, prec: u32) -> Float {
    // 1/(k(k - 1/2)) = 2 (1/(k - 1/2) - 1/k)
    let a = Float::with_val(prec, 2 * k - 1);
    let b = Float::with_val(prec, k);
    (Float::with_val(prec, 2u32) / a - Float::with_val(prec, b.recip_ref())) * 2u32
}

/// `2 ln(a / (a - 1/2))`, the integral of `1/(x(x - 1/2))` over `(a, oo)`.
fn tail_integral(a: u64, prec: u32) -> Float {
    let a2 = Float::with_val(prec, 2 * a);
    let ratio = a2.clone() / (a2 - 1u32);
    ratio.ln() * 2u32
}

/// Partial sums `sum_{n < N} ((1/2)_n / n!)^2 sum_{k > n} 1/(k(k - 1/2))`
/// for `N = 1, ..., n_terms`, together with the uncertainty carried by each
/// inner sum.
pub fn pi_partial_sums(n_terms: usize, cfg: &EvalConfig) -> (Vec<Float>, Float) {
    let prec = cfg.precision;
    let n_terms = n_terms.max(1);
    let start = (n_terms as u64).min(INNER_CUTOFF);
    // inner tail sum_{k > n_terms - 1}, summed to the cutoff and bracketed
    // beyond it by the integrals over (K+1, oo) and (K, oo)
    let mut inner = Float::with_val(prec, 0);
    for k in (start..=INNER_CUTOFF).rev() {
        inner += inner_term(k, prec);
    }
    let upper = tail_integral(INNER_CUTOFF, prec);
    let lower = tail_integral(INNER_CUTOFF + 1, prec);
    inner += Float::with_val(prec, &upper + &lower) / 2u32;
    let uncertainty = Float::with_val(prec, &upper - &lower) / 2u32;

    let mut inner_sums = vec![Float::new(prec); n_terms];
    inner_sums[n_terms - 1] = inner.clone();
    for n in (0..n_terms - 1).rev() {
        inner += inner_term(n as u64 + 1, prec);
        inner_sums[n] = inner.clone();
    }

    let mut coeff = Float::with_val(prec, 1);
    let mut acc = Float::with_val(prec, 0);
    let mut partial = Vec::with_capacity(n_terms);
    for (n, s) in inner_sums.iter().enumerate() {
        if n > 0 {
            let ratio = Float::with_val(prec, 2 * n as u64 - 1) / Float::with_val(prec, 2 * n as u64);
            coeff *= Float::with_val(prec, ratio.square_ref());
        }
        acc += Float::with_val(prec, &coeff * s);
        partial.push(acc.clone());
    }
    (partial, uncertainty)
}

/// The series for `pi` obtained from the `t -> 1` limit of the relation
/// between `phi_0(1 - t)` and the standard basis at `t`.
///
/// The tail estimate adds the inner-sum uncertainty (times the sum of outer
/// coefficients) to the magnitude of the last outer term. It is not a bound
/// on the distance to `pi`; the outer series converges like `1/n`.
pub fn pi_series(n_terms: usize, cfg: &EvalConfig) -> EvalResult {
    let prec = cfg.precision;
    let (partial, uncertainty) = pi_partial_sums(n_terms, cfg);
    let value = partial.last().cloned().expect("at least one term");
    let last_term = if partial.len() > 1 {
        Float::with_val(prec, &partial[partial.len() - 1] - &partial[partial.len() - 2])
    } else {
        value.clone()
    };
    let tail_estimate = uncertainty * partial.len() as u64 + last_term.abs();
    EvalResult { value: Complex::with_val(prec, value), tail_estimate }
}
