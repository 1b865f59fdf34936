use rug::{Complex, Float};

use super::{EvalConfig, EvalResult};
use crate::algebra::two_pi_i;
use crate::error::{Error, Result};
use crate::frobenius::StandardBasis;
use crate::mhs::monodromy_matrix;

/// `phi_k(t)` on the configured branch of `log t`.
pub fn eval_phi(basis: &StandardBasis, k: usize, t: &Complex, cfg: &EvalConfig) -> Result<EvalResult> {
    if k >= basis.order() {
        return Err(Error::InvalidArgument(format!("k = {k} exceeds basis order {}", basis.order())));
    }
    cfg.check_disk(t)?;
    let t = Complex::with_val(cfg.precision, t);
    let log_t = cfg.log(&t);
    let (value, tail_estimate) = basis.phi(k).eval(&t, &log_t);
    Ok(EvalResult { value, tail_estimate })
}

/// `phi_k` as a function on the upper half plane: `t = e^{2 pi i z}` and
/// `log t = 2 pi i z`, so no branch choice is involved.
pub fn eval_phi_at_z(basis: &StandardBasis, k: usize, z: &Complex, cfg: &EvalConfig) -> Result<EvalResult> {
    if k >= basis.order() {
        return Err(Error::InvalidArgument(format!("k = {k} exceeds basis order {}", basis.order())));
    }
    let log_t = Complex::with_val(cfg.precision, z * two_pi_i(cfg.precision));
    let t = Complex::with_val(cfg.precision, log_t.exp_ref());
    cfg.check_disk(&t)?;
    let (value, tail_estimate) = basis.phi(k).eval(&t, &log_t);
    Ok(EvalResult { value, tail_estimate })
}

/// Largest deviation between `phi_k(z + 1)` and the coordinates predicted by
/// the exact monodromy matrix, `sum_j gamma_{jk} phi_j(z)`, over all `k`.
///
/// Returns the deviation together with the largest tail estimate seen.
pub fn monodromy_defect(basis: &StandardBasis, z: &Complex, cfg: &EvalConfig) -> Result<(Float, Float)> {
    let r = basis.order();
    let gamma = monodromy_matrix(r);
    let z1 = Complex::with_val(cfg.precision, z + 1u32);
    let at_z = (0..r).map(|k| eval_phi_at_z(basis, k, z, cfg)).collect::<Result<Vec<_>>>()?;
    let at_z1 = (0..r).map(|k| eval_phi_at_z(basis, k, &z1, cfg)).collect::<Result<Vec<_>>>()?;
    let mut defect = Float::with_val(cfg.precision, 0);
    let mut tail = Float::with_val(cfg.precision, 0);
    for k in 0..r {
        let mut predicted = Complex::with_val(cfg.precision, 0);
        for (j, phi_j) in at_z.iter().enumerate() {
            predicted += gamma.get(j, k).to_complex(cfg.precision) * &phi_j.value;
        }
        let d = Float::with_val(cfg.precision, (predicted - &at_z1[k].value).abs_ref());
        defect = defect.max(&d);
        tail = tail.max(&at_z1[k].tail_estimate).max(&at_z[k].tail_estimate);
    }
    Ok((defect, tail))
}

/// `2F1(1/2, 1/2; 1; t) = sum_n ((1/2)_n / n!)^2 t^n`, summed directly from
/// the closed-form coefficients up to `t^truncation`.
///
/// Shares no code with the recurrence solver and serves as its cross-check.
pub fn hypergeom_2f1_half(t: &Complex, cfg: &EvalConfig) -> Result<EvalResult> {
    let prec = cfg.precision;
    let modulus = Float::with_val(prec, t.abs_ref()).to_f64();
    if modulus >= 1.0 || modulus > cfg.radius {
        return Err(Error::OutOfDisk { modulus, radius: cfg.radius.min(1.0) });
    }
    let mut coeff = Float::with_val(prec, 1);
    let mut power = Complex::with_val(prec, 1);
    let mut sum = Complex::with_val(prec, 1);
    let mut last = Float::with_val(prec, 1);
    for n in 1..=cfg.truncation {
        // ((n - 1/2) / n)^2 = ((2n - 1) / (2n))^2
        let ratio = Float::with_val(prec, 2 * n as u64 - 1) / Float::with_val(prec, 2 * n as u64);
        coeff *= Float::with_val(prec, ratio.square_ref());
        power *= t;
        let term = Complex::with_val(prec, &power * &coeff);
        last = Float::with_val(prec, term.abs_ref());
        sum += term;
    }
    Ok(EvalResult { value: sum, tail_estimate: last })
}
