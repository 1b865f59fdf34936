use rug::{Integer, Rational};

use super::FormalMatrix;
use crate::algebra::FormalScalar;
use crate::error::{Error, Result};

/// Local monodromy in the standard basis: entry `(i, j)` is
/// `tau^{j-i} / (j-i)!` for `j >= i`. Column `k` holds the coordinates of
/// the continuation of `phi_k` once around `t = 0`.
pub fn monodromy_matrix(r: usize) -> FormalMatrix {
    assert!(r >= 1, "order must be at least 1");
    FormalMatrix::from_fn(r, |i, j| {
        if j < i {
            return FormalScalar::zero();
        }
        let d = j - i;
        let inv = Rational::from((Integer::from(1), Integer::from(Integer::factorial(d as u32))));
        FormalScalar::monomial(inv, d)
    })
}

/// Whether `(gamma - I)^r = 0` and `(gamma - I)^{r-1} != 0`.
pub fn is_maximally_unipotent(gamma: &FormalMatrix) -> bool {
    let r = gamma.dim();
    let u = gamma - &FormalMatrix::identity(r);
    let p = u.pow(r - 1);
    !p.is_zero() && (&p * &u).is_zero()
}

/// `N = log(gamma) = sum_{h >= 1} (-1)^{h-1} (gamma - I)^h / h`.
///
/// Fails with [`Error::NonUnipotent`] unless `(gamma - I)^r = 0`, which makes
/// the series finite.
pub fn log_monodromy(gamma: &FormalMatrix) -> Result<FormalMatrix> {
    let r = gamma.dim();
    let u = gamma - &FormalMatrix::identity(r);
    if !u.pow(r).is_zero() {
        return Err(Error::NonUnipotent);
    }
    let mut acc = FormalMatrix::zero(r);
    let mut power = FormalMatrix::identity(r);
    for h in 1..r {
        power = &power * &u;
        let sign = if h % 2 == 1 { 1 } else { -1 };
        acc = &acc + &power.scale(&Rational::from((sign, h as i64)));
    }
    Ok(acc)
}
