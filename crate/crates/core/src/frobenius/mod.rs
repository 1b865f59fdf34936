//! Standard basis of solutions at a point of maximally unipotent monodromy.
//!
//! For a monic operator `L = theta^r + q_1 theta^{r-1} + ... + q_r` with every
//! `q_j(0) = 0`, there are unique series `f_0 in 1 + tQ[[t]]` and
//! `f_1, ..., f_{r-1} in tQ[[t]]` such that
//!
//! ```text
//! phi_k = sum_{j=0}^{k} (log t)^j / j! * f_{k-j}(t),   k = 0, ..., r-1
//! ```
//!
//! are solutions. Writing `L = sum_j t^j p_j(theta)`, the series are found from
//! the coupled equations `sum_{j=0}^{k} (1/j!) L^{(j)} f_{k-j} = 0`, where
//! `L^{(j)}` is the `j`-th formal derivative in `theta`, each solved by the
//! recurrence `n^r a_n + p_1(n-1) a_{n-1} + ... = b_n`.
//!
//! [`residual`] re-checks a basis by applying `L` to `phi_k` directly, without
//! going through the recurrence.

mod logseries;

pub use logseries::LogSeries;

use rug::{Integer, Rational};

use crate::algebra::{factorial, Poly, TPolyOperator, ThetaOperator, TruncatedSeries};
use crate::error::{Error, MumFailure, Result};

/// `rho^r + sum_j q_j(0) rho^{r-j}`.
pub fn indicial_polynomial(op: &ThetaOperator) -> Result<Poly> {
    let r = op.order();
    let mut c = vec![Rational::new(); r + 1];
    c[r] = Rational::from(1);
    for j in 1..=r {
        c[r - j] = op.q(j).value_at_zero()?;
    }
    Ok(Poly::from_coeffs(c))
}

/// Checks `q_j(0) = 0` for every `j`, reporting the first coefficient that fails.
pub fn check_mum(op: &ThetaOperator) -> Result<()> {
    let indicial = indicial_polynomial(op).ok().map(|p| p.display_in("rho"));
    for j in 1..=op.order() {
        let failure = match op.q(j).value_at_zero() {
            Err(_) => MumFailure::Pole,
            Ok(v) if v != 0 => MumFailure::NonZero(v.to_string()),
            Ok(_) => continue,
        };
        let indicial = if failure == MumFailure::Pole { None } else { indicial };
        return Err(Error::NotMum { index: j, failure, indicial });
    }
    Ok(())
}

/// The series `f_0, ..., f_{r-1}` of the standard basis, truncated at `t^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardBasis {
    f: Vec<TruncatedSeries>,
}

impl StandardBasis {
    /// Wraps precomputed series. No check is made that they solve anything;
    /// see [`residual`].
    pub fn from_series(f: Vec<TruncatedSeries>) -> Self {
        assert!(!f.is_empty());
        StandardBasis { f }
    }

    pub fn order(&self) -> usize {
        self.f.len()
    }

    pub fn truncation(&self) -> usize {
        self.f[0].order()
    }

    pub fn f(&self, j: usize) -> &TruncatedSeries {
        &self.f[j]
    }

    pub fn series(&self) -> &[TruncatedSeries] {
        &self.f
    }

    /// `phi_k` as an element of Q[[t]][log t].
    pub fn phi(&self, k: usize) -> LogSeries {
        LogSeries::new((0..=k).map(|j| self.f[k - j].clone()).collect())
    }

    #[cfg(test)]
    pub(crate) fn series_mut(&mut self, j: usize) -> &mut TruncatedSeries {
        &mut self.f[j]
    }
}

/// Solve `L f = b` coefficient-wise, given `a_0`.
fn solve_recurrence(op: &TPolyOperator, b: &TruncatedSeries, a0: Rational) -> TruncatedSeries {
    let order = b.order();
    let mut a: Vec<Rational> = Vec::with_capacity(order + 1);
    a.push(a0);
    for n in 1..=order {
        let lead = op.p(0).eval_int(n as i64);
        assert!(lead != 0, "p_0({n}) vanishes; the recurrence cannot be solved");
        let mut rhs = b.coeff(n).clone();
        for j in 1..=n.min(op.truncation()) {
            let pj = op.p(j);
            if pj.is_zero() || a[n - j] == 0 {
                continue;
            }
            rhs -= pj.eval_int((n - j) as i64) * &a[n - j];
        }
        a.push(rhs / lead);
    }
    TruncatedSeries::from_coeffs(order, a)
}

/// Computes the standard basis up to `t^truncation`.
pub fn standard_basis(op: &ThetaOperator, truncation: usize) -> Result<StandardBasis> {
    check_mum(op)?;
    let r = op.order();
    // Q L has the same solutions and finitely many p_n, so each step of the
    // recurrence touches only deg Q + 1 earlier coefficients
    let tpoly = op.cleared_tpoly()?;
    debug_assert!(tpoly.leading_is_theta_power());
    let derivatives: Vec<TPolyOperator> = (0..r).map(|j| tpoly.theta_derivative(j)).collect();

    let mut f: Vec<TruncatedSeries> = Vec::with_capacity(r);
    f.push(solve_recurrence(&tpoly, &TruncatedSeries::zero(truncation), Rational::from(1)));
    for k in 1..r {
        let mut b = TruncatedSeries::zero(truncation);
        for j in 1..=k {
            let inv_fact = Rational::from((Integer::from(1), factorial(j)));
            b = &b - &derivatives[j].apply(&f[k - j]).scale(&inv_fact);
        }
        assert!(*b.coeff(0) == 0, "right-hand side must lie in tQ[[t]]");
        f.push(solve_recurrence(&tpoly, &b, Rational::new()));
    }
    Ok(StandardBasis { f })
}

/// `L phi_k` computed by expanding `L` directly on the log-series; vanishes
/// identically up to the truncation order for a correct basis.
pub fn residual(op: &ThetaOperator, basis: &StandardBasis, k: usize) -> Result<LogSeries> {
    assert!(k < basis.order(), "k must be below the basis order");
    basis.phi(k).apply(op)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RationalFunction;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn theta_power_basis_is_trivial() {
        for r in 1..=4 {
            let b = standard_basis(&ThetaOperator::theta_power(r).unwrap(), 20).unwrap();
            assert_eq!(b.f(0), &TruncatedSeries::one(20));
            for j in 1..r {
                assert!(b.f(j).is_zero());
            }
        }
    }

    #[test]
    fn legendre_coefficients() {
        let b = standard_basis(&ThetaOperator::legendre(), 6).unwrap();
        let f0: Vec<Rational> = [(1, 1), (1, 4), (9, 64), (25, 256), (1225, 16384)]
            .iter()
            .map(|&(n, d)| q(n, d))
            .collect();
        assert_eq!(&b.f(0).coeffs()[..5], &f0[..]);
        assert_eq!(b.f(1).coeff(0), &q(0, 1));
        assert_eq!(b.f(1).coeff(1), &q(1, 2));
        assert_eq!(b.f(1).coeff(2), &q(21, 64));
    }

    #[test]
    fn mum_failures() {
        let inv_1_minus_t =
            RationalFunction::new(Poly::one(), Poly::from_ratios(&[(1, 1), (-1, 1)])).unwrap();
        let l = ThetaOperator::new(vec![RationalFunction::zero(), inv_1_minus_t.scale(&q(-1, 4))]).unwrap();
        match check_mum(&l) {
            Err(Error::NotMum { index: 2, failure: MumFailure::NonZero(v), indicial: Some(p) }) => {
                assert_eq!(v, "-1/4");
                assert_eq!(p, "-1/4 + 1*rho^2");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(indicial_polynomial(&l).unwrap(), Poly::from_ratios(&[(-1, 4), (0, 1), (1, 1)]));

        let pole = ThetaOperator::new(vec![RationalFunction::t().inv().unwrap()]).unwrap();
        assert!(matches!(
            check_mum(&pole),
            Err(Error::NotMum { index: 1, failure: MumFailure::Pole, indicial: None })
        ));
        assert_eq!(indicial_polynomial(&pole), Err(Error::PoleAtZero));
        assert!(matches!(standard_basis(&pole, 5), Err(Error::NotMum { .. })));
    }

    #[test]
    fn indicial_of_mum_examples() {
        assert_eq!(indicial_polynomial(&ThetaOperator::legendre()).unwrap(), Poly::var().pow(2));
        assert_eq!(indicial_polynomial(&ThetaOperator::theta_power(3).unwrap()).unwrap(), Poly::var().pow(3));
    }

    #[test]
    fn residual_vanishes_for_log_t() {
        let l = ThetaOperator::theta_power(2).unwrap();
        let b = standard_basis(&l, 10).unwrap();
        assert!(residual(&l, &b, 1).unwrap().is_zero());
    }

    #[test]
    fn perturbed_basis_has_nonzero_residual() {
        let l = ThetaOperator::legendre();
        let mut b = standard_basis(&l, 30).unwrap();
        for k in 0..2 {
            assert!(residual(&l, &b, k).unwrap().is_zero());
        }
        let c = b.f(1).coeff(7).clone() + 1u32;
        b.series_mut(1).set_coeff(7, c);
        assert!(!residual(&l, &b, 1).unwrap().is_zero());
    }
}
