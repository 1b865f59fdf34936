//! Differential operators in the Euler operator `theta = t d/dt`.
//!
//! Coefficients always stand to the left of the powers of `theta`, and the
//! product obeys `theta * g = g * theta + t g'`.

use std::ops::{Add, Mul, Neg, Sub};

use rug::{Integer, Rational};

use super::{Poly, RationalFunction, TruncatedSeries};
use crate::error::{Error, Result};

/// General element `sum_j c_j(t) theta^j` of Q(t)[theta], not necessarily monic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DiffOperator {
    coeffs: Vec<RationalFunction>,
}

impl DiffOperator {
    pub fn zero() -> Self {
        DiffOperator { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<RationalFunction>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DiffOperator { coeffs }
    }

    /// Multiplication by a function of `t`.
    pub fn function(g: RationalFunction) -> Self {
        DiffOperator::from_coeffs(vec![g])
    }

    pub fn constant(c: Rational) -> Self {
        DiffOperator::function(RationalFunction::constant(c))
    }

    pub fn t() -> Self {
        DiffOperator::function(RationalFunction::t())
    }

    pub fn theta() -> Self {
        DiffOperator::from_coeffs(vec![RationalFunction::zero(), RationalFunction::one()])
    }

    /// `d/dt = t^{-1} theta`.
    pub fn d() -> Self {
        let inv_t = RationalFunction::t().inv().expect("t is nonzero");
        DiffOperator::from_coeffs(vec![RationalFunction::zero(), inv_t])
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    /// Coefficient of `theta^j`.
    pub fn coeff(&self, j: usize) -> RationalFunction {
        self.coeffs.get(j).cloned().unwrap_or_else(RationalFunction::zero)
    }

    /// Degree in `theta`; `None` for the zero operator.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree-zero operator, i.e. a function of `t`, if this is one.
    pub fn as_function(&self) -> Option<RationalFunction> {
        match self.coeffs.len() {
            0 => Some(RationalFunction::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// `theta * self`, using `theta g = g theta + t g'`.
    pub fn left_theta(&self) -> DiffOperator {
        let mut out = vec![RationalFunction::zero(); self.coeffs.len() + 1];
        let t = RationalFunction::t();
        for (j, c) in self.coeffs.iter().enumerate() {
            out[j + 1] = &out[j + 1] + c;
            out[j] = &out[j] + &(&t * &c.derivative());
        }
        DiffOperator::from_coeffs(out)
    }

    fn left_scale(&self, g: &RationalFunction) -> DiffOperator {
        DiffOperator::from_coeffs(self.coeffs.iter().map(|c| g * c).collect())
    }

    pub fn pow(&self, e: u32) -> DiffOperator {
        let mut acc = DiffOperator::constant(Rational::from(1));
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Divide by the leading coefficient to obtain the monic form.
    pub fn into_monic(self) -> Result<ThetaOperator> {
        let Some(r) = self.degree() else {
            return Err(Error::ZeroLeadingCoefficient);
        };
        if r == 0 {
            return Err(Error::InvalidArgument("operator has order 0 in theta".into()));
        }
        let lead_inv = self.coeffs[r].inv().ok_or(Error::ZeroLeadingCoefficient)?;
        let q = (1..=r).map(|j| &self.coeffs[r - j] * &lead_inv).collect();
        ThetaOperator::new(q)
    }
}

impl Add for &DiffOperator {
    type Output = DiffOperator;
    fn add(self, rhs: &DiffOperator) -> DiffOperator {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DiffOperator::from_coeffs((0..n).map(|j| &self.coeff(j) + &rhs.coeff(j)).collect())
    }
}

impl Sub for &DiffOperator {
    type Output = DiffOperator;
    fn sub(self, rhs: &DiffOperator) -> DiffOperator {
        self + &(-rhs)
    }
}

impl Neg for &DiffOperator {
    type Output = DiffOperator;
    fn neg(self) -> DiffOperator {
        DiffOperator { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &DiffOperator {
    type Output = DiffOperator;
    /// Noncommutative product.
    fn mul(self, rhs: &DiffOperator) -> DiffOperator {
        let mut acc = DiffOperator::zero();
        let mut theta_i_rhs = rhs.clone();
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                theta_i_rhs = theta_i_rhs.left_theta();
            }
            if !a.is_zero() {
                acc = &acc + &theta_i_rhs.left_scale(a);
            }
        }
        acc
    }
}

/// Monic operator `theta^r + q_1(t) theta^{r-1} + ... + q_r(t)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThetaOperator {
    q: Vec<RationalFunction>,
}

impl ThetaOperator {
    /// `q[j - 1]` holds `q_j`. The order is `q.len()` and must be at least 1.
    pub fn new(q: Vec<RationalFunction>) -> Result<Self> {
        if q.is_empty() {
            return Err(Error::InvalidArgument("operator order must be at least 1".into()));
        }
        Ok(ThetaOperator { q })
    }

    /// `theta^r`.
    pub fn theta_power(r: usize) -> Result<Self> {
        ThetaOperator::new(vec![RationalFunction::zero(); r])
    }

    /// The Gauss hypergeometric operator with parameters (1/2, 1/2; 1):
    /// `theta^2 - t/(1-t) theta - (1/4) t/(1-t)`.
    pub fn legendre() -> Self {
        let g = RationalFunction::new(Poly::from_ratios(&[(0, 1), (1, 1)]), Poly::from_ratios(&[(1, 1), (-1, 1)]))
            .expect("nonzero denominator");
        ThetaOperator { q: vec![-&g, g.scale(&Rational::from((-1, 4)))] }
    }

    pub fn order(&self) -> usize {
        self.q.len()
    }

    /// `q_j` for `1 <= j <= r`.
    pub fn q(&self, j: usize) -> &RationalFunction {
        &self.q[j - 1]
    }

    pub fn coefficients(&self) -> &[RationalFunction] {
        &self.q
    }

    pub fn to_diff_operator(&self) -> DiffOperator {
        let r = self.order();
        let mut c = vec![RationalFunction::zero(); r + 1];
        c[r] = RationalFunction::one();
        for j in 1..=r {
            c[r - j] = self.q(j).clone();
        }
        DiffOperator::from_coeffs(c)
    }

    /// Rewrite as `sum_{n <= N} t^n p_n(theta)` by expanding every `q_j` at 0.
    pub fn to_tpoly(&self, truncation: usize) -> Result<TPolyOperator> {
        let r = self.order();
        let expansions = self.q.iter().map(|q| q.series(truncation)).collect::<Result<Vec<_>>>()?;
        let p = (0..=truncation)
            .map(|n| {
                let mut c = vec![Rational::new(); r + 1];
                if n == 0 {
                    c[r] = Rational::from(1);
                }
                for (j, e) in expansions.iter().enumerate() {
                    c[r - (j + 1)] += e.coeff(n);
                }
                Poly::from_coeffs(c)
            })
            .collect();
        Ok(TPolyOperator { order: r, p })
    }

    /// Least common multiple `Q` of the denominators of the `q_j`, scaled so
    /// that `Q(0) = 1`. Fails with [`Error::PoleAtZero`] if `Q(0) = 0`.
    pub fn common_denominator(&self) -> Result<Poly> {
        let mut l = Poly::one();
        for q in &self.q {
            let g = Poly::gcd(&l, q.den());
            l = (&l * q.den()).div_rem(&g).0;
        }
        let c0 = l.coeff(0);
        if c0 == 0 {
            return Err(Error::PoleAtZero);
        }
        Ok(l.scale(&Rational::from(c0.recip_ref())))
    }

    /// Coefficients of `Q L = sum_i P_i(t) theta^i` with `Q` the
    /// [common denominator](ThetaOperator::common_denominator); every `P_i` is
    /// a polynomial and `P_r = Q`.
    pub fn cleared_coefficients(&self) -> Result<Vec<Poly>> {
        let den = self.common_denominator()?;
        let r = self.order();
        let mut p = vec![Poly::zero(); r + 1];
        for j in 1..=r {
            let q = self.q(j);
            p[r - j] = q.num() * &den.div_rem(q.den()).0;
        }
        p[r] = den;
        Ok(p)
    }

    /// `Q L` as a finite sum `sum_n t^n p_n(theta)`. Since `Q(0) = 1`, it has
    /// the same solutions and the same `p_0` as `L`.
    pub fn cleared_tpoly(&self) -> Result<TPolyOperator> {
        let cleared = self.cleared_coefficients()?;
        let r = self.order();
        let len = cleared.iter().filter_map(Poly::degree).max().unwrap_or(0) + 1;
        let p = (0..len).map(|n| Poly::from_coeffs((0..=r).map(|i| cleared[i].coeff(n)).collect())).collect();
        Ok(TPolyOperator { order: r, p })
    }

    /// Apply `L` to a series directly: `(sum_i P_i theta^i f) / Q`.
    ///
    /// Independent of the `t^n p_n(theta)` forms; used as a cross-check.
    pub fn apply_series(&self, f: &TruncatedSeries) -> Result<TruncatedSeries> {
        let cleared = self.cleared_coefficients()?;
        let mut acc = TruncatedSeries::zero(f.order());
        let mut power = f.clone();
        for (i, p) in cleared.iter().enumerate() {
            if i > 0 {
                power = power.theta();
            }
            acc = &acc + &power.mul_poly(p);
        }
        Ok(acc.div_poly(&cleared[self.order()]))
    }
}

/// Operator in the form `sum_{j=0}^{N} t^j p_j(theta)` with `p_j` in Q[theta].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TPolyOperator {
    order: usize,
    p: Vec<Poly>,
}

impl TPolyOperator {
    pub fn new(order: usize, p: Vec<Poly>) -> Self {
        TPolyOperator { order, p }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn truncation(&self) -> usize {
        self.p.len() - 1
    }

    pub fn p(&self, j: usize) -> &Poly {
        &self.p[j]
    }

    pub fn polys(&self) -> &[Poly] {
        &self.p
    }

    /// Whether `p_0(theta) = theta^order`, i.e. the MUM condition holds.
    pub fn leading_is_theta_power(&self) -> bool {
        self.p[0] == Poly::var().pow(self.order as u32)
    }

    /// `j`-th formal derivative in `theta`; the result has order `r - j`.
    pub fn theta_derivative(&self, j: usize) -> TPolyOperator {
        assert!(j <= self.order, "derivative order exceeds operator order");
        TPolyOperator { order: self.order - j, p: self.p.iter().map(|p| p.nth_derivative(j)).collect() }
    }

    /// `b_n = sum_{j <= n} p_j(n - j) a_{n-j}`.
    pub fn apply(&self, f: &TruncatedSeries) -> TruncatedSeries {
        let order = f.order();
        let mut out = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut b = Rational::new();
            for j in 0..=n.min(self.truncation()) {
                let a = f.coeff(n - j);
                if *a == 0 || self.p[j].is_zero() {
                    continue;
                }
                b += self.p[j].eval_int((n - j) as i64) * a;
            }
            out.push(b);
        }
        TruncatedSeries::from_coeffs(order, out)
    }
}

/// Factorial as an exact integer.
pub(crate) fn factorial(n: usize) -> Integer {
    Integer::from(Integer::factorial(n as u32))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_squared_tpoly() {
        let l = ThetaOperator::theta_power(2).unwrap().to_tpoly(6).unwrap();
        assert_eq!(l.p(0), &Poly::var().pow(2));
        assert!(l.polys()[1..].iter().all(Poly::is_zero));
    }

    #[test]
    fn legendre_cleared_form() {
        let l = ThetaOperator::legendre();
        assert_eq!(l.common_denominator().unwrap(), Poly::from_ratios(&[(1, 1), (-1, 1)]));
        let c = l.cleared_tpoly().unwrap();
        assert_eq!(c.polys().len(), 2);
        assert_eq!(c.p(0), &Poly::var().pow(2));
        assert_eq!(c.p(1), &Poly::from_ratios(&[(-1, 4), (-1, 1), (-1, 1)]));
    }

    #[test]
    fn common_denominator_is_lcm() {
        let a = RationalFunction::new(Poly::var(), Poly::from_ratios(&[(2, 1), (1, 1)])).unwrap();
        let b = RationalFunction::new(Poly::var(), Poly::from_ratios(&[(2, 1), (3, 1), (1, 1)])).unwrap();
        let op = ThetaOperator::new(vec![a, b]).unwrap();
        // lcm(2 + t, (1 + t)(2 + t)) normalized at 0
        assert_eq!(op.common_denominator().unwrap(), Poly::from_ratios(&[(1, 1), (3, 2), (1, 2)]));
        let pole = ThetaOperator::new(vec![RationalFunction::t().inv().unwrap()]).unwrap();
        assert_eq!(pole.common_denominator(), Err(Error::PoleAtZero));
    }

    #[test]
    fn legendre_tpoly_matches_geometric_expansion() {
        let l = ThetaOperator::legendre().to_tpoly(8).unwrap();
        assert_eq!(l.p(0), &Poly::var().pow(2));
        let tail = Poly::from_ratios(&[(-1, 4), (-1, 1)]);
        for j in 1..=8 {
            assert_eq!(l.p(j), &tail, "p_{j}");
        }
        assert!(l.leading_is_theta_power());
    }

    #[test]
    fn pole_is_rejected() {
        let inv_t = RationalFunction::t().inv().unwrap();
        let l = ThetaOperator::new(vec![inv_t]).unwrap();
        assert_eq!(l.to_tpoly(4), Err(Error::PoleAtZero));
    }

    #[test]
    fn theta_derivatives() {
        let l = ThetaOperator::theta_power(2).unwrap().to_tpoly(3).unwrap();
        assert_eq!(l.theta_derivative(1).p(0), &Poly::from_ratios(&[(0, 1), (2, 1)]));

        let h = ThetaOperator::legendre().to_tpoly(5).unwrap().theta_derivative(1);
        assert_eq!(h.order(), 1);
        assert_eq!(h.p(0), &Poly::from_ratios(&[(0, 1), (2, 1)]));
        for j in 1..=5 {
            assert_eq!(h.p(j), &Poly::constant(Rational::from(-1)));
        }

        let top = ThetaOperator::legendre().to_tpoly(5).unwrap().theta_derivative(2);
        assert_eq!(top.p(0), &Poly::constant(Rational::from(2)));
        assert!(top.polys()[1..].iter().all(Poly::is_zero));
    }

    #[test]
    fn apply_theta_squared_to_t() {
        let l = ThetaOperator::theta_power(2).unwrap().to_tpoly(4).unwrap();
        let t = TruncatedSeries::monomial(4, Rational::from(1), 1);
        assert_eq!(l.apply(&t), t);
        assert!(l.apply(&TruncatedSeries::zero(4)).is_zero());
    }

    #[test]
    fn theta_times_t() {
        // theta t = t theta + t
        let prod = &DiffOperator::theta() * &DiffOperator::t();
        assert_eq!(prod.coeffs(), &[RationalFunction::t(), RationalFunction::t()]);
        assert_eq!(prod.into_monic().unwrap().q(1), &RationalFunction::one());
    }

    #[test]
    fn t_times_d_is_theta() {
        assert_eq!(&DiffOperator::t() * &DiffOperator::d(), DiffOperator::theta());
    }

    #[test]
    fn monic_division_of_zero_fails() {
        assert_eq!(DiffOperator::zero().into_monic(), Err(Error::ZeroLeadingCoefficient));
    }
}
