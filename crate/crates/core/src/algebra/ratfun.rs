use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::{Complex, Rational};

use super::{Poly, TruncatedSeries};
use crate::error::{Error, Result};

/// Element of Q(t), kept reduced with a monic denominator.
///
/// The representation is canonical: two equal functions compare equal
/// structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    /// Builds `num / den`. Returns `None` when `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(RationalFunction::zero());
        }
        let g = Poly::gcd(&num, &den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = Rational::from(den.leading().expect("nonzero").recip_ref());
        Some(RationalFunction { num: num.scale(&lead), den: den.scale(&lead) })
    }

    pub fn zero() -> Self {
        RationalFunction { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RationalFunction::constant(Rational::from(1))
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction { num: Poly::constant(c), den: Poly::one() }
    }

    /// The function `t`.
    pub fn t() -> Self {
        RationalFunction { num: Poly::var(), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction { num: p, den: Poly::one() }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn has_pole_at_zero(&self) -> bool {
        self.den.coeff(0) == 0
    }

    /// `f(0)`, or [`Error::PoleAtZero`] when the reduced denominator vanishes
    /// at the origin.
    pub fn value_at_zero(&self) -> Result<Rational> {
        let d0 = self.den.coeff(0);
        if d0 == 0 {
            return Err(Error::PoleAtZero);
        }
        Ok(self.num.coeff(0) / d0)
    }

    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d == 0 {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// Value at a complex point. `None` when the denominator evaluates to
    /// exactly zero at working precision.
    pub fn eval_complex(&self, x: &Complex) -> Option<Complex> {
        let d = self.den.eval_complex(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_complex(x) / d)
    }

    pub fn inv(&self) -> Option<RationalFunction> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn derivative(&self) -> RationalFunction {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let d = &self.den * &self.den;
        RationalFunction::new(n, d).expect("nonzero denominator")
    }

    pub fn scale(&self, c: &Rational) -> RationalFunction {
        if *c == 0 {
            return RationalFunction::zero();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Taylor expansion at `t = 0` up to and including `t^order`.
    pub fn series(&self, order: usize) -> Result<TruncatedSeries> {
        let d0 = self.den.coeff(0);
        if d0 == 0 {
            return Err(Error::PoleAtZero);
        }
        let inv_d0 = Rational::from(d0.recip_ref());
        let den = self.den.coeffs();
        let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.num.coeff(n);
            for k in 1..den.len().min(n + 1) {
                acc -= Rational::from(&den[k] * &out[n - k]);
            }
            out.push(acc * &inv_d0);
        }
        Ok(TruncatedSeries::from_coeffs(order, out))
    }

    /// Render as `(<num>)/(<den>)` with polynomials in `var`.
    pub fn display_in(&self, var: &str) -> String {
        format!("({})/({})", self.num.display_in(var), self.den.display_in(var))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::new(n, &self.den * &rhs.den).unwrap()
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    /// Panics when dividing by zero; use [`RationalFunction::inv`] to check.
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self * &rhs.inv().expect("division by the zero rational function")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(num: &[(i64, i64)], den: &[(i64, i64)]) -> RationalFunction {
        RationalFunction::new(Poly::from_ratios(num), Poly::from_ratios(den)).unwrap()
    }

    #[test]
    fn value_at_zero_cases() {
        assert_eq!(rf(&[(0, 1), (1, 1)], &[(1, 1), (-1, 1)]).value_at_zero(), Ok(Rational::new()));
        assert_eq!(rf(&[(1, 1), (1, 1)], &[(1, 1), (-1, 1)]).value_at_zero(), Ok(Rational::from(1)));
        assert_eq!(rf(&[(1, 1)], &[(0, 1), (1, 1)]).value_at_zero(), Err(Error::PoleAtZero));
    }

    #[test]
    fn pole_detection_happens_after_reduction() {
        // t^2 / t has no pole at 0
        let f = rf(&[(0, 1), (0, 1), (1, 1)], &[(0, 1), (1, 1)]);
        assert_eq!(f, RationalFunction::t());
        assert_eq!(f.value_at_zero(), Ok(Rational::new()));
    }

    #[test]
    fn canonical_form() {
        // (2t)/(2 - 2t) == t/(1 - t) == (-t)/(t - 1)
        let a = rf(&[(0, 1), (2, 1)], &[(2, 1), (-2, 1)]);
        let b = rf(&[(0, 1), (1, 1)], &[(1, 1), (-1, 1)]);
        let c = rf(&[(0, 1), (-1, 1)], &[(-1, 1), (1, 1)]);
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert_eq!(b.den(), &Poly::from_ratios(&[(-1, 1), (1, 1)]));
    }

    #[test]
    fn geometric_series() {
        let s = rf(&[(0, 1), (1, 1)], &[(1, 1), (-1, 1)]).series(5).unwrap();
        let expect: Vec<Rational> =
            [0, 1, 1, 1, 1, 1].iter().map(|&x| Rational::from(x)).collect();
        assert_eq!(s.coeffs(), &expect[..]);
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/dt t/(1-t) = 1/(1-t)^2
        let f = rf(&[(0, 1), (1, 1)], &[(1, 1), (-1, 1)]);
        assert_eq!(f.derivative(), rf(&[(1, 1)], &[(1, 1), (-2, 1), (1, 1)]));
    }

    #[test]
    fn display_format() {
        let f = rf(&[(0, 1), (1, 1)], &[(1, 1), (-1, 1)]);
        assert_eq!(f.to_string(), "(-1*t)/(-1 + 1*t)");
    }
}
