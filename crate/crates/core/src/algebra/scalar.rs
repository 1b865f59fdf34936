use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::{Complex, Float, Rational};

use super::Poly;

/// Polynomial in the formal symbol `tau`, which stands for `2 pi i`.
///
/// Monodromy data is kept over Q[tau] so that it can be compared exactly; the
/// numeric layer substitutes `tau = 2 pi i` through [`FormalScalar::to_complex`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FormalScalar(Poly);

impl FormalScalar {
    pub fn zero() -> Self {
        FormalScalar(Poly::zero())
    }

    pub fn one() -> Self {
        FormalScalar(Poly::one())
    }

    pub fn rational(c: Rational) -> Self {
        FormalScalar(Poly::constant(c))
    }

    /// `c tau^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        FormalScalar(Poly::monomial(c, k))
    }

    pub fn tau() -> Self {
        FormalScalar(Poly::var())
    }

    pub fn poly(&self) -> &Poly {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `Some(c)` if this scalar has no `tau` dependence.
    pub fn as_rational(&self) -> Option<Rational> {
        self.0.is_constant().then(|| self.0.coeff(0))
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        FormalScalar(self.0.scale(c))
    }

    pub fn mul_tau_pow(&self, k: usize) -> Self {
        FormalScalar(self.0.shift(k))
    }

    /// Exact division by `tau^k`; `None` if the result is not a polynomial.
    pub fn div_tau_pow(&self, k: usize) -> Option<Self> {
        let c = self.0.coeffs();
        if c.iter().take(k).any(|x| *x != 0) {
            return None;
        }
        Some(FormalScalar(Poly::from_coeffs(c.iter().skip(k).cloned().collect())))
    }

    /// Numeric value with `tau = 2 pi i` at `prec` bits.
    pub fn to_complex(&self, prec: u32) -> Complex {
        let tau = two_pi_i(prec);
        self.0.eval_complex(&tau)
    }
}

pub(crate) fn two_pi_i(prec: u32) -> Complex {
    let pi = Float::with_val(prec, rug::float::Constant::Pi);
    Complex::with_val(prec, (Float::new(prec), pi * 2u32))
}

impl fmt::Display for FormalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.display_in("tau"))
    }
}

impl Add for &FormalScalar {
    type Output = FormalScalar;
    fn add(self, rhs: &FormalScalar) -> FormalScalar {
        FormalScalar(&self.0 + &rhs.0)
    }
}

impl Sub for &FormalScalar {
    type Output = FormalScalar;
    fn sub(self, rhs: &FormalScalar) -> FormalScalar {
        FormalScalar(&self.0 - &rhs.0)
    }
}

impl Mul for &FormalScalar {
    type Output = FormalScalar;
    fn mul(self, rhs: &FormalScalar) -> FormalScalar {
        FormalScalar(&self.0 * &rhs.0)
    }
}

impl Neg for &FormalScalar {
    type Output = FormalScalar;
    fn neg(self) -> FormalScalar {
        FormalScalar(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_division() {
        let x = FormalScalar::monomial(Rational::from((1, 2)), 2);
        assert_eq!(x.div_tau_pow(2), Some(FormalScalar::rational(Rational::from((1, 2)))));
        assert_eq!(x.div_tau_pow(3), None);
        assert_eq!(x.to_string(), "1/2*tau^2");
    }

    #[test]
    fn tau_squared_is_minus_four_pi_squared() {
        let v = FormalScalar::monomial(Rational::from(1), 2).to_complex(128);
        let pi = Float::with_val(128, rug::float::Constant::Pi);
        let expect = -(pi.clone() * &pi) * 4u32;
        assert!((Float::with_val(128, v.real() - &expect)).abs() < 1e-35);
        assert!(v.imag().clone().abs() < 1e-35);
    }
}
