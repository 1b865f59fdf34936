//! Dense univariate polynomials over Q.
//!
//! The same type serves for polynomials in `t`, in `theta` and in the formal
//! symbol `tau`; the variable only matters when printing.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::{Complex, Float, Integer, Rational};

/// Polynomial with exact rational coefficients, indexed by degree.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::from(1))
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The polynomial `x`.
    pub fn var() -> Self {
        Poly::monomial(Rational::from(1), 1)
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::new(); degree + 1];
        coeffs[degree] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| *c == 0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Convenience constructor from `(numerator, denominator)` pairs.
    pub fn from_ratios(pairs: &[(i64, i64)]) -> Self {
        Poly::from_coeffs(pairs.iter().map(|&(n, d)| Rational::from((n, d))).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    /// Value at an integer argument; hot path of the Frobenius recurrence.
    pub fn eval_int(&self, x: i64) -> Rational {
        let x = Integer::from(x);
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= &x;
            acc += c;
        }
        acc
    }

    pub fn eval_complex(&self, x: &Complex) -> Complex {
        let prec = x.prec();
        let mut acc = Complex::with_val(prec, 0);
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += Float::with_val(prec.0, c);
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| Rational::from(c * Integer::from(i)))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, n: usize) -> Poly {
        (0..n).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| Rational::from(a * c)).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::new(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if nd < dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::new(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = Rational::from(&rem[i + dd] / &lead);
            if c != 0 {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= Rational::from(&c * d);
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let inv = Rational::from(l.recip_ref());
                self.scale(&inv)
            }
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Render as `c0 + c1*x + c2*x^2 + ...`, skipping zero terms.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}*{var}"),
                _ => format!("{c}*{var}^{i}"),
            })
            .collect();
        terms.join(" + ")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| Rational::from(-c)).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::new(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += Rational::from(a * b);
            }
        }
        Poly::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[(i64, i64)]) -> Poly {
        Poly::from_ratios(c)
    }

    #[test]
    fn trims_trailing_zeros() {
        assert!(p(&[(0, 1), (0, 1)]).is_zero());
        assert_eq!(p(&[(1, 1), (2, 1), (0, 1)]).degree(), Some(1));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[(1, 1), (0, 1), (-3, 2), (2, 1)]);
        let b = p(&[(-1, 1), (1, 1)]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn gcd_is_monic() {
        // (1 - t)(2 + t) and (1 - t)(3t)
        let x = p(&[(1, 1), (-1, 1)]);
        let a = &x * &p(&[(2, 1), (1, 1)]);
        let b = &x * &p(&[(0, 1), (3, 1)]);
        assert_eq!(Poly::gcd(&a, &b), p(&[(-1, 1), (1, 1)]));
    }

    #[test]
    fn derivative_of_cube() {
        let c = Poly::var().pow(3);
        assert_eq!(c.derivative(), p(&[(0, 1), (0, 1), (3, 1)]));
        assert_eq!(c.nth_derivative(3), Poly::constant(Rational::from(6)));
        assert!(c.nth_derivative(4).is_zero());
    }

    #[test]
    fn display_skips_zero_terms() {
        assert_eq!(p(&[(1, 1), (0, 1), (-1, 4)]).display_in("t"), "1 + -1/4*t^2");
        assert_eq!(Poly::zero().display_in("t"), "0");
    }
}
