use std::ops::{Add, Mul, Neg, Sub};

use rug::ops::Pow;
use rug::{Complex, Float, Integer, Rational};

use super::Poly;

/// Power series `a_0 + a_1 t + ... + a_N t^N` known up to a fixed order `N`.
///
/// Arithmetic between two series requires equal orders and never produces
/// coefficients beyond `N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![Rational::new(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::monomial(order, Rational::from(1), 0)
    }

    /// `c t^k`; vanishes when `k > order`.
    pub fn monomial(order: usize, c: Rational, k: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Pads with zeros or truncates so that exactly `order + 1` coefficients remain.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(order + 1, Rational::new());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn set_coeff(&mut self, n: usize, c: Rational) {
        self.coeffs[n] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == 0)
    }

    pub fn truncate(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(order, self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn scale(&self, c: &Rational) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| Rational::from(a * c)).collect() }
    }

    /// Euler operator: `a_n -> n a_n`.
    pub fn theta(&self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, a)| Rational::from(a * Integer::from(n)))
                .collect(),
        }
    }

    pub fn theta_pow(&self, k: usize) -> TruncatedSeries {
        (0..k).fold(self.clone(), |s, _| s.theta())
    }

    /// Product with a polynomial, truncated to the same order.
    pub fn mul_poly(&self, p: &Poly) -> TruncatedSeries {
        let order = self.order();
        let mut out = vec![Rational::new(); order + 1];
        for (i, c) in p.coeffs().iter().enumerate().take(order + 1) {
            if *c == 0 {
                continue;
            }
            for (n, a) in self.coeffs[..=order - i].iter().enumerate() {
                if *a != 0 {
                    out[n + i] += Rational::from(c * a);
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Quotient by a polynomial with nonzero constant term.
    pub fn div_poly(&self, p: &Poly) -> TruncatedSeries {
        let c0 = p.coeff(0);
        assert!(c0 != 0, "divisor must not vanish at t = 0");
        let inv = Rational::from(c0.recip_ref());
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        for n in 0..self.coeffs.len() {
            let mut acc = self.coeffs[n].clone();
            for (i, c) in p.coeffs().iter().enumerate().skip(1).take(n) {
                if *c != 0 && out[n - i] != 0 {
                    acc -= Rational::from(c * &out[n - i]);
                }
            }
            out.push(acc * &inv);
        }
        TruncatedSeries { coeffs: out }
    }

    /// Horner evaluation at a complex point.
    pub fn eval(&self, t: &Complex) -> Complex {
        let prec = t.prec().0;
        let mut acc = Complex::with_val(prec, 0);
        for c in self.coeffs.iter().rev() {
            acc *= t;
            acc += Float::with_val(prec, c);
        }
        acc
    }

    /// `|a_N t^N|`, the magnitude of the last retained term.
    pub fn last_term_magnitude(&self, t: &Complex) -> Float {
        let prec = t.prec().0;
        let n = self.order();
        let modulus = Float::with_val(prec, t.abs_ref());
        let a = Float::with_val(prec, &self.coeffs[n]).abs();
        a * modulus.pow(n as u32)
    }

    fn assert_same_order(&self, other: &TruncatedSeries) {
        assert_eq!(self.order(), other.order(), "truncation orders differ");
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.assert_same_order(rhs);
        TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| Rational::from(a + b)).collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.assert_same_order(rhs);
        TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| Rational::from(a - b)).collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| Rational::from(-a)).collect() }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    /// Truncated Cauchy product.
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.assert_same_order(rhs);
        let n = self.order();
        let mut out = vec![Rational::new(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                if *b != 0 {
                    out[i + j] += Rational::from(a * b);
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: TruncatedSeries) -> TruncatedSeries { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);
