use std::fmt;
use std::ops::{Add, Mul, Sub};

use rug::{Integer, Rational};

use crate::algebra::{FormalScalar, RationalFunction};

/// Square matrix over Q[tau].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FormalMatrix {
    n: usize,
    entries: Vec<FormalScalar>,
}

impl FormalMatrix {
    pub fn zero(n: usize) -> Self {
        FormalMatrix { n, entries: vec![FormalScalar::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = FormalMatrix::zero(n);
        for i in 0..n {
            m.set(i, i, FormalScalar::one());
        }
        m
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> FormalScalar) -> Self {
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        FormalMatrix { n, entries }
    }

    /// `tau` on the superdiagonal: the logarithm of the standard monodromy.
    pub fn tau_shift(n: usize) -> Self {
        FormalMatrix::from_fn(n, |i, j| if j == i + 1 { FormalScalar::tau() } else { FormalScalar::zero() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &FormalScalar {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FormalScalar) {
        self.entries[i * self.n + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FormalScalar::is_zero)
    }

    pub fn transpose(&self) -> Self {
        FormalMatrix::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        FormalMatrix { n: self.n, entries: self.entries.iter().map(|e| e.scale(c)).collect() }
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(FormalMatrix::identity(self.n), |acc, _| &acc * self)
    }

    pub fn apply(&self, v: &[FormalScalar]) -> Vec<FormalScalar> {
        (0..self.n)
            .map(|i| {
                (0..self.n).fold(FormalScalar::zero(), |acc, j| &acc + &(self.get(i, j) * &v[j]))
            })
            .collect()
    }

    /// `sum_h M^h / h!`, assuming `M` nilpotent (the series stops at `M^n`).
    pub fn exp_nilpotent(&self) -> Self {
        let mut acc = FormalMatrix::identity(self.n);
        let mut power = FormalMatrix::identity(self.n);
        for h in 1..=self.n {
            power = &power * self;
            if power.is_zero() {
                break;
            }
            let inv = Rational::from((Integer::from(1), Integer::from(Integer::factorial(h as u32))));
            acc = &acc + &power.scale(&inv);
        }
        acc
    }

    /// Largest `tau` degree among the entries.
    pub fn max_tau_degree(&self) -> usize {
        self.entries.iter().filter_map(FormalScalar::degree).max().unwrap_or(0)
    }

    /// Entries as elements of the field Q(tau).
    pub(crate) fn to_field(&self) -> Vec<Vec<RationalFunction>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| RationalFunction::from_poly(self.get(i, j).poly().clone())).collect())
            .collect()
    }

    pub fn rows(&self) -> Vec<Vec<FormalScalar>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j).clone()).collect()).collect()
    }
}

impl fmt::Display for FormalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Add for &FormalMatrix {
    type Output = FormalMatrix;
    fn add(self, rhs: &FormalMatrix) -> FormalMatrix {
        assert_eq!(self.n, rhs.n);
        FormalMatrix { n: self.n, entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &FormalMatrix {
    type Output = FormalMatrix;
    fn sub(self, rhs: &FormalMatrix) -> FormalMatrix {
        assert_eq!(self.n, rhs.n);
        FormalMatrix { n: self.n, entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect() }
    }
}

impl Mul for &FormalMatrix {
    type Output = FormalMatrix;
    fn mul(self, rhs: &FormalMatrix) -> FormalMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        FormalMatrix::from_fn(n, |i, j| {
            (0..n).fold(FormalScalar::zero(), |acc, k| {
                let a = self.get(i, k);
                if a.is_zero() {
                    acc
                } else {
                    &acc + &(a * rhs.get(k, j))
                }
            })
        })
    }
}

/// Rank over the field Q(tau) of the matrix whose columns are `cols`.
pub(crate) fn rank_over_field(rows: usize, cols: &[Vec<RationalFunction>]) -> usize {
    let mut m: Vec<Vec<RationalFunction>> =
        (0..rows).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let ncols = cols.len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].inv().expect("pivot is nonzero");
        for i in 0..rows {
            if i != rank && !m[i][col].is_zero() {
                let factor = &m[i][col] * &inv;
                for c in col..ncols {
                    let delta = &factor * &m[rank][c];
                    m[i][c] = &m[i][c] - &delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Unit coordinate vector over Q(tau).
pub(crate) fn unit(n: usize, i: usize) -> Vec<RationalFunction> {
    (0..n).map(|k| if k == i { RationalFunction::one() } else { RationalFunction::zero() }).collect()
}
