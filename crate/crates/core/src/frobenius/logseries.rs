use rug::ops::Pow;
use rug::{Complex, Float};

use crate::algebra::{factorial, Poly, ThetaOperator, TruncatedSeries};
use crate::error::Result;

/// Element `sum_j (log t)^j / j! * g_j(t)` of Q[[t]][log t], truncated in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogSeries {
    components: Vec<TruncatedSeries>,
}

impl LogSeries {
    /// `components[j]` multiplies `(log t)^j / j!`. At least one component is
    /// required and all must share one truncation order.
    pub fn new(components: Vec<TruncatedSeries>) -> Self {
        assert!(!components.is_empty(), "log series needs at least one component");
        let order = components[0].order();
        assert!(components.iter().all(|c| c.order() == order), "truncation orders differ");
        LogSeries { components }
    }

    pub fn components(&self) -> &[TruncatedSeries] {
        &self.components
    }

    pub fn order(&self) -> usize {
        self.components[0].order()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(TruncatedSeries::is_zero)
    }

    /// `theta((log t)^j/j! g) = (log t)^j/j! theta g + (log t)^{j-1}/(j-1)! g`.
    pub fn theta(&self) -> LogSeries {
        let d = self.components.len();
        let components = (0..d)
            .map(|j| {
                let th = self.components[j].theta();
                match self.components.get(j + 1) {
                    Some(next) => &th + next,
                    None => th,
                }
            })
            .collect();
        LogSeries { components }
    }

    pub fn theta_pow(&self, k: usize) -> LogSeries {
        (0..k).fold(self.clone(), |s, _| s.theta())
    }

    fn mul_poly(&self, p: &Poly) -> LogSeries {
        LogSeries { components: self.components.iter().map(|c| c.mul_poly(p)).collect() }
    }

    fn add(&self, other: &LogSeries) -> LogSeries {
        let comps = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a + b)
            .collect();
        LogSeries { components: comps }
    }

    /// Apply `L` directly: with `Q L = sum_i P_i(t) theta^i` and `Q` the
    /// common denominator of the coefficients, `L u = (sum_i P_i theta^i u) / Q`.
    pub fn apply(&self, op: &ThetaOperator) -> Result<LogSeries> {
        let cleared = op.cleared_coefficients()?;
        let den = &cleared[op.order()];
        let mut acc = LogSeries::new(vec![TruncatedSeries::zero(self.order()); self.components.len()]);
        let mut power = self.clone();
        for (i, p) in cleared.iter().enumerate() {
            if i > 0 {
                power = power.theta();
            }
            acc = acc.add(&power.mul_poly(p));
        }
        Ok(LogSeries { components: acc.components.iter().map(|c| c.div_poly(den)).collect() })
    }

    /// Value at `t` with a prescribed value of `log t`, together with the
    /// magnitude of the last retained term.
    pub fn eval(&self, t: &Complex, log_t: &Complex) -> (Complex, Float) {
        let prec = t.prec().0;
        let mut value = Complex::with_val(prec, 0);
        let mut tail = Float::with_val(prec, 0);
        let log_abs = Float::with_val(prec, log_t.abs_ref());
        let mut log_pow = Complex::with_val(prec, 1);
        for (j, g) in self.components.iter().enumerate() {
            let weight = Complex::with_val(prec, &log_pow / Float::with_val(prec, &factorial(j)));
            value += g.eval(t) * &weight;
            let w = Float::with_val(prec, log_abs.clone().pow(j as u32)) / Float::with_val(prec, &factorial(j));
            tail += g.last_term_magnitude(t) * w;
            log_pow *= log_t;
        }
        (value, tail)
    }
}
