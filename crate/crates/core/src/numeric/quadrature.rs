//! Tanh-sinh (double exponential) quadrature on a finite interval.
//!
//! The substitution `x = c + h tanh(pi/2 sinh s)` pushes integrable endpoint
//! singularities such as `(b - x)^{-1/2}` into double-exponentially decaying
//! weights. Distances to both endpoints are computed from the complementary
//! form `1 - tanh(y) = 2 / (1 + e^{2y})`, so the integrand sees `x - a` and
//! `b - x` without cancellation.

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureResult {
    pub value: Float,
    /// Difference between the last two refinement levels.
    pub error_estimate: Float,
    pub levels: u32,
}

const MAX_LEVEL: u32 = 12;

/// Integrates `f(x, x - a, b - x)` over `(a, b)`.
///
/// Refinement halves the step until two successive levels agree to
/// `tolerance` (relative to the magnitude of the integral, floored at 1).
pub fn tanh_sinh<F>(f: F, a: &Float, b: &Float, prec: u32, tolerance: f64) -> Result<QuadratureResult>
where
    F: Fn(&Float, &Float, &Float) -> Float,
{
    let half = Float::with_val(prec, b - a) / 2u32;
    let pi_half = Float::with_val(prec, Constant::Pi) / 2u32;
    // Beyond s_max even sqrt(weight) is below 2^-prec.
    let s_max = ((4.0 * prec as f64 * std::f64::consts::LN_2 / std::f64::consts::PI).ln() + 0.5).max(3.0);

    let node = |s: f64| -> Float {
        let s = Float::with_val(prec, s);
        let y = Float::with_val(prec, s.sinh_ref()) * &pi_half;
        let y_abs = Float::with_val(prec, y.abs_ref());
        let e2y = Float::with_val(prec, y_abs.clone() * 2u32).exp();
        // distance from the nearer endpoint
        let near = Float::with_val(prec, &half * 2u32) / Float::with_val(prec, &e2y + 1u32);
        let far = Float::with_val(prec, &half * 2u32) - &near;
        let (dist_a, dist_b) = if y >= 0 { (far, near) } else { (near, far) };
        let x = Float::with_val(prec, a + &dist_a);
        let cosh_y = Float::with_val(prec, y.cosh_ref());
        let w = Float::with_val(prec, s.cosh_ref()) * &pi_half * &half / cosh_y.pow(2u32);
        w * f(&x, &dist_a, &dist_b)
    };

    let mut h = 1.0f64;
    let mut sum = node(0.0);
    let mut k = 1u64;
    while (k as f64) * h <= s_max {
        let s = k as f64 * h;
        sum += node(s);
        sum += node(-s);
        k += 1;
    }
    let mut estimate = Float::with_val(prec, &sum * h);
    let mut diff = Float::with_val(prec, f64::INFINITY);

    for level in 1..=MAX_LEVEL {
        h /= 2.0;
        let mut k = 1u64;
        while (k as f64) * h <= s_max {
            let s = k as f64 * h;
            sum += node(s);
            sum += node(-s);
            k += 2;
        }
        let next = Float::with_val(prec, &sum * h);
        diff = Float::with_val(prec, &next - &estimate).abs();
        estimate = next;
        let scale = Float::with_val(prec, estimate.abs_ref()).max(&Float::with_val(prec, 1));
        if level >= 3 && diff <= Float::with_val(prec, &scale * tolerance) {
            return Ok(QuadratureResult { value: estimate, error_estimate: diff, levels: level });
        }
    }
    Err(Error::QuadratureNoConvergence { difference: diff.to_f64() })
}
