//! Algebraic families of linear functionals on the solution space and their
//! monodromy-corrected limits.
//!
//! A symbol `m = sum_{j<r} v_j(t) theta^j` defines, for `z` in the upper half
//! plane, the functional `pi_z(u) = sum_j v_j(e(z)) (2 pi i)^{-j} u^{(j)}(z)`
//! with `e(z) = exp(2 pi i z)`. Since `(2 pi i)^{-1} d/dz` acts on solutions as
//! `theta` with `log t = 2 pi i z`, its coordinates in the dual standard basis
//! are `pi_z(phi_k) = sum_j v_j(t) (theta^j phi_k)(t)`.
//!
//! `pi'_z = exp(-zN) o pi_z` is 1-periodic in `z`. Expanding the exponential
//! gives the z-free form
//!
//! ```text
//! pi'_z(phi_m) = sum_{k <= m} sum_{j = k}^{r-1} v_j(t) (theta^{j-k} f_{m-k})(t)
//! ```
//!
//! which tends to `v_m(0)` as `Im z -> oo` when every `v_j` is analytic at 0.

use rug::{Complex, Float, Integer, Rational};

use crate::algebra::{two_pi_i, DiffOperator, Poly, RationalFunction};
use crate::error::{Error, Result};
use crate::frobenius::StandardBasis;
use crate::numeric::EvalConfig;

/// Coordinates in the dual standard basis `phi_0^dual, ..., phi_{r-1}^dual`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualVector<S> {
    pub coords: Vec<S>,
}

impl<S> DualVector<S> {
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

impl DualVector<Complex> {
    /// Max-norm distance.
    pub fn distance(&self, other: &DualVector<Complex>) -> Float {
        let prec = self.coords.first().map_or(64, |c| c.prec().0);
        self.coords.iter().zip(&other.coords).fold(Float::with_val(prec, 0), |acc, (a, b)| {
            let d = Float::with_val(prec, Complex::with_val(prec, a - b).abs_ref());
            acc.max(&d)
        })
    }

    pub fn distance_to_rational(&self, exact: &DualVector<Rational>) -> Float {
        let prec = self.coords.first().map_or(64, |c| c.prec().0);
        let exact = DualVector {
            coords: exact.coords.iter().map(|q| Complex::with_val(prec, Float::with_val(prec, q))).collect(),
        };
        self.distance(&exact)
    }
}

/// Symbol `m = sum_{j<r} v_j(t) theta^j` of an algebraic family of functionals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolM {
    v: Vec<RationalFunction>,
}

impl SymbolM {
    /// Pads `v` with zeros to length `r`; more than `r` coefficients is an error.
    pub fn new(r: usize, mut v: Vec<RationalFunction>) -> Result<Self> {
        if v.len() > r {
            return Err(Error::InvalidArgument(format!(
                "symbol has degree {} in theta; it must be below the operator order {r}",
                v.len() - 1
            )));
        }
        v.resize(r, RationalFunction::zero());
        Ok(SymbolM { v })
    }

    /// Symbol from an operator expression; its degree in theta must be below `r`.
    pub fn from_operator(r: usize, op: &DiffOperator) -> Result<Self> {
        SymbolM::new(r, op.coeffs().to_vec())
    }

    /// `sum_j lambda_j theta^j` with constant coefficients.
    pub fn constants(lambda: &[Rational]) -> Self {
        SymbolM { v: lambda.iter().map(|l| RationalFunction::constant(l.clone())).collect() }
    }

    pub fn order(&self) -> usize {
        self.v.len()
    }

    pub fn v(&self, j: usize) -> &RationalFunction {
        &self.v[j]
    }

    pub fn coefficients(&self) -> &[RationalFunction] {
        &self.v
    }

    pub fn is_analytic_at_zero(&self) -> bool {
        self.v.iter().all(|v| !v.has_pole_at_zero())
    }

    fn values_at(&self, t: &Complex) -> Result<Vec<Complex>> {
        self.v
            .iter()
            .enumerate()
            .map(|(j, v)| {
                if near_root(v.den(), t) {
                    return Err(Error::PoleInDisk { index: j });
                }
                v.eval_complex(t).ok_or(Error::PoleInDisk { index: j })
            })
            .collect()
    }
}

/// `|p(t)|` is at rounding level relative to `sum |p_i| |t|^i`.
fn near_root(p: &Poly, t: &Complex) -> bool {
    let prec = t.prec().0;
    let value = Float::with_val(prec, p.eval_complex(t).abs_ref());
    let modulus = Float::with_val(prec, t.abs_ref());
    let mut scale = Float::with_val(prec, 0);
    let mut power = Float::with_val(prec, 1);
    for c in p.coeffs() {
        scale += Float::with_val(prec, c).abs() * &power;
        power *= &modulus;
    }
    let eps = Float::with_val(prec, Float::i_exp(1, -(prec as i32 / 2)));
    value <= scale * eps
}

/// `lim pi'_z = sum_j v_j(0) phi_j^dual`.
pub fn limit_functional(m: &SymbolM) -> Result<DualVector<Rational>> {
    let coords = m
        .v
        .iter()
        .enumerate()
        .map(|(j, v)| v.value_at_zero().map_err(|_| Error::NotAnalyticAtZero { index: j }))
        .collect::<Result<Vec<_>>>()?;
    Ok(DualVector { coords })
}

struct ZPoint {
    t: Complex,
    log_t: Complex,
}

fn z_point(z: &Complex, cfg: &EvalConfig) -> Result<ZPoint> {
    let log_t = Complex::with_val(cfg.precision, z * two_pi_i(cfg.precision));
    let t = Complex::with_val(cfg.precision, log_t.exp_ref());
    cfg.check_disk(&t)?;
    Ok(ZPoint { t, log_t })
}

fn check_orders(m: &SymbolM, basis: &StandardBasis) -> Result<()> {
    if m.order() != basis.order() {
        return Err(Error::InvalidArgument(format!(
            "symbol order {} does not match basis order {}",
            m.order(),
            basis.order()
        )));
    }
    Ok(())
}

fn pi_z_coords(m: &SymbolM, basis: &StandardBasis, p: &ZPoint, values: &[Complex], prec: u32) -> Vec<Complex> {
    let r = basis.order();
    (0..r)
        .map(|k| {
            let mut acc = Complex::with_val(prec, 0);
            let mut derived = basis.phi(k);
            for (j, v) in values.iter().enumerate() {
                if j > 0 {
                    derived = derived.theta();
                }
                if m.v[j].is_zero() {
                    continue;
                }
                let (val, _) = derived.eval(&p.t, &p.log_t);
                acc += val * v;
            }
            acc
        })
        .collect()
}

/// Coordinates of `pi_z(m)` in the dual standard basis.
pub fn functional_at_z(m: &SymbolM, z: &Complex, basis: &StandardBasis, cfg: &EvalConfig) -> Result<DualVector<Complex>> {
    check_orders(m, basis)?;
    let p = z_point(z, cfg)?;
    let values = m.values_at(&p.t)?;
    Ok(DualVector { coords: pi_z_coords(m, basis, &p, &values, cfg.precision) })
}

/// Both evaluations of `pi'_z`: through the matrix `exp(-zN)` and through the
/// periodic closed form.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistedRoutes {
    pub matrix_route: DualVector<Complex>,
    pub closed_form: DualVector<Complex>,
    /// Scale of the terms summed in the matrix route, for error budgets.
    pub magnitude: Float,
}

pub fn twisted_functional_routes(
    m: &SymbolM,
    z: &Complex,
    basis: &StandardBasis,
    cfg: &EvalConfig,
) -> Result<TwistedRoutes> {
    check_orders(m, basis)?;
    let prec = cfg.precision;
    let r = basis.order();
    let p = z_point(z, cfg)?;
    let values = m.values_at(&p.t)?;

    // exp(-zN)^T acting on coordinates, N = tau * shift with tau = 2 pi i
    let pi_z = pi_z_coords(m, basis, &p, &values, prec);
    let minus_z_tau = Complex::with_val(prec, -&p.log_t);
    let mut powers = vec![Complex::with_val(prec, 1)];
    for d in 1..r {
        let next = Complex::with_val(prec, &powers[d - 1] * &minus_z_tau) / Float::with_val(prec, d as u32);
        powers.push(next);
    }
    let mut magnitude = Float::with_val(prec, 1);
    let matrix_route = (0..r)
        .map(|k| {
            let mut acc = Complex::with_val(prec, 0);
            for i in 0..=k {
                let term = Complex::with_val(prec, &powers[k - i] * &pi_z[i]);
                magnitude = magnitude.clone().max(&Float::with_val(prec, term.abs_ref()));
                acc += term;
            }
            acc
        })
        .collect();

    let closed_form = (0..r)
        .map(|mi| {
            let mut acc = Complex::with_val(prec, 0);
            for k in 0..=mi {
                let mut derived = basis.f(mi - k).clone();
                for j in k..r {
                    if j > k {
                        derived = derived.theta();
                    }
                    if m.v[j].is_zero() {
                        continue;
                    }
                    acc += derived.eval(&p.t) * &values[j];
                }
            }
            acc
        })
        .collect();

    Ok(TwistedRoutes {
        matrix_route: DualVector { coords: matrix_route },
        closed_form: DualVector { coords: closed_form },
        magnitude,
    })
}

/// Coordinates of `pi'_z = exp(-zN) o pi_z(m)`.
///
/// Computed by both routes of [`twisted_functional_routes`]; disagreement
/// beyond the rounding budget of the working precision is reported as
/// [`Error::InternalMismatch`]. The closed-form value is returned.
pub fn twisted_functional_at_z(
    m: &SymbolM,
    z: &Complex,
    basis: &StandardBasis,
    cfg: &EvalConfig,
) -> Result<DualVector<Complex>> {
    let routes = twisted_functional_routes(m, z, basis, cfg)?;
    let diff = routes.matrix_route.distance(&routes.closed_form);
    let budget = Float::with_val(cfg.precision, &routes.magnitude) * rounding_budget(cfg.precision, basis.order());
    if diff > budget {
        return Err(Error::InternalMismatch(format!(
            "matrix and closed-form routes differ by {:e} (budget {:e})",
            diff.to_f64(),
            budget.to_f64()
        )));
    }
    Ok(routes.closed_form)
}

/// `2^{-(prec - 20)} * r!`, a generous allowance for accumulated rounding.
fn rounding_budget(prec: u32, r: usize) -> Float {
    let f = Float::with_val(prec, Integer::from(Integer::factorial(r as u32)));
    let eps = Float::with_val(prec, Float::i_exp(1, -(prec as i32 - 20)));
    f * eps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ThetaOperator;
    use crate::frobenius::standard_basis;

    #[test]
    fn limit_of_theta_power_symbol() {
        let m = SymbolM::from_operator(3, &DiffOperator::theta().pow(1)).unwrap();
        let lim = limit_functional(&m).unwrap();
        assert_eq!(lim.coords, vec![Rational::new(), Rational::from(1), Rational::new()]);
    }

    #[test]
    fn limit_rejects_pole() {
        let m = SymbolM::new(2, vec![RationalFunction::t().inv().unwrap()]).unwrap();
        assert_eq!(limit_functional(&m), Err(Error::NotAnalyticAtZero { index: 0 }));
    }

    #[test]
    fn symbol_degree_must_be_below_order() {
        assert!(SymbolM::from_operator(2, &DiffOperator::theta().pow(2)).is_err());
    }

    #[test]
    fn zero_symbol_gives_zero_functional() {
        let basis = standard_basis(&ThetaOperator::legendre(), 60).unwrap();
        let cfg = EvalConfig::default();
        let m = SymbolM::new(2, vec![]).unwrap();
        let z = Complex::with_val(128, (0.3, 2.0));
        let v = functional_at_z(&m, &z, &basis, &cfg).unwrap();
        assert!(v.coords.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn pole_at_evaluation_point_is_reported() {
        let basis = standard_basis(&ThetaOperator::legendre(), 40).unwrap();
        let cfg = EvalConfig::default();
        let v0 = RationalFunction::new(Poly::one(), Poly::from_ratios(&[(-1, 2), (1, 1)])).unwrap();
        let m = SymbolM::new(2, vec![v0]).unwrap();
        // e(z) = 1/2
        let y = Float::with_val(128, rug::float::Constant::Log2) / Float::with_val(128, rug::float::Constant::Pi) / 2u32;
        let z = Complex::with_val(128, (Float::new(128), y));
        assert_eq!(functional_at_z(&m, &z, &basis, &cfg), Err(Error::PoleInDisk { index: 0 }));
        let far = Complex::with_val(128, (0.25, 0.5));
        assert!(functional_at_z(&m, &far, &basis, &cfg).is_ok());
    }
}
