use rug::Rational;

use super::filtration::{coordinate_image, limiting_hodge_filtration, span_dim, weight_filtration};
use super::{is_maximally_unipotent, log_monodromy, monodromy_matrix, FormalMatrix};
use crate::algebra::FormalScalar;

/// Outcome of the exact consistency checks for the mixed Hodge structure
/// `(W, F_oo)` on V^dual. Failures are recorded, never raised.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MhsReport {
    pub order: usize,
    pub maximally_unipotent: bool,
    /// `exp(log gamma) = gamma` over Q[tau].
    pub exp_log_roundtrip: bool,
    /// `W_{2k}` equals the image of `N^{r-1-k}` on V^dual for every `k`.
    pub weight_is_image_of_n_powers: bool,
    /// `V^dual = W_{2k} + F^{k+1}` as a direct sum, for each `k`.
    pub opposite: Vec<bool>,
    /// `(label, dim gr^W_label)` for labels `0 ..= 2r - 2`.
    pub graded_dims: Vec<(i64, usize)>,
    pub graded_dims_ok: bool,
    /// `N W_{2k} ⊆ W_{2k-2}` for every `k`.
    pub n_lowers_weight: bool,
    /// `diag(tau^k) gamma diag(tau^{-k})`; `None` if some entry is not rational.
    pub conjugated_gamma: Option<Vec<Vec<Rational>>>,
}

impl MhsReport {
    pub fn passed(&self) -> bool {
        self.maximally_unipotent
            && self.exp_log_roundtrip
            && self.weight_is_image_of_n_powers
            && self.opposite.iter().all(|&b| b)
            && self.graded_dims_ok
            && self.n_lowers_weight
            && self.conjugated_gamma.is_some()
    }
}

/// `gamma` in the basis `tau^{-k} phi_k`: entry `(j, k)` is `tau^{j-k} gamma_{jk}`.
pub fn rescaled_monodromy(gamma: &FormalMatrix) -> Option<Vec<Vec<Rational>>> {
    let r = gamma.dim();
    (0..r)
        .map(|j| {
            (0..r)
                .map(|k| gamma.get(j, k).mul_tau_pow(j).div_tau_pow(k).and_then(|s| s.as_rational()))
                .collect::<Option<Vec<_>>>()
        })
        .collect()
}

pub fn mhs_checks(r: usize) -> MhsReport {
    let gamma = monodromy_matrix(r);
    let maximally_unipotent = is_maximally_unipotent(&gamma);
    let n = log_monodromy(&gamma).expect("standard monodromy is unipotent");
    let exp_log_roundtrip = n.exp_nilpotent() == gamma;
    // functionals transform by precomposition, i.e. by the transpose
    let n_dual = n.transpose();

    let w = weight_filtration(r);
    let f = limiting_hodge_filtration(r);

    let weight_is_image_of_n_powers = (0..r).all(|k| {
        let image = coordinate_image(&n_dual.pow(r - 1 - k));
        image.as_deref() == Some(&w.at(2 * k as i64)[..])
    });

    let opposite = (0..r)
        .map(|k| {
            let wk = w.at(2 * k as i64);
            let fk = f.at(k as i64 + 1);
            let disjoint = wk.iter().all(|i| !fk.contains(i));
            disjoint && wk.len() + fk.len() == r && span_dim(r, &[&wk, &fk]) == r
        })
        .collect();

    let graded_dims: Vec<(i64, usize)> =
        (0..=(2 * r as i64 - 2)).map(|m| (m, w.at(m).len() - w.at(m - 1).len())).collect();
    let graded_dims_ok = graded_dims.iter().all(|&(m, d)| d == if m % 2 == 0 { 1 } else { 0 });

    let n_lowers_weight = (0..r).all(|k| {
        let lower = w.at(2 * k as i64 - 2);
        w.at(2 * k as i64).iter().all(|&i| {
            let e: Vec<FormalScalar> =
                (0..r).map(|c| if c == i { FormalScalar::one() } else { FormalScalar::zero() }).collect();
            n_dual.apply(&e).iter().enumerate().all(|(c, x)| x.is_zero() || lower.contains(&c))
        })
    });

    MhsReport {
        order: r,
        maximally_unipotent,
        exp_log_roundtrip,
        weight_is_image_of_n_powers,
        opposite,
        graded_dims,
        graded_dims_ok,
        n_lowers_weight,
        conjugated_gamma: rescaled_monodromy(&gamma),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_two_report() {
        let rep = mhs_checks(2);
        assert!(rep.passed(), "{rep:?}");
        let one = Rational::from(1);
        assert_eq!(rep.conjugated_gamma, Some(vec![vec![one.clone(), one.clone()], vec![Rational::new(), one]]));
        assert_eq!(rep.graded_dims, vec![(0, 1), (1, 0), (2, 1)]);
    }

    #[test]
    fn degenerate_order_one() {
        let rep = mhs_checks(1);
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.opposite, vec![true]);
    }

    #[test]
    fn order_five() {
        assert!(mhs_checks(5).passed());
    }

    #[test]
    fn rescaling_detects_irrational_entries() {
        let mut g = monodromy_matrix(2);
        g.set(0, 1, FormalScalar::tau().mul_tau_pow(1));
        assert!(rescaled_monodromy(&g).is_none());
    }
}
