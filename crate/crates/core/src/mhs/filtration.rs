use super::matrix::{rank_over_field, unit};
use super::FormalMatrix;
use crate::algebra::RationalFunction;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Increasing,
    Decreasing,
}

/// One labelled step of a filtration: a coordinate subspace of V^dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationStep {
    pub label: i64,
    /// Indices `j` of the dual basis vectors `phi_j^dual` spanning the step.
    pub indices: Vec<usize>,
}

impl FiltrationStep {
    pub fn dim(&self) -> usize {
        self.indices.len()
    }
}

/// Filtration of V^dual by coordinate subspaces in the dual standard basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    pub direction: Direction,
    pub ambient_dim: usize,
    pub steps: Vec<FiltrationStep>,
}

impl Filtration {
    /// Step with the given label. Labels below the first step of an
    /// increasing filtration (or above the last of a decreasing one) give the
    /// zero subspace; labels beyond the other end give the whole space.
    pub fn at(&self, label: i64) -> Vec<usize> {
        if let Some(s) = self.steps.iter().find(|s| s.label == label) {
            return s.indices.clone();
        }
        let below = label < self.steps[0].label;
        let zero = match self.direction {
            Direction::Increasing => below,
            Direction::Decreasing => !below,
        };
        if zero {
            Vec::new()
        } else {
            (0..self.ambient_dim).collect()
        }
    }

    pub fn dims(&self) -> Vec<(i64, usize)> {
        self.steps.iter().map(|s| (s.label, s.dim())).collect()
    }

    /// Whether consecutive steps are nested in the stated direction.
    pub fn is_nested(&self) -> bool {
        self.steps.windows(2).all(|w| {
            let (small, big) = match self.direction {
                Direction::Increasing => (&w[0], &w[1]),
                Direction::Decreasing => (&w[1], &w[0]),
            };
            small.indices.iter().all(|i| big.indices.contains(i))
        })
    }
}

/// Monodromy weight filtration for a single Jordan block of size `r`:
/// `W_{-1} = 0` and `W_{2k} = W_{2k+1} = span(phi_{r-1-k}^dual, ..., phi_{r-1}^dual)`,
/// ending at `W_{2r-2} = V^dual`.
pub fn weight_filtration(r: usize) -> Filtration {
    assert!(r >= 1);
    let mut steps = vec![FiltrationStep { label: -1, indices: Vec::new() }];
    for label in 0..=(2 * r as i64 - 2) {
        let k = (label / 2) as usize;
        steps.push(FiltrationStep { label, indices: (r - 1 - k..r).collect() });
    }
    Filtration { direction: Direction::Increasing, ambient_dim: r, steps }
}

/// Limiting Hodge filtration `F^p = span(phi_0^dual, ..., phi_{r-1-p}^dual)`
/// for `0 <= p <= r - 1`.
pub fn limiting_hodge_filtration(r: usize) -> Filtration {
    assert!(r >= 1);
    let steps = (0..r).map(|p| FiltrationStep { label: p as i64, indices: (0..r - p).collect() }).collect();
    Filtration { direction: Direction::Decreasing, ambient_dim: r, steps }
}

/// If the column space of `m` over Q(tau) is a coordinate subspace, its index
/// set; otherwise `None`.
pub fn coordinate_image(m: &FormalMatrix) -> Option<Vec<usize>> {
    let n = m.dim();
    let field = m.to_field();
    let support: Vec<usize> = (0..n).filter(|&i| field[i].iter().any(|x| !x.is_zero())).collect();
    let cols: Vec<Vec<RationalFunction>> = (0..n).map(|j| (0..n).map(|i| field[i][j].clone()).collect()).collect();
    (rank_over_field(n, &cols) == support.len()).then_some(support)
}

/// Dimension over Q(tau) of the span of the given coordinate vectors.
pub fn span_dim(n: usize, index_sets: &[&[usize]]) -> usize {
    let cols: Vec<Vec<RationalFunction>> =
        index_sets.iter().flat_map(|s| s.iter().map(|&i| unit(n, i))).collect();
    rank_over_field(n, &cols)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_dims_r3() {
        let w = weight_filtration(3);
        let dims: Vec<usize> = w.steps.iter().map(FiltrationStep::dim).collect();
        assert_eq!(dims, vec![0, 1, 1, 2, 2, 3]);
        assert_eq!(w.steps[0].label, -1);
        assert_eq!(w.steps.last().unwrap().label, 4);
        assert!(w.is_nested());
    }

    #[test]
    fn weight_r2_and_r1() {
        let w = weight_filtration(2);
        assert_eq!(w.at(0), vec![1]);
        assert_eq!(w.at(1), vec![1]);
        assert_eq!(w.at(2), vec![0, 1]);
        let w1 = weight_filtration(1);
        assert_eq!(w1.dims(), vec![(-1, 0), (0, 1)]);
    }

    #[test]
    fn hodge_dims() {
        let f = limiting_hodge_filtration(3);
        assert_eq!(f.dims(), vec![(0, 3), (1, 2), (2, 1)]);
        assert!(f.is_nested());
        assert_eq!(limiting_hodge_filtration(2).at(1), vec![0]);
        assert_eq!(limiting_hodge_filtration(1).dims(), vec![(0, 1)]);
    }

    #[test]
    fn out_of_range_labels() {
        let w = weight_filtration(2);
        assert!(w.at(-5).is_empty());
        assert_eq!(w.at(9), vec![0, 1]);
        let f = limiting_hodge_filtration(2);
        assert!(f.at(2).is_empty());
        assert_eq!(f.at(-1), vec![0, 1]);
    }
}
