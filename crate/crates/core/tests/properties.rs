use limhodge::algebra::{DiffOperator, Poly, Rational, RationalFunction, ThetaOperator, TruncatedSeries};
use limhodge::frobenius::{residual, standard_basis};
use limhodge::mhs::{log_monodromy, mhs_checks, monodromy_matrix};
use limhodge::syntax::{collect_operator, normalize_operator, parse_operator, OperatorAst};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=4).prop_map(|(n, d)| Rational::from((n, d)))
}

fn poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rational(), 0..=max_len).prop_map(Poly::from_coeffs)
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = Poly> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

/// `q_j = t (a + b t) / (1 + c t)`, so every `q_j(0) = 0`.
fn mum_coefficient() -> impl Strategy<Value = RationalFunction> {
    (small_rational(), small_rational(), small_rational()).prop_map(|(a, b, c)| {
        let num = Poly::from_coeffs(vec![Rational::new(), a, b]);
        let den = Poly::from_coeffs(vec![Rational::from(1), c]);
        RationalFunction::new(num, den).expect("nonzero denominator")
    })
}

fn mum_operator() -> impl Strategy<Value = ThetaOperator> {
    prop::collection::vec(mum_coefficient(), 1..=4).prop_map(|q| ThetaOperator::new(q).unwrap())
}

fn series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(small_rational(), order + 1).prop_map(move |c| TruncatedSeries::from_coeffs(order, c))
}

fn leaf() -> impl Strategy<Value = OperatorAst> {
    prop_oneof![
        Just(OperatorAst::T),
        Just(OperatorAst::Theta),
        Just(OperatorAst::D),
        (0i64..=6, 1i64..=3).prop_map(|(n, d)| OperatorAst::Lit(Rational::from((n, d)))),
    ]
}

fn ast() -> impl Strategy<Value = OperatorAst> {
    leaf().prop_recursive(4, 24, 2, |inner| {
        let b = |x: OperatorAst| Box::new(x);
        prop_oneof![
            inner.clone().prop_map(move |x| OperatorAst::Neg(b(x))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| OperatorAst::Add(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| OperatorAst::Sub(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| OperatorAst::Mul(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| OperatorAst::Div(b(x), b(y))),
            (inner, 0u32..=3).prop_map(move |(x, e)| OperatorAst::Pow(b(x), e)),
        ]
    })
}

/// Operators built from `t`, `theta`, `D` and constants, small enough to expand.
fn small_operator() -> impl Strategy<Value = DiffOperator> {
    leaf()
        .prop_recursive(3, 8, 2, |inner| {
            let b = |x: OperatorAst| Box::new(x);
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(move |(x, y)| OperatorAst::Add(b(x), b(y))),
                (inner.clone(), inner).prop_map(move |(x, y)| OperatorAst::Mul(b(x), b(y))),
            ]
        })
        .prop_map(|a| collect_operator(&a).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_ring_laws(a in poly(4), b in poly(4), c in poly(4)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).derivative(), &(&a.derivative() * &b) + &(&a * &b.derivative()));
    }

    #[test]
    fn division_with_remainder(a in poly(6), b in nonzero_poly(3)) {
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.degree().map_or(true, |d| d < b.degree().unwrap()));
    }

    #[test]
    fn rational_functions_are_canonical(p in poly(3), q in nonzero_poly(3), h in nonzero_poly(3)) {
        let direct = RationalFunction::new(p.clone(), q.clone()).unwrap();
        let padded = RationalFunction::new(&p * &h, &q * &h).unwrap();
        prop_assert_eq!(&direct, &padded);
        prop_assert_eq!(direct.den().leading(), Some(&Rational::from(1)));
        prop_assert!(Poly::gcd(direct.num(), direct.den()).is_constant() || direct.is_zero());
    }

    #[test]
    fn field_inverse(p in nonzero_poly(3), q in nonzero_poly(3)) {
        let f = RationalFunction::new(p, q).unwrap();
        prop_assert_eq!(&f * &f.inv().unwrap(), RationalFunction::one());
    }

    #[test]
    fn recurrence_form_matches_direct_application(op in mum_operator(), f in series(15)) {
        let tp = op.to_tpoly(15).unwrap();
        prop_assert!(tp.leading_is_theta_power());
        prop_assert_eq!(tp.apply(&f), op.apply_series(&f).unwrap());
    }

    #[test]
    fn cleared_form_is_denominator_times_operator(op in mum_operator(), f in series(15)) {
        let den = op.common_denominator().unwrap();
        prop_assert_eq!(op.cleared_tpoly().unwrap().apply(&f), op.apply_series(&f).unwrap().mul_poly(&den));
    }

    #[test]
    fn basis_is_stable_under_truncation(op in mum_operator()) {
        let short = standard_basis(&op, 12).unwrap();
        let long = standard_basis(&op, 20).unwrap();
        for k in 0..op.order() {
            prop_assert_eq!(&long.f(k).truncate(12), short.f(k));
        }
    }

    #[test]
    fn random_mum_residuals_vanish(op in mum_operator()) {
        let basis = standard_basis(&op, 30).unwrap();
        prop_assert_eq!(basis.f(0).coeff(0), &Rational::from(1));
        for k in 0..op.order() {
            prop_assert!(residual(&op, &basis, k).unwrap().is_zero());
            if k > 0 {
                prop_assert_eq!(basis.f(k).coeff(0), &Rational::new());
            }
        }
    }

    #[test]
    fn print_parse_fixed_point(a in ast()) {
        let printed = a.to_string();
        let reparsed = parse_operator(&printed).unwrap();
        prop_assert_eq!(&reparsed, &a, "printed as {}", printed);
        prop_assert_eq!(reparsed.to_string(), printed);
    }

    #[test]
    fn operator_product_is_associative(a in small_operator(), b in small_operator(), c in small_operator()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn t_d_equals_theta_in_context(a in small_operator()) {
        let td = &DiffOperator::t() * &DiffOperator::d();
        prop_assert_eq!(&a * &td, &a * &DiffOperator::theta());
        prop_assert_eq!(&td * &a, &DiffOperator::theta() * &a);
    }

    #[test]
    fn monic_form_ignores_left_function_factor(op in mum_operator(), g in nonzero_poly(3)) {
        let scaled = &DiffOperator::function(RationalFunction::from_poly(g)) * &op.to_diff_operator();
        prop_assert_eq!(scaled.into_monic().unwrap(), op);
    }
}

#[test]
fn monodromy_logarithm_round_trips_up_to_order_eight() {
    for r in 1..=8 {
        let gamma = monodromy_matrix(r);
        let n = log_monodromy(&gamma).unwrap();
        assert_eq!(n.exp_nilpotent(), gamma, "r = {r}");
        assert!(n.pow(r).is_zero());
        assert_eq!(n.max_tau_degree(), usize::from(r > 1));
    }
}

#[test]
fn hodge_structure_checks_up_to_order_eight() {
    for r in 1..=8 {
        let rep = mhs_checks(r);
        assert!(rep.passed(), "r = {r}: {rep:?}");
    }
}

#[test]
fn theta_power_operators_normalize_from_text() {
    for r in 1..=5 {
        let text = format!("theta^{r}");
        let op = normalize_operator(&parse_operator(&text).unwrap()).unwrap();
        assert_eq!(op, ThetaOperator::theta_power(r).unwrap());
    }
}
