use hermops::polyspace::{exp_exact_nilpotent, exp_numeric, to_matrix, GradedSpace};
use hermops::weyl::{OpTerm, Poly, WeylOp};
use hermops::Scalar;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| Scalar::ratio(p, q))
}

fn op_term(nvars: u8) -> impl Strategy<Value = OpTerm> {
    let y = if nvars == 2 { 0u32..=2 } else { 0u32..=0 };
    (0u32..=2, y.clone(), 0u32..=2, y).prop_map(|(x, y, dx, dy)| OpTerm::new(x, y, dx, dy))
}

fn weyl_op(nvars: u8) -> impl Strategy<Value = WeylOp> {
    prop::collection::vec((op_term(nvars), small_rational()), 0..4)
        .prop_map(move |terms| WeylOp::from_terms(nvars, terms))
}

/// Terms that never raise the total degree.
fn lowering_op(nvars: u8) -> impl Strategy<Value = WeylOp> {
    weyl_op(nvars).prop_map(move |op| {
        WeylOp::from_terms(
            nvars,
            op.terms()
                .filter(|(t, _)| t.degree_shift() <= 0)
                .map(|(t, c)| (*t, c.clone())),
        )
    })
}

fn poly(nvars: u8) -> impl Strategy<Value = Poly> {
    let y = if nvars == 2 { 0u32..=3 } else { 0u32..=0 };
    prop::collection::vec(((0u32..=3, y), small_rational()), 0..5)
        .prop_map(move |terms| Poly::from_terms(nvars, terms))
}

fn op_and_poly() -> impl Strategy<Value = (u8, WeylOp, WeylOp, Poly)> {
    (1u8..=2).prop_flat_map(|n| (Just(n), weyl_op(n), weyl_op(n), poly(n)))
}

fn op_triple() -> impl Strategy<Value = (WeylOp, WeylOp, WeylOp)> {
    (1u8..=2).prop_flat_map(|n| (weyl_op(n), weyl_op(n), weyl_op(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn composition_is_a_homomorphism((_n, a, b, p) in op_and_poly()) {
        let composed = a.compose(&b).unwrap().apply(&p).unwrap();
        let stepwise = a.apply(&b.apply(&p).unwrap()).unwrap();
        prop_assert_eq!(composed, stepwise);
    }

    #[test]
    fn jacobi_identity((a, b, c) in op_triple()) {
        let t1 = a.commutator(&b.commutator(&c).unwrap()).unwrap();
        let t2 = b.commutator(&c.commutator(&a).unwrap()).unwrap();
        let t3 = c.commutator(&a.commutator(&b).unwrap()).unwrap();
        prop_assert!((&(&t1 + &t2) + &t3).is_zero());
    }

    #[test]
    fn commutator_is_antisymmetric((a, b, _c) in op_triple()) {
        prop_assert_eq!(a.commutator(&b).unwrap(), -&b.commutator(&a).unwrap());
    }

    #[test]
    fn composition_is_associative_and_canonical((a, b, c) in op_triple()) {
        let left = (&(&a * &b)) * &c;
        let right = &a * &(&b * &c);
        prop_assert_eq!(&left, &right);
        prop_assert!(left.terms().all(|(_, c)| !c.is_zero()));
        // rebuilding from the term list reproduces the same value
        let mut terms: Vec<_> = left.terms().map(|(t, c)| (*t, c.clone())).collect();
        terms.reverse();
        let rebuilt = WeylOp::from_terms(left.nvars(), terms);
        prop_assert_eq!(rebuilt, left);
    }

    #[test]
    fn degree_shift_bounds_image((_n, a, _b, p) in op_and_poly()) {
        let image = a.apply(&p).unwrap();
        if let (Some(shift), Some(dp), Some(di)) = (a.max_degree_shift(), p.degree(), image.degree()) {
            prop_assert!(di as i64 <= dp as i64 + shift);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn to_matrix_is_linear_and_sound(
        (n, a, b, p) in (1u8..=2).prop_flat_map(|n| (Just(n), lowering_op(n), lowering_op(n), poly(n))),
        s in small_rational(),
        t in small_rational(),
    ) {
        let space = GradedSpace::new(n, 4).unwrap();
        let p = Poly::from_terms(n, p.terms().filter(|(&(i, j), _)| i + j <= 4).map(|(&k, c)| (k, c.clone())));
        let combo = &a.scale(&s) + &b.scale(&t);
        let lhs = to_matrix(&combo, space).unwrap();
        let rhs = to_matrix(&a, space).unwrap().scale(&s).try_add(&to_matrix(&b, space).unwrap().scale(&t)).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(lhs.apply_poly(&p).unwrap(), combo.apply(&p).unwrap());
    }

    #[test]
    fn float_apply_tracks_exact((_n, a, _b, p) in op_and_poly()) {
        let one = Scalar::one().to_float(40);
        let exact = a.apply(&p).unwrap();
        let float = a.scale(&one).apply(&p).unwrap();
        let diff = (&float - &exact).max_abs_coeff();
        let scale = exact.max_abs_coeff();
        let tol = Scalar::ratio(1, 10).pow(35);
        prop_assert!(diff <= &tol * &(&scale + &Scalar::one()));
    }

    #[test]
    fn exp_numeric_matches_higher_precision(op in lowering_op(1)) {
        let space = GradedSpace::univariate(4);
        let m = to_matrix(&op, space).unwrap();
        let lo = exp_numeric(&m, 30).unwrap();
        let hi = exp_numeric(&m, 50).unwrap();
        let rel = lo.entries().relative_max_diff(hi.entries()).unwrap();
        prop_assert!(rel <= Scalar::ratio(1, 10).pow(28), "relative difference {}", rel);
    }

    #[test]
    fn exp_numeric_matches_exact_series(
        terms in prop::collection::vec((op_term(1), small_rational()), 0..4)
    ) {
        let op = WeylOp::from_terms(1, terms.into_iter().filter(|(t, _)| t.degree_shift() < 0));
        let space = GradedSpace::univariate(5);
        let exact = exp_exact_nilpotent(&op, space).unwrap();
        let float = exp_numeric(&to_matrix(&op, space).unwrap(), 40).unwrap();
        let rel = float.entries().relative_max_diff(exact.entries()).unwrap();
        prop_assert!(rel <= Scalar::ratio(1, 10).pow(38), "relative difference {}", rel);
    }
}
