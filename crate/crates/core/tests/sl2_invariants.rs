use hermops::polyspace::{exp_exact_nilpotent, to_matrix, GradedSpace, Matrix};
use hermops::sl2::{
    bivariate_generators_repaired, check_matrix_relations, check_relations, conjugate_triple,
    hermite_conjugated_generators, univariate_generators, Family, LadderRep,
};
use hermops::weyl::{OpTerm, WeylOp};
use hermops::Scalar;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=5).prop_map(|(p, q)| Scalar::ratio(p, q))
}

fn nonzero_rational() -> impl Strategy<Value = Scalar> {
    rational().prop_filter("nonzero", |s| !s.is_zero())
}

/// A strictly degree-lowering univariate operator, so `exp` of it is an
/// exact invertible transform.
fn lowering(c1: Scalar, c2: Scalar) -> WeylOp {
    &WeylOp::term(1, OpTerm::new(0, 0, 2, 0), c1) + &WeylOp::term(1, OpTerm::new(1, 0, 3, 0), c2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn univariate_relations_for_any_weight(n in rational()) {
        prop_assert!(check_relations(&univariate_generators(&n)).all_pass());
        prop_assert!(check_relations(&hermite_conjugated_generators(&n)).all_pass());
    }

    #[test]
    fn repaired_family_for_any_alpha(alpha in nonzero_rational()) {
        prop_assert!(check_relations(&bivariate_generators_repaired(&alpha).unwrap()).all_pass());
    }

    #[test]
    fn conjugation_preserves_relations(c1 in rational(), c2 in rational(), degree in 1u32..7) {
        // weight = degree keeps the raising operator inside the space
        let space = GradedSpace::univariate(degree);
        let g = univariate_generators(&Scalar::int(degree as i64));
        let op = lowering(c1, c2);
        let t = exp_exact_nilpotent(&op, space).unwrap();
        let t_inv = exp_exact_nilpotent(&-&op, space).unwrap();
        let (h, e, f) = (
            to_matrix(&g.h, space).unwrap(),
            to_matrix(&g.e, space).unwrap(),
            to_matrix(&g.f, space).unwrap(),
        );
        let dim = space.dim();
        let (ch, ce, cf) = conjugate_triple(&h, &e, &f, &t, &t_inv).unwrap();
        prop_assert!(check_matrix_relations(&ch, &ce, &cf, dim, Family::Univariate).unwrap().all_pass());

        let digits = 40;
        let (fh, fe, ff) = conjugate_triple(
            &h.to_float(digits),
            &e.to_float(digits),
            &f.to_float(digits),
            &t.to_float(digits),
            &t_inv.to_float(digits),
        )
        .unwrap();
        let rep = check_matrix_relations(&fh, &fe, &ff, dim, Family::Univariate).unwrap();
        prop_assert!(rep.max_residual() <= Scalar::ratio(1, 10).pow(10));
    }

    #[test]
    fn ladder_spectrum(n in rational(), dim in 1usize..17) {
        let rep = LadderRep::new(n.clone(), dim).unwrap();
        let m = rep.matrices();
        let expected: Vec<Scalar> = (0..dim)
            .map(|k| &Scalar::int(k as i64) - &(&n * &Scalar::ratio(1, 2)))
            .collect();
        prop_assert_eq!(m.h.entries(), &Matrix::diag(&expected));
    }
}
