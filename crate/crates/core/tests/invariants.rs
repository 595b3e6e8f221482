use lsalg::affine::exp_nilpotent;
use lsalg::families::{self, conjugate, random_invertible};
use lsalg::linalg::Rational;
use lsalg::{catalog, lie, radicals, rng, simplicity, Algebra, Matrix, Polynomial, Scalar};
use proptest::prelude::*;

type Q = Rational;

fn q(n: i64, d: i64) -> Q {
    Q::from_ratio(n, d)
}

fn rational() -> impl Strategy<Value = Q> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

/// Strictly upper triangular `n x n` matrix with small entries.
fn nilpotent(n: usize) -> impl Strategy<Value = Matrix<Q>> {
    prop::collection::vec(-3i64..=3, n * n).prop_map(move |c| {
        Matrix::from_fn(n, n, |i, j| {
            if j > i {
                Q::from_int(c[i * n + j])
            } else {
                Q::from_int(0)
            }
        })
    })
}

fn catalog_algebra(index: usize) -> Algebra<Q> {
    let entries = catalog::catalog().unwrap();
    entries[index % entries.len()].algebra.clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn exp_of_commuting_nilpotents(j in nilpotent(4),
                                   p in prop::collection::vec(-2i64..=2, 3),
                                   r in prop::collection::vec(-2i64..=2, 3)) {
        // Polynomials without constant term in one nilpotent matrix commute.
        let m = Polynomial::from_ints(&[0, p[0], p[1], p[2]]).eval_matrix(&j);
        let n = Polynomial::from_ints(&[0, r[0], r[1], r[2]]).eval_matrix(&j);
        prop_assert_eq!(&m * &n, &n * &m);
        let lhs = &exp_nilpotent(&m).unwrap() * &exp_nilpotent(&n).unwrap();
        prop_assert_eq!(lhs, exp_nilpotent(&(&m + &n)).unwrap());
    }

    #[test]
    fn a3gamma_claims_on_completed_table(a in rational(), b in rational(), c in rational()) {
        let alg = catalog::get_example("A3gamma", &[a, b, c.clone()]).unwrap().algebra;
        let p = alg.identity_profile().unwrap();
        prop_assert!(p.left_symmetric && p.derivation);
        prop_assert_eq!(p.id4, c == q(0, 1));
        prop_assert_eq!(p.novikov, c == q(0, 1));
    }

    #[test]
    fn invariants_survive_basis_change(index in 0usize..14, seed in any::<u64>()) {
        let a = catalog_algebra(index);
        let p = random_invertible(&mut rng::seeded(seed), a.dim());
        let b = conjugate(&a, &p).unwrap();
        let (pa, pb) = (a.identity_profile().unwrap(), b.identity_profile().unwrap());
        for id in lsalg::Identity::ALL {
            prop_assert_eq!(pa.holds(id), pb.holds(id));
        }
        if pa.left_symmetric {
            let (ca, cb) = (lie::centers(&a).unwrap(), lie::centers(&b).unwrap());
            prop_assert_eq!(ca.lie_center.dim(), cb.lie_center.dim());
            prop_assert_eq!(ca.algebra_center.dim(), cb.algebra_center.dim());
            prop_assert_eq!(ca.translational_center.dim(), cb.translational_center.dim());
            prop_assert_eq!(
                radicals::koszul_radical(&a).unwrap().dim(),
                radicals::koszul_radical(&b).unwrap().dim()
            );
            prop_assert_eq!(radicals::is_complete(&a).unwrap(), radicals::is_complete(&b).unwrap());
        }
        let sa = simplicity::is_simple(&a, seed, 32).unwrap().is_simple();
        let sb = simplicity::is_simple(&b, seed, 32).unwrap().is_simple();
        prop_assert_eq!(sa, sb);
    }

    #[test]
    fn inner_algebras_on_two_step_brackets_satisfy_id4(seed in any::<u64>(), gens in 2usize..=3, center in 0usize..=1) {
        let mut r = rng::seeded(seed);
        let bracket = families::random_two_step_bracket(&mut r, gens, center).unwrap();
        let a = families::inner_algebra(&mut r, &bracket).unwrap();
        let p = a.identity_profile().unwrap();
        prop_assert!(p.left_symmetric && p.id4);
        let d = lie::lie_data(&a).unwrap();
        prop_assert!(d.nilpotent_class.is_some_and(|k| k <= 2));
    }

    #[test]
    fn radical_chain(index in 0usize..14) {
        let a = catalog_algebra(index);
        if a.identity_profile().unwrap().left_symmetric {
            let r = radicals::koszul_radical(&a).unwrap();
            prop_assert!(r.is_subspace_of(&radicals::trace_kernel(&a)).unwrap());
            prop_assert!(lie::ideal_flags(&a, &r).unwrap().left);
            prop_assert!(radicals::is_complete(&a.restrict(&r).unwrap()).unwrap());
        }
    }

    #[test]
    fn simplicity_answer_does_not_depend_on_seed(index in 0usize..14, s1 in any::<u64>(), s2 in any::<u64>()) {
        let a = catalog_algebra(index);
        let v1 = simplicity::is_simple(&a, s1, 64).unwrap().is_simple();
        let v2 = simplicity::is_simple(&a, s2, 64).unwrap().is_simple();
        if let (Some(x), Some(y)) = (v1, v2) {
            prop_assert_eq!(x, y);
        }
    }
}

#[test]
fn same_seed_same_verdict() {
    for index in 0..14 {
        let a = catalog_algebra(index);
        assert_eq!(
            simplicity::is_simple(&a, 9, 32).unwrap(),
            simplicity::is_simple(&a, 9, 32).unwrap()
        );
    }
}
