use proptest::prelude::*;
use trusslab::cocycle::{functor_e, functor_q, verify_gic};
use trusslab::hopfmodule::{fundamental_iso, induction_functor};
use trusslab::hopftruss::verify_hopf_truss;
use trusslab::settruss::{enumerate_skew_trusses, linearize, verify_skew_truss, FiniteGroup, SkewTruss};
use trusslab::{Field, Fp, FpMap, LinMap, QMap, Rational};

use std::sync::{Arc, OnceLock};

fn matrix(cod: usize, dom: usize) -> impl Strategy<Value = QMap> {
    proptest::collection::vec(-3i64..=3, cod * dom).prop_map(move |v| {
        LinMap::from_vec(
            &(),
            cod,
            dom,
            v.into_iter().map(|x| Rational::from_i64(&(), x)).collect(),
        )
        .unwrap()
    })
}

fn fp_matrix(cod: usize, dom: usize) -> impl Strategy<Value = FpMap> {
    proptest::collection::vec(0i64..7, cod * dom).prop_map(move |v| {
        LinMap::from_vec(&7, cod, dom, v.into_iter().map(|x| Fp::from_i64(&7, x)).collect()).unwrap()
    })
}

fn chain3() -> impl Strategy<Value = (QMap, QMap, QMap)> {
    (0usize..4, 0usize..4, 0usize..4, 0usize..4)
        .prop_flat_map(|(a, b, c, d)| (matrix(a, b), matrix(b, c), matrix(c, d)))
}

/// Lower unitriangular changes of basis: always invertible over ℤ.
fn unimodular(n: usize) -> impl Strategy<Value = QMap> {
    proptest::collection::vec(-2i64..=2, n * n).prop_map(move |v| {
        LinMap::from_fn(&(), n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Equal => Rational::one(&()),
            std::cmp::Ordering::Greater => Rational::from_i64(&(), v[i * n + j]),
            std::cmp::Ordering::Less => Rational::zero(&()),
        })
    })
}

fn z3_trusses() -> &'static Vec<SkewTruss> {
    static CELL: OnceLock<Vec<SkewTruss>> = OnceLock::new();
    CELL.get_or_init(|| enumerate_skew_trusses(&FiniteGroup::cyclic(3).unwrap(), 4).unwrap())
}

proptest! {
    #[test]
    fn composition_is_associative((a, b, c) in chain3()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn composition_is_associative_mod_p(
        (a, b, c) in (1usize..4, 1usize..4, 1usize..4, 1usize..4)
            .prop_flat_map(|(a, b, c, d)| (fp_matrix(a, b), fp_matrix(b, c), fp_matrix(c, d)))
    ) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn composition_matches_dense_sum((a, b, _) in chain3()) {
        let ab = &a * &b;
        for i in 0..a.cod() {
            for j in 0..b.dom() {
                let expected = (0..a.dom()).fold(Rational::zero(&()), |s, k| {
                    Field::add(&s, &Field::mul(a.get(i, k), b.get(k, j)))
                });
                prop_assert_eq!(ab.get(i, j), &expected);
            }
        }
    }

    #[test]
    fn tensor_interchange(
        (a, c, b, d) in (0usize..3, 0usize..3, 0usize..3, 0usize..3, 0usize..3, 0usize..3)
            .prop_flat_map(|(p, q, r, s, t, u)| (matrix(p, q), matrix(q, r), matrix(s, t), matrix(t, u)))
    ) {
        prop_assert_eq!(&a.tensor(&b) * &c.tensor(&d), (&a * &c).tensor(&(&b * &d)));
    }

    #[test]
    fn swap_is_natural(
        (f, g) in (0usize..4, 0usize..4, 0usize..4, 0usize..4)
            .prop_flat_map(|(m, m2, n, n2)| (matrix(m2, m), matrix(n2, n)))
    ) {
        let (m, m2, n, n2) = (f.dom(), f.cod(), g.dom(), g.cod());
        let lhs = &LinMap::swap(&(), m2, n2) * &f.tensor(&g);
        let rhs = &g.tensor(&f) * &LinMap::swap(&(), m, n);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn elimination_is_consistent(a in (0usize..5, 0usize..5).prop_flat_map(|(c, d)| matrix(c, d))) {
        let ns = a.nullspace();
        prop_assert_eq!(a.rank() + ns.len(), a.dom());
        for v in &ns {
            prop_assert!((&a * v).is_zero());
        }
        let k = a.kernel_map();
        prop_assert_eq!(k.rank(), ns.len());
        if let Ok(inv) = a.invert() {
            prop_assert!((&a * &inv).is_identity() && (&inv * &a).is_identity());
        }
    }

    #[test]
    fn solve_returns_a_solution(
        (a, x) in (0usize..5, 0usize..5, 0usize..3).prop_flat_map(|(c, d, k)| (matrix(c, d), matrix(d, k)))
    ) {
        let b = &a * &x;
        let y = a.solve(&b).unwrap().expect("b lies in the image");
        prop_assert_eq!(&a * &y, b);
    }

    #[test]
    fn image_idempotents_split(a in (1usize..5, 1usize..4).prop_flat_map(|(c, d)| matrix(c, d))) {
        // Projection onto the image along a complement: i∘(left inverse of i).
        let i = a.image_map();
        let pinv = i.transpose();
        let gram = (&pinv * &i).invert().unwrap();
        let q = &i * &(&gram * &pinv);
        let (p, i2) = q.split_idempotent().unwrap();
        prop_assert!((&p * &i2).is_identity());
        prop_assert_eq!(&i2 * &p, q);
        prop_assert_eq!(i2.dom(), a.rank());
    }

    #[test]
    fn relabelling_preserves_skew_trusses(idx in 0usize..32, perm in Just((0..3).collect::<Vec<usize>>()).prop_shuffle()) {
        let t = &z3_trusses()[idx];
        let r = t.relabel(&perm);
        prop_assert!(verify_skew_truss(&r).unwrap().passed());
        prop_assert_eq!(r.canonical_form(), t.canonical_form());
    }

    #[test]
    fn transport_leaves_the_truss_unchanged(idx in 0usize..32, alpha in unimodular(3)) {
        let h = linearize::<Rational>(&z3_trusses()[idx], &()).unwrap();
        prop_assert!(verify_hopf_truss(&h).unwrap().passed());
        let c = functor_e(&h).unwrap().transport(&alpha).unwrap();
        prop_assert!(verify_gic(&c).unwrap().passed());
        prop_assert_eq!(functor_q(&c).unwrap(), h);
    }

    #[test]
    fn fundamental_theorem_on_random_inductions(idx in 0usize..32, xdim in 0usize..3) {
        let h = Arc::new(linearize::<Rational>(&z3_trusses()[idx], &()).unwrap());
        let m = induction_functor(&h, xdim).unwrap();
        let iso = fundamental_iso(&m).unwrap();
        prop_assert!(iso.report.passed());
        prop_assert_eq!(iso.coinvariants.dim, xdim);
    }
}
