//! Properties of the exact-arithmetic layer.

mod common;

use common::{nonzero_qpoly, nonzero_rational, qpoly};
use proptest::prelude::*;
use sos3_core::exact::qpoly::SquareMode;
use sos3_core::exact::rational::{rat, rational_is_square};
use sos3_core::{Poly, QPoly};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn division_reconstructs(a in qpoly(8), b in nonzero_qpoly(8)) {
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert!(r.deg() < b.deg());
        prop_assert_eq!(&(&q * &b) + &r, a);
    }

    #[test]
    fn squarefree_round_trip(a in nonzero_qpoly(4), b in nonzero_qpoly(3)) {
        let p = &(&a * &b) * &b;
        let sqf = p.squarefree_decomposition().unwrap();
        prop_assert_eq!(sqf.expand(), p);
        for (f, _) in &sqf.parts {
            prop_assert!(f.is_monic() && f.is_squarefree());
        }
    }

    #[test]
    fn squares_are_detected(a in nonzero_qpoly(5)) {
        let sq = &a * &a;
        prop_assert!(sq.is_perfect_square(SquareMode::OverQ).unwrap());
        prop_assert!(sq.is_perfect_square(SquareMode::OverC).unwrap());
    }

    #[test]
    fn square_times_squarefree_is_not_square(a in nonzero_qpoly(4), p in nonzero_qpoly(4)) {
        prop_assume!(p.deg() >= 1 && p.is_squarefree() && Poly::coprime(&a, &p));
        let q = &(&a * &a) * &p;
        prop_assert!(!q.is_perfect_square(SquareMode::OverC).unwrap());
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(a in nonzero_qpoly(4), b in nonzero_qpoly(4), c in nonzero_qpoly(2)) {
        for (x, y) in [(a.clone(), b.clone()), (&a * &c, &b * &c)] {
            prop_assume!(x.deg() >= 1 && y.deg() >= 1);
            let res = Poly::resultant(&x, &y).unwrap();
            let g = Poly::gcd(&x, &y).unwrap();
            prop_assert_eq!(res == rat(0), g.deg() >= 1);
        }
    }

    #[test]
    fn sturm_counts_known_roots(roots in proptest::collection::btree_set(-15i64..=15, 1..7), extra in 0i64..4) {
        // an irreducible positive quadratic factor adds no real roots
        let mut p = QPoly::new(vec![rat(extra + 1), rat(0), rat(1)]);
        for r in &roots {
            p = &p * &QPoly::linear_root(&rat(*r));
        }
        prop_assert_eq!(p.sturm_count_real_roots().unwrap(), roots.len());
    }

    #[test]
    fn rational_squares(q in nonzero_rational()) {
        let sq = &q * &q;
        prop_assert!(rational_is_square(&sq));
        prop_assert!(!rational_is_square(&-sq));
    }
}
