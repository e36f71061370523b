//! Ξ on the toy curve, the elliptic dual and the Richelot contract.

mod common;

use common::{
    nonzero_ratfunc, nonzero_rational as nonzero_small, small_rational, toy, toy_divisor, toy_divisor_within,
};
use num_traits::Zero;
use proptest::prelude::*;
use sos3_core::descent::{elliptic_dual, richelot_dual, xi, SchaeferContext};
use sos3_core::exact::rational::rat;
use sos3_core::{Field, PolyY, RatFunc, Rational};

fn ctx() -> SchaeferContext {
    let t = toy();
    SchaeferContext::new(&t.curve, t.factors.clone()).unwrap()
}

fn poly(cs: Vec<sos3_core::Rational>) -> PolyY {
    PolyY::new(cs.into_iter().map(RatFunc::from_rational).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn xi_lands_in_the_norm_kernel(d in toy_divisor()) {
        prop_assert!(xi(&d, &ctx()).unwrap().in_norm_kernel());
    }

    #[test]
    fn xi_is_a_homomorphism(a in toy_divisor(), b in toy_divisor()) {
        let c = ctx();
        let sum = xi(&a.add(&b).unwrap(), &c).unwrap();
        prop_assert_eq!(sum, xi(&a, &c).unwrap().mul(&xi(&b, &c).unwrap()));
    }

    #[test]
    fn doubles_are_in_the_kernel(d in toy_divisor_within(1)) {
        prop_assert!(xi(&d.double(), &ctx()).unwrap().is_trivial());
    }

    #[test]
    fn dual_of_dual_scales(s in nonzero_ratfunc(2), t in nonzero_ratfunc(2)) {
        let disc = &(&s * &s) - &(RatFunc::from_i64(4) * &t);
        prop_assume!(!disc.is_zero());
        let (s1, t1) = elliptic_dual(&s, &t).unwrap();
        let (s2, t2) = elliptic_dual(&s1, &t1).unwrap();
        prop_assert_eq!(s2, RatFunc::from_i64(4) * &s);
        prop_assert_eq!(t2, RatFunc::from_i64(16) * &t);
    }

    // With a linear G1 the bracket [G1, Gi] always has degree 2, and
    // [G2, G3] drops to degree 1 exactly when G2 and G3 share a center.
    #[test]
    fn richelot_degree_tracks_shared_center(
        a in small_rational(),
        q2 in proptest::collection::vec(small_rational(), 3),
        q3 in proptest::collection::vec(small_rational(), 3),
        same_center in any::<bool>(),
    ) {
        let g1 = poly(vec![a, rat(1)]);
        let mut q3 = q3;
        if same_center {
            // b1 = a1 b2 / a2 puts both centers at -a1 / (2 a2)
            prop_assume!(!q2[2].is_zero());
            q3[1] = &q2[1] * &q3[2] / &q2[2];
        }
        let (g2, g3) = (poly(q2.clone()), poly(q3.clone()));
        prop_assume!(g2.deg() == 2 && g3.deg() == 2);
        if let Ok(r) = richelot_dual(&g1, &g2, &g3) {
            let shared = &q2[2] * &q3[1] == &q2[1] * &q3[2];
            prop_assert_eq!(r.quintic().deg(), if shared { 5 } else { 6 });
        }
    }

    #[test]
    fn richelot_on_centered_input_has_degree_five(
        a in small_rational(),
        c in small_rational(),
        k2 in nonzero_small(),
        k3 in nonzero_small(),
        m2 in small_rational(),
        m3 in small_rational(),
    ) {
        // G2 = k2((y-c)^2 + m2), G3 = k3((y-c)^2 + m3)
        let g1 = poly(vec![a, rat(1)]);
        let centered = |k: &Rational, m: &Rational| poly(vec![k * &(&c * &c + m), k * &(rat(-2) * &c), k.clone()]);
        if let Ok(r) = richelot_dual(&g1, &centered(&k2, &m2), &centered(&k3, &m3)) {
            prop_assert_eq!(r.quintic().deg(), 5);
        }
    }
}
