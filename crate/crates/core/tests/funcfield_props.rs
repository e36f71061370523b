//! Properties of ℚ(x): square classes, places, positivity.

mod common;

use common::{nonzero_qpoly, nonzero_ratfunc};
use proptest::prelude::*;
use sos3_core::exact::qpoly::SquareMode;
use sos3_core::exact::rational::rat;
use sos3_core::funcfield::{equiv_mod_place, is_psd, is_square, quad_ext_square_test, valuation, Place, SquareClass};
use sos3_core::{Field, RatFunc};

fn place() -> impl Strategy<Value = Place> {
    prop_oneof![(-6i64..=6).prop_map(|r| Place::at(rat(r))), Just(Place::Infinity)]
}

fn linear_place() -> impl Strategy<Value = Place> {
    (-6i64..=6).prop_map(|r| Place::at(rat(r)))
}

fn unit_at(f: &RatFunc, p: &Place) -> bool {
    valuation(f, p).unwrap() == 0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn square_class_is_multiplicative(f in nonzero_ratfunc(3), g in nonzero_ratfunc(3)) {
        let fg = SquareClass::of(&(&f * &g)).unwrap();
        let prod = SquareClass::of(&f).unwrap().mul(&SquareClass::of(&g).unwrap());
        prop_assert_eq!(&fg, &prod);
        prop_assert_eq!(SquareClass::of(&prod.to_ratfunc()).unwrap(), fg);
    }

    #[test]
    fn square_class_ignores_squares(f in nonzero_ratfunc(3), g in nonzero_ratfunc(3)) {
        let fg2 = &f * &(&g * &g);
        prop_assert_eq!(SquareClass::of(&fg2).unwrap(), SquareClass::of(&f).unwrap());
    }

    #[test]
    fn residue_equivalence_is_an_equivalence(
        a in nonzero_ratfunc(2), b in nonzero_ratfunc(2), c in nonzero_ratfunc(2), p in linear_place()
    ) {
        prop_assume!(unit_at(&a, &p) && unit_at(&b, &p) && unit_at(&c, &p));
        prop_assert!(equiv_mod_place(&a, &a, &p).unwrap());
        let ab = equiv_mod_place(&a, &b, &p).unwrap();
        prop_assert_eq!(ab, equiv_mod_place(&b, &a, &p).unwrap());
        if ab && equiv_mod_place(&b, &c, &p).unwrap() {
            prop_assert!(equiv_mod_place(&a, &c, &p).unwrap());
        }
        // multiplying both sides by the same unit preserves the relation
        prop_assert_eq!(ab, equiv_mod_place(&(&a * &c), &(&b * &c), &p).unwrap());
    }

    #[test]
    fn norm_test_on_rational_squares(beta in nonzero_ratfunc(2), delta in nonzero_qpoly(2)) {
        let delta = RatFunc::from_poly(delta);
        prop_assume!(!is_square(&delta, SquareMode::OverQ));
        let zero = RatFunc::from_i64(0);
        prop_assert!(quad_ext_square_test(&zero, &(&beta * &beta), &delta).unwrap());
    }

    #[test]
    fn norm_test_is_consistent(alpha in nonzero_ratfunc(1), beta in nonzero_ratfunc(2), delta in nonzero_qpoly(2)) {
        let delta = RatFunc::from_poly(delta);
        prop_assume!(!is_square(&delta, SquareMode::OverQ));
        if quad_ext_square_test(&alpha, &beta, &delta).unwrap() {
            let norm = &(&beta * &beta) - &(&delta * &(&alpha * &alpha));
            prop_assert!(is_square(&norm, SquareMode::OverQ));
        }
        // (a + bU)² = a² + δb² + 2ab·U is always a square
        let sq_beta = &(&alpha * &alpha) + &(&delta * &(&beta * &beta));
        let sq_alpha = &RatFunc::from_i64(2) * &(&alpha * &beta);
        prop_assert!(quad_ext_square_test(&sq_alpha, &sq_beta, &delta).unwrap());
    }

    #[test]
    fn psd_ignores_square_multipliers(g in nonzero_ratfunc(2), h in nonzero_ratfunc(3)) {
        let g2h = &(&g * &g) * &h;
        prop_assert_eq!(is_psd(&g2h).unwrap(), is_psd(&h).unwrap());
    }

    #[test]
    fn valuation_is_additive(f in nonzero_ratfunc(3), g in nonzero_ratfunc(3), p in place()) {
        let v = valuation(&(&f * &g), &p).unwrap();
        prop_assert_eq!(v, valuation(&f, &p).unwrap() + valuation(&g, &p).unwrap());
    }
}
