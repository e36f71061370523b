//! Shared strategies and the toy curves used by the property suites.
#![allow(dead_code)]

use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use sos3_core::exact::rational::{rat, ratio};
use sos3_core::jacobian::{two_torsion_subsets, Curve, MumfordDivisor};
use sos3_core::text::parse_poly_y;
use sos3_core::{PolyY, QPoly, RatFunc, Rational};

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=5).prop_map(|(n, d)| ratio(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |q| *q != rat(0))
}

/// Polynomial over ℚ of degree at most `max_deg`.
pub fn qpoly(max_deg: usize) -> impl Strategy<Value = QPoly> {
    proptest::collection::vec(small_rational(), 1..=max_deg + 1).prop_map(QPoly::new)
}

pub fn nonzero_qpoly(max_deg: usize) -> impl Strategy<Value = QPoly> {
    qpoly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn ratfunc(max_deg: usize) -> impl Strategy<Value = RatFunc> {
    (qpoly(max_deg), nonzero_qpoly(max_deg)).prop_map(|(n, d)| RatFunc::new(n, d).expect("nonzero denominator"))
}

pub fn nonzero_ratfunc(max_deg: usize) -> impl Strategy<Value = RatFunc> {
    (nonzero_qpoly(max_deg), nonzero_qpoly(max_deg)).prop_map(|(n, d)| RatFunc::new(n, d).expect("nonzero denominator"))
}

/// Genus-3 toy curve `z² = y(y²-1)(y²-4)(y-3)(y-c)` with `c = 4 - 5x²`,
/// so `f(4) = (60x)²`. Its linear factors give 64 rational 2-torsion points
/// and `(4, 60x)` a point of infinite order.
pub struct Toy {
    pub curve: Arc<Curve<RatFunc>>,
    pub factors: Vec<PolyY>,
    pub point: MumfordDivisor<RatFunc>,
    pub torsion: Vec<MumfordDivisor<RatFunc>>,
}

pub fn toy() -> &'static Toy {
    static TOY: OnceLock<Toy> = OnceLock::new();
    TOY.get_or_init(|| {
        let b = Default::default();
        let factors: Vec<PolyY> = ["y", "y - 1", "y + 1", "y - 2", "y + 2", "y - 3", "y - 4 + 5x^2"]
            .iter()
            .map(|t| parse_poly_y(t, &b).unwrap())
            .collect();
        let f = factors.iter().fold(PolyY::one(), |acc, p| &acc * p);
        let curve = Curve::new(f).unwrap();
        let point =
            MumfordDivisor::new(&curve, parse_poly_y("y - 4", &b).unwrap(), parse_poly_y("60x", &b).unwrap()).unwrap();
        let torsion = two_torsion_subsets(&curve, &factors).unwrap();
        Toy { curve, factors, point, torsion }
    })
}

/// `n·P + T` with `|n| <= bound` and `T` one of the 64 2-torsion points.
/// Heights grow quadratically in `n`, so bounds stay small.
pub fn toy_divisor_within(bound: i64) -> impl Strategy<Value = MumfordDivisor<RatFunc>> {
    (-bound..=bound, 0usize..64).prop_map(|(n, k)| {
        let t = toy();
        t.point.scalar_mul(n).add(&t.torsion[k]).unwrap()
    })
}

pub fn toy_divisor() -> impl Strategy<Value = MumfordDivisor<RatFunc>> {
    toy_divisor_within(2)
}
