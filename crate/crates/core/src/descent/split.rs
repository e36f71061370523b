//! The four curves `C⁺_δ`, `Ĉ⁺_δ`, `C⁻_δ`, `Ĉ⁻_δ` attached to `(B, C, δ)`.
//!
//! With `E = (1-C)/2` and `D = ((1+C)² - 4B)/4`:
//!
//! * `C⁺: z² = (y + δ(1-E))(y - δE)(y + δE)(y² - δ²D)`
//! * `Ĉ⁺: z² = (y + δ(1+C))(y² - 4δ²B)(y² - 4δ²C)`
//! * `C⁻: z² = y(y² - δ(e² - 2d)y + δ²d²)` with `e = 1-C`, `d = B-C`
//! * `Ĉ⁻: z² = y(y + δe²)(y + δ(e² - 4d))`
//!
//! `Ĉ⁻` is the 2-isogenous dual of `C⁻`, and `Ĉ⁺` is the Richelot dual of
//! `C⁺` after an affine change of `y`.

use std::sync::Arc;

use num_traits::{One, Zero};

use super::DescentError;
use crate::exact::field::Field;
use crate::exact::rational::ratio;
use crate::funcfield::RatFunc;
use crate::jacobian::Curve;
use crate::PolyY;

/// A validated curve with its (monic, coprime) factorization.
#[derive(Clone, Debug)]
pub struct SplitCurve {
    pub curve: Arc<Curve<RatFunc>>,
    pub factors: Vec<PolyY>,
}

#[derive(Clone, Debug)]
pub struct FamilyCurves {
    pub delta: RatFunc,
    pub e_half: RatFunc,
    pub d_quarter: RatFunc,
    pub c_plus: SplitCurve,
    pub c_plus_hat: SplitCurve,
    pub c_minus: SplitCurve,
    pub c_minus_hat: SplitCurve,
    /// `(S, T)` with `C⁻: z² = y(y² + Sy + T)`.
    pub minus_st: (RatFunc, RatFunc),
    pub minus_hat_st: (RatFunc, RatFunc),
    /// `G₁, G₂, G₃` of `C⁺`: `y + δ(1+C)/2`, `y² - (δ(1-C)/2)²`, `y² - δ²D`.
    pub plus_g: [PolyY; 3],
    /// `G₁, G₂, G₃` of `Ĉ⁺`.
    pub plus_hat_g: [PolyY; 3],
}

fn lin(c: RatFunc) -> PolyY {
    PolyY::new(vec![c, RatFunc::one()])
}

fn quad(b: RatFunc, c: RatFunc) -> PolyY {
    PolyY::new(vec![c, b, RatFunc::one()])
}

fn nonzero(curve: &'static str, named: &[(&str, &RatFunc)]) -> Result<(), DescentError> {
    match named.iter().find(|(_, v)| v.is_zero()) {
        Some((name, _)) => Err(DescentError::SquarefreeViolation { curve, factor: (*name).to_string() }),
        None => Ok(()),
    }
}

fn build(name: &'static str, factors: Vec<PolyY>) -> Result<SplitCurve, DescentError> {
    let f = factors.iter().fold(PolyY::one(), |acc, p| &acc * p);
    let curve = Curve::new(f).map_err(|e| DescentError::DegenerateCurve(format!("{name}: {e}")))?;
    Ok(SplitCurve { curve, factors })
}

/// Build and validate the four curves.
pub fn split_family(b: &RatFunc, c: &RatFunc, delta: &RatFunc) -> Result<FamilyCurves, DescentError> {
    let one = RatFunc::one();
    let two = RatFunc::from_i64(2);
    let four = RatFunc::from_i64(4);
    let half = RatFunc::from_rational(ratio(1, 2));
    let e = &one - c;
    let d = b - c;
    let opc = &one + c;
    let disc = &(&opc * &opc) - &(&four * b);
    let named = [("delta", delta), ("1-C", &e), ("B-C", &d), ("(1+C)^2-4B", &disc)];
    nonzero("C-", &named)?;
    nonzero("C-hat", &named)?;
    nonzero("C+", &[named[0], named[1], named[2], named[3], ("B", b), ("C", c)])?;
    nonzero("C+hat", &[named[0], named[1], named[2], named[3], ("B", b), ("C", c)])?;

    let e_half = &e * &half;
    let d_quarter = &disc * &RatFunc::from_rational(ratio(1, 4));
    let dl2 = delta * delta;
    let de = delta * &e_half;

    let plus_factors = vec![
        lin(delta * &(&one - &e_half)),
        lin(-de.clone()),
        lin(de.clone()),
        quad(RatFunc::zero(), -(&dl2 * &d_quarter)),
    ];
    let c_plus = build("C+", plus_factors)?;
    let plus_g = [
        lin(&(delta * &opc) * &half),
        quad(RatFunc::zero(), -(&de * &de)),
        quad(RatFunc::zero(), -(&dl2 * &d_quarter)),
    ];

    let four_dl2 = &four * &dl2;
    let plus_hat_g =
        [lin(delta * &opc), quad(RatFunc::zero(), -(&four_dl2 * b)), quad(RatFunc::zero(), -(&four_dl2 * c))];
    let c_plus_hat = build("C+hat", plus_hat_g.to_vec())?;

    let e2 = &e * &e;
    let s_minus = -(delta * &(&e2 - &(&two * &d)));
    let t_minus = &dl2 * &(&d * &d);
    let c_minus = build("C-", vec![PolyY::var(), quad(s_minus.clone(), t_minus.clone())])?;

    let a1 = delta * &e2;
    let a2 = delta * &(&e2 - &(&four * &d));
    let minus_hat_st = (&a1 + &a2, &a1 * &a2);
    let c_minus_hat = build("C-hat", vec![PolyY::var(), lin(a1), lin(a2)])?;

    Ok(FamilyCurves {
        delta: delta.clone(),
        e_half,
        d_quarter,
        c_plus,
        c_plus_hat,
        c_minus,
        c_minus_hat,
        minus_st: (s_minus, t_minus),
        minus_hat_st,
        plus_g,
        plus_hat_g,
    })
}
