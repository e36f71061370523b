//! Effective antineutrality.
//!
//! A curve `z² + (y²+1)Q(y²) = 0` over ℝ(x) with `Q` monic of odd degree `g`
//! becomes, after sending `y = ±i` to infinity and to `(0, 0)`, the odd model
//! `t² = -(s/d)(s-d)^{2g} Q(-((s+d)/(s-d))²)` with `d = -Q(-1)`. Complex
//! conjugation on the original curve acts on this model through the
//! involution `s ↦ d²/s`; over ℚ(x) conjugation fixes every coefficient, so
//! invariance reduces to comparing a divisor with its image under that
//! involution.

use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::field::Field;
use crate::exact::poly::{pow_field, Poly};
use crate::funcfield::{is_psd, FuncFieldError, RatFunc};
use crate::jacobian::{Curve, JacobianError, MumfordDivisor};
use crate::PolyY;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AntineutralError {
    #[error("Q must be monic")]
    NotMonic,
    #[error("Q has even degree {0}")]
    EvenDegree(usize),
    #[error("d = -Q(-1) vanishes")]
    DZero,
    #[error("(y^2+1)Q(y^2) is not squarefree")]
    NotSquarefree,
    #[error("u vanishes at s = 0")]
    UVanishesAtZero,
    #[error("divisor does not lie on the tilde curve")]
    WrongCurve,
    #[error("no auxiliary point moves the divisor off s = 0")]
    NoShift,
    #[error("degenerate family parameter: {0}")]
    Degenerate(&'static str),
    #[error(transparent)]
    Jacobian(#[from] JacobianError),
    #[error(transparent)]
    FuncField(#[from] FuncFieldError),
}

/// `Q`, `d` and the odd model.
#[derive(Clone, Debug)]
pub struct TildeModel {
    q: PolyY,
    d: RatFunc,
    curve: Arc<Curve<RatFunc>>,
}

impl TildeModel {
    pub fn q(&self) -> &PolyY {
        &self.q
    }

    pub fn d(&self) -> &RatFunc {
        &self.d
    }

    pub fn curve(&self) -> &Arc<Curve<RatFunc>> {
        &self.curve
    }

    pub fn genus(&self) -> usize {
        self.curve.genus()
    }

    /// `<s - d, (2d)^g>`: at `s = d` only the top term of `Q` survives and
    /// `f(d) = (2d)^{2g}` because `g` is odd.
    pub fn base_point(&self) -> MumfordDivisor<RatFunc> {
        let g = self.genus();
        let two_d = RatFunc::from_i64(2) * &self.d;
        MumfordDivisor::new(&self.curve, Poly::linear_root(&self.d), Poly::constant(pow_field(&two_d, g)))
            .expect("(d, (2d)^g) lies on the tilde curve")
    }
}

/// Build the odd model of `t² = -(y²+1)Q(y²)`.
pub fn build_tilde(q: &PolyY) -> Result<TildeModel, AntineutralError> {
    let g = q.degree().ok_or(AntineutralError::EvenDegree(0))?;
    if !q.is_monic() {
        return Err(AntineutralError::NotMonic);
    }
    if g % 2 == 0 {
        return Err(AntineutralError::EvenDegree(g));
    }
    let d = -q.eval(&-RatFunc::one());
    if d.is_zero() {
        return Err(AntineutralError::DZero);
    }
    let y2 = Poly::monomial(RatFunc::one(), 2);
    let p = &(&y2 + &PolyY::one()) * &q.compose(&y2);
    if !p.is_squarefree() {
        return Err(AntineutralError::NotSquarefree);
    }
    let dc = PolyY::constant(d.clone());
    let plus = &PolyY::var() + &dc;
    let minus = &PolyY::var() - &dc;
    let plus2 = &plus * &plus;
    let minus2 = &minus * &minus;
    let mut sum = PolyY::zero();
    for (k, qk) in q.coeffs().iter().enumerate() {
        if qk.is_zero() {
            continue;
        }
        let term = (&plus2.pow(k as u32) * &minus2.pow((g - k) as u32)).scale(qk);
        sum = if k % 2 == 0 { &sum + &term } else { &sum - &term };
    }
    let factor = -d.inv().expect("d is nonzero");
    let f = sum.shift(1).scale(&factor);
    let curve = Curve::with_variable(f, "s")?;
    Ok(TildeModel { q: q.clone(), d, curve })
}

/// The three factors `g1 = s`, `g2`, `g3` of the odd model attached to
/// `Q(T) = (T + c)(T² + (1+c)T + b)`, where `d = (1-c)(b-c)`.
pub fn tilde_factors(b: &RatFunc, c: &RatFunc) -> Result<[PolyY; 3], AntineutralError> {
    let one = RatFunc::one();
    let c_minus_1 = c - &one;
    let b_minus_c = b - c;
    if c_minus_1.is_zero() {
        return Err(AntineutralError::Degenerate("C = 1"));
    }
    if b_minus_c.is_zero() {
        return Err(AntineutralError::Degenerate("B = C"));
    }
    let d = -(&c_minus_1 * &b_minus_c);
    let dc = PolyY::constant(d);
    let plus2 = (&PolyY::var() + &dc).pow(2);
    let minus2 = (&PolyY::var() - &dc).pow(2);
    let g1 = PolyY::var();
    let g2 = (&minus2.scale(c) - &plus2).scale(&c_minus_1.inv().expect("nonzero"));
    let g3 = (&(&(&plus2 * &plus2) - &(&plus2 * &minus2).scale(&(&one + c))) + &(&minus2 * &minus2).scale(b))
        .scale(&b_minus_c.inv().expect("nonzero"));
    Ok([g1, g2, g3])
}

/// `s^n p(d²/s)`, defined when `n ≥ deg p`.
fn twist(p: &PolyY, n: usize, d: &RatFunc) -> PolyY {
    debug_assert!(p.deg() <= n as isize);
    let d2 = d * d;
    let mut coeffs = vec![RatFunc::zero(); n + 1];
    let mut dk = RatFunc::one();
    for (k, c) in p.coeffs().iter().enumerate() {
        coeffs[n - k] = c.clone() * &dk;
        dk = dk * &d2;
    }
    Poly::new(coeffs)
}

/// `(s/d)^{g+1} v(d²/s)`, a polynomial whenever `deg v ≤ g + 1`.
fn twist_v(v: &PolyY, g: usize, d: &RatFunc) -> PolyY {
    let dinv = pow_field(&d.inv().expect("d is nonzero"), g + 1);
    twist(v, g + 1, d).scale(&dinv)
}

fn check_curve(dv: &MumfordDivisor<RatFunc>, m: &TildeModel) -> Result<(), AntineutralError> {
    if dv.curve().same_as(m.curve()) {
        Ok(())
    } else {
        Err(AntineutralError::WrongCurve)
    }
}

/// Mumford pair of `ω̃(D) + div(s^e)`, `e = ⌊(deg u + 1)/2⌋`. The result is
/// semi-reduced and may have degree `g + 1`; it is the class of `ω̃(D)`
/// because `div(s^e)` is principal.
pub fn omega_image(dv: &MumfordDivisor<RatFunc>, m: &TildeModel) -> Result<MumfordDivisor<RatFunc>, AntineutralError> {
    check_curve(dv, m)?;
    let u0 = dv.u().coeff(0);
    if u0.is_zero() {
        return Err(AntineutralError::UVanishesAtZero);
    }
    let g = m.genus();
    let deg = dv.u().deg() as usize;
    let e = deg.div_ceil(2);
    let u_new = twist(dv.u(), 2 * e, m.d()).scale(&u0.inv().expect("nonzero"));
    let mut lifted = twist_v(dv.v(), g, m.d());
    if g % 2 == 1 {
        lifted = -lifted;
    }
    let v_new = lifted.rem(&u_new).expect("nonzero");
    Ok(MumfordDivisor::new(m.curve(), u_new, v_new)?)
}

/// Remainder of `-(s/d)^{g+1} v(d²/s)` modulo `u`; invariance in the
/// even-degree case requires it to equal `v`.
pub fn invariance_remainder(dv: &MumfordDivisor<RatFunc>, m: &TildeModel) -> PolyY {
    (-twist_v(dv.v(), m.genus(), m.d())).rem(dv.u()).expect("nonzero")
}

/// Split off the 2-torsion point `<s, 0>` when `u(0) = 0`. It is fixed by
/// the involution (it is `P0 - ∞`, mapped to `∞ - P0 = -(P0 - ∞)`), so the
/// invariance of `D` and of the remaining part agree.
fn strip_origin(dv: &MumfordDivisor<RatFunc>) -> MumfordDivisor<RatFunc> {
    if !dv.u().coeff(0).is_zero() {
        return dv.clone();
    }
    let u = dv.u().exact_div(&PolyY::var()).expect("s divides u");
    let v = dv.v().rem(&u).expect("nonzero");
    MumfordDivisor::new(dv.curve(), u, v).expect("a factor of a Mumford pair is a Mumford pair")
}

/// Invariance under conjugation of the original curve, by the closed-form
/// criterion. Divisors through `(0, 0)` are handled by [`strip_origin`].
pub fn is_sigma_invariant(dv: &MumfordDivisor<RatFunc>, m: &TildeModel) -> Result<bool, AntineutralError> {
    check_curve(dv, m)?;
    let dv = strip_origin(&dv.reduce());
    if dv.is_identity() {
        return Ok(true);
    }
    let (u, v) = (dv.u(), dv.v());
    let g = m.genus();
    let deg = u.deg() as usize;
    let u0 = u.coeff(0);
    // even degree: ω̃ fixes the pair itself
    if deg.is_multiple_of(2) && twist(u, deg, m.d()) == u.scale(&u0) && &invariance_remainder(&dv, m) == v {
        return Ok(true);
    }
    // full degree: ω̃(D) differs from D by the divisor of a function
    if deg == g {
        let v_check = v - &u.scale(&(v.coeff(0) * &u0.inv().expect("nonzero")));
        let lhs = (m.curve().f() - &(&v_check * &v_check)).scale(&u0);
        let rhs = (u * &twist(u, g, m.d())).shift(1);
        if twist_v(&v_check, g, m.d()) == v_check && lhs == rhs {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Reduced class of `ω̃(D)`, for any reduced `D`.
///
/// Divisors through `(0, 0)` are moved off it by adding multiples of
/// [`TildeModel::base_point`] and using additivity of `ω̃`.
pub fn omega_class(dv: &MumfordDivisor<RatFunc>, m: &TildeModel) -> Result<MumfordDivisor<RatFunc>, AntineutralError> {
    check_curve(dv, m)?;
    let dv = dv.reduce();
    if dv.is_identity() {
        return Ok(dv);
    }
    if !dv.u().coeff(0).is_zero() {
        return Ok(omega_image(&dv, m)?.reduce());
    }
    let base = m.base_point();
    let mut shift = base.clone();
    for _ in 0..16 {
        let moved = dv.add(&shift)?;
        let shift_ok = shift.is_identity() || !shift.u().coeff(0).is_zero();
        if shift_ok && (moved.is_identity() || !moved.u().coeff(0).is_zero()) {
            let a = if moved.is_identity() { moved } else { omega_image(&moved, m)?.reduce() };
            let b = if shift.is_identity() { shift } else { omega_image(&shift, m)?.reduce() };
            return Ok(a.sub(&b)?);
        }
        shift = shift.add(&base)?;
    }
    Err(AntineutralError::NoShift)
}

/// Invariance decided by Cantor arithmetic: `[ω̃(D)] = [D]`.
pub fn is_sigma_invariant_oracle(dv: &MumfordDivisor<RatFunc>, m: &TildeModel) -> Result<bool, AntineutralError> {
    Ok(omega_class(dv, m)? == dv.reduce())
}

/// Outcome of the antineutrality test for a single point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Varpi {
    NotInvariant,
    /// Invariant with `deg u < g`: the image in ℝ(x)ˣ modulo sums of two
    /// squares is trivial.
    InvariantTrivial,
    InvariantAntineutral,
    InvariantNotAntineutral,
}

/// Classify a point. Antineutral means invariant, `deg u = g` and `u(0)` a
/// sum of two squares in ℝ(x). Points through `(0, 0)` are classified by
/// their part off `(0, 0)`; the stripped `<s, 0>` has degree `1 < g`.
pub fn varpi_antineutral(dv: &MumfordDivisor<RatFunc>, m: &TildeModel) -> Result<Varpi, AntineutralError> {
    if !is_sigma_invariant(dv, m)? {
        return Ok(Varpi::NotInvariant);
    }
    let core = strip_origin(&dv.reduce());
    if (core.u().deg() as usize) < m.genus() {
        return Ok(Varpi::InvariantTrivial);
    }
    Ok(if is_psd(&core.u().coeff(0))? { Varpi::InvariantAntineutral } else { Varpi::InvariantNotAntineutral })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_ratfunc;

    fn r(s: &str) -> RatFunc {
        parse_ratfunc(s).unwrap()
    }

    fn toy() -> (TildeModel, [PolyY; 3]) {
        let (b, c) = (r("x+2"), r("x"));
        let t = PolyY::var();
        let q = &(&t + &PolyY::constant(c.clone()))
            * &(&(&t * &t) + &(&t.scale(&(&RatFunc::one() + &c)) + &PolyY::constant(b.clone())));
        (build_tilde(&q).unwrap(), tilde_factors(&b, &c).unwrap())
    }

    #[test]
    fn toy_model_factors() {
        let (m, [g1, g2, g3]) = toy();
        assert_eq!(m.d(), &r("2 - 2x"));
        assert_eq!(m.curve().f(), &(&(&g1 * &g2) * &g3));
        assert_eq!(m.genus(), 3);
    }

    #[test]
    fn rejects_bad_q() {
        let t = PolyY::var();
        assert!(matches!(build_tilde(&(&t + &PolyY::one())), Err(AntineutralError::DZero)));
        assert!(matches!(build_tilde(&(&t * &t)), Err(AntineutralError::EvenDegree(2))));
    }

    #[test]
    fn involution_on_toy_points() {
        let (m, [g1, g2, _]) = toy();
        let base = m.base_point();
        for k in 1..4 {
            let p = base.scalar_mul(k);
            let back = omega_class(&omega_class(&p, &m).unwrap(), &m).unwrap();
            assert_eq!(back, p);
        }
        for u in [g1.clone(), g2.clone(), &g1 * &g2] {
            let p = MumfordDivisor::new(m.curve(), u, PolyY::zero()).unwrap();
            assert_eq!(is_sigma_invariant(&p, &m).unwrap(), is_sigma_invariant_oracle(&p, &m).unwrap());
        }
    }
}
