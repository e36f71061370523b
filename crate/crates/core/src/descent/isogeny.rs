//! The elliptic 2-isogeny dual with its connecting map γ, and the Richelot
//! dual of a genus-2 curve `z² = G₁G₂G₃`.

use num_traits::Zero;

use super::DescentError;
use crate::exact::field::Field;
use crate::exact::poly::Poly;
use crate::funcfield::{RatFunc, SquareClass};
use crate::PolyY;

fn check_elliptic(s: &RatFunc, t: &RatFunc) -> Result<RatFunc, DescentError> {
    let disc = s * s - &(RatFunc::from_i64(4) * t);
    if t.is_zero() || disc.is_zero() {
        return Err(DescentError::DegenerateCurve(format!("T(S^2-4T) = 0 for S = {s}, T = {t}")));
    }
    Ok(disc)
}

/// `z² = y(y² + Sy + T)` is 2-isogenous to `z² = y(y² - 2Sy + S² - 4T)`;
/// returns the new `(S, T)`.
pub fn elliptic_dual(s: &RatFunc, t: &RatFunc) -> Result<(RatFunc, RatFunc), DescentError> {
    let disc = check_elliptic(s, t)?;
    Ok((RatFunc::from_i64(-2) * s, disc))
}

/// A ℚ(x)-point of `z² = y(y² + Sy + T)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EllipticPoint {
    Neutral,
    /// The 2-torsion point `(0, 0)`.
    Origin,
    Finite {
        y: RatFunc,
        z: RatFunc,
    },
}

/// The connecting map to ℚ(x)ˣ/ℚ(x)ˣ²: `[y]`, with `[T]` at `(0, 0)` and
/// `[1]` at the neutral element.
pub fn elliptic_gamma(p: &EllipticPoint, s: &RatFunc, t: &RatFunc) -> Result<SquareClass, DescentError> {
    match p {
        EllipticPoint::Neutral => Ok(SquareClass::one()),
        EllipticPoint::Origin => Ok(SquareClass::of(t)?),
        EllipticPoint::Finite { y, z } => {
            let rhs = y * &(&(y * y) + &(&(s * y) + t));
            if z * z != rhs {
                return Err(DescentError::PointNotOnCurve);
            }
            Ok(if y.is_zero() { SquareClass::of(t)? } else { SquareClass::of(y)? })
        }
    }
}

/// `[P, Q] = P'Q - PQ'`.
pub fn bracket(p: &PolyY, q: &PolyY) -> PolyY {
    &(&p.derivative() * q) - &(p * &q.derivative())
}

/// The Richelot dual `Δ ẑ² = L₁L₂L₃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RichelotDual {
    pub delta: RatFunc,
    pub l: [PolyY; 3],
}

impl RichelotDual {
    /// `Δ L₁L₂L₃`, the right-hand side after multiplying through by `Δ`.
    pub fn quintic(&self) -> PolyY {
        let [l1, l2, l3] = &self.l;
        (&(l1 * l2) * l3).scale(&self.delta)
    }

    /// Match `Δ L₁L₂L₃` against `dst` (see [`identify_quintic`]).
    pub fn identify(&self, dst: &[PolyY; 3]) -> Result<AffineMatch, DescentError> {
        identify_quintic(&self.delta, &self.l, dst)
    }
}

fn det3(m: &[[RatFunc; 3]; 3]) -> RatFunc {
    let minor = |a: &RatFunc, b: &RatFunc, c: &RatFunc, d: &RatFunc| a * d - &(b * c);
    let t0 = &m[0][0] * &minor(&m[1][1], &m[1][2], &m[2][1], &m[2][2]);
    let t1 = &m[0][1] * &minor(&m[1][0], &m[1][2], &m[2][0], &m[2][2]);
    let t2 = &m[0][2] * &minor(&m[1][0], &m[1][1], &m[2][0], &m[2][1]);
    t0 - &t1 + &t2
}

/// Brackets `L₁ = [G₂,G₃]`, `L₂ = [G₃,G₁]`, `L₃ = [G₁,G₂]` and
/// `Δ = det(g_{i,j})` with `g_{i,j}` the coefficient of `yʲ` in `Gᵢ`.
pub fn richelot_dual(g1: &PolyY, g2: &PolyY, g3: &PolyY) -> Result<RichelotDual, DescentError> {
    let gs = [g1, g2, g3];
    if gs.iter().any(|g| g.is_zero() || g.deg() > 2) {
        return Err(DescentError::DegreeViolation("each G must be nonzero of degree at most 2".into()));
    }
    let total: isize = gs.iter().map(|g| g.deg()).sum();
    if total != 5 {
        return Err(DescentError::DegreeViolation(format!("deg G1G2G3 = {total}, expected 5")));
    }
    let m = gs.map(|g| [g.coeff(0), g.coeff(1), g.coeff(2)]);
    let delta = det3(&m);
    if delta.is_zero() {
        return Err(DescentError::SingularDelta);
    }
    Ok(RichelotDual { delta, l: [bracket(g2, g3), bracket(g3, g1), bracket(g1, g2)] })
}

/// `src(a·Y + b) = kappa · dst(Y)` as polynomials in `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMatch {
    pub a: RatFunc,
    pub b: RatFunc,
    pub kappa: RatFunc,
}

/// Root of the linear factor and common center `-c₁/(2c₂)` of the two
/// quadratic factors.
fn landmarks(fs: &[PolyY; 3]) -> Option<(RatFunc, RatFunc)> {
    let lin: Vec<&PolyY> = fs.iter().filter(|p| p.deg() == 1).collect();
    let quad: Vec<&PolyY> = fs.iter().filter(|p| p.deg() == 2).collect();
    if lin.len() != 1 || quad.len() != 2 {
        return None;
    }
    let root = -(lin[0].coeff(0) * &lin[0].coeff(1).inv()?);
    let center = |q: &PolyY| -(q.coeff(1) * &(RatFunc::from_i64(2) * &q.coeff(2)).inv().expect("degree 2"));
    let (c1, c2) = (center(quad[0]), center(quad[1]));
    (c1 == c2).then_some((root, c1))
}

/// Find the affine substitution `y = a·Y + b` carrying `scale · ∏ src` to a
/// constant multiple of `∏ dst`, for factor lists of shape (linear,
/// quadratic, quadratic) whose quadratics share a center. The substitution
/// is pinned down by sending root to root and center to center.
pub fn identify_quintic(scale: &RatFunc, src: &[PolyY; 3], dst: &[PolyY; 3]) -> Result<AffineMatch, DescentError> {
    let (rs, cs) = landmarks(src).ok_or(DescentError::NoAffineMatch)?;
    let (rd, cd) = landmarks(dst).ok_or(DescentError::NoAffineMatch)?;
    let gap = &rd - &cd;
    let a = (&rs - &cs) * &gap.inv().ok_or(DescentError::NoAffineMatch)?;
    let b = &cs - &(&a * &cd);
    let sub = Poly::new(vec![b.clone(), a.clone()]);
    let lhs = src.iter().fold(PolyY::constant(scale.clone()), |acc, p| &acc * &p.compose(&sub));
    let rhs = dst.iter().fold(PolyY::one(), |acc, p| &acc * p);
    let kappa = lhs.lc() * &rhs.lc().inv().ok_or(DescentError::NoAffineMatch)?;
    if lhs != rhs.scale(&kappa) {
        return Err(DescentError::NoAffineMatch);
    }
    Ok(AffineMatch { a, b, kappa })
}
