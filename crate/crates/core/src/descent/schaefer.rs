//! The Schaefer map composed with the norms down to ℚ(x).
//!
//! For a factor `fᵢ` of `f` the `i`-th component of a divisor `<u, v>` is the
//! class of `N((-1)^{deg u} u(T))` in `K_i = ℚ(x)[T]/(fᵢ)`, i.e.
//! `(-1)^{deg u · deg fᵢ} res(fᵢ, u)`. When `fᵢ | u` the support contains
//! the Weierstrass points over `fᵢ`, whose contribution is the norm of the
//! cofactor `f/fᵢ`; the component becomes
//! `res(fᵢ, (-1)^{deg u - deg fᵢ} (u/fᵢ)(f/fᵢ))`.

use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use super::DescentError;
use crate::exact::poly::Poly;
use crate::funcfield::{RatFunc, SquareClass};
use crate::jacobian::{two_torsion_subsets, Curve, JacobianError, MumfordDivisor};
use crate::PolyY;

/// A curve together with a factorization of `f` into monic coprime factors.
#[derive(Clone, Debug)]
pub struct SchaeferContext {
    curve: Arc<Curve<RatFunc>>,
    factors: Vec<PolyY>,
    torsion: Vec<MumfordDivisor<RatFunc>>,
}

impl SchaeferContext {
    pub fn new(curve: &Arc<Curve<RatFunc>>, factors: Vec<PolyY>) -> Result<Self, DescentError> {
        if let Some(bad) = factors.iter().find(|p| !p.is_monic()) {
            return Err(DescentError::FactorNotMonic(bad.to_string()));
        }
        let torsion = two_torsion_subsets(curve, &factors).map_err(|e| match e {
            JacobianError::BadFactorization(_) => DescentError::BadFactorization,
            other => other.into(),
        })?;
        Ok(SchaeferContext { curve: curve.clone(), factors, torsion })
    }

    pub fn curve(&self) -> &Arc<Curve<RatFunc>> {
        &self.curve
    }

    pub fn factors(&self) -> &[PolyY] {
        &self.factors
    }

    /// The points `<u, 0>` with `u` a product of factors and `deg u ≤ g`,
    /// identity first.
    pub fn two_torsion(&self) -> &[MumfordDivisor<RatFunc>] {
        &self.torsion
    }
}

/// One square class per factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassTuple(Vec<SquareClass>);

impl ClassTuple {
    pub fn new(components: Vec<SquareClass>) -> Self {
        ClassTuple(components)
    }

    pub fn trivial(n: usize) -> Self {
        ClassTuple(vec![SquareClass::one(); n])
    }

    pub fn components(&self) -> &[SquareClass] {
        &self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(SquareClass::is_trivial)
    }

    /// Product of all components.
    pub fn product(&self) -> SquareClass {
        self.0.iter().fold(SquareClass::one(), |acc, c| acc.mul(c))
    }

    /// Images of Jacobian points lie in the kernel of the total norm.
    pub fn in_norm_kernel(&self) -> bool {
        self.product().is_trivial()
    }

    /// Componentwise product.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.0.len(), o.0.len(), "tuples of different length");
        ClassTuple(self.0.iter().zip(&o.0).map(|(a, b)| a.mul(b)).collect())
    }
}

impl fmt::Display for ClassTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[{c}]")?;
        }
        write!(f, ")")
    }
}

impl Serialize for ClassTuple {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|c| c.to_string()))
    }
}

fn signed(p: PolyY, odd: bool) -> PolyY {
    if odd {
        -p
    } else {
        p
    }
}

/// Ξ of `<u, ·>` when every factor is either coprime to `u` or divides it.
fn xi_direct(u: &PolyY, ctx: &SchaeferContext) -> Result<Option<ClassTuple>, DescentError> {
    let f = ctx.curve.f();
    let deg_u = u.deg() as usize;
    let mut out = Vec::with_capacity(ctx.factors.len());
    for fi in &ctx.factors {
        let deg_f = fi.deg() as usize;
        let value = if Poly::coprime(fi, u) {
            let r = Poly::resultant(fi, u)?;
            if (deg_u * deg_f) % 2 == 1 {
                -r
            } else {
                r
            }
        } else if fi.divides(u) {
            let w = u.exact_div(fi).expect("fi divides u");
            let cof = f.exact_div(fi).expect("fi divides f");
            Poly::resultant(fi, &signed(&w * &cof, (deg_u - deg_f) % 2 == 1))?
        } else {
            return Ok(None);
        };
        out.push(SquareClass::of(&value)?);
    }
    Ok(Some(ClassTuple(out)))
}

/// Ξ of a divisor class. When `u` meets a factor only partially (possible
/// when a factor is reducible), the divisor is first shifted by a 2-torsion
/// point; Ξ of the shift is then divided out (every class is its own
/// inverse).
pub fn xi(dv: &MumfordDivisor<RatFunc>, ctx: &SchaeferContext) -> Result<ClassTuple, DescentError> {
    if !dv.curve().same_as(&ctx.curve) {
        return Err(JacobianError::CurveMismatch.into());
    }
    if dv.is_identity() {
        return Ok(ClassTuple::trivial(ctx.factors.len()));
    }
    if let Some(t) = xi_direct(dv.u(), ctx)? {
        return Ok(t);
    }
    for t in ctx.torsion.iter().skip(1) {
        let moved = dv.add(t)?;
        if let Some(a) = xi_direct(moved.u(), ctx)? {
            let b = xi_direct(t.u(), ctx)?.expect("products of factors always split");
            return Ok(a.mul(&b));
        }
    }
    Err(DescentError::NotCoprime)
}

/// Whether `t` is the image of a sum of 2-torsion points.
pub fn xi_is_2torsion_image(t: &ClassTuple, ctx: &SchaeferContext) -> bool {
    if t.0.len() != ctx.factors.len() || !t.in_norm_kernel() {
        return false;
    }
    ctx.torsion.iter().any(|p| xi_direct(p.u(), ctx).ok().flatten().as_ref() == Some(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly_y;
    use std::collections::HashMap;

    fn py(s: &str) -> PolyY {
        parse_poly_y(s, &HashMap::new()).unwrap()
    }

    /// `y² = y(y-1)(y+1)(y-2)(y+2)` over ℚ(x): five rational Weierstrass
    /// points, factors all linear.
    fn split_quintic() -> SchaeferContext {
        let factors: Vec<PolyY> = ["y", "y-1", "y+1", "y-2", "y+2"].iter().map(|s| py(s)).collect();
        let f = factors.iter().fold(PolyY::one(), |a, p| &a * p);
        let c = Curve::new(f).unwrap();
        SchaeferContext::new(&c, factors).unwrap()
    }

    #[test]
    fn identity_maps_to_trivial_tuple() {
        let ctx = split_quintic();
        let id = MumfordDivisor::identity(ctx.curve());
        assert!(xi(&id, &ctx).unwrap().is_trivial());
    }

    #[test]
    fn weierstrass_points_are_in_norm_kernel() {
        let ctx = split_quintic();
        for p in ctx.two_torsion() {
            let t = xi(p, &ctx).unwrap();
            assert!(t.in_norm_kernel(), "{p} -> {t}");
            assert!(xi_is_2torsion_image(&t, &ctx));
        }
        // at y the cofactor gives (-1)(1)(-2)(2) = 4; elsewhere -res(y - r, y) = -r
        let p = &ctx.two_torsion()[1];
        let t = xi(p, &ctx).unwrap();
        assert_eq!(t.to_string(), "([1], [-1], [1], [-2], [2])");
    }

    #[test]
    fn wrong_length_or_norm_is_rejected() {
        let ctx = split_quintic();
        assert!(!xi_is_2torsion_image(&ClassTuple::trivial(3), &ctx));
        let mut comps = vec![SquareClass::one(); 5];
        comps[0] = SquareClass::of(&RatFunc::x()).unwrap();
        assert!(!xi_is_2torsion_image(&ClassTuple::new(comps), &ctx));
    }

    #[test]
    fn rejects_bad_factorization() {
        let ctx = split_quintic();
        let err = SchaeferContext::new(ctx.curve(), vec![py("y"), py("y-1")]);
        assert!(matches!(err, Err(DescentError::BadFactorization)));
    }
}
