//! Square classes of ℚ(x)ˣ and the quadratic-extension square test.

use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{FuncFieldError, RatFunc};
use crate::exact::poly::Poly;
use crate::exact::qpoly::{QPoly, SquareMode};
use crate::exact::rational::{integer_sqrt, Rational};

/// Trial-division bound used to strip square factors from constants.
const TRIAL_BOUND: u64 = 1 << 16;

/// Element of ℚ(x)ˣ / ℚ(x)ˣ², stored as `unit * poly` with `poly` monic and
/// squarefree and `unit` a nonzero integer.
///
/// Square factors are removed from `unit` by trial division only (no integer
/// factorization is available), so `unit` may keep a large square factor.
/// Equality does not depend on that: two classes are equal iff their
/// polynomial parts agree and the product of their units is a square.
#[derive(Clone, Debug)]
pub struct SquareClass {
    poly: QPoly,
    unit: BigInt,
}

fn strip_squares(n: BigInt) -> BigInt {
    debug_assert!(!n.is_zero());
    let negative = n.is_negative();
    let mut m = n.abs();
    let mut kept = BigInt::one();
    let mut p = 2u64;
    while p <= TRIAL_BOUND {
        let bp = BigInt::from(p);
        if &bp * &bp > m {
            break;
        }
        let mut e = 0u32;
        while m.is_multiple_of(&bp) {
            m /= &bp;
            e += 1;
        }
        if e % 2 == 1 {
            kept *= &bp;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if integer_sqrt(&m).is_some() {
        m = BigInt::one();
    }
    let out = kept * m;
    if negative {
        -out
    } else {
        out
    }
}

fn unit_of(q: &Rational) -> BigInt {
    strip_squares(q.numer() * q.denom())
}

impl SquareClass {
    /// The class of a nonzero rational function.
    pub fn of(f: &RatFunc) -> Result<Self, FuncFieldError> {
        if f.is_zero() {
            return Err(FuncFieldError::ZeroInput);
        }
        let sqf = f.num_times_den().squarefree_decomposition()?;
        let poly = sqf.parts.iter().filter(|(_, m)| m % 2 == 1).fold(QPoly::one(), |acc, (p, _)| &acc * p);
        Ok(SquareClass { poly, unit: unit_of(&sqf.unit) })
    }

    pub fn of_poly(p: &QPoly) -> Result<Self, FuncFieldError> {
        Self::of(&RatFunc::from_poly(p.clone()))
    }

    pub fn of_rational(q: &Rational) -> Result<Self, FuncFieldError> {
        if q.is_zero() {
            return Err(FuncFieldError::ZeroInput);
        }
        Ok(SquareClass { poly: QPoly::one(), unit: unit_of(q) })
    }

    /// The trivial class `[1]`.
    pub fn one() -> Self {
        SquareClass { poly: QPoly::one(), unit: BigInt::one() }
    }

    /// Monic squarefree polynomial part.
    pub fn poly_part(&self) -> &QPoly {
        &self.poly
    }

    pub fn is_trivial(&self) -> bool {
        self.poly.is_one() && integer_sqrt(&self.unit).is_some()
    }

    /// Trivial after extending scalars to ℂ, i.e. a square in ℂ(x).
    pub fn is_trivial_over_c(&self) -> bool {
        self.poly.is_one()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let g = Poly::gcd(&self.poly, &o.poly).expect("nonzero");
        let (a, b) = if g.is_one() {
            (self.poly.clone(), o.poly.clone())
        } else {
            (self.poly.exact_div(&g).expect("divides"), o.poly.exact_div(&g).expect("divides"))
        };
        SquareClass { poly: &a * &b, unit: strip_squares(&self.unit * &o.unit) }
    }

    /// Canonical representative: squarefree primitive integer polynomial
    /// times a (trial-division) squarefree integer content.
    pub fn representative(&self) -> QPoly {
        let (kappa, prim) = self.poly.integer_primitive();
        let content = strip_squares(&self.unit * kappa.numer() * kappa.denom());
        QPoly::from_integers(&prim).scale(&Rational::from_integer(content))
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        RatFunc::from_poly(self.representative())
    }
}

impl PartialEq for SquareClass {
    fn eq(&self, o: &Self) -> bool {
        self.poly == o.poly && integer_sqrt(&(&self.unit * &o.unit)).is_some()
    }
}

impl Eq for SquareClass {}

impl Hash for SquareClass {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.poly.hash(state);
        self.unit.is_negative().hash(state);
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.representative())
    }
}

/// Is `f` a square in ℚ(x) (or ℂ(x))? Zero counts as a square.
pub fn is_square(f: &RatFunc, mode: SquareMode) -> bool {
    f.is_zero() || f.num_times_den().is_perfect_square(mode).unwrap_or(false)
}

/// Square root in ℚ(x), if one exists.
pub fn ratfunc_sqrt(f: &RatFunc) -> Option<RatFunc> {
    let n = f.num().sqrt()?;
    let d = f.den().sqrt()?;
    RatFunc::new(n, d).ok()
}

/// Whether `alpha*U + beta` is a square in ℚ(x)[U]/(U² - delta).
///
/// For `alpha ≠ 0`, a square root `a + bU` forces `a² = (beta ± gamma)/2`
/// with `gamma² = beta² - delta*alpha²`; both signs of `gamma` are tried.
/// For `alpha = 0`, the element is a square iff `beta` or `delta*beta` is.
pub fn quad_ext_square_test(alpha: &RatFunc, beta: &RatFunc, delta: &RatFunc) -> Result<bool, FuncFieldError> {
    if is_square(delta, SquareMode::OverQ) {
        return Err(FuncFieldError::DeltaIsSquare);
    }
    if alpha.is_zero() {
        return Ok(is_square(beta, SquareMode::OverQ) || is_square(&(delta * beta), SquareMode::OverQ));
    }
    let norm = beta * beta - &(delta * &(alpha * alpha));
    let Some(gamma) = ratfunc_sqrt(&norm) else {
        return Ok(false);
    };
    let half = RatFunc::from_rational(Rational::new(1.into(), 2.into()));
    for g in [gamma.clone(), -gamma] {
        let a2 = (beta + &g) * &half;
        if !a2.is_zero() && is_square(&a2, SquareMode::OverQ) {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;
    use crate::text::parse_ratfunc;

    fn cls(s: &str) -> SquareClass {
        SquareClass::of(&parse_ratfunc(s).unwrap()).unwrap()
    }

    #[test]
    fn canonical_representatives() {
        assert_eq!(cls("4(x^2-1)/9").representative().to_string(), "x^2 - 1");
        assert_eq!(cls("x^4").representative().to_string(), "1");
        assert_eq!(cls("-8x^3").representative().to_string(), "-2*x");
        assert_eq!(cls("x + 1/2").representative().to_string(), "4*x + 2");
        assert!(cls("x^4").is_trivial());
        assert!(SquareClass::of(&RatFunc::zero()).is_err());
    }

    #[test]
    fn equality_modulo_squares() {
        assert_eq!(cls("2x"), cls("8x/(x+1)^2"));
        assert_ne!(cls("2x"), cls("x"));
        assert_eq!(cls("3(x+1)").mul(&cls("3x(x+1)")), cls("x"));
        // a square factor beyond the trial-division bound
        let big = 1_000_003i64;
        let q = Rational::from_integer(BigInt::from(big) * BigInt::from(big) * BigInt::from(1_000_033));
        let a = SquareClass::of_rational(&q).unwrap();
        assert_eq!(a, SquareClass::of_rational(&rat(1_000_033)).unwrap());
    }

    #[test]
    fn quadratic_extension() {
        let r = |s: &str| parse_ratfunc(s).unwrap();
        assert!(quad_ext_square_test(&r("0"), &r("x"), &r("x")).unwrap());
        assert!(!quad_ext_square_test(&r("1"), &r("0"), &r("-1")).unwrap());
        assert!(quad_ext_square_test(&r("2"), &r("3"), &r("2")).unwrap());
        assert!(matches!(quad_ext_square_test(&r("1"), &r("1"), &r("x^2")), Err(FuncFieldError::DeltaIsSquare)));
    }
}
