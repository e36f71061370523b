//! Places of ℚ(x) and the valuations they define.

use std::fmt;

use num_traits::{One, Zero};

use super::{FuncFieldError, RatFunc};
use crate::exact::poly::Poly;
use crate::exact::qpoly::QPoly;
use crate::exact::rational::{rational_is_square, Rational};

/// A place of ℚ(x): a monic irreducible prime of ℚ[x], or the degree
/// valuation at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Place {
    Finite(QPoly),
    Infinity,
}

impl Place {
    /// Validate `prime`. Linear primes are always accepted, quadratics only
    /// with a non-square discriminant; higher degrees are refused because
    /// irreducibility would need a factorization algorithm.
    pub fn finite(prime: QPoly) -> Result<Self, FuncFieldError> {
        if !prime.is_monic() {
            return Err(FuncFieldError::NotMonic(prime.to_string()));
        }
        match prime.deg() {
            1 => Ok(Place::Finite(prime)),
            2 => {
                let (c, b) = (prime.coeff(0), prime.coeff(1));
                let disc = &b * &b - Rational::from_integer(4.into()) * c;
                if rational_is_square(&disc) {
                    Err(FuncFieldError::NotIrreducible(prime.to_string()))
                } else {
                    Ok(Place::Finite(prime))
                }
            }
            _ => Err(FuncFieldError::NotIrreducible(prime.to_string())),
        }
    }

    /// The place `x - r`.
    pub fn at(r: Rational) -> Self {
        Place::Finite(Poly::linear_root(&r))
    }

    /// Root of a linear prime.
    pub fn root(&self) -> Option<Rational> {
        match self {
            Place::Finite(p) if p.deg() == 1 => Some(-p.coeff(0)),
            _ => None,
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(p) => p.deg() as usize,
            Place::Infinity => 1,
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "({p})"),
            Place::Infinity => f.write_str("inf"),
        }
    }
}

fn multiplicity(p: &QPoly, prime: &QPoly) -> i64 {
    let mut n = 0;
    let mut cur = p.clone();
    while let Some(q) = cur.exact_div(prime) {
        cur = q;
        n += 1;
    }
    n
}

/// Order of `f` at `place`.
pub fn valuation(f: &RatFunc, place: &Place) -> Result<i64, FuncFieldError> {
    if f.is_zero() {
        return Err(FuncFieldError::ZeroInput);
    }
    Ok(match place {
        Place::Finite(prime) => multiplicity(f.num(), prime) - multiplicity(f.den(), prime),
        Place::Infinity => f.den().deg() as i64 - f.num().deg() as i64,
    })
}

/// Whether `a / b` reduces to a square in the residue field at a linear
/// place. Both arguments must be units there.
pub fn equiv_mod_place(a: &RatFunc, b: &RatFunc, place: &Place) -> Result<bool, FuncFieldError> {
    let r = place.root().ok_or_else(|| FuncFieldError::UnsupportedPlace(place.to_string()))?;
    for f in [a, b] {
        let v = valuation(f, place)?;
        if v != 0 {
            return Err(FuncFieldError::NonzeroValuation { place: place.to_string(), valuation: v });
        }
    }
    let ra = a.eval(&r).expect("unit at the place");
    let rb = b.eval(&r).expect("unit at the place");
    Ok(rational_is_square(&(ra / rb)))
}

impl Place {
    /// `true` for the place at `x = 0`.
    pub fn is_origin(&self) -> bool {
        matches!(self, Place::Finite(p) if p.deg() == 1 && p.coeff(0).is_zero() && p.coeff(1).is_one())
    }
}
