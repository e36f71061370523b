use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::Poly;

/// An exact field usable as a polynomial coefficient.
///
/// Arithmetic takes the right operand by reference so that big coefficients
/// are not cloned needlessly.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Send
    + Sync
{
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Image of an integer.
    fn from_i64(n: i64) -> Self;

    /// Cheap sufficient test that two nonconstant polynomials are coprime.
    /// `false` means only that the test was inconclusive.
    fn certify_coprime(_a: &Poly<Self>, _b: &Poly<Self>) -> bool {
        false
    }

    /// `self / rhs`, `None` when `rhs` is zero.
    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * &r)
    }
}
