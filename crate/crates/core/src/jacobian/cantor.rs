//! Cantor's composition and reduction.

use super::{JacobianError, MumfordDivisor};
use crate::exact::field::Field;
use crate::exact::poly::Poly;

fn exact<F: Field>(p: &Poly<F>, d: &Poly<F>) -> Poly<F> {
    p.exact_div(d).expect("Cantor composition divides exactly")
}

impl<F: Field> MumfordDivisor<F> {
    /// Group law: reduced representative of `self + other`.
    pub fn add(&self, other: &Self) -> Result<Self, JacobianError> {
        self.check_same_curve(other)?;
        if self.is_identity() {
            return Ok(other.reduce());
        }
        if other.is_identity() {
            return Ok(self.reduce());
        }
        Ok(self.compose(other).reduce())
    }

    pub fn sub(&self, other: &Self) -> Result<Self, JacobianError> {
        self.add(&other.negate())
    }

    pub fn double(&self) -> Self {
        if self.is_identity() {
            return self.clone();
        }
        self.compose(self).reduce()
    }

    /// `[n] self` by double-and-add; negative `n` goes through the negation.
    pub fn scalar_mul(&self, n: i64) -> Self {
        let base = if n < 0 { self.negate() } else { self.reduce() };
        let k = n.unsigned_abs();
        let mut acc = MumfordDivisor::identity(self.curve());
        for bit in (0..64 - k.leading_zeros()).rev() {
            acc = acc.double();
            if (k >> bit) & 1 == 1 {
                acc = acc.add(&base).expect("same curve");
            }
        }
        acc
    }

    /// Semi-reduced composition of two divisors on the same curve.
    fn compose(&self, other: &Self) -> Self {
        let f = self.curve().f();
        let (u1, v1, u2, v2) = (self.u(), self.v(), other.u(), other.v());
        // d0 = e1 u1 + e2 u2
        let (d0, e1, e2) = Poly::xgcd(u1, u2).expect("nonzero u");
        let w = v1 + v2;
        // d = c1 d0 + c2 (v1 + v2)
        let (d, c1, c2) = if d0.is_one() {
            (Poly::one(), Poly::one(), Poly::zero())
        } else {
            Poly::xgcd(&d0, &w).expect("d0 is nonzero")
        };
        let mut num = &(&(&c1 * &e1) * &(u1 * v2)) + &(&(&c1 * &e2) * &(u2 * v1));
        if !c2.is_zero() {
            num = &num + &(&c2 * &(&(v1 * v2) + f));
        }
        let (u, v) = if d.is_one() {
            let u = u1 * u2;
            let v = num.rem(&u).expect("nonzero");
            (u, v)
        } else {
            let d2 = &d * &d;
            let u = exact(&(u1 * u2), &d2);
            // reduce modulo u*d first; the remainder stays divisible by d
            let v = exact(&num.rem(&(&u * &d)).expect("nonzero"), &d);
            (u, v)
        };
        MumfordDivisor::from_parts(self.curve(), u, v)
    }

    /// Reduced divisor in the class of a semi-reduced one.
    pub fn reduce(&self) -> Self {
        let g = self.curve().genus() as isize;
        let f = self.curve().f();
        let mut u = self.u().monic();
        let mut v = self.v().rem(&u).expect("nonzero");
        while u.deg() > g {
            let u2 = exact(&(f - &(&v * &v)), &u).monic();
            v = (-&v).rem(&u2).expect("nonzero");
            u = u2;
        }
        MumfordDivisor::from_parts(self.curve(), u, v)
    }
}
