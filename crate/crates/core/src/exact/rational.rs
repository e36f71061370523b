//! Arbitrary-precision rationals and the scalar square test.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::Field;
use super::poly::Poly;
use super::ExactError;

/// Exact rational scalar; always stored in lowest terms with positive denominator.
pub type Rational = BigRational;

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn certify_coprime(a: &Poly<Self>, b: &Poly<Self>) -> bool {
        super::modular::certify_coprime(a, b)
    }

    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d` in lowest terms. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact integer square root, if `n` is a perfect square.
pub fn integer_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// True iff `q` is the square of a rational.
pub fn rational_is_square(q: &Rational) -> bool {
    rational_sqrt(q).is_some()
}

/// Exact rational square root (the nonnegative one), if it exists.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    let n = integer_sqrt(q.numer())?;
    let d = integer_sqrt(q.denom())?;
    Some(Rational::new(n, d))
}

/// Parses `p`, `-p` or `p/q` with decimal integers.
pub fn parse_rational(text: &str) -> Result<Rational, ExactError> {
    let t = text.trim();
    let bad = || ExactError::Parse {
        input: text.to_string(),
        position: 0,
        message: "expected a rational literal p or p/q".into(),
    };
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(ExactError::DivisionByZero);
    }
    Ok(Rational::new(n, d))
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign(q: &Rational) -> i8 {
    match q.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Least common multiple of the denominators.
pub fn denominators_lcm<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    qs.into_iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}
