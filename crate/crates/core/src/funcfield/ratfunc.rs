//! Reduced fractions of ℚ[x].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exact::field::Field;
use crate::exact::poly::Poly;
use crate::exact::qpoly::QPoly;
use crate::exact::rational::Rational;
use crate::exact::ExactError;

/// Element of ℚ(x) as `numerator / denominator`, coprime, denominator monic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

/// Monic gcd, short-circuited by the modular coprimality certificate.
fn fast_gcd(a: &QPoly, b: &QPoly) -> QPoly {
    if Rational::certify_coprime(a, b) {
        QPoly::one()
    } else {
        QPoly::gcd_heuristic(a, b).expect("not both zero")
    }
}

impl RatFunc {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = fast_gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
        };
        Self::with_monic_den(num, den)
    }

    fn with_monic_den(num: QPoly, den: QPoly) -> Self {
        let l = den.lc();
        if l.is_one() {
            RatFunc { num, den }
        } else {
            let li = l.recip();
            RatFunc { num: num.scale(&li), den: den.scale(&li) }
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatFunc { num: p, den: QPoly::one() }
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::from_poly(QPoly::constant(q))
    }

    /// The transcendental `x`.
    pub fn x() -> Self {
        Self::from_poly(QPoly::var())
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a rational constant, if it is one.
    pub fn as_rational(&self) -> Option<Rational> {
        (self.den.is_one() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    /// `deg(num) - deg(den)`; `None` for zero.
    pub fn degree(&self) -> Option<isize> {
        (!self.num.is_zero()).then(|| self.num.deg() - self.den.deg())
    }

    /// Leading coefficient of the numerator (the denominator is monic).
    pub fn leading_coefficient(&self) -> Rational {
        self.num.lc()
    }

    /// Value at a rational point; `None` at a pole.
    pub fn eval(&self, r: &Rational) -> Option<Rational> {
        let d = self.den.eval(r);
        (!d.is_zero()).then(|| self.num.eval(r) / d)
    }

    pub fn pow(&self, n: i32) -> Option<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let k = n.unsigned_abs();
        Some(RatFunc { num: base.num.pow(k), den: base.den.pow(k) })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    fn add_ref(&self, o: &Self) -> Self {
        if self.num.is_zero() {
            return o.clone();
        }
        if o.num.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return Self::from_poly(&self.num + &o.num);
            }
            return Self::reduce(&self.num + &o.num, self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc { num: &(&self.num * &o.den) + &o.num, den: o.den.clone() }.nonzero_or_zero();
        }
        if o.den.is_one() {
            return RatFunc { num: &(&o.num * &self.den) + &self.num, den: self.den.clone() }.nonzero_or_zero();
        }
        let g = fast_gcd(&self.den, &o.den);
        if g.is_one() {
            let num = &(&self.num * &o.den) + &(&o.num * &self.den);
            return RatFunc { num, den: &self.den * &o.den }.nonzero_or_zero();
        }
        let b1 = self.den.exact_div(&g).expect("gcd divides");
        let d1 = o.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &d1) + &(&o.num * &b1);
        if num.is_zero() {
            return Self::zero();
        }
        let den = &self.den * &d1;
        let h = fast_gcd(&num, &g);
        if h.is_one() {
            Self::with_monic_den(num, den)
        } else {
            Self::with_monic_den(num.exact_div(&h).expect("divides"), den.exact_div(&h).expect("divides"))
        }
    }

    fn nonzero_or_zero(self) -> Self {
        if self.num.is_zero() {
            Self::zero()
        } else {
            self
        }
    }

    fn mul_ref(&self, o: &Self) -> Self {
        if self.num.is_zero() || o.num.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::from_poly(&self.num * &o.num);
        }
        if let Some(c) = o.as_rational() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_rational() {
            return o.scale(&c);
        }
        let g1 = fast_gcd(&self.num, &o.den);
        let g2 = fast_gcd(&o.num, &self.den);
        let cut = |p: &QPoly, g: &QPoly| if g.is_one() { p.clone() } else { p.exact_div(g).expect("gcd divides") };
        let num = &cut(&self.num, &g1) * &cut(&o.num, &g2);
        let den = &cut(&self.den, &g2) * &cut(&o.den, &g1);
        Self::with_monic_den(num, den)
    }

    /// `num * den`, which lies in the same square class as `self`.
    pub fn num_times_den(&self) -> QPoly {
        &self.num * &self.den
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc { num: QPoly::zero(), den: QPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc { num: QPoly::one(), den: QPoly::one() }
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(Self::with_monic_den(self.den.clone(), self.num.clone()))
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from_i64(n))
    }

    /// Specialize `x` at small integers. If no leading coefficient or
    /// denominator vanishes there, the specialized gcd has degree at least
    /// that of the generic one, so a coprime specialization is a proof.
    fn certify_coprime(a: &Poly<Self>, b: &Poly<Self>) -> bool {
        let specialize = |p: &Poly<Self>, x0: &Rational| -> Option<QPoly> {
            let cs: Option<Vec<Rational>> = p.coeffs().iter().map(|c| c.eval(x0)).collect();
            let q = Poly::new(cs?);
            (q.deg() == p.deg()).then_some(q)
        };
        SPECIALIZATION_POINTS.iter().any(|&x0| {
            let x0 = Rational::from_i64(x0);
            match (specialize(a, &x0), specialize(b, &x0)) {
                (Some(a0), Some(b0)) => QPoly::coprime(&a0, &b0),
                _ => false,
            }
        })
    }
}

const SPECIALIZATION_POINTS: [i64; 4] = [3, -5, 7, 11];

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        self.add_ref(o)
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self.add_ref(&-o)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        self.mul_ref(o)
    }
}

impl<'a> Add<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn add(self, o: &'a RatFunc) -> RatFunc {
        self.add_ref(o)
    }
}

impl<'a> Sub<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &'a RatFunc) -> RatFunc {
        self.add_ref(&-o)
    }
}

impl<'a> Mul<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &'a RatFunc) -> RatFunc {
        self.mul_ref(o)
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, o: RatFunc) -> RatFunc {
        self.add_ref(&o)
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, o: RatFunc) -> RatFunc {
        self.add_ref(&-o)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, o: RatFunc) -> RatFunc {
        self.mul_ref(&o)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl From<Rational> for RatFunc {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl From<QPoly> for RatFunc {
    fn from(p: QPoly) -> Self {
        Self::from_poly(p)
    }
}
