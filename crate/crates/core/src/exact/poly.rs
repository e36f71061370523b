//! Dense univariate polynomials over an exact field.

use std::ops::{Add, Mul, Neg, Sub};

use super::field::Field;
use super::ExactError;

/// Dense polynomial; `coeffs[i]` multiplies `X^i`. The top coefficient is
/// never zero, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![F::one()] }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// The variable `X`.
    pub fn var() -> Self {
        Poly { coeffs: vec![F::zero(), F::one()] }
    }

    /// `c * X^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); k];
        coeffs.push(c);
        Poly { coeffs }
    }

    /// Monic linear polynomial `X - r`.
    pub fn linear_root(r: &F) -> Self {
        Poly { coeffs: vec![-r.clone(), F::one()] }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention `deg 0 = -1`.
    pub fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Coefficient of `X^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lc(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    /// Multiply by `X^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![F::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Divide by the leading coefficient; the zero polynomial is returned as is.
    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => Self::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.clone() * &F::from_i64(i as i64)).collect())
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `p(q(X))` by Horner's scheme.
    pub fn compose(&self, q: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Self::constant(c.clone());
        }
        acc
    }

    /// Euclidean division: `self = q * b + r` with `deg r < deg b`.
    pub fn div_rem(&self, b: &Self) -> Result<(Self, Self), ExactError> {
        let db = b.degree().ok_or(ExactError::DivisionByZeroPolynomial)?;
        if self.deg() < b.deg() {
            return Ok((Self::zero(), self.clone()));
        }
        let inv_lc = b.lc().inv().expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        let mut q = vec![F::zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let top = std::mem::replace(&mut r[k + db], F::zero());
            if top.is_zero() {
                continue;
            }
            let t = top * &inv_lc;
            for (j, bj) in b.coeffs[..db].iter().enumerate() {
                if !bj.is_zero() {
                    let cur = std::mem::replace(&mut r[k + j], F::zero());
                    r[k + j] = cur - &(t.clone() * bj);
                }
            }
            q[k] = t;
        }
        r.truncate(db);
        Ok((Self::new(q), Self::new(r)))
    }

    pub fn rem(&self, b: &Self) -> Result<Self, ExactError> {
        Ok(self.div_rem(b)?.1)
    }

    /// Quotient when `b` divides `self` exactly.
    pub fn exact_div(&self, b: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(b).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, a: &Self) -> bool {
        a.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Self, b: &Self) -> Result<Self, ExactError> {
        if a.is_zero() && b.is_zero() {
            return Err(ExactError::BothZero);
        }
        let (mut x, mut y) = (a.monic(), b.monic());
        while !y.is_zero() {
            let r = x.rem(&y)?.monic();
            x = std::mem::replace(&mut y, r);
        }
        Ok(x)
    }

    /// Whether `gcd(a, b) = 1`, trying the field's certificate before Euclid.
    pub fn coprime(a: &Self, b: &Self) -> bool {
        if a.is_zero() || b.is_zero() {
            // gcd(p, 0) = p up to units
            return (a.is_zero() && b.deg() == 0) || (b.is_zero() && a.deg() == 0);
        }
        if a.is_constant() || b.is_constant() || F::certify_coprime(a, b) {
            return true;
        }
        Self::gcd(a, b).is_ok_and(|g| g.is_one())
    }

    /// Whether `self` is squarefree.
    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && Self::coprime(self, &self.derivative())
    }

    /// Extended gcd: `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn xgcd(a: &Self, b: &Self) -> Result<(Self, Self, Self), ExactError> {
        if a.is_zero() && b.is_zero() {
            return Err(ExactError::BothZero);
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let mut s = &s0 - &(&q * &s1);
            let mut t = &t0 - &(&q * &t1);
            // monic remainders keep coefficient growth down over ℚ(x)
            let r = match r.is_zero() {
                true => r,
                false => {
                    let inv = r.lc().inv().expect("nonzero");
                    s = s.scale(&inv);
                    t = t.scale(&inv);
                    r.scale(&inv)
                }
            };
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = r0.lc().inv().expect("nonzero gcd");
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    /// Resultant with the Sylvester convention
    /// `res(a, b) = lc(a)^deg(b) * prod_{a(r)=0} b(r)`.
    pub fn resultant(a: &Self, b: &Self) -> Result<F, ExactError> {
        if a.is_zero() || b.is_zero() {
            return Err(ExactError::ZeroInput);
        }
        // res(a, b) = (-1)^(deg a * deg b) res(b, a) and
        // res(b, a) = lc(b)^(deg a - deg r) res(b, r) for r = a mod b.
        let (mut a, mut b) = (a.clone(), b.clone());
        let mut acc = F::one();
        loop {
            let (da, db) = (a.deg() as usize, b.deg() as usize);
            if db == 0 {
                return Ok(acc * &pow_field(&b.lc(), da));
            }
            if da == 0 {
                return Ok(acc * &pow_field(&a.lc(), db));
            }
            let r = a.rem(&b)?;
            if r.is_zero() {
                return Ok(F::zero());
            }
            let dr = r.deg() as usize;
            if (da * db) % 2 == 1 {
                acc = -acc;
            }
            acc = acc * &pow_field(&b.lc(), da - dr);
            a = std::mem::replace(&mut b, r);
        }
    }

    /// Apply `f` to every coefficient.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

/// `c^n` for a field element.
pub fn pow_field<F: Field>(c: &F, mut n: usize) -> F {
    let mut base = c.clone();
    let mut acc = F::one();
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * &base;
        }
        n >>= 1;
        if n > 0 {
            base = base.clone() * &base;
        }
    }
    acc
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = long.coeffs.clone();
        for (o, s) in out.iter_mut().zip(&short.coeffs) {
            let cur = std::mem::replace(o, F::zero());
            *o = cur + s;
        }
        Poly::new(out)
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.clone() - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::new(out)
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if rhs.coeffs.len() == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.coeffs.len() == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let cur = std::mem::replace(&mut out[i + j], F::zero());
                out[i + j] = cur + &(a.clone() * b);
            }
        }
        Poly::new(out)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr for Poly<F> {
            type Output = Poly<F>;
            fn $m(self, rhs: Poly<F>) -> Poly<F> {
                (&self).$m(&rhs)
            }
        }
        impl<'a, F: Field> $tr<&'a Poly<F>> for Poly<F> {
            type Output = Poly<F>;
            fn $m(self, rhs: &'a Poly<F>) -> Poly<F> {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, Rational};

    fn p(cs: &[i64]) -> Poly<Rational> {
        Poly::new(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn division_examples() {
        let (q, r) = p(&[-1, 0, 1]).div_rem(&p(&[-1, 1])).unwrap();
        assert_eq!((q, r), (p(&[1, 1]), Poly::zero()));
        let (q, r) = p(&[0, 0, 1]).div_rem(&p(&[0, 1])).unwrap();
        assert_eq!((q, r), (p(&[0, 1]), Poly::zero()));
        assert!(matches!(p(&[1]).div_rem(&Poly::zero()), Err(ExactError::DivisionByZeroPolynomial)));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(Poly::gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(Poly::gcd(&p(&[0, 1]), &p(&[1, 1])).unwrap(), p(&[1]));
        assert!(matches!(Poly::<Rational>::gcd(&Poly::zero(), &Poly::zero()), Err(ExactError::BothZero)));
    }

    #[test]
    fn xgcd_bezout() {
        let a = p(&[-6, 11, -6, 1]);
        let b = p(&[-2, 1, 1]);
        let (g, s, t) = Poly::xgcd(&a, &b).unwrap();
        assert_eq!(g, p(&[-1, 1]));
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(Poly::resultant(&p(&[-1, 1]), &p(&[-2, 1])).unwrap(), rat(-1));
        assert_eq!(Poly::resultant(&p(&[0, 1]), &p(&[0, 1])).unwrap(), rat(0));
        assert_eq!(Poly::resultant(&p(&[-2, 0, 1]), &p(&[0, 1])).unwrap(), rat(-2));
    }

    #[test]
    fn compose_and_pow() {
        let x1 = p(&[1, 1]);
        assert_eq!(x1.pow(2), p(&[1, 2, 1]));
        assert_eq!(p(&[0, 0, 1]).compose(&x1), p(&[1, 2, 1]));
    }
}
