//! A three-square decomposition of `(y²+1)(y²+a)(y²+b)(y²+c)` for
//!
//! ```text
//! a = 1 + α²(1+β²)(1+γ²),  b = 1 + α²(1+β²)²(1+γ²),  c = 1 + α²(1+β²)(1+γ²)²
//! ```
//!
//! checked by full expansion, symbolically in `(α, β, γ, y)` after clearing
//! the `α` denominators, or at rational values of `(α, β, γ)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use super::FamilyError;
use crate::exact::rational::rat;
use crate::{QPoly, Rational};

const VARS: [&str; 4] = ["alpha", "beta", "gamma", "y"];

/// Sparse polynomial in `(α, β, γ, y)` with no zero coefficients stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiPoly {
    terms: BTreeMap<[u32; 4], Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term([0; 4], c);
        p
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    /// Variable `i` in the order `α, β, γ, y`.
    pub fn var(i: usize) -> Self {
        let mut e = [0; 4];
        e[i] = 1;
        let mut p = MultiPoly::zero();
        p.add_term(e, Rational::one());
        p
    }

    fn add_term(&mut self, e: [u32; 4], c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 4], &Rational)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(MultiPoly::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = MultiPoly::zero();
        for (e, v) in &self.terms {
            out.add_term(*e, v * c);
        }
        out
    }

    /// Substitute `(α, β, γ)` and return the polynomial in `y`.
    pub fn specialize(&self, alpha: &Rational, beta: &Rational, gamma: &Rational) -> QPoly {
        let vals = [alpha, beta, gamma];
        let mut coeffs: Vec<Rational> = Vec::new();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (x, k) in vals.iter().zip(e) {
                v *= num_traits::pow((*x).clone(), *k as usize);
            }
            let k = e[3] as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            coeffs[k] += v;
        }
        QPoly::new(coeffs)
    }

    fn term_text(e: &[u32; 4], c: &Rational) -> String {
        let mut parts = vec![c.to_string()];
        for (name, k) in VARS.iter().zip(e) {
            match k {
                0 => {}
                1 => parts.push((*name).to_string()),
                _ => parts.push(format!("{name}^{k}")),
            }
        }
        parts.join("*")
    }

    /// The first term in exponent order, as text.
    pub fn leading_text(&self) -> Option<String> {
        self.terms.iter().next_back().map(|(e, c)| MultiPoly::term_text(e, c))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let texts: Vec<String> = self.terms.iter().rev().map(|(e, c)| MultiPoly::term_text(e, c)).collect();
        f.write_str(&texts.join(" + "))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]];
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

/// Arithmetic the two sides are written in, so one formula serves both
/// modes.
trait Ring: Clone {
    fn num(n: i64) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn sq(&self) -> Self {
        self.mul(self)
    }
}

impl Ring for MultiPoly {
    fn num(n: i64) -> Self {
        MultiPoly::constant(rat(n))
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

impl Ring for QPoly {
    fn num(n: i64) -> Self {
        QPoly::constant(rat(n))
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

/// `α²·P` and `α²·(S₁² + S₂² + S₃²)`; multiplying by `α²` removes the
/// `1/α` in the first two squares.
fn sides<R: Ring>(alpha: &R, beta: &R, gamma: &R, y: &R) -> (R, R) {
    let one = R::num(1);
    let al2 = alpha.sq();
    let b1 = one.add(&beta.sq());
    let g1 = one.add(&gamma.sq());
    let am1 = al2.mul(&b1).mul(&g1);
    let a = one.add(&am1);
    let b = one.add(&am1.mul(&b1));
    let c = one.add(&am1.mul(&g1));
    let y2 = y.sq();
    let yp1 = y2.add(&one);
    let ya = y2.add(&a);
    let lhs = al2.mul(&yp1).mul(&ya).mul(&y2.add(&b)).mul(&y2.add(&c));

    let bg = beta.mul(gamma);
    let al2bg = al2.mul(&bg);
    let one_m_bg = one.sub(&bg);
    let bpg = beta.add(gamma);
    // α·S₁ and α·S₂
    let s1 = am1.mul(y).mul(&ya).add(&al2bg.mul(&one_m_bg.mul(y).add(&bpg)).mul(&yp1));
    let s2 = am1.mul(&ya).add(&al2bg.mul(&one_m_bg.sub(&bpg.mul(y))).mul(&yp1));
    let s3 = yp1.mul(&ya.sub(&bg.mul(&am1)));
    let rhs = s1.sq().add(&s2.sq()).add(&al2.mul(&s3.sq()));
    (lhs, rhs)
}

/// Which form of the identity to check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentityArgs {
    Symbolic,
    Specialized { alpha: Rational, beta: Rational, gamma: Rational },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub holds: bool,
    /// Number of monomials in the expanded left side.
    pub terms: usize,
    /// Leading monomial of `lhs - rhs` when the identity fails.
    pub counterexample: Option<String>,
}

/// Both sides at rational `(α, β, γ)`, multiplied by `α²`.
pub fn identity_sides(alpha: &Rational, beta: &Rational, gamma: &Rational) -> Result<(QPoly, QPoly), FamilyError> {
    if alpha.is_zero() {
        return Err(FamilyError::AlphaZero);
    }
    let c = |r: &Rational| QPoly::constant(r.clone());
    Ok(sides(&c(alpha), &c(beta), &c(gamma), &QPoly::var()))
}

pub fn verify_sos3_identity(args: &IdentityArgs) -> Result<IdentityOutcome, FamilyError> {
    match args {
        IdentityArgs::Symbolic => {
            let v = MultiPoly::var;
            let (lhs, rhs) = sides(&v(0), &v(1), &v(2), &v(3));
            let diff = &lhs - &rhs;
            Ok(IdentityOutcome { holds: diff.is_zero(), terms: lhs.len(), counterexample: diff.leading_text() })
        }
        IdentityArgs::Specialized { alpha, beta, gamma } => {
            let (lhs, rhs) = identity_sides(alpha, beta, gamma)?;
            let diff = &lhs - &rhs;
            let counterexample = (!diff.is_zero()).then(|| format!("{}*y^{}", diff.lc(), diff.deg()));
            Ok(IdentityOutcome {
                holds: diff.is_zero(),
                terms: lhs.coeffs().iter().filter(|c| !c.is_zero()).count(),
                counterexample,
            })
        }
    }
}
