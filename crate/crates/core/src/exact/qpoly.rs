//! Algorithms specific to ℚ[x]: squarefree decomposition, square tests,
//! Sturm sequences and integer normalization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::poly::Poly;
use super::rational::{denominators_lcm, rational_is_square, rational_sqrt, sign, Rational};
use super::ExactError;

/// Polynomial over ℚ.
pub type QPoly = Poly<Rational>;

/// `unit * prod factor^multiplicity`, factors monic, squarefree and pairwise coprime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub unit: Rational,
    pub parts: Vec<(QPoly, u32)>,
}

impl SquarefreeDecomposition {
    /// Multiply the decomposition back out.
    pub fn expand(&self) -> QPoly {
        self.parts.iter().fold(QPoly::constant(self.unit.clone()), |acc, (f, m)| &acc * &f.pow(*m))
    }
}

/// Field over which squareness of a polynomial is decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SquareMode {
    /// Squares in ℂ(x): only multiplicities matter.
    OverC,
    /// Squares in ℚ(x): the unit must also be a rational square.
    OverQ,
}

impl QPoly {
    /// Yun's algorithm.
    pub fn squarefree_decomposition(&self) -> Result<SquarefreeDecomposition, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroInput);
        }
        let unit = self.lc();
        let a = self.monic();
        let mut parts = Vec::new();
        if a.is_constant() {
            return Ok(SquarefreeDecomposition { unit, parts });
        }
        let da = a.derivative();
        let g = Poly::gcd(&a, &da)?;
        let mut b = a.exact_div(&g).expect("gcd divides");
        let c = da.exact_div(&g).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut mult = 1u32;
        while !b.is_one() {
            let ai = Poly::gcd(&b, &d)?;
            b = b.exact_div(&ai).expect("gcd divides");
            let ci = d.exact_div(&ai).expect("gcd divides");
            d = &ci - &b.derivative();
            if !ai.is_one() {
                parts.push((ai, mult));
            }
            mult += 1;
        }
        Ok(SquarefreeDecomposition { unit, parts })
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> Result<QPoly, ExactError> {
        let sqf = self.squarefree_decomposition()?;
        Ok(sqf.parts.iter().fold(QPoly::one(), |acc, (f, _)| &acc * f))
    }

    /// Product of the factors of odd multiplicity, monic.
    pub fn odd_part(&self) -> Result<QPoly, ExactError> {
        let sqf = self.squarefree_decomposition()?;
        Ok(sqf.parts.iter().filter(|(_, m)| m % 2 == 1).fold(QPoly::one(), |acc, (f, _)| &acc * f))
    }

    /// Is `self` a square in ℂ(x) or ℚ(x)?
    pub fn is_perfect_square(&self, mode: SquareMode) -> Result<bool, ExactError> {
        let sqf = self.squarefree_decomposition()?;
        let even = sqf.parts.iter().all(|(_, m)| m % 2 == 0);
        Ok(even && (mode == SquareMode::OverC || rational_is_square(&sqf.unit)))
    }

    /// Exact square root in ℚ[x], if `self` is a square there.
    pub fn sqrt(&self) -> Option<QPoly> {
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        let sqf = self.squarefree_decomposition().ok()?;
        if sqf.parts.iter().any(|(_, m)| m % 2 == 1) {
            return None;
        }
        let unit = rational_sqrt(&sqf.unit)?;
        Some(sqf.parts.iter().fold(QPoly::constant(unit), |acc, (f, m)| &acc * &f.pow(m / 2)))
    }

    /// Number of distinct real roots of a squarefree polynomial.
    pub fn sturm_count_real_roots(&self) -> Result<usize, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroInput);
        }
        if !self.is_squarefree() {
            return Err(ExactError::NotSquarefree);
        }
        let chain = self.sturm_chain();
        let at_pos: Vec<i8> = chain.iter().map(|p| sign(&p.lc())).collect();
        let at_neg: Vec<i8> =
            chain.iter().map(|p| if p.deg() % 2 == 0 { sign(&p.lc()) } else { -sign(&p.lc()) }).collect();
        Ok(variations(&at_neg) - variations(&at_pos))
    }

    /// Sturm chain; members are rescaled by positive constants, which
    /// preserves every sign.
    pub fn sturm_chain(&self) -> Vec<QPoly> {
        let normalize = |p: QPoly| {
            let l = p.lc().abs();
            if l.is_zero() {
                p
            } else {
                p.scale(&l.recip())
            }
        };
        let mut chain = vec![normalize(self.clone()), normalize(self.derivative())];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].rem(&chain[n - 1]).expect("nonzero divisor");
            if r.is_zero() {
                break;
            }
            chain.push(normalize(-r));
        }
        chain
    }

    /// True iff `self(t) > 0` for every real `t`.
    pub fn is_positive_definite(&self) -> Result<bool, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroInput);
        }
        if sign(&self.lc()) < 0 {
            return Ok(false);
        }
        Ok(self.squarefree_part()?.sturm_count_real_roots()? == 0)
    }

    /// `(c, p)` with `self = c * p`, `p` having coprime integer coefficients
    /// and positive leading coefficient.
    pub fn integer_primitive(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let l = denominators_lcm(self.coeffs());
        let ints: Vec<BigInt> =
            self.coeffs().iter().map(|c| (c * &Rational::from_integer(l.clone())).to_integer()).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
        (Rational::new(g, l), prim)
    }

    /// Monic gcd by evaluation at a large integer (the GCDHEU heuristic),
    /// verified by exact division; falls back to Euclid after a few tries.
    pub fn gcd_heuristic(a: &QPoly, b: &QPoly) -> Result<QPoly, ExactError> {
        if a.is_zero() || b.is_zero() || a.is_constant() || b.is_constant() {
            return Poly::gcd(a, b);
        }
        let (_, pa) = a.integer_primitive();
        let (_, pb) = b.integer_primitive();
        let norm = |cs: &[BigInt]| cs.iter().map(|c| c.abs()).max().unwrap_or_default();
        let mut xi: BigInt = norm(&pa).min(norm(&pb)) * 2 + 29;
        let (qa, qb) = (QPoly::from_integers(&pa), QPoly::from_integers(&pb));
        for _ in 0..6 {
            let eval = |cs: &[BigInt]| cs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &xi + c);
            let mut h = eval(&pa).gcd(&eval(&pb));
            let half = &xi / 2;
            let mut digits = Vec::new();
            while !h.is_zero() {
                let mut d = h.mod_floor(&xi);
                if d > half {
                    d -= &xi;
                }
                h = (h - &d) / &xi;
                digits.push(d);
            }
            let g = QPoly::from_integers(&digits);
            if !g.is_zero() {
                let (_, prim) = g.integer_primitive();
                let g = QPoly::from_integers(&prim).monic();
                if g.divides(&qa) && g.divides(&qb) {
                    return Ok(g);
                }
            }
            xi = xi * 73794 / 27011;
        }
        Poly::gcd(a, b)
    }

    /// Rebuild from integer coefficients.
    pub fn from_integers(cs: &[BigInt]) -> QPoly {
        Poly::new(cs.iter().map(|c| Rational::from_integer(c.clone())).collect())
    }
}

fn variations(signs: &[i8]) -> usize {
    let nz: Vec<i8> = signs.iter().copied().filter(|s| *s != 0).collect();
    nz.windows(2).filter(|w| w[0] != w[1]).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn p(cs: &[i64]) -> QPoly {
        Poly::new(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn yun_examples() {
        let d = p(&[1, 2, 1]).squarefree_decomposition().unwrap();
        assert_eq!(d.unit, rat(1));
        assert_eq!(d.parts, vec![(p(&[1, 1]), 2)]);
        let d = p(&[0, 4]).squarefree_decomposition().unwrap();
        assert_eq!((d.unit.clone(), d.parts.clone()), (rat(4), vec![(p(&[0, 1]), 1)]));
        let d = p(&[0, -1, 0, 1]).squarefree_decomposition().unwrap();
        assert_eq!(d.parts, vec![(p(&[0, -1, 0, 1]), 1)]);
        assert!(matches!(QPoly::zero().squarefree_decomposition(), Err(ExactError::ZeroInput)));
    }

    #[test]
    fn yun_mixed_multiplicities() {
        // (x-1)(x+2)^2 x^3 * 5
        let f = &(&p(&[-1, 1]) * &p(&[2, 1]).pow(2)) * &p(&[0, 5]).pow(3);
        let d = f.squarefree_decomposition().unwrap();
        assert_eq!(d.expand(), f);
        let mults: Vec<u32> = d.parts.iter().map(|(_, m)| *m).collect();
        assert_eq!(mults, vec![1, 2, 3]);
    }

    #[test]
    fn square_modes() {
        assert!(p(&[1, 2, 1]).is_perfect_square(SquareMode::OverQ).unwrap());
        assert!(p(&[0, 0, 2]).is_perfect_square(SquareMode::OverC).unwrap());
        assert!(!p(&[0, 0, 2]).is_perfect_square(SquareMode::OverQ).unwrap());
    }

    #[test]
    fn sturm_examples() {
        assert_eq!(p(&[1, 0, 1]).sturm_count_real_roots().unwrap(), 0);
        assert_eq!(p(&[-2, 0, 1]).sturm_count_real_roots().unwrap(), 2);
        assert_eq!(p(&[0, -1, 0, 1]).sturm_count_real_roots().unwrap(), 3);
        assert!(matches!(p(&[1, 2, 1]).sturm_count_real_roots(), Err(ExactError::NotSquarefree)));
    }

    #[test]
    fn heuristic_gcd_matches_euclid() {
        let a = &(&p(&[-1, 1]) * &p(&[2, 0, 3])) * &p(&[7, 1]).pow(2);
        let b = &(&p(&[-1, 1]) * &p(&[7, 1])) * &p(&[5, -4, 1]);
        assert_eq!(QPoly::gcd_heuristic(&a, &b).unwrap(), Poly::gcd(&a, &b).unwrap());
        assert_eq!(QPoly::gcd_heuristic(&p(&[1, 1]), &p(&[2, 1])).unwrap(), QPoly::one());
    }

    #[test]
    fn integer_primitive_roundtrip() {
        let f = Poly::new(vec![Rational::new(3.into(), 4.into()), Rational::new((-3).into(), 2.into())]);
        let (c, prim) = f.integer_primitive();
        assert_eq!(prim, vec![BigInt::from(-1), BigInt::from(2)]);
        assert_eq!(QPoly::from_integers(&prim).scale(&c), f);
    }
}
