//! Rational 2-torsion from a certified factorization of `f`.

use std::sync::Arc;

use super::{Curve, JacobianError, MumfordDivisor};
use crate::antineutral::tilde_factors;
use crate::exact::field::Field;
use crate::exact::poly::Poly;
use crate::exact::qpoly::SquareMode;
use crate::funcfield::{is_square, RatFunc};
use crate::PolyY;

/// Why a factor of `f` is irreducible over ℚ(x).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorCertificate {
    Linear,
    /// Monic quadratic whose discriminant is not a square in ℚ(x).
    Quadratic,
    /// The quartic factor of the tilde model built from `b` and `c`; it is
    /// irreducible when `b`, `c` and `(1+c)² - 4b` are not squares in ℂ(x).
    TildeQuartic {
        b: RatFunc,
        c: RatFunc,
    },
}

#[derive(Clone, Debug)]
pub struct CertifiedFactor {
    pub poly: PolyY,
    pub certificate: FactorCertificate,
}

impl CertifiedFactor {
    /// Factor of degree at most two, certificate chosen by degree.
    pub fn low_degree(poly: PolyY) -> Self {
        let certificate = if poly.deg() == 1 { FactorCertificate::Linear } else { FactorCertificate::Quadratic };
        CertifiedFactor { poly, certificate }
    }

    pub fn tilde_quartic(poly: PolyY, b: RatFunc, c: RatFunc) -> Self {
        CertifiedFactor { poly, certificate: FactorCertificate::TildeQuartic { b, c } }
    }

    fn verify(&self) -> Result<(), JacobianError> {
        let bad = |m: &str| Err(JacobianError::BadFactorization(format!("{}: {m}", self.poly)));
        if !self.poly.is_monic() {
            return bad("factor is not monic");
        }
        match &self.certificate {
            FactorCertificate::Linear if self.poly.deg() == 1 => Ok(()),
            FactorCertificate::Quadratic if self.poly.deg() == 2 => {
                let (c, b) = (self.poly.coeff(0), self.poly.coeff(1));
                let disc = &b * &b - &(RatFunc::from_i64(4) * &c);
                if is_square(&disc, SquareMode::OverQ) {
                    bad("discriminant is a square, the quadratic splits")
                } else {
                    Ok(())
                }
            }
            FactorCertificate::TildeQuartic { b, c } => {
                let [_, _, g3] = tilde_factors(b, c).map_err(|e| JacobianError::BadFactorization(e.to_string()))?;
                if g3 != self.poly {
                    return bad("does not match the tilde quartic of the given B, C");
                }
                let one = RatFunc::from_i64(1);
                let opc = &one + c;
                let disc = &(&opc * &opc) - &(RatFunc::from_i64(4) * b);
                for (name, w) in [("B", b), ("C", c), ("(1+C)^2-4B", &disc)] {
                    if is_square(w, SquareMode::OverC) {
                        return bad(&format!("{name} is a square in C(x), no irreducibility certificate"));
                    }
                }
                Ok(())
            }
            _ => bad("certificate does not match the degree"),
        }
    }
}

/// All `<u, 0>` with `u` a product of a subset of `factors` and
/// `deg u ≤ g`, identity first. Only the product `∏ factors = f` is checked,
/// so this lists the rational 2-torsion exactly when the factors are
/// irreducible.
pub fn two_torsion_subsets<F: Field>(
    curve: &Arc<Curve<F>>,
    factors: &[Poly<F>],
) -> Result<Vec<MumfordDivisor<F>>, JacobianError> {
    let product = factors.iter().fold(Poly::one(), |acc, p| &acc * p);
    if &product != curve.f() {
        return Err(JacobianError::BadFactorization("product of factors differs from f".into()));
    }
    let g = curve.genus() as isize;
    let mut out = Vec::new();
    for mask in 0u32..(1 << factors.len()) {
        let u =
            factors.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(Poly::one(), |acc, (_, p)| &acc * p);
        if u.deg() <= g {
            out.push(MumfordDivisor::new(curve, u, Poly::zero())?);
        }
    }
    Ok(out)
}

/// The rational 2-torsion subgroup, `(ℤ/2)^(k-1)` for `k` certified
/// irreducible factors. Refuses when a certificate fails.
pub fn two_torsion(
    curve: &Arc<Curve<RatFunc>>,
    factors: &[CertifiedFactor],
) -> Result<Vec<MumfordDivisor<RatFunc>>, JacobianError> {
    for f in factors {
        f.verify()?;
    }
    let polys: Vec<PolyY> = factors.iter().map(|f| f.poly.clone()).collect();
    // f is squarefree, so the factors are automatically pairwise coprime
    two_torsion_subsets(curve, &polys)
}
