//! The three-parameter family `P(x², y²)` built from `(η, ω, ρ)`, its
//! hypothesis suite, and the end-to-end certificate.
//!
//! With `w = ω² - η²` and `b₁ = (ρ² - η²)/w - w/4`:
//!
//! ```text
//! B(x) = (x + b₁)² - η²,   C(x) = 2(x + b₁) + w - 1,
//! P(x², y²) = (y² + 1)(y² + C(x²))(y⁴ + (1 + C(x²))y² + B(x²)).
//! ```

mod certificate;
mod checks;
mod descent_cert;
mod hypotheses;
mod identity;
mod torsion;

use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::antineutral::{build_tilde, tilde_factors, AntineutralError, TildeModel};
use crate::exact::rational::{parse_rational, rat};
use crate::exact::ExactError;
use crate::funcfield::RatFunc;
use crate::{PolyY, QPoly, Rational};

pub use certificate::{prove_not_sos3, Certificate, ParamsText, Verdict};
pub use checks::{Check, CheckStatus};
pub use descent_cert::descent_certificate;
pub use hypotheses::{check_nonsquares, check_nonvanishing, check_positivity};
pub use identity::{identity_sides, verify_sos3_identity, IdentityArgs, IdentityOutcome, MultiPoly};
pub use torsion::torsion_certificate;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("|omega| = |eta| = {0}: the family is undefined")]
    Degenerate(Rational),
    #[error("alpha must be nonzero in specialized mode")]
    AlphaZero,
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Antineutral(#[from] AntineutralError),
}

/// Parameters `(η, ω, ρ)`. Only `build_family` enforces `|ω| ≠ |η|`, so a
/// degenerate triple still yields a certificate naming the failure.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    pub eta: Rational,
    pub omega: Rational,
    pub rho: Rational,
}

impl FamilyParams {
    pub fn new(eta: Rational, omega: Rational, rho: Rational) -> Self {
        FamilyParams { eta, omega, rho }
    }

    pub fn from_ints(eta: i64, omega: i64, rho: i64) -> Self {
        FamilyParams::new(rat(eta), rat(omega), rat(rho))
    }

    /// Parse three rational literals.
    pub fn parse(eta: &str, omega: &str, rho: &str) -> Result<Self, ExactError> {
        Ok(FamilyParams::new(parse_rational(eta)?, parse_rational(omega)?, parse_rational(rho)?))
    }

    /// The reference member `(23, 34, 547)`.
    pub fn reference() -> Self {
        FamilyParams::from_ints(23, 34, 547)
    }

    /// `w = ω² - η²`.
    pub fn w(&self) -> Rational {
        &self.omega * &self.omega - &self.eta * &self.eta
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(eta, omega, rho) = ({}, {}, {})", self.eta, self.omega, self.rho)
    }
}

/// A built family member. The tilde model is computed on first use.
#[derive(Debug)]
pub struct FamilyInstance {
    params: FamilyParams,
    b1: Rational,
    b: QPoly,
    c: QPoly,
    tilde: OnceLock<Result<TildeModel, AntineutralError>>,
}

pub fn build_family(p: &FamilyParams) -> Result<FamilyInstance, FamilyError> {
    let w = p.w();
    if w.is_zero() {
        return Err(FamilyError::Degenerate(p.eta.abs()));
    }
    let eta2 = &p.eta * &p.eta;
    let b1 = (&p.rho * &p.rho - &eta2) / &w - &w / rat(4);
    let shift = QPoly::new(vec![b1.clone(), Rational::one()]);
    let b = &(&shift * &shift) - &QPoly::constant(eta2);
    let c = &shift.scale(&rat(2)) + &QPoly::constant(&w - Rational::one());
    Ok(FamilyInstance { params: p.clone(), b1, b, c, tilde: OnceLock::new() })
}

fn at_x2(p: &QPoly) -> QPoly {
    p.compose(&QPoly::monomial(Rational::one(), 2))
}

impl FamilyInstance {
    pub fn params(&self) -> &FamilyParams {
        &self.params
    }

    pub fn b1(&self) -> &Rational {
        &self.b1
    }

    pub fn b(&self) -> &QPoly {
        &self.b
    }

    pub fn c(&self) -> &QPoly {
        &self.c
    }

    /// `B(x²)`.
    pub fn b_x2(&self) -> QPoly {
        at_x2(&self.b)
    }

    /// `C(x²)`.
    pub fn c_x2(&self) -> QPoly {
        at_x2(&self.c)
    }

    /// `b₁` read back from the constant term of `C`.
    pub fn b1_from_c(&self) -> Rational {
        (self.c.coeff(0) - self.params.w() + Rational::one()) / rat(2)
    }

    /// The factors `y² + 1`, `y² + C(x²)`, `y⁴ + (1 + C(x²))y² + B(x²)` of
    /// `P(x², y²)` over ℚ(x).
    pub fn p_factors(&self) -> [PolyY; 3] {
        let (b, c) = (RatFunc::from_poly(self.b_x2()), RatFunc::from_poly(self.c_x2()));
        let one = RatFunc::one();
        let z = RatFunc::zero();
        [
            PolyY::new(vec![one.clone(), z.clone(), one.clone()]),
            PolyY::new(vec![c.clone(), z.clone(), one.clone()]),
            PolyY::new(vec![b, z.clone(), &one + &c, z, one]),
        ]
    }

    /// `Q(T) = (T + C(x²))(T² + (1 + C(x²))T + B(x²))`.
    pub fn q(&self) -> PolyY {
        let (b, c) = (RatFunc::from_poly(self.b_x2()), RatFunc::from_poly(self.c_x2()));
        let lin = PolyY::new(vec![c.clone(), RatFunc::one()]);
        let quad = PolyY::new(vec![b, &RatFunc::one() + &c, RatFunc::one()]);
        &lin * &quad
    }

    /// The odd model of the curve `z² + P(x², y²) = 0`.
    pub fn tilde(&self) -> Result<&TildeModel, FamilyError> {
        self.tilde.get_or_init(|| build_tilde(&self.q())).as_ref().map_err(|e| FamilyError::Antineutral(e.clone()))
    }

    /// `g₁, g₂, g₃` with `B(x²)`, `C(x²)` as inputs.
    pub fn tilde_factors(&self) -> Result<[PolyY; 3], FamilyError> {
        Ok(tilde_factors(&RatFunc::from_poly(self.b_x2()), &RatFunc::from_poly(self.c_x2()))?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::ratio;
    use crate::text::{parse_qpoly, render_poly};

    #[test]
    fn reference_instance() {
        let inst = build_family(&FamilyParams::reference()).unwrap();
        assert_eq!(inst.b(), &parse_qpoly("x^2 + 14063/22*x + 196743825/1936").unwrap());
        assert_eq!(inst.c(), &parse_qpoly("2x + 27835/22").unwrap());
        assert_eq!(inst.b1(), &ratio(14063, 44));
        assert_eq!(inst.b1_from_c(), ratio(14063, 44));
        assert_eq!(render_poly(inst.c(), "x"), "2*x + 27835/22");
    }

    #[test]
    fn degenerate_parameters() {
        let err = build_family(&FamilyParams::from_ints(1, 1, 1)).unwrap_err();
        assert_eq!(err, FamilyError::Degenerate(ratio(1, 1)));
        assert!(build_family(&FamilyParams::from_ints(-3, 3, 1)).is_err());
    }

    #[test]
    fn p_factors_multiply_to_q_shape() {
        let inst = build_family(&FamilyParams::from_ints(1, 4, 2)).unwrap();
        let [f0, f1, f2] = inst.p_factors();
        // P(x², y²) = (y² + 1) Q(y²)
        let y2 = PolyY::monomial(RatFunc::one(), 2);
        assert_eq!(&f1 * &f2, inst.q().compose(&y2));
        assert_eq!(f0, &y2 + &PolyY::one());
    }
}
