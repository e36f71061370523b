//! Odd-degree hyperelliptic curves `t² = f(s)` and their Jacobians in
//! Mumford representation, with Cantor's group law.

pub mod cantor;
pub mod curve;
pub mod divisor;
pub mod torsion;

use thiserror::Error;

use crate::exact::ExactError;
use crate::funcfield::FuncFieldError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JacobianError {
    #[error("curve polynomial is not monic")]
    NotMonic,
    #[error("curve polynomial has even degree {0}")]
    EvenDegree(usize),
    #[error("curve polynomial is not squarefree")]
    NotSquarefree,
    #[error("Mumford u is not monic")]
    UNotMonic,
    #[error("Mumford degree condition violated: deg v = {deg_v}, deg u = {deg_u}")]
    DegreeViolation { deg_u: isize, deg_v: isize },
    #[error("u does not divide v^2 - f")]
    DoesNotDivide,
    #[error("divisors live on different curves")]
    CurveMismatch,
    #[error("bad factorization: {0}")]
    BadFactorization(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    FuncField(#[from] FuncFieldError),
}

pub use curve::Curve;
pub use divisor::MumfordDivisor;
pub use torsion::{two_torsion, two_torsion_subsets, CertifiedFactor, FactorCertificate};
