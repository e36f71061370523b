//! Exact arithmetic foundation: rationals, dense polynomials, squarefree
//! machinery, resultants and real-root counting.

pub mod field;
pub mod modular;
pub mod poly;
pub mod qpoly;
pub mod rational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("zero input")]
    ZeroInput,
    #[error("input polynomial is not squarefree")]
    NotSquarefree,
    #[error("parse error at byte {position} in {input:?}: {message}")]
    Parse { input: String, position: usize, message: String },
}
