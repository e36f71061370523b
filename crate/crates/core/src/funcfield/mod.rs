//! The rational function field ℚ(x): fractions, places and valuations,
//! square classes, residue equivalence, and real positivity.

pub mod place;
pub mod positivity;
pub mod ratfunc;
pub mod square_class;

use thiserror::Error;

use crate::exact::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FuncFieldError {
    #[error("zero input")]
    ZeroInput,
    #[error("place prime must be monic: {0}")]
    NotMonic(String),
    #[error("place prime is reducible or of unsupported degree: {0}")]
    NotIrreducible(String),
    #[error("residue field of {0} is not Q")]
    UnsupportedPlace(String),
    #[error("argument has nonzero valuation {valuation} at {place}")]
    NonzeroValuation { place: String, valuation: i64 },
    #[error("the quadratic parameter is a square in Q(x)")]
    DeltaIsSquare,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

pub use place::{equiv_mod_place, valuation, Place};
pub use positivity::is_psd;
pub use ratfunc::RatFunc;
pub use square_class::{is_square, quad_ext_square_test, ratfunc_sqrt, SquareClass};
