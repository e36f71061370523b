//! 2-descent tools: the norm-composed Schaefer map, the elliptic 2-isogeny
//! and Richelot duals, and the four curves the family's rank argument runs on.

pub mod isogeny;
pub mod schaefer;
pub mod split;

use thiserror::Error;

use crate::exact::ExactError;
use crate::funcfield::FuncFieldError;
use crate::jacobian::JacobianError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DescentError {
    #[error("factors do not multiply to the curve polynomial")]
    BadFactorization,
    #[error("factor {0} is not monic")]
    FactorNotMonic(String),
    #[error("u shares a factor with f and no 2-torsion shift restores coprimality")]
    NotCoprime,
    #[error("degenerate curve: {0}")]
    DegenerateCurve(String),
    #[error("point is not on the curve")]
    PointNotOnCurve,
    #[error("degree violation: {0}")]
    DegreeViolation(String),
    #[error("the coefficient determinant vanishes")]
    SingularDelta,
    #[error("{curve} is not squarefree: {factor} vanishes")]
    SquarefreeViolation { curve: &'static str, factor: String },
    #[error("no affine change of variable matches the two quintics")]
    NoAffineMatch,
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    FuncField(#[from] FuncFieldError),
    #[error(transparent)]
    Jacobian(#[from] JacobianError),
}

pub use isogeny::{
    elliptic_dual, elliptic_gamma, identify_quintic, richelot_dual, AffineMatch, EllipticPoint, RichelotDual,
};
pub use schaefer::{xi, xi_is_2torsion_image, ClassTuple, SchaeferContext};
pub use split::{split_family, FamilyCurves, SplitCurve};
