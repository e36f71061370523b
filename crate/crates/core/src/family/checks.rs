//! Check records and the helpers that build them from exact values.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::exact::rational::{rational_sqrt, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
        })
    }
}

/// One verified statement with the exact value that decides it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub statement: String,
    pub status: CheckStatus,
    pub witness: String,
}

impl Check {
    pub fn new(id: impl Into<String>, statement: impl Into<String>, passed: bool, witness: impl Into<String>) -> Self {
        let status = if passed { CheckStatus::Pass } else { CheckStatus::Fail };
        Check { id: id.into(), statement: statement.into(), status, witness: witness.into() }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    /// A failed check recording an error from a sub-computation.
    pub fn error(id: impl Into<String>, statement: impl Into<String>, err: impl fmt::Display) -> Self {
        Check::new(id, statement, false, format!("error: {err}"))
    }
}

/// `expr != 0`.
pub(crate) fn nonzero(id: &str, expr: &str, value: &Rational) -> Check {
    Check::new(id, format!("{expr} != 0"), !value.is_zero(), format!("{expr} = {value}"))
}

/// `expr > 0`.
pub(crate) fn positive(id: &str, expr: &str, value: &Rational) -> Check {
    Check::new(id, format!("{expr} > 0"), value.is_positive(), format!("{expr} = {value}"))
}

/// `expr` is not a square in ℚ; zero counts as a square.
pub(crate) fn nonsquare(id: &str, expr: &str, value: &Rational) -> Check {
    let witness = match rational_sqrt(value) {
        Some(r) => format!("{expr} = {value} = ({r})^2"),
        None => format!("{expr} = {value}"),
    };
    Check::new(id, format!("{expr} is not a square in Q"), rational_sqrt(value).is_none(), witness)
}
