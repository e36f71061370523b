//! Sums of two squares in ℝ(x).

use num_traits::Zero;

use super::{FuncFieldError, RatFunc};
use crate::exact::rational::sign;

/// Whether `f` is nonnegative on ℝ wherever it is defined, equivalently a
/// sum of two squares in ℝ(x).
///
/// `f` has the sign of `num * den`; that product is `unit * odd * square`,
/// so `f ≥ 0` iff `unit > 0` and the odd-multiplicity part has no real root.
pub fn is_psd(f: &RatFunc) -> Result<bool, FuncFieldError> {
    if f.is_zero() {
        return Err(FuncFieldError::ZeroInput);
    }
    let sqf = f.num_times_den().squarefree_decomposition()?;
    if sign(&sqf.unit) < 0 {
        return Ok(false);
    }
    for (part, m) in &sqf.parts {
        if m % 2 == 1 && part.sturm_count_real_roots()? > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}
