use std::fmt;
use std::sync::Arc;

use super::{Curve, JacobianError};
use crate::exact::field::Field;
use crate::exact::poly::Poly;
use crate::text::render_poly;

/// Semi-reduced divisor `div(u, v)` on a fixed curve: `u` monic,
/// `deg v < deg u`, and `u | v² - f`. Reduced when `deg u ≤ g`.
#[derive(Clone, Debug)]
pub struct MumfordDivisor<F: Field> {
    curve: Arc<Curve<F>>,
    u: Poly<F>,
    v: Poly<F>,
}

impl<F: Field> MumfordDivisor<F> {
    /// Check the Mumford invariants.
    pub fn new(curve: &Arc<Curve<F>>, u: Poly<F>, v: Poly<F>) -> Result<Self, JacobianError> {
        if u.is_zero() || !u.is_monic() {
            return Err(JacobianError::UNotMonic);
        }
        if v.deg() >= u.deg() {
            return Err(JacobianError::DegreeViolation { deg_u: u.deg(), deg_v: v.deg() });
        }
        let r = (&(&v * &v) - curve.f()).rem(&u)?;
        if !r.is_zero() {
            return Err(JacobianError::DoesNotDivide);
        }
        Ok(MumfordDivisor { curve: curve.clone(), u, v })
    }

    /// Trusted constructor for values produced by the group law.
    pub(crate) fn from_parts(curve: &Arc<Curve<F>>, u: Poly<F>, v: Poly<F>) -> Self {
        debug_assert!(u.is_monic() && v.deg() < u.deg());
        MumfordDivisor { curve: curve.clone(), u, v }
    }

    /// The neutral element `<1, 0>`.
    pub fn identity(curve: &Arc<Curve<F>>) -> Self {
        MumfordDivisor { curve: curve.clone(), u: Poly::one(), v: Poly::zero() }
    }

    pub fn curve(&self) -> &Arc<Curve<F>> {
        &self.curve
    }

    pub fn u(&self) -> &Poly<F> {
        &self.u
    }

    pub fn v(&self) -> &Poly<F> {
        &self.v
    }

    pub fn is_identity(&self) -> bool {
        self.u.is_one()
    }

    pub fn is_reduced(&self) -> bool {
        self.u.deg() <= self.curve.genus() as isize
    }

    /// Image under the hyperelliptic involution: `<u, -v mod u>`.
    pub fn negate(&self) -> Self {
        let v = (-&self.v).rem(&self.u).expect("u is nonzero");
        MumfordDivisor { curve: self.curve.clone(), u: self.u.clone(), v }
    }

    pub(crate) fn check_same_curve(&self, o: &Self) -> Result<(), JacobianError> {
        if Arc::ptr_eq(&self.curve, &o.curve) || self.curve.same_as(&o.curve) {
            Ok(())
        } else {
            Err(JacobianError::CurveMismatch)
        }
    }
}

impl<F: Field> PartialEq for MumfordDivisor<F> {
    fn eq(&self, o: &Self) -> bool {
        self.curve.fingerprint() == o.curve.fingerprint() && self.u == o.u && self.v == o.v
    }
}

impl<F: Field> Eq for MumfordDivisor<F> {}

impl<F: Field> fmt::Display for MumfordDivisor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = self.curve.variable();
        write!(f, "<{} ; {}>", render_poly(&self.u, var), render_poly(&self.v, var))
    }
}
