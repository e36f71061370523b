use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::JacobianError;
use crate::exact::field::Field;
use crate::exact::poly::Poly;

/// The curve `t² = f(s)` with `f` monic, squarefree, of odd degree `2g+1`.
#[derive(Debug)]
pub struct Curve<F: Field> {
    f: Poly<F>,
    genus: usize,
    fingerprint: u64,
    var: String,
}

impl<F: Field> Curve<F> {
    /// Validate `f`; the curve variable prints as `y`.
    pub fn new(f: Poly<F>) -> Result<Arc<Self>, JacobianError> {
        Self::with_variable(f, "y")
    }

    pub fn with_variable(f: Poly<F>, var: &str) -> Result<Arc<Self>, JacobianError> {
        let deg = f.degree().ok_or(JacobianError::EvenDegree(0))?;
        if !f.is_monic() {
            return Err(JacobianError::NotMonic);
        }
        if deg % 2 == 0 {
            return Err(JacobianError::EvenDegree(deg));
        }
        if !f.is_squarefree() {
            return Err(JacobianError::NotSquarefree);
        }
        let mut h = DefaultHasher::new();
        f.hash(&mut h);
        Ok(Arc::new(Curve { fingerprint: h.finish(), genus: (deg - 1) / 2, f, var: var.to_string() }))
    }

    pub fn f(&self) -> &Poly<F> {
        &self.f
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Content hash of `f`, used to detect mixing divisors of different curves.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn variable(&self) -> &str {
        &self.var
    }

    pub fn same_as(&self, o: &Self) -> bool {
        self.fingerprint == o.fingerprint && self.f == o.f
    }
}
