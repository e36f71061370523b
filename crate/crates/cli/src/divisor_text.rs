//! `<u ; v>` divisor syntax with named polynomials, and rendering back
//! through the same names.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;
use sos3_core::jacobian::{Curve, MumfordDivisor};
use sos3_core::text::{parse_poly_y, render_poly};
use sos3_core::{PolyY, QPoly, RatFunc};

use crate::CliError;

/// Curve plus the names usable in divisor text, in display priority.
pub struct Workspace {
    pub curve: Arc<Curve<RatFunc>>,
    pub names: Vec<(String, PolyY)>,
    /// Scalar that coefficients are expanded in when possible (`d`).
    pub scalar: Option<(String, RatFunc)>,
}

impl Workspace {
    fn bindings(&self) -> HashMap<String, PolyY> {
        let mut m: HashMap<String, PolyY> = self.names.iter().cloned().collect();
        if let Some((n, v)) = &self.scalar {
            m.insert(n.clone(), PolyY::constant(v.clone()));
        }
        m
    }

    pub fn parse_poly(&self, text: &str) -> Result<PolyY, CliError> {
        parse_poly_y(text, &self.bindings()).map_err(|e| CliError::Input(format!("{text:?}: {e}")))
    }

    /// `<u ; v>`, `<u, v>` or `id`.
    pub fn parse_divisor(&self, text: &str) -> Result<MumfordDivisor<RatFunc>, CliError> {
        let t = text.trim();
        if t == "id" || t == "0" {
            return Ok(MumfordDivisor::identity(&self.curve));
        }
        let inner = t
            .strip_prefix('<')
            .and_then(|r| r.strip_suffix('>'))
            .ok_or_else(|| CliError::Input(format!("{t:?}: expected <u ; v> or id")))?;
        let sep = inner
            .find(';')
            .or_else(|| inner.find(','))
            .ok_or_else(|| CliError::Input(format!("{t:?}: missing ';' between u and v")))?;
        let u = self.parse_poly(&inner[..sep])?;
        let v = self.parse_poly(&inner[sep + 1..])?;
        MumfordDivisor::new(&self.curve, u, v).map_err(|e| CliError::Input(format!("{t:?}: {e}")))
    }

    /// `u` as a product of names when it is one, else expanded.
    pub fn render_divisor(&self, dv: &MumfordDivisor<RatFunc>) -> String {
        if dv.is_identity() {
            return "id".into();
        }
        format!("<{} ; {}>", self.render_u(dv.u()), self.render_v(dv.v()))
    }

    fn render_u(&self, u: &PolyY) -> String {
        let n = self.names.len();
        for mask in 1u32..(1 << n) {
            let chosen: Vec<&(String, PolyY)> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| &self.names[i]).collect();
            let prod = chosen.iter().fold(PolyY::one(), |acc, (_, p)| &acc * p);
            if &prod == u {
                return chosen.iter().map(|(name, _)| name.as_str()).collect::<Vec<_>>().join("*");
            }
        }
        self.render_v(u)
    }

    fn render_v(&self, p: &PolyY) -> String {
        let var = self.curve.variable();
        let Some((name, d)) = &self.scalar else {
            return render_poly(p, var);
        };
        let expanded: Option<Vec<QPoly>> = p.coeffs().iter().map(|c| expand_in(c, d)).collect();
        match expanded {
            Some(cs) => {
                // reuse the polynomial printer on coefficients written in the scalar's name
                let terms: Vec<String> = cs
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| {
                        let coeff = render_poly(c, name);
                        let mono = match k {
                            0 => String::new(),
                            1 => var.to_string(),
                            _ => format!("{var}^{k}"),
                        };
                        match (mono.is_empty(), coeff.as_str()) {
                            (true, _) => coeff,
                            (false, "1") => mono,
                            (false, "-1") => format!("-{mono}"),
                            (false, _) if c.coeffs().iter().filter(|q| !q.is_zero()).count() == 1 => {
                                format!("{coeff}*{mono}")
                            }
                            (false, _) => format!("({coeff})*{mono}"),
                        }
                    })
                    .collect();
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join(" + ").replace("+ -", "- ")
                }
            }
            None => render_poly(p, var),
        }
    }
}

/// `c = Σ a_k d^k` with rational `a_k`, if such an expansion exists.
fn expand_in(c: &RatFunc, d: &RatFunc) -> Option<QPoly> {
    if !c.is_polynomial() || !d.is_polynomial() || d.num().deg() < 1 {
        return c.as_rational().map(QPoly::constant);
    }
    let dp = d.num();
    let mut rest = c.num().clone();
    let mut digits = Vec::new();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(dp).ok()?;
        if r.deg() > 0 {
            return None;
        }
        digits.push(r.coeff(0));
        rest = q;
    }
    Some(QPoly::new(digits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use sos3_core::text::parse_ratfunc;

    #[test]
    fn expansion_in_d() {
        let d = parse_ratfunc("x^2 + 1").unwrap();
        let c = parse_ratfunc("8(x^2+1)^3 - 2").unwrap();
        assert_eq!(expand_in(&c, &d).unwrap().to_string(), "8*x^3 - 2");
        assert!(expand_in(&parse_ratfunc("x").unwrap(), &d).is_none());
    }
}
