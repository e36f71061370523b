//! Plain-text polynomial syntax.
//!
//! Printing is descending in degree, `x^2 + 14063/22*x + 196743825/1936`.
//! Parsing accepts `+ - * / ^`, parentheses, implicit multiplication
//! (`2x`, `3(x+1)`), rational literals and named bindings, and evaluates
//! directly into the target algebra.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::exact::field::Field;
use crate::exact::poly::Poly;
use crate::exact::qpoly::QPoly;
use crate::exact::rational::{parse_rational, Rational};
use crate::exact::ExactError;
use crate::funcfield::ratfunc::RatFunc;
use crate::PolyY;

/// Splits a coefficient's text into `(negative, magnitude)` when it is a
/// plain rational literal.
fn as_literal(text: &str) -> Option<(bool, &str)> {
    let (neg, body) = match text.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, text),
    };
    let ok = !body.is_empty()
        && body.split('/').count() <= 2
        && body.split('/').all(|part| !part.is_empty() && part.bytes().all(|b| b.is_ascii_digit()));
    ok.then_some((neg, body))
}

/// Render a polynomial in the variable `var`, descending. Rational
/// coefficients print bare, anything else in parentheses.
pub fn render_poly<F: Field>(p: &Poly<F>, var: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        let text = c.to_string();
        let (neg, body) = match as_literal(&text) {
            Some((neg, mag)) if k == 0 => (neg, mag.to_string()),
            Some((neg, "1")) => (neg, mono),
            Some((neg, mag)) => (neg, format!("{mag}*{mono}")),
            None if k == 0 => (false, format!("({text})")),
            None => (false, format!("({text})*{mono}")),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

impl fmt::Display for Poly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_poly(self, "x"))
    }
}

impl fmt::Display for PolyY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_poly(self, "y"))
    }
}

/// A ring the expression parser can evaluate into.
pub trait Algebra: Clone {
    fn constant(q: Rational) -> Self;
    /// Value of a free variable such as `x` or `y`; `None` if unknown.
    fn variable(name: &str) -> Option<Self>;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// Division; implementations may refuse non-exact quotients.
    fn div(&self, o: &Self) -> Result<Self, String>;
    fn neg(&self) -> Self;
}

impl Algebra for QPoly {
    fn constant(q: Rational) -> Self {
        QPoly::constant(q)
    }
    fn variable(name: &str) -> Option<Self> {
        (name == "x").then(QPoly::var)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Result<Self, String> {
        if o.is_zero() {
            return Err("division by zero".into());
        }
        self.exact_div(o).ok_or_else(|| "quotient is not a polynomial".into())
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Algebra for RatFunc {
    fn constant(q: Rational) -> Self {
        RatFunc::from_rational(q)
    }
    fn variable(name: &str) -> Option<Self> {
        (name == "x").then(RatFunc::x)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Result<Self, String> {
        self.checked_div(o).ok_or_else(|| "division by zero".into())
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Algebra for PolyY {
    fn constant(q: Rational) -> Self {
        PolyY::constant(RatFunc::from_rational(q))
    }
    fn variable(name: &str) -> Option<Self> {
        match name {
            "x" => Some(PolyY::constant(RatFunc::x())),
            "y" | "s" | "z" | "t" => Some(PolyY::var()),
            _ => None,
        }
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Result<Self, String> {
        if o.is_zero() {
            return Err("division by zero".into());
        }
        self.exact_div(o).ok_or_else(|| "quotient is not a polynomial in the curve variable".into())
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Recursive-descent evaluator.
///
/// ```text
/// expr   := term (('+' | '-') term)*
/// term   := unary (('*' | '/')? unary)*      -- juxtaposition multiplies
/// unary  := '-' unary | power
/// power  := atom ('^' integer)?
/// atom   := number | name | '(' expr ')'
/// ```
pub struct ExprParser<'a, T: Algebra> {
    input: &'a str,
    bytes: &'a [u8],
    pos: usize,
    bindings: Option<&'a HashMap<String, T>>,
}

impl<'a, T: Algebra> ExprParser<'a, T> {
    pub fn new(input: &'a str) -> Self {
        ExprParser { input, bytes: input.as_bytes(), pos: 0, bindings: None }
    }

    pub fn with_bindings(input: &'a str, bindings: &'a HashMap<String, T>) -> Self {
        ExprParser { input, bytes: input.as_bytes(), pos: 0, bindings: Some(bindings) }
    }

    /// Parse the whole input.
    pub fn parse(mut self) -> Result<T, ExactError> {
        let v = self.expr()?;
        self.skip_ws();
        if self.pos < self.bytes.len() {
            return Err(self.error("unexpected trailing input"));
        }
        Ok(v)
    }

    fn error(&self, message: &str) -> ExactError {
        ExactError::Parse { input: self.input.to_string(), position: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<T, ExactError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                b'-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<T, ExactError> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                b'/' => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.unary()?;
                    acc = acc.div(&d).map_err(|m| {
                        let mut e = self.error(&m);
                        if let ExactError::Parse { position, .. } = &mut e {
                            *position = at;
                        }
                        e
                    })?;
                }
                c if c == b'(' || c == b'_' || c.is_ascii_alphanumeric() => {
                    acc = acc.mul(&self.power()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<T, ExactError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<T, ExactError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a nonnegative integer exponent"));
        }
        let n: u32 = self.input[start..self.pos].parse().map_err(|_| self.error("exponent too large"))?;
        let mut acc = T::constant(Rational::one());
        for _ in 0..n {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<T, ExactError> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                // `p/q` binds as a single literal only when `q` is a plain integer.
                let save = self.pos;
                if self.bytes.get(self.pos) == Some(&b'/')
                    && self.bytes.get(self.pos + 1).is_some_and(|d| d.is_ascii_digit())
                {
                    self.pos += 1;
                    while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    if self.bytes.get(self.pos) == Some(&b'^') {
                        self.pos = save;
                    }
                }
                let q = parse_rational(&self.input[start..self.pos]).map_err(|_| self.error("bad number"))?;
                if q.denom().is_zero() {
                    return Err(self.error("zero denominator"));
                }
                Ok(T::constant(q))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.bytes.len()
                    && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = &self.input[start..self.pos];
                if let Some(v) = self.bindings.and_then(|b| b.get(name)) {
                    return Ok(v.clone());
                }
                T::variable(name).ok_or_else(|| {
                    let mut e = self.error(&format!("unknown name {name:?}"));
                    if let ExactError::Parse { position, .. } = &mut e {
                        *position = start;
                    }
                    e
                })
            }
            Some(_) => Err(self.error("unexpected character")),
        }
    }
}

/// Parse a polynomial in `x` over ℚ.
pub fn parse_qpoly(text: &str) -> Result<QPoly, ExactError> {
    ExprParser::new(text).parse()
}

/// Parse an element of ℚ(x).
pub fn parse_ratfunc(text: &str) -> Result<RatFunc, ExactError> {
    ExprParser::new(text).parse()
}

/// Parse a polynomial in the curve variable (`y` or `s`) with coefficients
/// in ℚ(x), resolving extra names from `bindings`.
pub fn parse_poly_y(text: &str, bindings: &HashMap<String, PolyY>) -> Result<PolyY, ExactError> {
    ExprParser::with_bindings(text, bindings).parse()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, ratio};

    #[test]
    fn prints_descending() {
        let p = Poly::new(vec![ratio(196743825, 1936), ratio(14063, 22), rat(1)]);
        assert_eq!(p.to_string(), "x^2 + 14063/22*x + 196743825/1936");
        let q = Poly::new(vec![rat(-1), rat(0), rat(-3)]);
        assert_eq!(q.to_string(), "-3*x^2 - 1");
        assert_eq!(QPoly::zero().to_string(), "0");
    }

    #[test]
    fn parse_round_trip() {
        let text = "x^2 + 14063/22*x + 196743825/1936";
        let p = parse_qpoly(text).unwrap();
        assert_eq!(p.to_string(), text);
        assert_eq!(parse_qpoly("2x(x - 1)").unwrap(), parse_qpoly("2*x^2-2*x").unwrap());
        assert_eq!(parse_qpoly(" (x+1)^2 ").unwrap(), Poly::new(vec![rat(1), rat(2), rat(1)]));
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_qpoly("x + $") {
            Err(ExactError::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse_qpoly("x/(x+1)").is_err());
        assert!(parse_qpoly("q").is_err());
    }

    #[test]
    fn ratfunc_text() {
        let f = parse_ratfunc("x^2/(x+1)").unwrap();
        assert_eq!(f.to_string(), "(x^2) / (x + 1)");
        assert_eq!(parse_ratfunc(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn poly_y_text() {
        let p = parse_poly_y("s^2 - 2x*s + 1/2", &HashMap::new()).unwrap();
        assert_eq!(render_poly(&p, "s"), "s^2 + (-2*x)*s + 1/2");
        assert_eq!(parse_poly_y(&render_poly(&p, "s"), &HashMap::new()).unwrap(), p);
    }
}
