//! Sign, nonvanishing and non-square hypotheses on `(η, ω, ρ)`.

use num_traits::{One, Signed};

use super::checks::{nonsquare, nonzero, positive, Check};
use super::FamilyInstance;
use crate::exact::rational::rat;
use crate::text::render_poly;
use crate::{QPoly, Rational};

/// Scalars every hypothesis is written in.
pub(crate) struct Quantities {
    pub eta: Rational,
    pub omega: Rational,
    pub rho: Rational,
    pub b1: Rational,
    /// `ω² - η²`
    pub w: Rational,
}

impl Quantities {
    pub fn of(inst: &FamilyInstance) -> Self {
        let p = inst.params();
        Quantities { eta: p.eta.clone(), omega: p.omega.clone(), rho: p.rho.clone(), b1: inst.b1().clone(), w: p.w() }
    }

    /// `2b₁ - 2 + w`
    pub fn s2(&self) -> Rational {
        rat(2) * &self.b1 - rat(2) + &self.w
    }

    /// `(b₁ - 1)² - ω²`
    pub fn f_b(&self) -> Rational {
        let t = &self.b1 - Rational::one();
        &t * &t - &self.omega * &self.omega
    }

    /// `(ω - 1)² - η²`
    pub fn om1(&self) -> Rational {
        let t = &self.omega - Rational::one();
        &t * &t - &self.eta * &self.eta
    }

    /// `(ω + 1)² - η²`
    pub fn op1(&self) -> Rational {
        let t = &self.omega + Rational::one();
        &t * &t - &self.eta * &self.eta
    }

    /// `w - 2ω`
    pub fn wm(&self) -> Rational {
        &self.w - rat(2) * &self.omega
    }

    /// `w + 2ω`
    pub fn wp(&self) -> Rational {
        &self.w + rat(2) * &self.omega
    }
}

fn pow01(base: &Rational, n: u8) -> Rational {
    if n == 0 {
        Rational::one()
    } else {
        base.clone()
    }
}

/// `(id, expression, value)` for every nonvanishing hypothesis.
pub(crate) fn nonvanishing_items(q: &Quantities) -> Vec<(String, String, Rational)> {
    let two = rat(2);
    let w = &q.w;
    let e2 = &two * &q.eta;
    let t2 = w - &two;
    let t1 = w - Rational::one();
    let sq = |a: &Rational| a * a;
    let eta2 = sq(&q.eta);
    vec![
        ("A23.1.eta", "eta", q.eta.clone()),
        ("A23.1.rho", "rho", q.rho.clone()),
        ("A23.2.a", "w - 2 - 2*eta", &t2 - &e2),
        ("A23.2.b", "w - 2 + 2*eta", &t2 + &e2),
        ("A23.3", "(w - 2)^2 - 4*eta^2 - 4", sq(&t2) - rat(4) * &eta2 - rat(4)),
        ("A23.4.a", "w - 1 + 2*eta", &t1 + &e2),
        ("A23.4.b", "w - 1 - 2*eta", &t1 - &e2),
        ("A23.5", "(w - 1)^2 - 4*eta^2 - 1", sq(&t1) - rat(4) * &eta2 - Rational::one()),
        ("A23.6.a", "w - 2*eta", w - &e2),
        ("A23.6.b", "w + 2*eta", w + &e2),
    ]
    .into_iter()
    .map(|(id, e, v)| (id.to_string(), e.to_string(), v))
    .collect()
}

/// `(id, expression, value)` for every non-square hypothesis, with the
/// exponent families expanded over `{0, 1}`.
pub(crate) fn nonsquare_items(q: &Quantities) -> Vec<(String, String, Rational)> {
    let two = rat(2);
    let w = &q.w;
    let (s2, fb, om1, op1, wm, wp) = (q.s2(), q.f_b(), q.om1(), q.op1(), q.wm(), q.wp());
    let b1m1 = &q.b1 - Rational::one();
    let mut out: Vec<(String, String, Rational)> = Vec::new();
    let mut push = |id: String, e: String, v: Rational| out.push((id, e, v));

    push("A24.a".into(), "w^2 - 4*omega^2".into(), &wm * &wp);
    push("A24.b".into(), "(2*b1 - 2 + w)(w - 2*omega)".into(), &s2 * &wm);
    push("A24.c".into(), "(2*b1 - 2 + w)(w + 2*omega)".into(), &s2 * &wp);
    push("A24.dsup".into(), "2(w - 2*omega)(b1 - 1 - omega)".into(), &two * &wm * (&b1m1 - &q.omega));
    push("A24.esup".into(), "2(w + 2*omega)(b1 - 1 + omega)".into(), &two * &wp * (&b1m1 + &q.omega));
    push("A24.d".into(), "2(2*b1 - 2 + w)(b1 - 1 + omega)".into(), &two * &s2 * (&b1m1 + &q.omega));
    push("A24.e".into(), "2(2*b1 - 2 + w)(b1 - 1 - omega)".into(), &two * &s2 * (&b1m1 - &q.omega));
    push("A24.f".into(), "((b1 - 1)^2 - omega^2)(w^2 - 4*omega^2)".into(), &fb * &wm * &wp);
    for n in 0..2u8 {
        push(
            format!("A24.g.{n}"),
            format!("2w(w - 2*omega)((omega + 1)^2 - eta^2)^{n}"),
            &two * w * &wm * pow01(&op1, n),
        );
    }
    for n in 0..2u8 {
        push(
            format!("A24.h.{n}"),
            format!("2w(w + 2*omega)((omega - 1)^2 - eta^2)^{n}"),
            &two * w * &wp * pow01(&om1, n),
        );
    }
    for mask in 1..8u8 {
        let (n1, n2, n3) = (mask >> 2 & 1, mask >> 1 & 1, mask & 1);
        push(
            format!("A24.i.{n1}{n2}{n3}"),
            format!("((b1 - 1)^2 - omega^2)^{n1}((omega - 1)^2 - eta^2)^{n2}((omega + 1)^2 - eta^2)^{n3}"),
            pow01(&fb, n1) * pow01(&om1, n2) * pow01(&op1, n3),
        );
    }
    push("A24.j".into(), "2w(2*b1 - 2 + w)".into(), &two * w * &s2);
    let (om1_m, om1_p) = (&q.omega - Rational::one() - &q.eta, &q.omega - Rational::one() + &q.eta);
    for n1 in 0..2u8 {
        for n2 in 0..2u8 {
            let tail = pow01(&om1_m, 1 - n2) * pow01(&om1_p, n2);
            push(
                format!("A24.k.{n1}{n2}"),
                format!(
                    "2^{n1}(w + 2*omega)(b1 - 1 + omega)w^{n1}(2*b1 - 2 + w)^{}(omega - 1 - eta)^{}(omega - 1 + eta)^{n2}",
                    1 - n1,
                    1 - n2
                ),
                pow01(&two, n1) * &wp * (&b1m1 + &q.omega) * pow01(w, n1) * pow01(&s2, 1 - n1) * &tail,
            );
            push(
                format!("A24.l.{n1}{n2}"),
                format!(
                    "2^{}(w + 2*omega)w^{n1}(2*b1 - 2 + w)^{n1}(omega - 1 - eta)^{}(omega - 1 + eta)^{n2}",
                    1 - n1,
                    1 - n2
                ),
                pow01(&two, 1 - n1) * &wp * pow01(w, n1) * pow01(&s2, n1) * &tail,
            );
        }
    }
    push("A24.m".into(), "b1^2 - eta^2".into(), &q.b1 * &q.b1 - &q.eta * &q.eta);
    push("A24.n".into(), "2*b1 + w - 1".into(), &two * &q.b1 + w - Rational::one());
    out
}

fn positive_definite(id: &str, name: &str, p: &QPoly) -> Check {
    let statement = format!("{name} > 0 for every real x");
    match p.is_positive_definite() {
        Ok(ok) => {
            let roots = p.squarefree_part().and_then(|s| s.sturm_count_real_roots()).unwrap_or(usize::MAX);
            let witness = format!("{name} = {}; real roots: {roots}; value at 0: {}", render_poly(p, "x"), p.coeff(0));
            Check::new(id, statement, ok, witness)
        }
        Err(e) => Check::error(id, statement, e),
    }
}

/// The three inequalities on `(η, ω, b₁)` and the positivity of every
/// factor of `P(x², y²)`.
pub fn check_positivity(inst: &FamilyInstance) -> Vec<Check> {
    let q = Quantities::of(inst);
    let one = Rational::one();
    let mut out = vec![
        positive("A22.1", "omega - 1 - |eta|", &(&q.omega - &one - q.eta.abs())),
        positive("A22.2", "w - 2*omega", &q.wm()),
        positive("A22.3", "b1 - 1 - w/2", &(&q.b1 - &one - &q.w / rat(2))),
    ];
    let c2 = inst.c_x2();
    // y⁴ + (1 + C)y² + B has roots in y² with negative sum and positive
    // product, so it is positive once 1 + C and B are.
    out.push(positive_definite("A22.pos.C", "C(x^2)", &c2));
    out.push(positive_definite("A22.pos.1C", "1 + C(x^2)", &(&c2 + &QPoly::one())));
    out.push(positive_definite("A22.pos.B", "B(x^2)", &inst.b_x2()));
    out
}

pub fn check_nonvanishing(inst: &FamilyInstance) -> Vec<Check> {
    nonvanishing_items(&Quantities::of(inst)).iter().map(|(id, e, v)| nonzero(id, e, v)).collect()
}

pub fn check_nonsquares(inst: &FamilyInstance) -> Vec<Check> {
    nonsquare_items(&Quantities::of(inst)).iter().map(|(id, e, v)| nonsquare(id, e, v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::ratio;
    use crate::family::{build_family, FamilyParams};

    fn find<'a>(cs: &'a [Check], id: &str) -> &'a Check {
        cs.iter().find(|c| c.id == id).unwrap_or_else(|| panic!("no check {id}"))
    }

    #[test]
    fn reference_passes_everything() {
        let inst = build_family(&FamilyParams::reference()).unwrap();
        let all: Vec<Check> = [check_positivity(&inst), check_nonvanishing(&inst), check_nonsquares(&inst)].concat();
        for c in &all {
            assert!(c.passed(), "{} failed: {}", c.id, c.witness);
        }
        assert_eq!(all.len(), 6 + 10 + 30);
    }

    #[test]
    fn reference_spot_values() {
        let inst = build_family(&FamilyParams::reference()).unwrap();
        let q = Quantities::of(&inst);
        let items = nonsquare_items(&q);
        let value = |id: &str| items.iter().find(|(i, _, _)| i == id).unwrap().2.clone();
        assert_eq!(value("A24.a"), rat(388505));
        assert_eq!(value("A24.n"), ratio(27835, 22));
        let nv = nonvanishing_items(&q);
        assert_eq!(nv.iter().find(|(i, _, _)| i == "A23.3").unwrap().2, rat(388505));
        let pos = check_positivity(&inst);
        assert!(find(&pos, "A22.pos.B").witness.ends_with("value at 0: 196743825/1936"));
    }

    #[test]
    fn failures_are_recorded() {
        let inst = build_family(&FamilyParams::from_ints(0, 2, 1)).unwrap();
        assert!(!find(&check_positivity(&inst), "A22.2").passed());
        assert!(!find(&check_nonvanishing(&inst), "A23.1.eta").passed());
        let inst = build_family(&FamilyParams::from_ints(0, 1, 1)).unwrap();
        assert!(!find(&check_positivity(&inst), "A22.1").passed());
    }

    #[test]
    fn zero_counts_as_square() {
        let c = nonsquare("t", "z", &rat(0));
        assert!(!c.passed());
        assert_eq!(c.witness, "z = 0 = (0)^2");
    }
}
