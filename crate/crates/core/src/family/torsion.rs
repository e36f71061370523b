//! Torsion certificate on the tilde model: the 8-torsion point
//! `T = <s - d, 8d³>`, rational 2-torsion, invariance and antineutrality.

use num_traits::One;

use super::checks::Check;
use super::FamilyInstance;
use crate::antineutral::{
    invariance_remainder, is_sigma_invariant, is_sigma_invariant_oracle, varpi_antineutral, TildeModel, Varpi,
};
use crate::exact::field::Field;
use crate::exact::qpoly::SquareMode;
use crate::funcfield::{is_square, RatFunc};
use crate::jacobian::{two_torsion, CertifiedFactor, MumfordDivisor};
use crate::text::render_poly;
use crate::PolyY;

fn nonsquares(inst: &FamilyInstance) -> Vec<Check> {
    let b = RatFunc::from_poly(inst.b_x2());
    let c = RatFunc::from_poly(inst.c_x2());
    let one = RatFunc::one();
    let opc = &one + &c;
    let bmc = &b - &c;
    let items = [
        ("T33.nonsq.B", "B(x^2)", b.clone()),
        ("T33.nonsq.C", "C(x^2)", c.clone()),
        ("T33.nonsq.disc", "(1 + C(x^2))^2 - 4B(x^2)", &(&opc * &opc) - &(RatFunc::from_i64(4) * &b)),
        ("T33.nonsq.BmC", "B(x^2) - C(x^2)", bmc.clone()),
        ("T33.nonsq.CBmC", "C(x^2)(B(x^2) - C(x^2))", &c * &bmc),
        ("T33.nonsq.eBmC", "(1 - C(x^2))(B(x^2) - C(x^2))", &(&one - &c) * &bmc),
    ];
    items
        .into_iter()
        .map(|(id, name, v)| {
            Check::new(
                id,
                format!("{name} is not a square in C(x)"),
                !is_square(&v, SquareMode::OverC),
                format!("{name} = {v}"),
            )
        })
        .collect()
}

fn divisor_eq(id: &str, statement: &str, got: &MumfordDivisor<RatFunc>, want: &MumfordDivisor<RatFunc>) -> Check {
    Check::new(id, statement, got == want, got.to_string())
}

/// `<u, 0>` on the tilde curve.
fn two_torsion_point(m: &TildeModel, u: PolyY) -> Result<MumfordDivisor<RatFunc>, String> {
    MumfordDivisor::new(m.curve(), u, PolyY::zero()).map_err(|e| e.to_string())
}

fn group_checks(inst: &FamilyInstance, m: &TildeModel, out: &mut Vec<Check>) -> Result<(), String> {
    let [g1, g2, g3] = inst.tilde_factors().map_err(|e| e.to_string())?;
    let d = m.d().clone();
    let product = &(&g1 * &g2) * &g3;
    out.push(Check::new(
        "T33.model",
        "the odd model is t^2 = g1*g2*g3 with g1 = s",
        m.curve().f() == &product && m.genus() == 3,
        format!("d = {d}; g2 = {}", render_poly(&g2, "s")),
    ));

    let t = m.base_point();
    let s_minus_d = PolyY::linear_root(&d);
    let d2 = &d * &d;
    let d3 = &d2 * &d;
    let want2 = MumfordDivisor::new(
        m.curve(),
        s_minus_d.pow(2),
        PolyY::new(vec![RatFunc::from_i64(-8) * &d3, RatFunc::from_i64(16) * &d2]),
    )
    .map_err(|e| e.to_string())?;
    out.push(Check::new(
        "T33.base",
        "T = <s - d, 8d^3> lies on the odd model",
        t.v().coeff(0) == RatFunc::from_i64(8) * &d3,
        t.to_string(),
    ));
    let t2 = t.double();
    let t4 = t2.double();
    let t8 = t4.double();
    out.push(divisor_eq("T33.2T", "[2]T = <(s - d)^2, 16d^2*s - 8d^3>", &t2, &want2));
    let g1g2 = two_torsion_point(m, &g1 * &g2)?;
    out.push(divisor_eq("T33.4tors", "[4]T = <g1*g2, 0>", &t4, &g1g2));
    out.push(Check::new(
        "T33.8tors",
        "[8]T is the identity and [4]T is not",
        t8.is_identity() && !t4.is_identity(),
        t8.to_string(),
    ));
    // the remainder that decides invariance of [2]T
    let rem = invariance_remainder(&t2, m);
    out.push(Check::new(
        "T33.remainder",
        "remainder of -(s/d)^4 v(d^2/s) by (s - d)^2 is -v for [2]T",
        rem == -t2.v(),
        render_poly(&rem, "s"),
    ));

    let b = RatFunc::from_poly(inst.b_x2());
    let c = RatFunc::from_poly(inst.c_x2());
    let factors = [
        CertifiedFactor::low_degree(g1.clone()),
        CertifiedFactor::low_degree(g2.clone()),
        CertifiedFactor::tilde_quartic(g3, b, c),
    ];
    let p_g1 = two_torsion_point(m, g1)?;
    let p_g2 = two_torsion_point(m, g2)?;
    match two_torsion(m.curve(), &factors) {
        Ok(pts) => {
            let id = MumfordDivisor::identity(m.curve());
            let expected = [&id, &p_g1, &p_g2, &g1g2];
            let ok = pts.len() == 4 && expected.iter().all(|e| pts.contains(e));
            let shown: Vec<String> =
                pts.iter().map(|p| if p.is_identity() { "id".into() } else { p.to_string() }).collect();
            out.push(Check::new(
                "T33.2tors",
                "rational 2-torsion is {id, <g1,0>, <g2,0>, <g1*g2,0>}",
                ok,
                format!("{} points: {}", pts.len(), shown.join(", ")),
            ));
        }
        Err(e) => out.push(Check::error("T33.2tors", "rational 2-torsion is {id, <g1,0>, <g2,0>, <g1*g2,0>}", e)),
    }

    for (id, name, p, want) in [
        ("T33.inv.g1", "<g1,0>", &p_g1, true),
        ("T33.inv.g2", "<g2,0>", &p_g2, true),
        ("T33.inv.2T", "[2]T", &t2, false),
    ] {
        let statement = if want {
            format!("{name} is conjugation invariant")
        } else {
            format!("{name} is not conjugation invariant")
        };
        match is_sigma_invariant(p, m) {
            Ok(v) => out.push(Check::new(id, statement, v == want, format!("criterion: {v}"))),
            Err(e) => out.push(Check::error(id, statement, e)),
        }
    }

    // all 16 points n1<g1,0> + n2 T
    let mut agree = 0usize;
    let mut disagree = Vec::new();
    let mut verdicts = [0usize; 4];
    let mut antineutral = Vec::new();
    let mut multiple = MumfordDivisor::identity(m.curve());
    for n2 in 0..8 {
        for n1 in 0..2 {
            let p = if n1 == 0 { multiple.clone() } else { multiple.add(&p_g1).map_err(|e| e.to_string())? };
            let fast = is_sigma_invariant(&p, m).map_err(|e| e.to_string())?;
            let slow = is_sigma_invariant_oracle(&p, m).map_err(|e| e.to_string())?;
            if fast == slow {
                agree += 1;
            } else {
                disagree.push(format!("{n1}<g1,0> + {n2}T"));
            }
            let v = varpi_antineutral(&p, m).map_err(|e| e.to_string())?;
            let slot = match v {
                Varpi::NotInvariant => 0,
                Varpi::InvariantTrivial => 1,
                Varpi::InvariantAntineutral => {
                    antineutral.push(format!("{n1}<g1,0> + {n2}T"));
                    2
                }
                Varpi::InvariantNotAntineutral => 3,
            };
            verdicts[slot] += 1;
        }
        multiple = multiple.add(&t).map_err(|e| e.to_string())?;
    }
    out.push(Check::new(
        "T33.oracle",
        "closed-form invariance agrees with Cantor subtraction on n1<g1,0> + n2*T",
        disagree.is_empty(),
        if disagree.is_empty() { format!("{agree}/16 agree") } else { format!("disagree at {}", disagree.join(", ")) },
    ));
    out.push(Check::new(
        "T33.varpi",
        "no 2-primary torsion point is antineutral",
        antineutral.is_empty(),
        format!(
            "not invariant: {}; invariant trivial: {}; antineutral: {}; invariant not antineutral: {}",
            verdicts[0], verdicts[1], verdicts[2], verdicts[3]
        ),
    ));
    Ok(())
}

/// Non-square conditions, the Cantor identities for `T`, the 2-torsion
/// enumeration, invariance and the antineutrality verdicts.
pub fn torsion_certificate(inst: &FamilyInstance) -> Vec<Check> {
    let mut out = nonsquares(inst);
    match inst.tilde() {
        Ok(m) => {
            if let Err(e) = group_checks(inst, m, &mut out) {
                out.push(Check::error("T33.group", "Cantor checks on the odd model", e));
            }
        }
        Err(e) => out.push(Check::error("T33.model", "the odd model is t^2 = g1*g2*g3 with g1 = s", e)),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, FamilyParams};

    #[test]
    fn small_instance_runs() {
        // a cheap member; only the structural identities are asserted
        let inst = build_family(&FamilyParams::from_ints(1, 5, 2)).unwrap();
        let checks = torsion_certificate(&inst);
        for id in ["T33.model", "T33.base", "T33.2T", "T33.4tors", "T33.8tors", "T33.remainder", "T33.oracle"] {
            let c = checks.iter().find(|c| c.id == id).unwrap();
            assert!(c.passed(), "{id}: {}", c.witness);
        }
    }
}
