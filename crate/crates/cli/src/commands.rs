//! Command handlers. Each returns the exit code or an input error.

use std::fs;

use serde_json::json;
use sos3_core::descent::{richelot_dual, xi, SchaeferContext};
use sos3_core::exact::rational::parse_rational;
use sos3_core::family::{
    build_family, check_nonsquares, check_nonvanishing, check_positivity, descent_certificate, prove_not_sos3,
    torsion_certificate, verify_sos3_identity, Check, FamilyInstance, FamilyParams, IdentityArgs, Verdict,
};
use sos3_core::funcfield::is_psd;
use sos3_core::jacobian::Curve;
use sos3_core::text::{parse_poly_y, parse_ratfunc, render_poly};
use sos3_core::PolyY;

use crate::divisor_text::Workspace;
use crate::{Cli, CliError, Command, Group, JacOp, ParamArgs};

const OK: u8 = 0;
const NOT_HELD: u8 = 2;

fn input<E: std::fmt::Display>(what: &str) -> impl Fn(E) -> CliError + '_ {
    move |e| CliError::Input(format!("{what}: {e}"))
}

fn params(p: &ParamArgs) -> Result<FamilyParams, CliError> {
    FamilyParams::parse(&p.eta, &p.omega, &p.rho).map_err(input("parameters"))
}

fn instance(p: &ParamArgs) -> Result<FamilyInstance, CliError> {
    build_family(&params(p)?).map_err(input("family"))
}

fn write_out(path: &Option<String>, text: &str) -> Result<(), CliError> {
    if let Some(path) = path {
        fs::write(path, text).map_err(|source| CliError::Io { path: path.clone(), source })?;
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<u8, CliError> {
    match &cli.command {
        Command::Prove { params: p, out } => {
            let cert = prove_not_sos3(&params(p)?);
            let text = cert.to_json();
            write_out(out, &(text.clone() + "\n"))?;
            if cli.json {
                println!("{text}");
            } else {
                print!("{}", cert.render_text());
            }
            Ok(if cert.verdict == Verdict::Proved { OK } else { NOT_HELD })
        }
        Command::Check { group, params: p, out } => {
            let inst = instance(p)?;
            let checks: Vec<Check> = match group {
                Group::Positivity => check_positivity(&inst),
                Group::Nonvanishing => check_nonvanishing(&inst),
                Group::Nonsquares => check_nonsquares(&inst),
                Group::Torsion => torsion_certificate(&inst),
                Group::Descent => descent_certificate(&inst),
            };
            let text = serde_json::to_string_pretty(&checks).expect("checks serialize");
            write_out(out, &(text.clone() + "\n"))?;
            if cli.json {
                println!("{text}");
            } else {
                for c in &checks {
                    println!("{:<4} {:<22} {}  [{}]", c.status, c.id, c.statement, c.witness);
                }
            }
            Ok(if checks.iter().all(Check::passed) { OK } else { NOT_HELD })
        }
        Command::Jac { op, operands, curve, params: p } => jac(cli.json, *op, operands, curve.as_deref(), p),
        Command::Xi { factors, divisor } => xi_cmd(cli.json, factors, divisor),
        Command::Richelot { g1, g2, g3 } => richelot(cli.json, [g1, g2, g3]),
        Command::Identity { symbolic, values } => identity(cli.json, *symbolic, values),
        Command::Psd { f } => {
            let f = parse_ratfunc(f).map_err(input("f"))?;
            let psd = is_psd(&f).map_err(input("f"))?;
            if cli.json {
                println!("{}", json!({ "f": f.to_string(), "psd": psd }));
            } else {
                println!("{}", if psd { "PSD" } else { "NOT PSD" });
            }
            Ok(OK)
        }
    }
}

fn workspace(curve: Option<&str>, p: &ParamArgs) -> Result<Workspace, CliError> {
    if let Some(text) = curve {
        let f = parse_poly_y(text, &Default::default()).map_err(input("curve"))?;
        let curve = Curve::new(f).map_err(input("curve"))?;
        return Ok(Workspace { curve, names: Vec::new(), scalar: None });
    }
    let inst = instance(p)?;
    let m = inst.tilde().map_err(input("family curve"))?;
    let g = inst.tilde_factors().map_err(input("family curve"))?;
    let names = g.into_iter().enumerate().map(|(i, p)| (format!("g{}", i + 1), p)).collect();
    Ok(Workspace { curve: m.curve().clone(), names, scalar: Some(("d".into(), m.d().clone())) })
}

fn jac(as_json: bool, op: JacOp, operands: &[String], curve: Option<&str>, p: &ParamArgs) -> Result<u8, CliError> {
    let ws = workspace(curve, p)?;
    let arity = |n: usize| {
        if operands.len() == n {
            Ok(())
        } else {
            Err(CliError::Input(format!("{op:?} takes {n} operand(s), got {}", operands.len())))
        }
    };
    let result = match op {
        JacOp::Add | JacOp::Sub => {
            arity(2)?;
            let (a, b) = (ws.parse_divisor(&operands[0])?, ws.parse_divisor(&operands[1])?);
            if op == JacOp::Add { a.add(&b) } else { a.sub(&b) }.map_err(input("group law"))?
        }
        JacOp::Neg => {
            arity(1)?;
            ws.parse_divisor(&operands[0])?.negate()
        }
        JacOp::Double => {
            arity(1)?;
            ws.parse_divisor(&operands[0])?.double()
        }
        JacOp::Mul => {
            arity(2)?;
            let n: i64 = operands[0].trim().parse().map_err(input("multiplier"))?;
            ws.parse_divisor(&operands[1])?.scalar_mul(n)
        }
    };
    let shown = ws.render_divisor(&result);
    if as_json {
        println!(
            "{}",
            json!({ "result": shown, "u": render_poly(result.u(), ws.curve.variable()), "v": render_poly(result.v(), ws.curve.variable()) })
        );
    } else {
        println!("{shown}");
    }
    Ok(OK)
}

fn xi_cmd(as_json: bool, factors: &str, divisor: &str) -> Result<u8, CliError> {
    let fs: Vec<PolyY> = factors
        .split(';')
        .map(|t| parse_poly_y(t, &Default::default()).map_err(input("factor")))
        .collect::<Result<_, _>>()?;
    let f = fs.iter().fold(PolyY::one(), |acc, p| &acc * p);
    let curve = Curve::new(f).map_err(input("curve"))?;
    let ctx = SchaeferContext::new(&curve, fs).map_err(input("factors"))?;
    let ws = Workspace { curve, names: Vec::new(), scalar: None };
    let dv = ws.parse_divisor(divisor)?;
    let t = xi(&dv, &ctx).map_err(input("xi"))?;
    if as_json {
        println!("{}", json!({ "xi": t, "norm_kernel": t.in_norm_kernel() }));
    } else {
        println!("{t}");
    }
    Ok(OK)
}

fn richelot(as_json: bool, gs: [&String; 3]) -> Result<u8, CliError> {
    let parsed: Vec<PolyY> =
        gs.iter().map(|t| parse_poly_y(t, &Default::default()).map_err(input("G"))).collect::<Result<_, _>>()?;
    let r = richelot_dual(&parsed[0], &parsed[1], &parsed[2]).map_err(input("richelot"))?;
    let ls: Vec<String> = r.l.iter().map(|l| render_poly(l, "y")).collect();
    let quintic = render_poly(&r.quintic(), "y");
    if as_json {
        println!("{}", json!({ "delta": r.delta.to_string(), "l": ls, "delta_l1l2l3": quintic }));
    } else {
        println!("Delta = {}", r.delta);
        for (i, l) in ls.iter().enumerate() {
            println!("L{} = {l}", i + 1);
        }
        println!("Delta*L1*L2*L3 = {quintic}");
    }
    Ok(OK)
}

fn identity(as_json: bool, symbolic: bool, values: &[String]) -> Result<u8, CliError> {
    let args = if symbolic || values.is_empty() {
        IdentityArgs::Symbolic
    } else {
        let v: Vec<_> = values.iter().map(|t| parse_rational(t).map_err(input("value"))).collect::<Result<_, _>>()?;
        IdentityArgs::Specialized { alpha: v[0].clone(), beta: v[1].clone(), gamma: v[2].clone() }
    };
    let out = verify_sos3_identity(&args).map_err(input("identity"))?;
    if as_json {
        println!("{}", json!({ "holds": out.holds, "terms": out.terms, "counterexample": out.counterexample }));
    } else if out.holds {
        println!("IDENTITY HOLDS ({} terms)", out.terms);
    } else {
        println!("IDENTITY FAILS: leading difference {}", out.counterexample.unwrap_or_default());
    }
    Ok(if out.holds { OK } else { NOT_HELD })
}
