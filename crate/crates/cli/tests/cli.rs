//! End-to-end runs of the `sos3` binary: output text and exit codes.

use std::process::{Command, Output};

fn sos3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sos3")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn prove_reference_member() {
    let out = sos3(&["prove", "--eta", "23", "--omega", "34", "--rho", "547"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("verdict: PROVED"), "{text}");
    assert!(!text.contains("\nfail "));
}

#[test]
fn prove_json_is_byte_identical_across_runs() {
    let a = sos3(&["--json", "prove"]);
    let b = sos3(&["--json", "prove"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["verdict"], "PROVED");
    assert!(v["first_failure"].is_null());
}

#[test]
fn prove_degenerate_members_are_inconclusive() {
    let out = sos3(&["--json", "prove", "--eta", "1", "--omega", "1", "--rho", "1"]);
    assert_eq!(code(&out), 2);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "INCONCLUSIVE");
    assert_eq!(v["first_failure"], "P11.distinct");

    let out = sos3(&["--json", "prove", "--eta", "0", "--omega", "2", "--rho", "1"]);
    assert_eq!(code(&out), 2);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["first_failure"], "A22.2");
}

#[test]
fn prove_writes_certificate_file() {
    let path = std::env::temp_dir().join(format!("sos3-cert-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let out = sos3(&["prove", "--eta", "-23", "--omega", "34", "--rho", "547", "--out", p]);
    assert_eq!(code(&out), 0);
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let v: serde_json::Value = serde_json::from_str(&written).unwrap();
    assert_eq!(v["params"]["eta"], "-23");
    assert_eq!(v["verdict"], "PROVED");
}

#[test]
fn bad_input_exits_one() {
    assert_eq!(code(&sos3(&["prove", "--eta", "x"])), 1);
    assert_eq!(code(&sos3(&["prove", "--omega", "1/0"])), 1);
    assert_eq!(code(&sos3(&["jac", "neg", "<s - d ; 8*d^3"])), 1);
    assert_eq!(code(&sos3(&["jac", "neg", "<s - d ; 1>"])), 1);
    assert_eq!(code(&sos3(&["jac", "add", "id"])), 1);
    assert_eq!(code(&sos3(&["identity", "0", "1", "1"])), 1);
    assert_eq!(code(&sos3(&["no-such-command"])), 1);
}

#[test]
fn check_group_lists_each_check() {
    let out = sos3(&["check", "nonsquares"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("pass") && l.contains("A24.a") && l.contains("388505")), "{text}");

    let out = sos3(&["--json", "check", "positivity", "--eta", "0", "--omega", "2", "--rho", "1"]);
    assert_eq!(code(&out), 2);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let failed: Vec<&str> =
        v.as_array().unwrap().iter().filter(|c| c["status"] == "fail").map(|c| c["id"].as_str().unwrap()).collect();
    assert_eq!(failed, ["A22.2", "A22.3", "A22.pos.B"]);
}

#[test]
fn jacobian_arithmetic_on_the_family_curve() {
    let t = "<s - d ; 8*d^3>";
    let four = sos3(&["jac", "mul", "4", t]);
    assert_eq!(code(&four), 0);
    assert_eq!(stdout(&four).trim(), "<g1*g2 ; 0>");
    assert_eq!(stdout(&sos3(&["jac", "mul", "8", t])).trim(), "id");
    assert_eq!(stdout(&sos3(&["jac", "double", t])).trim(), "<s^2 - 2*d*s + d^2 ; 16*d^2*s - 8*d^3>");
    assert_eq!(stdout(&sos3(&["jac", "add", t, "id"])).trim(), "<s - d ; 8*d^3>");
    assert_eq!(stdout(&sos3(&["jac", "sub", t, t])).trim(), "id");
    assert_eq!(stdout(&sos3(&["jac", "neg", t])).trim(), "<s - d ; -8*d^3>");
}

#[test]
fn jacobian_arithmetic_on_an_explicit_curve() {
    // y^2 = x^5 + 1 with constant coefficients, written in y over Q(x)
    let out = sos3(&["--json", "jac", "double", "<y + 1 ; 0>", "--curve", "y^5 + 1"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"], "id");
}

#[test]
fn identity_modes() {
    let sym = sos3(&["identity", "--symbolic"]);
    assert_eq!(code(&sym), 0);
    assert!(stdout(&sym).starts_with("IDENTITY HOLDS"));
    let at = sos3(&["--json", "identity", "1", "0", "0"]);
    assert_eq!(code(&at), 0);
    let v: serde_json::Value = serde_json::from_slice(&at.stdout).unwrap();
    assert_eq!(v["holds"], true);
    assert_eq!(code(&sos3(&["identity", "-2/3", "5", "1/7"])), 0);
}

#[test]
fn psd_richelot_and_xi() {
    assert_eq!(stdout(&sos3(&["psd", "(x^2 - 1)^2/(x^4 + 3)"])).trim(), "PSD");
    assert_eq!(stdout(&sos3(&["psd", "x^3"])).trim(), "NOT PSD");

    let r = sos3(&["richelot", "y", "y^2 - 1", "y^2 - 4"]);
    assert_eq!(code(&r), 0);
    assert!(stdout(&r).contains("Delta*L1*L2*L3 = -18*y^5 - 90*y^3 - 72*y"), "{}", stdout(&r));

    let x = sos3(&["--json", "xi", "--factors", "y;y - 1;y + 1;y - 2;y + 2", "<y - 1 ; 0>"]);
    assert_eq!(code(&x), 0);
    let v: serde_json::Value = serde_json::from_slice(&x.stdout).unwrap();
    assert_eq!(v["norm_kernel"], true);
}
