use std::io::Write as _;
use std::process::Command as Process;

use clap::Parser;
use crosscap::theta_file::parse_fields;
use crosscap::{parse_germ_for, run, Cli, Outcome, Report, EXIT_FAIL, EXIT_INPUT, EXIT_PASS};
use crosscap_core::{parse_germ, parse_polyvec, CrossCapContext};
use serde_json::Value;

fn exec(argv: &[&str]) -> Outcome {
    let cli = Cli::try_parse_from(std::iter::once("crosscap").chain(argv.iter().copied())).expect("valid argv");
    run(&cli)
}

fn json(argv: &[&str]) -> (i32, Report) {
    let mut a: Vec<&str> = argv.to_vec();
    a.push("--json");
    let out = exec(&a);
    (out.code, serde_json::from_str(&out.stdout).expect("json report"))
}

#[test]
fn codim_of_first_scaling_form() {
    let (code, r) = json(&["codim", "-k", "3", "-h", "U1 + V2^2"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r.codimension, Some(2));
    assert_eq!(r.normal_basis, ["1", "V2"]);
    assert_eq!(r.status, "pass");
}

#[test]
fn transversal_of_linear_jet() {
    let (code, r) = json(&["transversal", "-k", "3", "-h", "U1", "-d", "2"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r.transversal, ["V2^2"]);
}

#[test]
fn counterexample_reports_dimension_two() {
    let (code, r) = json(&["counterexample"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r.status, "pass");
    assert_eq!(r.codimension, Some(2));
    assert_eq!(r.normal_basis, ["1; 0", "0; 1"]);
    assert_eq!(r.germ.as_deref(), Some("V2 + W1, U1"));
}

#[test]
fn determinacy_modes() {
    let (_, ke) = json(&["determinacy", "-k", "3", "-h", "U1 + V2^2"]);
    assert_eq!(ke.determinacy, Some(2));
    let (_, k1) = json(&["determinacy", "-k", "3", "-h", "U1 + V2^2", "--mode", "k1"]);
    assert_eq!(k1.determinacy, Some(2));
    let (_, pair) = json(&["determinacy", "-k", "3", "-h", "V2 + W1, U1"]);
    assert_eq!(pair.determinacy, Some(1));
}

#[test]
fn parse_germ_for_k() {
    assert_eq!(parse_germ_for("V2 + W1, U1", 3).unwrap().target_dim(), 2);
    assert_eq!(parse_germ_for("U1 + V2^2", 3).unwrap().target_dim(), 1);
    let e = parse_germ_for("U5", 3).unwrap_err();
    assert!(e.0.contains("unknown variable"), "{e}");
    assert!(parse_germ_for("U1 + 1", 3).unwrap_err().0.contains("constant"));
    assert!(parse_germ_for("U1", 1).is_err());
}

#[test]
fn input_errors_exit_two() {
    for argv in [
        &["codim", "-k", "3", "-h", "U5"][..],
        &["codim", "-k", "1", "-h", "U1"],
        &["codim", "-h", "U1"],
        &["transversal", "-k", "3", "-h", "U1 + V2^2", "-d", "2"],
        &["classify", "-k", "9"],
        &["codim", "--vars", "2", "-h", "x1"],
    ] {
        let out = exec(argv);
        assert_eq!(out.code, EXIT_INPUT, "{argv:?}");
        assert!(out.stderr.starts_with("error: "), "{argv:?}");
    }
    let (code, r) = json(&["codim", "-k", "3", "-h", "U5"]);
    assert_eq!(code, EXIT_INPUT);
    assert_eq!(r.status, "error");
    assert!(r.extra["error"].as_str().unwrap().contains("U5"));
}

#[test]
fn not_transverse_is_a_failed_verification() {
    let (code, r) = json(&["pullback", "-k", "2", "-h", "W1 + V1^2"]);
    assert_eq!(code, EXIT_FAIL);
    assert_eq!(r.status, "fail");
    assert!(r.extra["error"].as_str().unwrap().contains("not transverse"));
    assert_eq!(r.codimension, Some(2));
}

#[test]
fn pullback_of_v_plus_w() {
    let (code, r) = json(&["pullback", "-k", "3", "-h", "V2 + W1"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r.extra["map"], "u1, v1, y^3 + u1*y, -y^5 - u1*y^3 + v1*y");
    assert_eq!(r.extra["target"], serde_json::json!(["U1", "V1", "W1", "W2"]));
}

#[test]
fn not_certified_codimension_fails() {
    let (code, r) = json(&["codim", "-k", "4", "-h", "U2", "--max-degree", "4"]);
    assert_eq!(code, EXIT_FAIL);
    assert_eq!(r.codimension, None);
    assert_eq!(r.stabilization_degree, None);
}

#[test]
fn fixed_keys_always_present() {
    let keys = [
        "command",
        "k",
        "germ",
        "codimension",
        "normal_basis",
        "determinacy",
        "stabilization_degree",
        "transversal",
        "status",
    ];
    for argv in [
        &["vfields", "-k", "3"][..],
        &["codim", "-k", "3", "-h", "U1"],
        &["determinacy", "-k", "3", "-h", "U1"],
        &["transversal", "-k", "3", "-h", "U1", "-d", "2"],
        &["pullback", "-k", "3", "-h", "U1 + V2^2"],
        &["classify", "-k", "3"],
        &["counterexample"],
        &["codim", "-k", "3", "-h", "U5"],
    ] {
        let mut a = argv.to_vec();
        a.push("--output");
        a.push("json");
        let v: Value = serde_json::from_str(&exec(&a).stdout).unwrap();
        let obj = v.as_object().unwrap();
        for k in keys {
            assert!(obj.contains_key(k), "{argv:?} lacks {k}");
        }
        assert_eq!(obj["command"], argv[0]);
    }
}

#[test]
fn json_round_trips() {
    let ctx = CrossCapContext::new(4).unwrap();
    let vs = ctx.target_vars();
    for germ in ["U1 + V3^2", "V3 + U1 + U2^2", "U2, U1 + V3 + W1", "3/2*W1 - V1*V2 + U2^3"] {
        let out = exec(&["codim", "-k", "4", "-h", germ, "--json", "--max-degree", "5"]);
        let r: Report = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(serde_json::from_str::<Report>(&r.to_json()).unwrap(), r);
        assert_eq!(r.to_json(), out.stdout);
        let g = r.germ.as_deref().unwrap();
        assert_eq!(parse_germ(g, vs).unwrap(), parse_germ(germ, vs).unwrap());
        assert_eq!(parse_germ(g, vs).unwrap().to_string(), g);
        for b in &r.normal_basis {
            assert_eq!(&parse_polyvec(b, vs).unwrap().to_string(), b);
        }
    }
}

#[test]
fn identical_requests_are_byte_identical() {
    for argv in
        [&["classify", "-k", "5", "--json"][..], &["counterexample", "--json"], &["vfields", "-k", "4", "--json"]]
    {
        assert_eq!(exec(argv).stdout, exec(argv).stdout, "{argv:?}");
    }
}

#[test]
fn vfields_text_is_a_field_file() {
    for k in 2..=4 {
        let out = exec(&["vfields", "-k", &k.to_string()]);
        assert_eq!(out.code, EXIT_PASS);
        let ctx = CrossCapContext::new(k).unwrap();
        let parsed = parse_fields(&out.stdout, ctx.target_vars()).unwrap();
        let want: Vec<_> = ctx.fields().iter().map(|f| f.components.clone()).collect();
        assert_eq!(parsed, want);
        assert_eq!(parsed.len(), 1 + 3 * (k - 1));
    }
}

fn field_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn generic_variables_with_field_file() {
    // all fields vanishing at 0: the quotient by m·J(h) + (h) for h = x1^2 + x2^2
    // is spanned by 1, x1, x2
    let f = field_file("# m·θ in two variables\nx1; 0\nx2; 0\n0; x1\n0; x2\n");
    let path = f.path().to_str().unwrap();
    let (code, r) = json(&["codim", "--vars", "2", "--fields", path, "-h", "x1^2 + x2^2"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r.k, None);
    assert_eq!(r.codimension, Some(3));
    // ascending graded-lex, x2 before x1
    assert_eq!(r.normal_basis, ["1", "x2", "x1"]);
}

#[test]
fn custom_fields_on_cross_cap_coordinates() {
    // only the Euler field: the codimension of U1 + V2^2 can only grow
    let euler = field_file("2*U1; 2*V1; V2; 3*W1; 3*W2\n");
    let path = euler.path().to_str().unwrap();
    let full = json(&["codim", "-k", "3", "-h", "U1 + V2^2", "--max-degree", "6"]).1;
    let (_, r) = json(&["codim", "-k", "3", "-h", "U1 + V2^2", "--fields", path, "--max-degree", "6"]);
    assert!(r.codimension.is_none_or(|c| c > full.codimension.unwrap()));
}

#[test]
fn bad_field_file_reports_line() {
    let f = field_file("x1; 0\nx1 +; 0\n");
    let path = f.path().to_str().unwrap();
    let out = exec(&["codim", "--vars", "2", "--fields", path, "-h", "x1"]);
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stderr.contains("line 2"), "{}", out.stderr);
    let missing = exec(&["codim", "--vars", "2", "--fields", "/nonexistent/fields.txt", "-h", "x1"]);
    assert_eq!(missing.code, EXIT_INPUT);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_crosscap");
    let status = |args: &[&str]| Process::new(bin).args(args).output().unwrap();
    let ok = status(&["codim", "-k", "3", "-h", "U1 + V2^2"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8(ok.stdout).unwrap().contains("normal basis: 1, V2"));
    assert_eq!(status(&["codim", "-k", "3", "-h", "U5"]).status.code(), Some(2));
    assert_eq!(status(&["pullback", "-k", "2", "-h", "W1 + V1^2"]).status.code(), Some(1));
    assert_eq!(status(&["codim", "--bogus"]).status.code(), Some(2));
    assert_eq!(status(&["--help"]).status.code(), Some(0));
}
