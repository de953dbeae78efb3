//! Command-line front end for `crosscap-core`: argument handling, the
//! vector field file format, and text and JSON reports.

pub mod args;
pub mod report;
pub mod theta_file;

use std::fmt::Write as _;
use std::fs;
use std::sync::Arc;

use crosscap_core::classify::{classify_codim_two, family_necessity_counterexample, VerificationReport};
use crosscap_core::crosscap::{sharp_pullback, verify_liftable, PullbackError};
use crosscap_core::equivalence::{codimension, complete_transversal, determinacy_bound};
use crosscap_core::{parse_germ, CrossCapContext, GermMap, ThetaV, VariableSpace};
use serde_json::{json, Value};
use thiserror::Error;

pub use args::{Cli, Command};
pub use report::Report;

/// Anything wrong with the request itself. Exit code 2.
#[derive(Debug, Error)]
#[error("{0}")]
pub struct InputError(pub String);

fn input<E: std::fmt::Display>(e: E) -> InputError {
    InputError(e.to_string())
}

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    /// What goes to stdout.
    pub stdout: String,
    /// What goes to stderr.
    pub stderr: String,
}

/// Parses a germ in the target coordinates of the multiplicity-`k` cross cap.
pub fn parse_germ_for(text: &str, k: usize) -> Result<GermMap, InputError> {
    let ctx = CrossCapContext::new(k).map_err(input)?;
    parse_germ(text, ctx.target_vars()).map_err(input)
}

/// Variables and Θ_V for a germ command.
struct Setting {
    k: Option<usize>,
    vars: Arc<VariableSpace>,
    theta: ThetaV,
}

fn setting(space: &args::Space) -> Result<Setting, InputError> {
    let read = |vars: &Arc<VariableSpace>| -> Result<Option<ThetaV>, InputError> {
        let Some(path) = &space.fields else { return Ok(None) };
        let text = fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
        let fields =
            theta_file::parse_fields(&text, vars).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
        ThetaV::new(vars, fields).map(Some).map_err(input)
    };
    if let Some(n) = space.vars {
        if n == 0 {
            return Err(InputError("--vars needs at least one variable".into()));
        }
        let vars = VariableSpace::generic(n);
        let theta = read(&vars)?.ok_or_else(|| InputError("--vars requires --fields".into()))?;
        return Ok(Setting { k: None, vars, theta });
    }
    let k = space.k.ok_or_else(|| InputError("missing -k (or --vars with --fields)".into()))?;
    let ctx = CrossCapContext::new(k).map_err(input)?;
    let vars = ctx.target_vars().clone();
    let theta = match read(&vars)? {
        Some(t) => t,
        None => ctx.theta_v(),
    };
    Ok(Setting { k: Some(k), vars, theta })
}

/// A finished computation: the report, and its text rendering.
struct Done {
    report: Report,
    text: String,
}

fn done(report: Report, text: String) -> Result<Done, InputError> {
    Ok(Done { report, text })
}

/// Executes the request. Never panics on bad input; every failure becomes
/// an exit code and a message.
pub fn run(cli: &Cli) -> Outcome {
    let cmd = &cli.command;
    let json = cmd.format().json();
    match dispatch(cmd) {
        Ok(Done { report, text }) => {
            let code = if report.status == "pass" { EXIT_PASS } else { EXIT_FAIL };
            let stdout = if json { report.to_json() } else { text };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(e) => {
            let stdout = if json {
                let mut r = Report::new(cmd.name(), None);
                r.status = "error".into();
                r.set("error", Value::String(e.0.clone()));
                r.to_json()
            } else {
                String::new()
            };
            Outcome { code: EXIT_INPUT, stdout, stderr: format!("error: {e}\n") }
        }
    }
}

fn dispatch(cmd: &Command) -> Result<Done, InputError> {
    match cmd {
        Command::Vfields { k, .. } => vfields(*k),
        Command::Codim { germ, max_degree, .. } => codim(germ, *max_degree),
        Command::Determinacy { germ, mode, max_degree, .. } => determinacy(germ, *mode, *max_degree),
        Command::Transversal { germ, d, .. } => transversal(germ, *d),
        Command::Pullback { k, germ, max_degree, .. } => pullback(*k, germ, *max_degree),
        Command::Classify { k, .. } => classify(*k),
        Command::Counterexample { .. } => counterexample(),
    }
}

fn vfields(k: usize) -> Result<Done, InputError> {
    let ctx = CrossCapContext::new(k).map_err(input)?;
    let mut report = Report::new("vfields", Some(k));
    let mut text = String::new();
    let mut entries = Vec::new();
    let mut all = true;
    for f in ctx.fields() {
        let lift = verify_liftable(&ctx, &f.components);
        all &= lift.is_ok();
        let (liftable, eta) = match &lift {
            Ok(l) => (true, Value::String(l.eta.to_string())),
            Err(e) => (false, Value::String(e.to_string())),
        };
        entries.push(
            json!({"label": f.label(), "components": f.components.to_string(), "liftable": liftable, "lift": eta}),
        );
        let mark = if liftable { "lifts" } else { "does not lift" };
        writeln!(text, "{}  # {}, {mark}", f.components, f.label()).unwrap();
    }
    report.set("fields", Value::Array(entries));
    report.status = report::pass_fail(all).into();
    done(report, text)
}

fn codim(args: &args::GermArgs, max_degree: u32) -> Result<Done, InputError> {
    let s = setting(&args.space)?;
    let h = parse_germ(&args.germ, &s.vars).map_err(input)?;
    let r = codimension(&s.theta, &h, max_degree).map_err(input)?;
    let mut report = Report::new("codim", s.k);
    report.germ = Some(h.to_string());
    report.codimension = r.codim.finite();
    report.normal_basis = report::strings(&r.normal_basis);
    report.determinacy = r.determinacy;
    report.stabilization_degree = r.stabilization_degree;
    report.status = report::pass_fail(r.codim.finite().is_some()).into();
    report.set("max_degree", json!(max_degree));
    let mut text = format!("germ: {h}\ncodimension: {}\n", r.codim);
    if r.codim.finite().is_some() {
        writeln!(text, "normal basis: {}", report.normal_basis.join(", ")).unwrap();
    } else {
        writeln!(text, "no stabilization up to degree {max_degree}").unwrap();
    }
    if let Some(d) = r.stabilization_degree {
        writeln!(text, "stabilization degree: {d}").unwrap();
    }
    if let Some(d) = r.determinacy {
        writeln!(text, "determinacy: {d}").unwrap();
    }
    done(report, text)
}

fn determinacy(args: &args::GermArgs, mode: args::Mode, max_degree: u32) -> Result<Done, InputError> {
    let s = setting(&args.space)?;
    let h = parse_germ(&args.germ, &s.vars).map_err(input)?;
    let l = determinacy_bound(&s.theta, &h, mode.into(), max_degree).map_err(input)?;
    let mut report = Report::new("determinacy", s.k);
    report.germ = Some(h.to_string());
    report.determinacy = l;
    report.status = report::pass_fail(l.is_some()).into();
    let mode_name = match mode {
        args::Mode::K1 => "k1",
        args::Mode::Ke => "ke",
    };
    report.set("mode", json!(mode_name));
    report.set("max_degree", json!(max_degree));
    let text = match l {
        Some(l) => format!("germ: {h}\n{l}-determined ({mode_name})\n"),
        None => format!("germ: {h}\nno determinacy certified up to degree {max_degree} ({mode_name})\n"),
    };
    done(report, text)
}

fn transversal(args: &args::GermArgs, d: u32) -> Result<Done, InputError> {
    let s = setting(&args.space)?;
    let h = parse_germ(&args.germ, &s.vars).map_err(input)?;
    let t = complete_transversal(&s.theta, &h, d).map_err(input)?;
    let mut report = Report::new("transversal", s.k);
    report.germ = Some(h.to_string());
    report.transversal = report::strings(&t);
    report.set("degree", json!(d));
    let shown = if t.is_empty() { String::from("(empty)") } else { report.transversal.join(", ") };
    let text = format!("jet: {h}\ndegree-{d} complete transversal: {shown}\n");
    done(report, text)
}

fn pullback(k: usize, germ: &str, max_degree: u32) -> Result<Done, InputError> {
    let ctx = CrossCapContext::new(k).map_err(input)?;
    let h = parse_germ(germ, ctx.target_vars()).map_err(input)?;
    let c = codimension(&ctx.theta_v(), &h, max_degree).map_err(input)?;
    let mut report = Report::new("pullback", Some(k));
    report.germ = Some(h.to_string());
    report.codimension = c.codim.finite();
    report.normal_basis = report::strings(&c.normal_basis);
    report.determinacy = c.determinacy;
    report.stabilization_degree = c.stabilization_degree;
    let mut text = format!("germ: {h}\ncodimension of h: {}\n", c.codim);
    match sharp_pullback(&ctx, &h) {
        Ok(p) => {
            let src: Vec<&str> = p.map.source().names().iter().map(String::as_str).collect();
            report.set("map", json!(p.map.to_string()));
            report.set("source", json!(src));
            report.set("target", json!(p.target_names));
            let elim: Vec<Value> =
                p.eliminated.iter().map(|(n, e)| json!({"name": n, "value": e.to_string()})).collect();
            report.set("eliminated", Value::Array(elim));
            writeln!(text, "pullback ({}) -> ({}):", src.join(", "), p.target_names.join(", ")).unwrap();
            writeln!(text, "  {}", p.map).unwrap();
            for (n, e) in &p.eliminated {
                writeln!(text, "  {n} = {e}").unwrap();
            }
        }
        Err(e @ (PullbackError::NotTransverse { .. } | PullbackError::NoPivot { .. })) => {
            report.status = "fail".into();
            report.set("error", json!(e.to_string()));
            writeln!(text, "no pullback: {e}").unwrap();
        }
        Err(e) => return Err(input(e)),
    }
    done(report, text)
}

fn reports_done(command: &str, k: Option<usize>, reports: &[VerificationReport]) -> Result<Done, InputError> {
    let mut report = Report::new(command, k);
    report.status = report::pass_fail(report::status_of(reports)).into();
    report.set("reports", Value::Array(reports.iter().map(report::verification).collect()));
    let text = reports.iter().map(ToString::to_string).collect();
    done(report, text)
}

fn classify(k: Option<usize>) -> Result<Done, InputError> {
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (2..=6).collect(),
    };
    let mut reports = Vec::new();
    for k in ks {
        reports.extend(classify_codim_two(k).map_err(input)?);
    }
    reports_done("classify", k, &reports)
}

fn counterexample() -> Result<Done, InputError> {
    let r = family_necessity_counterexample().map_err(input)?;
    let mut done = reports_done("counterexample", r.k, std::slice::from_ref(&r))?;
    let rep = &mut done.report;
    rep.germ = r.germ.clone();
    rep.codimension = r.codim.and_then(|c| c.finite());
    rep.normal_basis = report::strings(&r.normal_basis);
    done.text = r.to_string();
    Ok(done)
}
