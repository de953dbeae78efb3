//! A germ on the multiplicity-3 cross cap whose Euler-free tangent module
//! needs all three families: `h = (V_2 + W_1, U_1)`.

use alloc::format;
use alloc::vec::Vec;

use super::{list, ClassifyError, VerificationReport};
use crate::algebra::{apply_derivation, parse_germ, parse_polyvec, GermMap};
use crate::crosscap::{CrossCapContext, Family, LiftableField};
use crate::equivalence::{
    codimension, tangent_generators, Codim, EquivalenceError, ThetaV, Variant, DEFAULT_MAX_DEGREE,
};
use crate::jetspace::{module_span, quotient_dim, JetBasis, Subspace};

/// Truncation used for the membership checks. Every applied field is at
/// most quadratic, so degree 3 leaves room for one multiplication.
const TRUNC: u32 = 3;

fn span(theta: &ThetaV, h: &GermMap) -> Result<Subspace, EquivalenceError> {
    let gens = tangent_generators(theta, h, Variant::Extended)?;
    Ok(module_span(&gens, &[], &JetBasis::new(h.source(), h.target_dim(), TRUNC))?)
}

/// Reduced images of `ξ_1^1, ξ_2^1, ξ_1^2, ξ_2^2, ξ_1^3, ξ_2^3` applied to
/// `h`, modulo `h*(𝔪_q)θ(h)` and up to scalar.
const DISPLAYED: [&str; 6] = ["W2; 0", "V1; 0", "-2*V2 + 3*W1; 2*U1", "V1; 3*W1", "W2; V1", "0; W2"];

pub fn family_necessity_counterexample() -> Result<VerificationReport, ClassifyError> {
    let ctx = CrossCapContext::new(3)?;
    let vs = ctx.target_vars();
    let h = parse_germ("V2 + W1, U1", vs)?;
    let mut report = VerificationReport::new("counterexample/all-three-families", Some(3)).with_germ(&h);
    let pv = |s: &str| parse_polyvec(s, vs);

    let no_euler = |f: &LiftableField| f.family != Family::Euler;
    let modified = ctx.theta_v_where(no_euler);
    let t = span(&modified, &h)?;
    let (dim, normal) = quotient_dim(&t);
    let units = [pv("1; 0")?, pv("0; 1")?];
    report.compare("Euler-free quotient dimension", 2, dim);
    report.compare("Euler-free normal space", list(&units), list(&normal));
    let certified = codimension(&modified, &h, DEFAULT_MAX_DEGREE)?;
    report.compare("Euler-free codimension (certified)", Codim::Finite(2), certified.codim);
    report.normal_basis = normal;

    let full = codimension(&ctx.theta_v(), &h, DEFAULT_MAX_DEGREE)?;
    report.codim = Some(full.codim);
    report.compare("codimension with all fields", Codim::Finite(2), full.codim);

    let v1_bottom = pv("0; V1")?;
    let w2_bottom = pv("0; W2")?;
    let w2_top = pv("W2; 0")?;
    report.require("(0, V1) in the Euler-free module", t.contains(&v1_bottom));
    report.require("(0, W2) in the Euler-free module", t.contains(&w2_bottom));

    let without = |drop: Family| ctx.theta_v_where(|f| f.family != Family::Euler && f.family != drop);
    let t3 = span(&without(Family::Third), &h)?;
    report.require("(0, V1) missing without the third family", !t3.contains(&v1_bottom));
    report.require("(0, W2) missing without the third family", !t3.contains(&w2_bottom));
    let t1 = span(&without(Family::First), &h)?;
    report.require("(W2, 0) missing without the first family", !t1.contains(&w2_top));
    report.require("(0, V1) missing without the first family", !t1.contains(&v1_bottom));
    report.note(format!(
        "quotient dimensions at degree {TRUNC}: without first family {}, without third family {}",
        quotient_dim(&t1).0,
        quotient_dim(&t3).0
    ));

    // h*(𝔪_q)θ(h) alone, then each applied field against its display
    let ideal = tangent_generators(&ThetaV::new(vs, Vec::new())?, &h, Variant::Extended)?;
    let amb = JetBasis::new(vs, 2, TRUNC);
    let base = module_span(&ideal, &[], &amb).map_err(EquivalenceError::from)?;
    let family_fields: Vec<&LiftableField> = ctx.fields().iter().filter(|f| no_euler(f)).collect();
    for (field, text) in family_fields.iter().zip(DISPLAYED) {
        let shown = pv(text)?;
        let applied = apply_derivation(&field.components, &h).map_err(EquivalenceError::from)?;
        let with_shown = base.extend(core::slice::from_ref(&shown)).map_err(EquivalenceError::from)?;
        let ok = !base.contains(&shown) && !base.contains(&applied) && with_shown.contains(&applied);
        report.require(&format!("{} applied to h reduces to a multiple of ({text})", field.label()), ok);
    }
    report.note("the Euler-free dimension matches the codimension; no claim about image Milnor numbers is made");
    Ok(report)
}
