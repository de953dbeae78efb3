//! Sharp pullbacks of the codimension-two normal forms, giving corank-1
//! maps of 𝒜_e-codimension two.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{ClassifyError, NormalForm, VerificationReport};
use crate::algebra::parse_germ;
use crate::crosscap::{sharp_pullback, CrossCapContext, PullbackError, SharpPullback};
use crate::equivalence::{codimension, Codim, DEFAULT_MAX_DEGREE};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PullbackOutcome {
    /// `None` when the pullback is not defined by an explicit elimination.
    pub pullback: Option<SharpPullback>,
    pub report: VerificationReport,
}

fn sum(terms: impl IntoIterator<Item = String>) -> String {
    let t: Vec<String> = terms.into_iter().collect();
    if t.is_empty() {
        String::from("0")
    } else {
        t.join(" + ")
    }
}

/// The raw pullback as obtained by eliminating one source coordinate per
/// component, before any further coordinate change.
fn expected_raw(form: NormalForm, k: usize) -> Option<String> {
    let us = |r: core::ops::RangeInclusive<usize>| r.map(|i| format!("u{i}")).collect::<Vec<_>>();
    let vs = |r: core::ops::RangeInclusive<usize>| r.map(|i| format!("v{i}")).collect::<Vec<_>>();
    let w1 = |top: usize| sum(core::iter::once(format!("y^{k}")).chain((1..=top).map(|i| format!("u{i}*y^{i}"))));
    let w2 = |top: usize| sum((1..=top).map(|i| format!("v{i}*y^{i}")));
    let mut coords: Vec<String> = Vec::new();
    match form {
        NormalForm::UPlusVSquared => {
            coords.extend(us(1..=k - 3));
            coords.extend(vs(1..=k - 1));
            coords.push(format!("{} - v{}^2*y^{}", w1(k - 3), k - 1, k - 2));
            coords.push(w2(k - 1));
        }
        NormalForm::VPlusUPlusUSquared => {
            coords.extend(us(1..=k - 2));
            coords.extend(vs(1..=k - 2));
            coords.push(w1(k - 2));
            coords.push(format!("{} - (u{} + u{}^2)*y^{}", w2(k - 2), k - 3, k - 2, k - 1));
        }
        NormalForm::VPlusW => coords.extend(["u1", "v1", "y^3 + u1*y", "v1*y - (y^3 + u1*y)*y^2"].map(String::from)),
        NormalForm::PairUVW => coords.extend(["v1", "y^3", "v1*y - y^5"].map(String::from)),
        NormalForm::PairUUVW => {
            coords.extend(["u1", "v1", "v2", "y^4 + u1*y", "v1*y + v2*y^2 - (u1 + y^4 + u1*y)*y^3"].map(String::from))
        }
        NormalForm::VPlusWSquared => coords.extend(["y^2", "-y^5"].map(String::from)),
        NormalForm::WPlusVSquared | NormalForm::PairVW => return None,
    }
    Some(coords.join(", "))
}

/// The simplified form reached from the raw pullback by coordinate changes
/// in source and target. Reported only.
fn simplified(form: NormalForm, k: usize) -> Option<String> {
    Some(match form {
        NormalForm::UPlusVSquared => {
            format!("(u, v, y^{k} + v{}^2*y^{} + Σ_{{i ≤ {}}} u_i*y^i, Σ v_i*y^i)", k - 1, k - 2, k - 3)
        }
        NormalForm::VPlusUPlusUSquared => {
            format!("(u, v, y^{k} + Σ u_i*y^i, (u{} + u{}^2)*y^{} + Σ_{{i ≤ {}}} v_i*y^i)", k - 3, k - 2, k - 1, k - 2)
        }
        NormalForm::VPlusW => String::from("(u1, v1, y^3 + u1*y, y^5 + v1*y)"),
        NormalForm::VPlusWSquared => String::from("(y^2, y^3)"),
        NormalForm::PairUVW => String::from("(v1, y^3, y^5 + v1*y)"),
        NormalForm::PairUUVW => String::from("(u1, v1, v2, y^4 + u1*y, y^7 + v1*y + v2*y^2 + u1*y^3)"),
        NormalForm::WPlusVSquared | NormalForm::PairVW => return None,
    })
}

/// Sharp pullback of `φ_k` by the normal form, with a report checking the
/// source and target dimensions, the raw map, and that the germ has
/// ⱽ𝒦_e-codimension two (which equals the 𝒜_e-codimension of the pullback).
/// Non-transverse forms yield a report that records the failure.
pub fn pullback_normal_form(k: usize, form: NormalForm) -> Result<PullbackOutcome, ClassifyError> {
    let ctx = CrossCapContext::new(k)?;
    let h = form.germ(&ctx)?;
    let q = h.target_dim();
    let mut report = VerificationReport::new(format!("pullback/{}/k={k}", form.name()), Some(k)).with_germ(&h);
    let codim = codimension(&ctx.theta_v(), &h, DEFAULT_MAX_DEGREE)?;
    report.codim = Some(codim.codim);

    let p = match sharp_pullback(&ctx, &h) {
        Ok(p) => p,
        Err(e @ PullbackError::NotTransverse { .. }) => {
            let expected_failure = expected_raw(form, k).is_none();
            report.require("φ_k is not transverse to h^-1(0)", expected_failure);
            report.note(format!("{e}; no sharp pullback is defined"));
            return Ok(PullbackOutcome { pullback: None, report });
        }
        Err(e) => return Err(e.into()),
    };
    let n_src = 2 * k - 2 - q;
    let n_tgt = 2 * k - 1 - q;
    report.compare("source dimension", n_src, p.source_dim());
    report.compare("target dimension", n_tgt, p.target_dim());
    report.compare("codimension of h (= 𝒜_e-codimension of the pullback)", Codim::Finite(2), codim.codim);
    match expected_raw(form, k) {
        Some(text) => {
            let want = parse_germ(&text, p.map.source())?;
            report.compare("raw pullback", want.to_string(), p.map.to_string());
        }
        None => report.require("φ_k is not transverse to h^-1(0)", false),
    }
    for (name, expr) in &p.eliminated {
        report.note(format!("{name} = {expr}"));
    }
    if let Some(s) = simplified(form, k) {
        report.note(format!("after coordinate changes in source and target this becomes {s}"));
    }
    Ok(PullbackOutcome { pullback: Some(p), report })
}
