//! The two one-parameter families of germs of codimension `l`:
//! `U_{k-2} + V_{k-1}^l` and `V_{k-1} + U_{k-3} + U_{k-2}^l`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{list, opt, ClassifyError, VerificationReport};
use crate::algebra::{parse_germ, parse_poly, PolyVec};
use crate::crosscap::CrossCapContext;
use crate::equivalence::{
    codimension, complete_transversal, determinacy_bound, tangent_space, Codim, DeterminacyMode, Variant,
    DEFAULT_MAX_DEGREE,
};
use crate::jetspace::module_span;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalingForm {
    /// `U_{k-2} + V_{k-1}^l`, `k ≥ 3`.
    PowerOfV,
    /// `V_{k-1} + U_{k-3} + U_{k-2}^l`, `k ≥ 4`.
    PowerOfU,
}

impl ScalingForm {
    pub fn name(self) -> &'static str {
        match self {
            ScalingForm::PowerOfV => "power-of-v",
            ScalingForm::PowerOfU => "power-of-u",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        [ScalingForm::PowerOfV, ScalingForm::PowerOfU].into_iter().find(|f| f.name() == s)
    }

    fn min_k(self) -> usize {
        match self {
            ScalingForm::PowerOfV => 3,
            ScalingForm::PowerOfU => 4,
        }
    }

    /// The germ, its `(l-1)`-jet, the expected transversal monomial and the
    /// generators of the monomial ideal equal to its tangent space.
    fn data(self, k: usize, l: u32) -> (String, String, String, Vec<String>) {
        let mut ideal: Vec<String> = Vec::new();
        match self {
            ScalingForm::PowerOfV => {
                let top = format!("V{}^{l}", k - 1);
                ideal.extend((1..=k - 2).map(|i| format!("U{i}")));
                ideal.extend((1..k - 1).map(|i| format!("V{i}")));
                ideal.push(top.clone());
                ideal.extend([String::from("W1"), String::from("W2")]);
                (format!("U{} + {top}", k - 2), format!("U{}", k - 2), top, ideal)
            }
            ScalingForm::PowerOfU => {
                let top = format!("U{}^{l}", k - 2);
                ideal.extend((1..k - 2).map(|i| format!("U{i}")));
                ideal.push(top.clone());
                ideal.extend((1..k).map(|i| format!("V{i}")));
                ideal.extend([String::from("W1"), String::from("W2")]);
                let jet = format!("V{} + U{}", k - 1, k - 3);
                (format!("{jet} + {top}"), jet, top, ideal)
            }
        }
    }
}

/// Checks that the form at `(k, l)` has codimension `l`, is `l`-determined,
/// has tangent space equal to the displayed monomial ideal, and that the
/// `l`-complete transversal of its `(l-1)`-jet is the single top monomial.
pub fn verify_scaling_family(k: usize, l: u32, form: ScalingForm) -> Result<VerificationReport, ClassifyError> {
    if k < form.min_k() || l < 2 {
        return Err(ClassifyError::Range(format!(
            "{} needs k ≥ {} and l ≥ 2, got k = {k}, l = {l}",
            form.name(),
            form.min_k()
        )));
    }
    let ctx = CrossCapContext::new(k)?;
    let vs = ctx.target_vars();
    let theta = ctx.theta_v();
    let (germ, jet, top, ideal) = form.data(k, l);
    let h = parse_germ(&germ, vs)?;
    let jet = parse_germ(&jet, vs)?;
    let mut report = VerificationReport::new(format!("scaling/{}/k={k}/l={l}", form.name()), Some(k)).with_germ(&h);

    let codim = codimension(&theta, &h, DEFAULT_MAX_DEGREE)?;
    report.codim = Some(codim.codim);
    report.normal_basis = codim.normal_basis.clone();
    report.compare("codimension", Codim::Finite(l as usize), codim.codim);

    let det = determinacy_bound(&theta, &h, DeterminacyMode::ViaKe, DEFAULT_MAX_DEGREE)?;
    report.determinacy = det;
    report.require(&format!("determined at degree at most {l}"), det.is_some_and(|d| d <= l));
    report.note(format!("least certified determinacy degree: {}", opt(det)));

    // one degree past l so the ideal's top generator and its multiples show
    let d = l + 1;
    let t = tangent_space(&theta, &h, Variant::Extended, d)?;
    let gens: Vec<PolyVec> =
        ideal.iter().map(|g| parse_poly(g, vs).map(|p| PolyVec::single(vs, 1, 0, p))).collect::<Result<_, _>>()?;
    let expected = module_span(&gens, &[], t.ambient()).map_err(crate::equivalence::EquivalenceError::from)?;
    report.require(&format!("tangent space equals <{}> at degree {d}", ideal.join(", ")), t == expected);
    if t != expected {
        let missing: Vec<&str> =
            ideal.iter().zip(&gens).filter(|(_, g)| !t.contains(g)).map(|(n, _)| n.as_str()).collect();
        let extra: Vec<String> =
            t.basis().into_iter().filter(|b| !expected.contains(b)).map(|b| format!("{b}")).collect();
        report.note(format!("not in the tangent space: {}", missing.join(", ")));
        report.note(format!("tangent space rows outside the ideal: {}", extra.join(", ")));
    }

    let transversal = complete_transversal(&theta, &jet, l)?;
    let want = [PolyVec::single(vs, 1, 0, parse_poly(&top, vs)?)];
    report.compare("complete transversal of the (l-1)-jet", list(&want), list(&transversal));
    report.transversal = transversal;
    Ok(report)
}
