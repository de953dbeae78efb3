//! End-to-end acceptance checks, one line per criterion.
//!
//! Runs without the libtest harness. A criterion either passes, fails in a
//! way that is known and documented (the process still succeeds), or fails
//! unexpectedly (the process exits nonzero). A known failure that starts
//! passing also counts as unexpected, so the list below cannot go stale.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use crosscap_core::classify::{
    classify_codim_two, family_necessity_counterexample, pullback_normal_form, verify_scaling_family, NormalForm,
    ScalingForm, VerificationReport, NEGATIVE_SAMPLES,
};
use crosscap_core::crosscap::verify_liftable;
use crosscap_core::equivalence::{codimension, tangent_generators, tangent_space, Codim};
use crosscap_core::jetspace::module_span;
use crosscap_core::{
    parse_germ, CrossCapContext, DegreeMode, Family, GermMap, Monomial, Poly, PolyVec, Rational, Variant,
};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// What a criterion found: identifiers of the failing items, and lines of
/// detail printed under the verdict.
#[derive(Default)]
struct Findings {
    failures: Vec<String>,
    details: Vec<String>,
}

impl Findings {
    fn fail(&mut self, id: impl Into<String>) {
        self.failures.push(id.into());
    }

    fn detail(&mut self, line: impl Into<String>) {
        self.details.push(line.into());
    }

    /// Folds a verification report in, one failure per failed check.
    fn report(&mut self, r: &VerificationReport) {
        for c in r.checks.iter().filter(|c| !c.passed) {
            self.fail(format!("{}: {}", r.claim_id, c.name));
            self.detail(format!("{}: {} expected {}, computed {}", r.claim_id, c.name, c.expected, c.computed));
        }
        if r.checks.is_empty() {
            self.fail(format!("{}: no checks ran", r.claim_id));
        }
    }
}

enum Known {
    None,
    /// The criterion as a whole is known not to hold.
    Whole(&'static str),
    /// Exactly these failures, identified by prefix, are known.
    Exactly(&'static str, &'static [&'static str]),
}

struct Criterion {
    name: &'static str,
    known: Known,
    run: fn() -> Findings,
}

#[derive(Debug, PartialEq, Eq)]
enum Verdict {
    Pass,
    KnownFail,
    Unexpected,
}

fn judge(known: &Known, f: &Findings) -> Verdict {
    match (known, f.failures.is_empty()) {
        (Known::None, true) => Verdict::Pass,
        (Known::None, false) => Verdict::Unexpected,
        (_, true) => Verdict::Unexpected,
        (Known::Whole(_), false) => Verdict::KnownFail,
        (Known::Exactly(_, ids), false) => {
            let each_known = f.failures.iter().all(|x| ids.iter().any(|p| x.starts_with(p)));
            let each_seen = ids.iter().all(|p| f.failures.iter().any(|x| x.starts_with(p)));
            if each_known && each_seen {
                Verdict::KnownFail
            } else {
                Verdict::Unexpected
            }
        }
    }
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

// vector fields

/// The `s` with every term of component `a` of weighted degree `w_a + s`;
/// `None` if there is no such `s`, `Some(None)` for the zero field.
fn weighted_shift(xi: &PolyVec) -> Option<Option<i64>> {
    let w = xi.vars().weights();
    let mut shift = None;
    for (a, c) in xi.components().iter().enumerate() {
        for (m, _) in c.terms() {
            let s = i64::from(m.weighted_degree(w)) - i64::from(w[a]);
            match shift {
                None => shift = Some(s),
                Some(t) if t != s => return None,
                _ => {}
            }
        }
    }
    Some(shift)
}

/// `dφ(η)` and `ξ∘φ` recomputed here from the public ring operations.
fn lift_holds(ctx: &CrossCapContext, xi: &PolyVec, eta: &PolyVec) -> bool {
    let src = ctx.source_vars();
    let phi = ctx.phi().components();
    phi.iter().zip(xi.components()).all(|(phib, xib)| {
        let push = eta
            .components()
            .iter()
            .enumerate()
            .fold(Poly::zero(src), |acc, (a, ea)| &acc + &(ea * &phib.partial_derivative(a)));
        push == xib.compose(phi).expect("arity")
    })
}

fn fields_lift_and_are_weighted_homogeneous() -> Findings {
    let mut f = Findings::default();
    for k in 2..=6 {
        let ctx = CrossCapContext::new(k).expect("k ≥ 2");
        if ctx.fields().len() != 1 + 3 * (k - 1) {
            f.fail(format!("k={k}: {} fields", ctx.fields().len()));
        }
        for field in ctx.fields() {
            let id = format!("k={k} {}", field.label());
            match verify_liftable(&ctx, &field.components) {
                Ok(l) if lift_holds(&ctx, &field.components, &l.eta) => {}
                Ok(_) => f.fail(format!("{id}: returned lift does not satisfy dφ(η) = ξ∘φ")),
                Err(e) => f.fail(format!("{id}: {e}")),
            }
            match weighted_shift(&field.components) {
                Some(Some(_)) => {}
                _ => f.fail(format!("{id}: not weighted homogeneous")),
            }
            if !field.components.vanishes_at_origin() {
                f.fail(format!("{id}: does not vanish at 0"));
            }
        }
        f.detail(format!("k={k}: {} fields lift exactly", ctx.fields().len()));
    }
    f
}

fn family_components_have_degree_two() -> Findings {
    let mut f = Findings::default();
    let (mut total, mut not_forms) = (0, 0);
    for k in 2..=6 {
        let ctx = CrossCapContext::new(k).expect("k ≥ 2");
        for field in ctx.fields().iter().filter(|x| x.family != Family::Euler) {
            total += 1;
            let comps = field.components.components();
            let range = |c: &Poly| (c.order(DegreeMode::Standard), c.degree(DegreeMode::Standard));
            if comps.iter().any(|c| !c.is_zero() && range(c) != (Some(2), Some(2))) {
                not_forms += 1;
            }
            // the literal reading: each nonzero component has degree 2
            if comps.iter().any(|c| c.degree(DegreeMode::Standard).is_some_and(|d| d != 2)) {
                let shown: Vec<String> = comps
                    .iter()
                    .map(|c| match range(c) {
                        (Some(o), Some(d)) if o == d => d.to_string(),
                        (Some(o), Some(d)) => format!("{o}..{d}"),
                        _ => String::from("-"),
                    })
                    .collect();
                f.fail(format!("k={k} {}", field.label()));
                if k <= 3 {
                    f.detail(format!("k={k} {}: component degrees [{}]", field.label(), shown.join(", ")));
                }
            }
        }
    }
    f.detail(format!("{} of {total} family fields have a nonzero component of degree other than 2", f.failures.len()));
    f.detail(format!("{not_forms} of {total} have a component that is not a quadratic form"));
    f
}

// classification

fn scaling_grid() -> Findings {
    let mut f = Findings::default();
    let grid = [
        (3, 2, ScalingForm::PowerOfV),
        (3, 3, ScalingForm::PowerOfV),
        (4, 2, ScalingForm::PowerOfV),
        (4, 3, ScalingForm::PowerOfV),
        (5, 2, ScalingForm::PowerOfV),
        (4, 2, ScalingForm::PowerOfU),
        (4, 3, ScalingForm::PowerOfU),
        (5, 2, ScalingForm::PowerOfU),
    ];
    for (k, l, form) in grid {
        match verify_scaling_family(k, l, form) {
            Ok(r) => {
                f.report(&r);
                if !r.passed() {
                    for n in &r.notes {
                        f.detail(format!("{}: {n}", r.claim_id));
                    }
                }
            }
            Err(e) => f.fail(format!("scaling k={k} l={l}: {e}")),
        }
    }
    f
}

fn codim_two_normal_forms() -> Findings {
    let mut f = Findings::default();
    let mut seen = BTreeSet::new();
    for k in 2..=6 {
        match classify_codim_two(k) {
            Ok(rs) => {
                for r in rs.iter().filter(|r| !r.claim_id.contains("/no-pair/")) {
                    f.report(r);
                    seen.insert(r.claim_id.split('/').nth(1).unwrap_or("").to_string());
                }
            }
            Err(e) => f.fail(format!("k={k}: {e}")),
        }
    }
    for form in NormalForm::ALL {
        if !seen.contains(form.name()) {
            f.fail(format!("{} never checked", form.name()));
        }
    }
    f.detail(format!("{} forms, each at codimension 2 with its stated determinacy", seen.len()));
    f
}

fn no_codim_two_pairs_at_k5() -> Findings {
    let mut f = Findings::default();
    if NEGATIVE_SAMPLES < 20 {
        f.fail(format!("only {NEGATIVE_SAMPLES} samples"));
    }
    match classify_codim_two(5).map(|rs| rs.into_iter().find(|r| r.claim_id == "codim-two/no-pair/k=5")) {
        Ok(Some(r)) => {
            f.report(&r);
            if r.checks.len() != 2 {
                f.fail(format!("expected containment and codimension checks, found {}", r.checks.len()));
            }
            f.details.extend(r.notes.iter().cloned());
        }
        Ok(None) => f.fail("no negative report at k=5"),
        Err(e) => f.fail(e.to_string()),
    }
    f
}

fn all_three_families_needed() -> Findings {
    let mut f = Findings::default();
    match family_necessity_counterexample() {
        Ok(r) => {
            f.report(&r);
            let reduced = r.checks.iter().filter(|c| c.name.contains("reduces to a multiple")).count();
            if reduced != 6 {
                f.fail(format!("{reduced} reduced vectors checked, expected 6"));
            }
            if r.codim != Some(Codim::Finite(2)) {
                f.fail("codimension is not 2");
            }
        }
        Err(e) => f.fail(e.to_string()),
    }
    f
}

fn pullbacks() -> Findings {
    let mut f = Findings::default();
    // the proof's raw display for h = V2 + W1, after replacing v2 by -W1
    let displayed = "u1, v1, y^3 + u1*y, -(y^3 + u1*y)*y^2 + v1*y";
    match pullback_normal_form(3, NormalForm::VPlusW) {
        Ok(out) => {
            f.report(&out.report);
            match out.pullback {
                Some(p) => {
                    let want = parse_germ(displayed, p.map.source()).expect("display parses");
                    if p.map != want {
                        f.fail(format!("raw map {} differs from the display", p.map));
                    }
                    f.detail(format!("v-plus-w at k=3: {}", p.map));
                }
                None => f.fail("v-plus-w: no pullback"),
            }
        }
        Err(e) => f.fail(format!("v-plus-w: {e}")),
    }
    let cases = [
        (3, NormalForm::UPlusVSquared),
        (4, NormalForm::UPlusVSquared),
        (5, NormalForm::UPlusVSquared),
        (6, NormalForm::UPlusVSquared),
        (4, NormalForm::VPlusUPlusUSquared),
        (5, NormalForm::VPlusUPlusUSquared),
        (6, NormalForm::VPlusUPlusUSquared),
        (3, NormalForm::PairUVW),
        (4, NormalForm::PairUUVW),
    ];
    for (k, form) in cases {
        match pullback_normal_form(k, form) {
            Ok(out) => {
                f.report(&out.report);
                match out.pullback {
                    Some(p) => {
                        let q = form.q();
                        if p.source_dim() != 2 * k - 2 - q || p.target_dim() != 2 * k - 1 - q {
                            f.fail(format!(
                                "{} k={k}: dimensions {} -> {}",
                                form.name(),
                                p.source_dim(),
                                p.target_dim()
                            ));
                        }
                    }
                    None => f.fail(format!("{} k={k}: no pullback", form.name())),
                }
            }
            Err(e) => f.fail(format!("{} k={k}: {e}", form.name())),
        }
    }
    match pullback_normal_form(2, NormalForm::WPlusVSquared) {
        Ok(out) if out.pullback.is_none() => {
            f.report(&out.report);
            f.details.extend(out.report.notes.iter().map(|n| format!("w-plus-v-squared at k=2: {n}")));
        }
        Ok(_) => f.fail("w-plus-v-squared at k=2: pullback unexpectedly defined"),
        Err(e) => f.fail(format!("w-plus-v-squared at k=2: {e}")),
    }
    f
}

// engine properties

const PROPERTY_INSTANCES: usize = 120;
const PROPERTY_SEED: u64 = 0xacce_97ed;

fn small_nonzero(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let c = rng.gen_range(-4i64..=4);
        if c != 0 {
            return rat(c, rng.gen_range(1..=3));
        }
    }
}

/// A germ with a dense random linear part in most components, plus a few
/// random terms of degree 2 or 3.
fn random_germ(rng: &mut ChaCha8Rng, ctx: &CrossCapContext) -> GermMap {
    let vs = ctx.target_vars();
    let n = vs.len();
    let q = rng.gen_range(1..=2);
    let comps = (0..q)
        .map(|_| {
            let mut p = Poly::zero(vs);
            if rng.gen_bool(0.8) {
                for i in 0..n {
                    if rng.gen_bool(0.7) {
                        p = &p + &Poly::var(vs, i).scale(&small_nonzero(rng));
                    }
                }
            }
            for _ in 0..rng.gen_range(1..=3) {
                let ms = Monomial::all_of_degree(n, rng.gen_range(2..=3));
                let m = ms.choose(rng).expect("nonempty").clone();
                p = &p + &Poly::monomial(vs, m, small_nonzero(rng));
            }
            p
        })
        .collect();
    GermMap::new(vs, comps).expect("same space")
}

fn engine_properties() -> Findings {
    let mut f = Findings::default();
    let mut rng = ChaCha8Rng::seed_from_u64(PROPERTY_SEED);
    let ctxs = [CrossCapContext::new(2).expect("k=2"), CrossCapContext::new(3).expect("k=3")];
    let (mut finite, mut zero) = (0, 0);
    for i in 0..PROPERTY_INSTANCES {
        let ctx = &ctxs[i % 2];
        let (low, high) = if ctx.k() == 2 { (4, 6) } else { (3, 5) };
        let theta = ctx.theta_v();
        let h = random_germ(&mut rng, ctx);
        let id = format!("#{i} k={} h=({h})", ctx.k());
        if h.components().iter().any(Poly::is_zero) {
            zero += 1;
        }

        for d in 1..=3 {
            let te = tangent_space(&theta, &h, Variant::Extended, d).expect("valid");
            let t1 = tangent_space(&theta, &h, Variant::OneJetIdentity, d).expect("valid");
            if !t1.is_subspace_of(&te).expect("same ambient") {
                f.fail(format!("{id}: T_1 not inside T_e at degree {d}"));
            }
        }

        let a = codimension(&theta, &h, low).expect("valid");
        if let Codim::Finite(c) = a.codim {
            finite += 1;
            let b = codimension(&theta, &h, high).expect("valid");
            if b != a {
                f.fail(format!("{id}: codim changes from {} to {} when max degree grows", a.codim, b.codim));
            }
            if c < h.target_dim() {
                f.fail(format!("{id}: codimension {c} below q = {}", h.target_dim()));
            }
        }

        let mut gens = tangent_generators(&theta, &h, Variant::Extended).expect("valid");
        gens.shuffle(&mut rng);
        let scaled: Vec<PolyVec> =
            gens.iter().map(|g| g.scale(&rat(rng.gen_range(1..=5), rng.gen_range(-3..=-1)))).collect();
        let te = tangent_space(&theta, &h, Variant::Extended, 2).expect("valid");
        let again = module_span(&scaled, &[], te.ambient()).expect("same ambient");
        if again != te {
            f.fail(format!("{id}: span depends on generator order"));
        }
    }
    f.detail(format!(
        "{PROPERTY_INSTANCES} seeded germs, {finite} with finite codimension, {zero} with a zero component"
    ));
    f
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            name: "every field of theta_V lifts exactly and is weighted homogeneous, k = 2..6",
            known: Known::None,
            run: fields_lift_and_are_weighted_homogeneous,
        },
        Criterion {
            name: "every family field has all components of standard degree 2",
            known: Known::Whole("the closed-form fields have linear terms, e.g. -3*W2 in the first field of family 1"),
            run: family_components_have_degree_two,
        },
        Criterion {
            name: "scaling families: codimension l, l-determined, tangent ideal, single-monomial transversal",
            known: Known::Exactly(
                "for V3 + U1 + U2^3 the tangent space contains W1 + 1/4*U2^2 but not W1",
                &["scaling/power-of-u/k=4/l=3: tangent space equals"],
            ),
            run: scaling_grid,
        },
        Criterion {
            name: "all eight codimension-two normal forms with their stated determinacy",
            known: Known::None,
            run: codim_two_normal_forms,
        },
        Criterion {
            name: "no codimension-two pair at k = 5 (seeded generic 1-jets)",
            known: Known::None,
            run: no_codim_two_pairs_at_k5,
        },
        Criterion {
            name: "the Euler-free tangent module of (V2 + W1, U1) needs all three families",
            known: Known::None,
            run: all_three_families_needed,
        },
        Criterion {
            name: "sharp pullbacks: displayed raw map, dimensions, transversality failure",
            known: Known::None,
            run: pullbacks,
        },
        Criterion {
            name: "engine properties: T_1 inside T_e, stable codimension, c >= q, canonical spans",
            known: Known::None,
            run: engine_properties,
        },
    ];

    let start = Instant::now();
    let (mut pass, mut known, mut unexpected) = (0, 0, 0);
    println!("acceptance: {} criteria, exact rational arithmetic", criteria.len());
    for c in &criteria {
        let t = Instant::now();
        let f = (c.run)();
        let v = judge(&c.known, &f);
        let secs = t.elapsed().as_secs_f64();
        match v {
            Verdict::Pass => {
                pass += 1;
                println!("PASS  {} ({secs:.1}s)", c.name);
            }
            Verdict::KnownFail => {
                known += 1;
                let why = match &c.known {
                    Known::Whole(w) | Known::Exactly(w, _) => *w,
                    Known::None => "",
                };
                println!("FAIL  {} ({secs:.1}s) [known: {why}]", c.name);
            }
            Verdict::Unexpected => {
                unexpected += 1;
                let what = if f.failures.is_empty() { "known failure no longer occurs" } else { "unexpected failure" };
                println!("FAIL  {} ({secs:.1}s) [{what}]", c.name);
                for x in &f.failures {
                    println!("      failure: {x}");
                }
            }
        }
        for d in &f.details {
            println!("      {d}");
        }
    }
    println!(
        "summary: {pass} passed, {known} known failures, {unexpected} unexpected, {:.1}s",
        start.elapsed().as_secs_f64()
    );
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
