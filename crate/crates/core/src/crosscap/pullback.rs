//! Sharp pullback `h^#(φ_k)`: `φ_k` restricted to `(h∘φ_k)^{-1}(0)`,
//! mapping into `h^{-1}(0)`.
//!
//! Only explicit eliminations are supported. For each component of
//! `h ∘ φ_k` we look for a source coordinate `u_i` or `v_i` that appears
//! only in a single linear term; that coordinate
//! is solved for and substituted everywhere. Its target coordinate `U_i`
//! or `V_i` is then dropped from the image, since on `h^{-1}(0)` it is a
//! function of the others.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;
use thiserror::Error;

use super::CrossCapContext;
use crate::algebra::{GermMap, Monomial, Poly, Rational, VariableSpace};
use crate::linalg::Echelon;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PullbackError {
    #[error("germ is not defined on the target of the cross cap")]
    WrongSpace,
    #[error("φ_k is not transverse to h^-1(0): d(h∘φ_k)(0) has rank {rank} < {q}")]
    NotTransverse { rank: usize, q: usize },
    #[error("component {component} of h∘φ_k has no eliminable coordinate")]
    NoPivot { component: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharpPullback {
    /// The pulled-back germ on the remaining source coordinates.
    pub map: GermMap,
    /// Names of the retained target coordinates, one per component of `map`.
    pub target_names: Vec<String>,
    /// Eliminated source coordinate and its expression in the remaining ones.
    pub eliminated: Vec<(String, Poly)>,
}

impl SharpPullback {
    pub fn source_dim(&self) -> usize {
        self.map.source_dim()
    }

    pub fn target_dim(&self) -> usize {
        self.map.target_dim()
    }
}

fn linear_rank(g: &[Poly]) -> usize {
    let n = g.first().map_or(0, |p| p.vars().len());
    let mut ech = Echelon::new();
    for p in g {
        let row: Vec<(usize, Rational)> =
            (0..n).map(|i| (i, p.coefficient(&Monomial::var(n, i)))).filter(|(_, c)| !c.is_zero()).collect();
        ech.insert(&row);
    }
    ech.rank()
}

/// If `g = c·x_a + R` with `x_a` absent from `R`, returns `x_a = -R/c`.
fn solve_for(g: &Poly, a: usize) -> Option<Poly> {
    let n = g.vars().len();
    let lin = Monomial::var(n, a);
    let c = g.coefficient(&lin);
    if c.is_zero() {
        return None;
    }
    let rest = g.filter_terms(|m| *m != lin);
    if rest.contains_var(a) {
        return None;
    }
    Some(rest.scale(&-c.recip()))
}

pub fn sharp_pullback(ctx: &CrossCapContext, h: &GermMap) -> Result<SharpPullback, PullbackError> {
    if **h.source() != **ctx.target_vars() {
        return Err(PullbackError::WrongSpace);
    }
    let src = ctx.source_vars();
    let q = h.target_dim();
    let mut g: Vec<Poly> =
        h.components().iter().map(|c| c.compose(ctx.phi().components()).expect("target arity")).collect();

    let rank = linear_rank(&g);
    if rank < q {
        return Err(PullbackError::NotTransverse { rank, q });
    }

    // candidate source coordinates: v_{k-1}..v_1 then u_{k-2}..u_1
    let y = src.len() - 1;
    let candidates: Vec<usize> = (0..y).rev().collect();
    let mut solved: BTreeMap<usize, Poly> = BTreeMap::new();
    for i in 0..q {
        let gi = g[i].clone();
        let found =
            candidates.iter().filter(|a| !solved.contains_key(a)).find_map(|&a| solve_for(&gi, a).map(|e| (a, e)));
        let Some((a, expr)) = found else {
            return Err(PullbackError::NoPivot { component: i });
        };
        let mut sub: BTreeMap<usize, Poly> = (0..src.len()).map(|b| (b, Poly::var(src, b))).collect();
        sub.insert(a, expr.clone());
        for e in solved.values_mut() {
            *e = e.substitute(&sub, src).expect("source space");
        }
        for gj in g.iter_mut().skip(i + 1) {
            *gj = gj.substitute(&sub, src).expect("source space");
        }
        solved.insert(a, expr);
    }

    let remaining: Vec<usize> = (0..src.len()).filter(|a| !solved.contains_key(a)).collect();
    let new_src = VariableSpace::new(
        remaining.iter().map(|&a| src.name(a).into()).collect::<Vec<String>>(),
        remaining.iter().map(|&a| src.weight(a)),
    )
    .expect("subset of valid names");
    let mut to_new: BTreeMap<usize, Poly> =
        remaining.iter().enumerate().map(|(n, &a)| (a, Poly::var(&new_src, n))).collect();
    let mut eliminated = Vec::new();
    for (&a, e) in &solved {
        let e_new = e.substitute(&to_new, &new_src).expect("only remaining coordinates");
        eliminated.push((String::from(src.name(a)), e_new));
    }
    for (&a, e) in &solved {
        let e_new = e.substitute(&to_new, &new_src).expect("only remaining coordinates");
        to_new.insert(a, e_new);
    }

    // every u_i, v_i is the identity component of φ_k, so eliminating source
    // coordinate a drops target coordinate a
    let tnames = ctx.target_vars();
    let mut comps = Vec::new();
    let mut target_names = Vec::new();
    for (b, phib) in ctx.phi().components().iter().enumerate() {
        if solved.contains_key(&b) {
            continue;
        }
        comps.push(phib.substitute(&to_new, &new_src).expect("all coordinates assigned"));
        target_names.push(String::from(tnames.name(b)));
    }
    let map = GermMap::new(&new_src, comps).expect("φ_k and eliminations vanish at 0");
    Ok(SharpPullback { map, target_names, eliminated })
}
