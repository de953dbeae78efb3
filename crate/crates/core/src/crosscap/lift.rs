//! Lifting target vector fields over `φ_k`.
//!
//! A field `ξ` on the target is liftable when there is a source field `η`
//! with `dφ(η) = ξ ∘ φ`. Since `φ_k` is quasihomogeneous, the equation
//! splits by weighted degree: the part of `ξ ∘ φ` in slot `b` with weight
//! `wt(X_b) + s` can only come from the part of `η_a` with weight
//! `wt(x_a) + s`. Each shift `s` is one finite linear system.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_traits::Zero;

use super::CrossCapContext;
use crate::algebra::{Monomial, Poly, PolyVec};
use crate::linalg::{solve, SparseVec};

/// A source field `eta` with `dφ(eta) = ξ ∘ φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lift {
    pub eta: PolyVec,
}

/// No lift exists: the system for the given weight shift is inconsistent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftFailure {
    pub shift: i64,
}

impl core::fmt::Display for LiftFailure {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "no lift in weighted degree shift {}", self.shift)
    }
}

fn compose_field(ctx: &CrossCapContext, xi: &PolyVec) -> Vec<Poly> {
    xi.components().iter().map(|c| c.compose(ctx.phi().components()).expect("target arity")).collect()
}

/// `dφ(η)` as polynomials on the source.
pub(crate) fn pushforward(ctx: &CrossCapContext, eta: &PolyVec) -> Vec<Poly> {
    let src = ctx.source_vars();
    ctx.phi()
        .components()
        .iter()
        .map(|phib| {
            eta.components()
                .iter()
                .enumerate()
                .fold(Poly::zero(src), |acc, (a, ea)| &acc + &(ea * &phib.partial_derivative(a)))
        })
        .collect()
}

pub fn verify_liftable(ctx: &CrossCapContext, xi: &PolyVec) -> Result<Lift, LiftFailure> {
    let src = ctx.source_vars();
    let tw = ctx.target_vars().weights();
    let sw = src.weights();
    let target = compose_field(ctx, xi);

    let jac: Vec<Vec<Poly>> =
        (0..src.len()).map(|a| ctx.phi().components().iter().map(|p| p.partial_derivative(a)).collect()).collect();

    let mut shifts = BTreeSet::new();
    for (b, p) in target.iter().enumerate() {
        for (m, _) in p.terms() {
            shifts.insert(i64::from(m.weighted_degree(sw)) - i64::from(tw[b]));
        }
    }

    let mut eta: Vec<Poly> = (0..src.len()).map(|_| Poly::zero(src)).collect();
    for s in shifts {
        let mut eq_index: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
        let mut key = |b: usize, m: &Monomial| {
            let n = eq_index.len();
            *eq_index.entry((b, m.clone())).or_insert(n)
        };
        let mut unknowns: Vec<(usize, Monomial)> = Vec::new();
        let mut columns: Vec<SparseVec> = Vec::new();
        for a in 0..src.len() {
            let w = i64::from(sw[a]) + s;
            if w < 0 {
                continue;
            }
            for mu in Monomial::all_of_weighted_degree(sw, w as u32) {
                let mut col: SparseVec = Vec::new();
                for (b, d) in jac[a].iter().enumerate() {
                    for (m, c) in d.terms() {
                        col.push((key(b, &m.mul(&mu)), c.clone()));
                    }
                }
                if col.is_empty() {
                    continue;
                }
                col.sort_by_key(|e| e.0);
                columns.push(col);
                unknowns.push((a, mu));
            }
        }
        let mut rhs: SparseVec = Vec::new();
        for (b, p) in target.iter().enumerate() {
            for (m, c) in p.terms() {
                if i64::from(m.weighted_degree(sw)) - i64::from(tw[b]) == s {
                    rhs.push((key(b, m), c.clone()));
                }
            }
        }
        rhs.sort_by_key(|e| e.0);
        let x = solve(&columns, &rhs).ok_or(LiftFailure { shift: s })?;
        for ((a, mu), c) in unknowns.into_iter().zip(x) {
            if !c.is_zero() {
                eta[a].add_term(mu, c);
            }
        }
    }
    let eta = PolyVec::new(src, eta).expect("same space");
    debug_assert!(pushforward(ctx, &eta) == target, "graded lift must be exact");
    Ok(Lift { eta })
}
