//! ⱽ𝒦 tangent spaces and the invariants read off them.
//!
//! Every computation happens in a truncated jet module `θ(h)/𝔪^{d+1}θ(h)`.
//! Inclusions of infinite modules are certified from a single graded piece
//! by Nakayama: if `𝔪^d θ(h) ⊆ T + 𝔪^{d+1} θ(h)` for an `𝒪`-module `T`,
//! then `𝔪^d θ(h) ⊆ T`.

mod theta;

use alloc::vec::Vec;

use thiserror::Error;

use crate::algebra::{apply_derivation, AlgebraError, GermMap, Monomial, PolyVec};
use crate::jetspace::{homogeneous_complement, module_span, quotient_dim, JetBasis, JetError, Subspace};

pub use theta::ThetaV;

pub const DEFAULT_MAX_DEGREE: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquivalenceError {
    #[error("germ and vector fields use different variable spaces")]
    VariableMismatch,
    #[error("field {index} has {found} components, expected {expected}")]
    FieldLength { index: usize, expected: usize, found: usize },
    #[error("field {index} does not vanish at the origin")]
    FieldAtOrigin { index: usize },
    #[error("truncation degree must be at least {min}, got {found}")]
    Degree { min: u32, found: u32 },
    #[error("jet has degree {degree}, transversal degree {d} needs at most {}", d - 1)]
    JetDegree { degree: u32, d: u32 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Jet(#[from] JetError),
}

/// Which tangent space to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `{ξ(h) : ξ ∈ Θ_V} + h*(𝔪_q)θ(h)`.
    Extended,
    /// The part of the extended space reachable through fields whose flows
    /// have 1-jet the identity, plus `𝔪_p h*(𝔪_q)θ(h)`.
    OneJetIdentity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeterminacyMode {
    ViaK1,
    ViaKe,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Codim {
    Finite(usize),
    /// No certificate of finiteness up to the degree bound. This is not a
    /// proof that the codimension is infinite.
    NotCertified,
}

impl core::fmt::Display for Codim {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Codim::Finite(c) => write!(f, "{c}"),
            Codim::NotCertified => f.write_str("not certified"),
        }
    }
}

impl Codim {
    pub fn finite(self) -> Option<usize> {
        match self {
            Codim::Finite(c) => Some(c),
            Codim::NotCertified => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodimReport {
    pub codim: Codim,
    /// Monomial vectors spanning a complement of the tangent space.
    pub normal_basis: Vec<PolyVec>,
    /// Least `d` with `𝔪^d θ(h) ⊆ T_V𝒦_e(h) + 𝔪^{d+1} θ(h)`.
    pub stabilization_degree: Option<u32>,
    /// Determinacy degree certified through the extended tangent space,
    /// available when every field vanishes at the origin.
    pub determinacy: Option<u32>,
}

fn check(theta: &ThetaV, h: &GermMap) -> Result<(), EquivalenceError> {
    if **theta.vars() != **h.source() {
        return Err(EquivalenceError::VariableMismatch);
    }
    Ok(())
}

/// `h_i·e_j` for all `i, j`.
fn ideal_generators(h: &GermMap) -> Vec<PolyVec> {
    let q = h.target_dim();
    let vars = h.source();
    let mut out = Vec::with_capacity(q * q);
    for hi in h.components() {
        for j in 0..q {
            out.push(PolyVec::single(vars, q, j, hi.clone()));
        }
    }
    out
}

fn times_maximal_ideal(vectors: &[PolyVec]) -> Vec<PolyVec> {
    let Some(first) = vectors.first() else { return Vec::new() };
    let vars = first.vars().clone();
    let n = vars.len();
    let mut out = Vec::with_capacity(n * vectors.len());
    for v in vectors {
        for a in 0..n {
            out.push(v.map(|p| p.mul_monomial(&Monomial::var(n, a))));
        }
    }
    out
}

/// Module generators of the requested tangent space.
pub fn tangent_generators(theta: &ThetaV, h: &GermMap, variant: Variant) -> Result<Vec<PolyVec>, EquivalenceError> {
    check(theta, h)?;
    let ideal = ideal_generators(h);
    match variant {
        Variant::Extended => {
            let mut gens: Vec<PolyVec> =
                theta.fields().iter().map(|xi| apply_derivation(xi, h)).collect::<Result<_, _>>()?;
            gens.extend(ideal);
            Ok(gens)
        }
        Variant::OneJetIdentity => {
            theta.require_vanishing()?;
            // ξ with ξ(0) = 0 and arbitrary linear part: 𝔪·ξ has flows
            // tangent to the identity. Constant combinations of fields
            // whose linear parts cancel qualify on their own.
            let applied: Vec<PolyVec> =
                theta.fields().iter().map(|xi| apply_derivation(xi, h)).collect::<Result<_, _>>()?;
            let mut gens = times_maximal_ideal(&applied);
            for kappa in theta.without_linear_part() {
                gens.push(apply_derivation(&kappa, h)?);
            }
            gens.extend(times_maximal_ideal(&ideal));
            Ok(gens)
        }
    }
}

/// The tangent space truncated at degree `d`, as a subspace of
/// `θ(h)/𝔪^{d+1}θ(h)`.
pub fn tangent_space(theta: &ThetaV, h: &GermMap, variant: Variant, d: u32) -> Result<Subspace, EquivalenceError> {
    if d < 1 {
        return Err(EquivalenceError::Degree { min: 1, found: d });
    }
    let gens = tangent_generators(theta, h, variant)?;
    let ambient = JetBasis::new(h.source(), h.target_dim(), d);
    Ok(module_span(&gens, &[], &ambient)?)
}

/// `M_d ⊆ T` in the degree-`d` jet space, with `T` returned for reuse.
fn saturates(theta: &ThetaV, h: &GermMap, variant: Variant, d: u32) -> Result<(bool, Subspace), EquivalenceError> {
    let t = tangent_space(theta, h, variant, d)?;
    let m = Subspace::homogeneous(t.ambient(), d);
    Ok((m.is_subspace_of(&t)?, t))
}

/// ⱽ𝒦_e-codimension of `h`, certified by the least degree `d ≤ max_degree`
/// at which the tangent space swallows all of `𝔪^d θ(h)`.
pub fn codimension(theta: &ThetaV, h: &GermMap, max_degree: u32) -> Result<CodimReport, EquivalenceError> {
    check(theta, h)?;
    let vanish = theta.require_vanishing().is_ok();
    for d in 1..=max_degree {
        let (ok, t) = saturates(theta, h, Variant::Extended, d)?;
        if ok {
            let (c, normal_basis) = quotient_dim(&t);
            return Ok(CodimReport {
                codim: Codim::Finite(c),
                normal_basis,
                stabilization_degree: Some(d),
                determinacy: vanish.then_some(d),
            });
        }
    }
    Ok(CodimReport {
        codim: Codim::NotCertified,
        normal_basis: Vec::new(),
        stabilization_degree: None,
        determinacy: None,
    })
}

/// Least `l ≤ max_degree` certified by the chosen criterion, or `None`.
///
/// `ViaK1`: `𝔪^{l+1}θ(h) ⊆ T_V𝒦_1(h) + 𝔪^{l+2}θ(h)`.
/// `ViaKe`: `𝔪^l θ(h) ⊆ T_V𝒦_e(h) + 𝔪^{l+1}θ(h)`, valid only when all
/// fields vanish at the origin.
pub fn determinacy_bound(
    theta: &ThetaV,
    h: &GermMap,
    mode: DeterminacyMode,
    max_degree: u32,
) -> Result<Option<u32>, EquivalenceError> {
    check(theta, h)?;
    theta.require_vanishing()?;
    for l in 1..=max_degree {
        let ok = match mode {
            DeterminacyMode::ViaKe => saturates(theta, h, Variant::Extended, l)?.0,
            DeterminacyMode::ViaK1 => saturates(theta, h, Variant::OneJetIdentity, l + 1)?.0,
        };
        if ok {
            return Ok(Some(l));
        }
    }
    Ok(None)
}

/// Homogeneous degree-`d` monomial vectors completing
/// `T_V𝒦_1(jet) + 𝔪^{d+1}θ` to all of `𝔪^d θ`. Every germ with
/// `(d-1)`-jet equal to `jet` is equivalent to one whose `d`-jet is `jet`
/// plus a combination of the returned vectors.
pub fn complete_transversal(theta: &ThetaV, jet: &GermMap, d: u32) -> Result<Vec<PolyVec>, EquivalenceError> {
    if d < 2 {
        return Err(EquivalenceError::Degree { min: 2, found: d });
    }
    if let Some(degree) = jet.degree() {
        if degree > d - 1 {
            return Err(EquivalenceError::JetDegree { degree, d });
        }
    }
    let t = tangent_space(theta, jet, Variant::OneJetIdentity, d)?;
    let m = Subspace::homogeneous(t.ambient(), d);
    Ok(homogeneous_complement(&t, &m)?)
}

/// Whether `e_i ∉ T_V𝒦_e(h)` for every `i`, checked at truncation `d`.
pub fn unit_vectors_excluded(theta: &ThetaV, h: &GermMap, d: u32) -> Result<bool, EquivalenceError> {
    let t = tangent_space(theta, h, Variant::Extended, d)?;
    let q = h.target_dim();
    Ok((0..q).all(|i| !t.contains(&PolyVec::unit(h.source(), q, i))))
}
