use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use super::{JetBasis, JetError};
use crate::algebra::{PolyVec, Rational};
use crate::linalg::{axpy, Echelon, SparseVec};

/// A linear subspace of a truncated jet module, stored in reduced row
/// echelon form. Equal subspaces have identical rows.
#[derive(Clone)]
pub struct Subspace {
    ambient: Arc<JetBasis>,
    rows: Vec<SparseVec>,
    pivot_row: BTreeMap<usize, usize>,
}

impl Subspace {
    fn from_echelon(ambient: &Arc<JetBasis>, ech: Echelon) -> Self {
        let rows = ech.into_rref();
        let pivot_row = rows.iter().enumerate().map(|(i, r)| (r[0].0, i)).collect();
        Subspace { ambient: ambient.clone(), rows, pivot_row }
    }

    pub fn zero(ambient: &Arc<JetBasis>) -> Self {
        Self::from_echelon(ambient, Echelon::new())
    }

    pub fn full(ambient: &Arc<JetBasis>) -> Self {
        Self::from_columns(ambient, 0..ambient.dim())
    }

    /// `M_d`: all monomial vectors of standard degree exactly `d`.
    pub fn homogeneous(ambient: &Arc<JetBasis>, d: u32) -> Self {
        Self::from_columns(ambient, ambient.degree_columns(d))
    }

    fn from_columns(ambient: &Arc<JetBasis>, cols: impl Iterator<Item = usize>) -> Self {
        let one: Rational = num_traits::One::one();
        let rows: Vec<SparseVec> = cols.map(|c| alloc::vec![(c, one.clone())]).collect();
        let pivot_row = rows.iter().enumerate().map(|(i, r)| (r[0].0, i)).collect();
        Subspace { ambient: ambient.clone(), rows, pivot_row }
    }

    /// Plain linear span of the given vectors (after truncation).
    pub fn span(ambient: &Arc<JetBasis>, vectors: &[PolyVec]) -> Result<Self, JetError> {
        module_span(&[], vectors, ambient)
    }

    pub fn ambient(&self) -> &Arc<JetBasis> {
        &self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r[0].0)
    }

    pub fn is_pivot(&self, column: usize) -> bool {
        self.pivot_row.contains_key(&column)
    }

    /// Basis rows as vectors, monic at their pivots.
    pub fn basis(&self) -> Vec<PolyVec> {
        self.rows.iter().map(|r| self.ambient.to_polyvec(r)).collect()
    }

    /// Row `i` as dense coordinates.
    pub fn row_dense(&self, i: usize) -> Vec<Rational> {
        let mut dense = alloc::vec![num_traits::Zero::zero(); self.ambient.dim()];
        for (c, v) in &self.rows[i] {
            dense[*c] = v.clone();
        }
        dense
    }

    pub(crate) fn contains_sparse(&self, v: &SparseVec) -> bool {
        let mut r = v.clone();
        for (c, val) in v {
            if let Some(&i) = self.pivot_row.get(c) {
                r = axpy(&r, val, &self.rows[i]);
            }
        }
        r.is_empty()
    }

    /// Membership of `truncate(v, deg)`. Panics if `v` lives in another
    /// variable space or has the wrong number of components.
    pub fn contains(&self, v: &PolyVec) -> bool {
        let s = self.ambient.sparse(v).expect("vector matches jet basis");
        self.contains_sparse(&s)
    }

    pub fn try_contains(&self, v: &PolyVec) -> Result<bool, JetError> {
        Ok(self.contains_sparse(&self.ambient.sparse(v)?))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), JetError> {
        if self.ambient.same_as(&other.ambient) {
            Ok(())
        } else {
            Err(JetError::AmbientMismatch)
        }
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, JetError> {
        self.check_ambient(other)?;
        Ok(self.rows.iter().all(|r| other.contains_sparse(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, JetError> {
        self.check_ambient(other)?;
        let mut ech = Echelon::new();
        for r in self.rows.iter().chain(&other.rows) {
            ech.insert(r);
        }
        Ok(Self::from_echelon(&self.ambient, ech))
    }

    /// `self + span(vectors)`.
    pub fn extend(&self, vectors: &[PolyVec]) -> Result<Subspace, JetError> {
        let mut ech = Echelon::new();
        for r in &self.rows {
            ech.insert(r);
        }
        for v in vectors {
            ech.insert(&self.ambient.sparse(v)?);
        }
        Ok(Self::from_echelon(&self.ambient, ech))
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient.same_as(&other.ambient) && self.rows == other.rows
    }
}

impl Eq for Subspace {}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subspace")
            .field("dim", &self.ambient.dim())
            .field("rank", &self.rank())
            .field("basis", &self.basis())
            .finish()
    }
}

/// Span of every `truncate(m * g, d)` for `g` in `generators` and monomials
/// `|m| ≤ d`, together with the plain vectors `extra_vectors`.
pub fn module_span(
    generators: &[PolyVec],
    extra_vectors: &[PolyVec],
    ambient: &Arc<JetBasis>,
) -> Result<Subspace, JetError> {
    let full = ambient.dim();
    let mut ech = Echelon::new();
    for v in extra_vectors {
        ech.insert(&ambient.sparse(v)?);
    }
    for g in generators {
        // validates the space once; monomial shifts below reuse it
        ambient.sparse(g)?;
        let Some(order) = g.order() else { continue };
        if order > ambient.deg() {
            continue;
        }
        for m in ambient.monomials_up_to(ambient.deg() - order) {
            if ech.rank() == full {
                break;
            }
            ech.insert(&ambient.sparse_shifted(g, Some(m)));
        }
    }
    Ok(Subspace::from_echelon(ambient, ech))
}

/// Dimension of `ambient / S` and the monomial vectors at non-pivot columns,
/// which span a complement of `S`.
pub fn quotient_dim(s: &Subspace) -> (usize, Vec<PolyVec>) {
    let amb = &s.ambient;
    let normal: Vec<PolyVec> = (0..amb.dim()).filter(|c| !s.is_pivot(*c)).map(|c| amb.basis_vector(c)).collect();
    (normal.len(), normal)
}

/// A minimal set `R` of monic vectors from `M` with `M ⊆ S + span(R)`:
/// the rows of `M` that are independent modulo `S`, in echelon order.
/// When `M` is a homogeneous block the result is homogeneous monomials.
pub fn homogeneous_complement(s: &Subspace, m: &Subspace) -> Result<Vec<PolyVec>, JetError> {
    s.check_ambient(m)?;
    let mut ech = Echelon::new();
    for r in &s.rows {
        ech.insert(r);
    }
    let mut out = Vec::new();
    for r in &m.rows {
        if ech.insert(r) {
            out.push(s.ambient.to_polyvec(r));
        }
    }
    Ok(out)
}
