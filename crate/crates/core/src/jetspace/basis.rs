use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::ops::Range;

use num_traits::Zero;

use super::JetError;
use crate::algebra::{Monomial, Poly, PolyVec, Rational, VariableSpace};
use crate::linalg::SparseVec;

/// Monomial-vector basis `x^α e_i`, `|α| ≤ deg`, of a truncated jet module.
///
/// Columns run through monomials in ascending graded-lex order with the
/// component index varying fastest, so column `m * q + i` is `x^{α_m} e_i`
/// and every degree occupies one contiguous block.
#[derive(Debug)]
pub struct JetBasis {
    vars: Arc<VariableSpace>,
    q: usize,
    deg: u32,
    monomials: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
    // degree_start[d]..degree_start[d+1] are the monomials of degree d
    degree_start: Vec<usize>,
}

impl JetBasis {
    pub fn new(vars: &Arc<VariableSpace>, q: usize, deg: u32) -> Arc<Self> {
        let mut monomials = Vec::new();
        let mut degree_start = Vec::with_capacity(deg as usize + 2);
        for d in 0..=deg {
            degree_start.push(monomials.len());
            let mut block = Monomial::all_of_degree(vars.len(), d);
            block.reverse();
            monomials.extend(block);
        }
        degree_start.push(monomials.len());
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Arc::new(JetBasis { vars: vars.clone(), q, deg, monomials, index, degree_start })
    }

    pub fn vars(&self) -> &Arc<VariableSpace> {
        &self.vars
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn deg(&self) -> u32 {
        self.deg
    }

    pub fn dim(&self) -> usize {
        self.monomials.len() * self.q
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    /// Monomials of standard degree at most `d`.
    pub fn monomials_up_to(&self, d: u32) -> &[Monomial] {
        let end = self.degree_start[(d.min(self.deg) + 1) as usize];
        &self.monomials[..end]
    }

    pub fn column(&self, m: &Monomial, component: usize) -> Option<usize> {
        self.index.get(m).map(|&i| i * self.q + component)
    }

    /// `(monomial, component)` of a column.
    pub fn entry(&self, column: usize) -> (&Monomial, usize) {
        (&self.monomials[column / self.q], column % self.q)
    }

    pub fn column_degree(&self, column: usize) -> u32 {
        self.monomials[column / self.q].degree()
    }

    /// Columns of the degree-`d` homogeneous block.
    pub fn degree_columns(&self, d: u32) -> Range<usize> {
        if d > self.deg {
            return 0..0;
        }
        let d = d as usize;
        self.degree_start[d] * self.q..self.degree_start[d + 1] * self.q
    }

    pub fn same_as(&self, other: &JetBasis) -> bool {
        core::ptr::eq(self, other) || (self.q == other.q && self.deg == other.deg && *self.vars == *other.vars)
    }

    fn check(&self, v: &PolyVec) -> Result<(), JetError> {
        if v.len() != self.q {
            return Err(JetError::LengthMismatch { expected: self.q, found: v.len() });
        }
        if !(Arc::ptr_eq(v.vars(), &self.vars) || **v.vars() == *self.vars) {
            return Err(JetError::VariableMismatch);
        }
        Ok(())
    }

    /// Sparse coordinates of `truncate(v, deg)`.
    pub(crate) fn sparse(&self, v: &PolyVec) -> Result<SparseVec, JetError> {
        self.check(v)?;
        Ok(self.sparse_shifted(v, None))
    }

    /// Sparse coordinates of `truncate(m * v, deg)`; the caller vouches for
    /// the variable space.
    pub(crate) fn sparse_shifted(&self, v: &PolyVec, m: Option<&Monomial>) -> SparseVec {
        let shift = m.map_or(0, Monomial::degree);
        let mut out: SparseVec = Vec::new();
        for (i, p) in v.components().iter().enumerate() {
            for (t, c) in p.terms() {
                if t.degree() + shift > self.deg {
                    continue;
                }
                let col = match m {
                    Some(m) => self.column(&t.mul(m), i),
                    None => self.column(t, i),
                }
                .expect("degree checked");
                out.push((col, c.clone()));
            }
        }
        out.sort_by_key(|e| e.0);
        out
    }

    /// Dense coordinates of `truncate(v, deg)` in this basis.
    pub fn vectorize(&self, v: &PolyVec) -> Result<Vec<Rational>, JetError> {
        let mut dense = alloc::vec![Rational::zero(); self.dim()];
        for (i, c) in self.sparse(v)? {
            dense[i] = c;
        }
        Ok(dense)
    }

    pub(crate) fn to_polyvec(&self, v: &SparseVec) -> PolyVec {
        let mut comps: Vec<Poly> = (0..self.q).map(|_| Poly::zero(&self.vars)).collect();
        for (col, c) in v {
            let (m, i) = self.entry(*col);
            comps[i].add_term(m.clone(), c.clone());
        }
        PolyVec::new(&self.vars, comps).expect("same space")
    }

    /// The monomial vector at a column.
    pub fn basis_vector(&self, column: usize) -> PolyVec {
        let (m, i) = self.entry(column);
        PolyVec::single(&self.vars, self.q, i, Poly::monomial(&self.vars, m.clone(), num_traits::One::one()))
    }
}
