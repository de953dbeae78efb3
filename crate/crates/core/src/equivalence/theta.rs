use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::Zero;

use super::EquivalenceError;
use crate::algebra::{Monomial, PolyVec, VariableSpace};
use crate::linalg::{Echelon, SparseVec};

/// A finite generating set of the liftable vector fields `Θ_V` on a
/// variable space. Field `i` has one component per variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaV {
    vars: Arc<VariableSpace>,
    fields: Vec<PolyVec>,
}

impl ThetaV {
    pub fn new(vars: &Arc<VariableSpace>, fields: Vec<PolyVec>) -> Result<Self, EquivalenceError> {
        for (index, f) in fields.iter().enumerate() {
            if **f.vars() != **vars {
                return Err(EquivalenceError::VariableMismatch);
            }
            if f.len() != vars.len() {
                return Err(EquivalenceError::FieldLength { index, expected: vars.len(), found: f.len() });
            }
        }
        Ok(ThetaV { vars: vars.clone(), fields })
    }

    pub fn vars(&self) -> &Arc<VariableSpace> {
        &self.vars
    }

    pub fn fields(&self) -> &[PolyVec] {
        &self.fields
    }

    pub fn len(&self) -> usize {
        self.fields.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fields.is_empty()
    }

    pub fn vanish_at_origin(&self) -> bool {
        self.fields.iter().all(PolyVec::vanishes_at_origin)
    }

    pub(crate) fn require_vanishing(&self) -> Result<(), EquivalenceError> {
        match self.fields.iter().position(|f| !f.vanishes_at_origin()) {
            Some(index) => Err(EquivalenceError::FieldAtOrigin { index }),
            None => Ok(()),
        }
    }

    /// The same generators minus those at the given positions.
    pub fn without(&self, drop: &[usize]) -> ThetaV {
        let fields =
            self.fields.iter().enumerate().filter(|(i, _)| !drop.contains(i)).map(|(_, f)| f.clone()).collect();
        ThetaV { vars: self.vars.clone(), fields }
    }

    /// A basis of the constant-coefficient combinations `Σ c_i ξ_i` whose
    /// linear part vanishes.
    pub(crate) fn without_linear_part(&self) -> Vec<PolyVec> {
        let n = self.vars.len();
        let linear = |f: &PolyVec| -> SparseVec {
            let mut row = Vec::new();
            for (b, p) in f.components().iter().enumerate() {
                for a in 0..n {
                    let c = p.coefficient(&Monomial::var(n, a));
                    if !c.is_zero() {
                        row.push((b * n + a, c));
                    }
                }
            }
            row
        };
        // reduce [L | I]; rows whose pivot falls in I record the kernel
        let offset = n * n;
        let mut ech = Echelon::new();
        for (i, f) in self.fields.iter().enumerate() {
            let mut row = linear(f);
            row.push((offset + i, num_traits::One::one()));
            ech.insert(&row);
        }
        let mut out = Vec::new();
        for row in ech.into_rref() {
            if row[0].0 < offset {
                continue;
            }
            let mut acc = PolyVec::zero(&self.vars, n);
            for (c, v) in &row {
                acc = acc.checked_add(&self.fields[c - offset].scale(v)).expect("same space");
            }
            out.push(acc);
        }
        out
    }
}
