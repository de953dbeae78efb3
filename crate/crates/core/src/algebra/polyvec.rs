use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use super::vars::same_space;
use super::{AlgebraError, DegreeMode, Poly, Rational, VariableSpace};

/// A fixed-length tuple of polynomials over one variable space.
///
/// Used both for sections of `θ(h)` (one entry per component of `h`) and
/// for vector fields on the target (one entry per coordinate).
#[derive(Clone, PartialEq, Eq)]
pub struct PolyVec {
    vars: Arc<VariableSpace>,
    components: Vec<Poly>,
}

impl PolyVec {
    pub fn new(vars: &Arc<VariableSpace>, components: Vec<Poly>) -> Result<Self, AlgebraError> {
        if components.iter().any(|c| !same_space(c.vars(), vars)) {
            return Err(AlgebraError::VariableMismatch);
        }
        Ok(PolyVec { vars: vars.clone(), components })
    }

    pub fn zero(vars: &Arc<VariableSpace>, q: usize) -> Self {
        PolyVec { vars: vars.clone(), components: (0..q).map(|_| Poly::zero(vars)).collect() }
    }

    /// `e_i`: the constant 1 in slot `i`, zero elsewhere.
    pub fn unit(vars: &Arc<VariableSpace>, q: usize, i: usize) -> Self {
        Self::single(vars, q, i, Poly::one(vars))
    }

    /// `p` in slot `i`, zero elsewhere.
    pub fn single(vars: &Arc<VariableSpace>, q: usize, i: usize, p: Poly) -> Self {
        let mut v = Self::zero(vars, q);
        v.components[i] = p;
        v
    }

    pub fn vars(&self) -> &Arc<VariableSpace> {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Poly> {
        self.components
    }

    pub fn get(&self, i: usize) -> &Poly {
        &self.components[i]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly::is_zero)
    }

    pub fn checked_add(&self, other: &PolyVec) -> Result<PolyVec, AlgebraError> {
        self.zip_with(other, Poly::checked_add)
    }

    pub fn checked_sub(&self, other: &PolyVec) -> Result<PolyVec, AlgebraError> {
        self.zip_with(other, Poly::checked_sub)
    }

    fn zip_with(
        &self,
        other: &PolyVec,
        f: impl Fn(&Poly, &Poly) -> Result<Poly, AlgebraError>,
    ) -> Result<PolyVec, AlgebraError> {
        if self.len() != other.len() {
            return Err(AlgebraError::LengthMismatch { expected: self.len(), found: other.len() });
        }
        let components =
            self.components.iter().zip(&other.components).map(|(a, b)| f(a, b)).collect::<Result<_, _>>()?;
        Ok(PolyVec { vars: self.vars.clone(), components })
    }

    pub fn scale(&self, c: &Rational) -> PolyVec {
        self.map(|p| p.scale(c))
    }

    /// Multiplies every component by the scalar function `f`.
    pub fn mul_poly(&self, f: &Poly) -> Result<PolyVec, AlgebraError> {
        let components = self.components.iter().map(|p| f.checked_mul(p)).collect::<Result<_, _>>()?;
        Ok(PolyVec { vars: self.vars.clone(), components })
    }

    pub fn truncate(&self, d: u32) -> PolyVec {
        self.map(|p| p.truncate(d))
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> PolyVec {
        PolyVec { vars: self.vars.clone(), components: self.components.iter().map(f).collect() }
    }

    /// Smallest standard degree of any term; `None` when zero.
    pub fn order(&self) -> Option<u32> {
        self.components.iter().filter_map(|p| p.order(DegreeMode::Standard)).min()
    }

    /// Largest standard degree of any term; `None` when zero.
    pub fn degree(&self) -> Option<u32> {
        self.components.iter().filter_map(|p| p.degree(DegreeMode::Standard)).max()
    }

    pub fn vanishes_at_origin(&self) -> bool {
        self.components.iter().all(|p| num_traits::Zero::is_zero(&p.constant_term()))
    }
}

impl fmt::Debug for PolyVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyVec({self})")
    }
}

/// Components separated by `; `, matching the field-file line format.
impl fmt::Display for PolyVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
