use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use super::vars::same_space;
use super::{AlgebraError, Poly, PolyVec, VariableSpace};

/// A polynomial map-germ `(K^p, 0) -> (K^q, 0)`.
#[derive(Clone, PartialEq, Eq)]
pub struct GermMap {
    source: Arc<VariableSpace>,
    components: Vec<Poly>,
}

impl GermMap {
    /// Fails if a component lives in another space or has a constant term.
    pub fn new(source: &Arc<VariableSpace>, components: Vec<Poly>) -> Result<Self, AlgebraError> {
        for (index, c) in components.iter().enumerate() {
            if !same_space(c.vars(), source) {
                return Err(AlgebraError::VariableMismatch);
            }
            if !c.constant_term().is_zero() {
                return Err(AlgebraError::NonzeroConstant { index });
            }
        }
        Ok(GermMap { source: source.clone(), components })
    }

    pub fn source(&self) -> &Arc<VariableSpace> {
        &self.source
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Poly {
        &self.components[i]
    }

    /// Number of components `q`.
    pub fn target_dim(&self) -> usize {
        self.components.len()
    }

    pub fn source_dim(&self) -> usize {
        self.source.len()
    }

    pub fn truncate(&self, d: u32) -> GermMap {
        GermMap { source: self.source.clone(), components: self.components.iter().map(|p| p.truncate(d)).collect() }
    }

    /// Largest standard degree among components.
    pub fn degree(&self) -> Option<u32> {
        self.as_polyvec().degree()
    }

    pub fn as_polyvec(&self) -> PolyVec {
        PolyVec::new(&self.source, self.components.clone()).expect("same space")
    }

    /// `self ∘ inner`: substitutes the components of `inner` for the source
    /// variables of `self`.
    pub fn compose(&self, inner: &GermMap) -> Result<GermMap, AlgebraError> {
        if inner.target_dim() != self.source_dim() {
            return Err(AlgebraError::LengthMismatch { expected: self.source_dim(), found: inner.target_dim() });
        }
        let components = self
            .components
            .iter()
            .map(|c| {
                if inner.components.is_empty() {
                    Ok(c.with_vars(inner.source()))
                } else {
                    c.compose(&inner.components)
                }
            })
            .collect::<Result<_, _>>()?;
        GermMap::new(inner.source(), components)
    }
}

impl fmt::Debug for GermMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GermMap({self})")
    }
}

/// Components separated by `, `, matching the germ input syntax.
impl fmt::Display for GermMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// `ξ(h)`: the vector field `xi` on the source of `h` acting as a
/// derivation on every component, `(ξ(h))_j = Σ_a ξ_a ∂h_j/∂x_a`.
pub fn apply_derivation(xi: &PolyVec, h: &GermMap) -> Result<PolyVec, AlgebraError> {
    if xi.len() != h.source_dim() {
        return Err(AlgebraError::LengthMismatch { expected: h.source_dim(), found: xi.len() });
    }
    if !same_space(xi.vars(), h.source()) {
        return Err(AlgebraError::VariableMismatch);
    }
    let vars = h.source();
    let components = h
        .components()
        .iter()
        .map(|hj| {
            let mut acc = Poly::zero(vars);
            for (a, xa) in xi.components().iter().enumerate() {
                if xa.is_zero() || !hj.contains_var(a) {
                    continue;
                }
                acc = &acc + &(xa * &hj.partial_derivative(a));
            }
            acc
        })
        .collect();
    PolyVec::new(vars, components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, parse_polyvec};

    fn k3() -> Arc<VariableSpace> {
        VariableSpace::new(["U1", "V1", "V2", "W1", "W2"], [2, 2, 1, 3, 3]).unwrap()
    }

    #[test]
    fn germ_rejects_constant() {
        let vs = k3();
        let err = GermMap::new(&vs, alloc::vec![parse_poly("U1 + 1", &vs).unwrap()]).unwrap_err();
        assert_eq!(err, AlgebraError::NonzeroConstant { index: 0 });
    }

    #[test]
    fn euler_applied_to_example_germ() {
        let vs = k3();
        let h = GermMap::new(&vs, alloc::vec![parse_poly("V2 + W1", &vs).unwrap(), parse_poly("U1", &vs).unwrap()])
            .unwrap();
        let xi = parse_polyvec("2*U1; 2*V1; V2; 3*W1; 3*W2", &vs).unwrap();
        let out = apply_derivation(&xi, &h).unwrap();
        assert_eq!(out, parse_polyvec("V2 + 3*W1; 2*U1", &vs).unwrap());

        let zero = PolyVec::zero(&vs, 5);
        assert!(apply_derivation(&zero, &h).unwrap().is_zero());
    }

    #[test]
    fn coordinate_germ_reproduces_field() {
        let vs = k3();
        let h = GermMap::new(&vs, (0..5).map(|i| Poly::var(&vs, i)).collect()).unwrap();
        let xi = parse_polyvec("U1^2; -V1*W2; 3; 0; W1 - W2", &vs).unwrap();
        assert_eq!(apply_derivation(&xi, &h).unwrap(), xi);
    }

    #[test]
    fn length_mismatch() {
        let vs = k3();
        let h = GermMap::new(&vs, alloc::vec![Poly::var(&vs, 0)]).unwrap();
        let xi = PolyVec::zero(&vs, 3);
        assert!(matches!(apply_derivation(&xi, &h), Err(AlgebraError::LengthMismatch { expected: 5, found: 3 })));
    }
}
