use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::AlgebraError;

/// Ordered list of named coordinates, each carrying a positive
/// quasihomogeneous weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableSpace {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl VariableSpace {
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        weights: impl IntoIterator<Item = u32>,
    ) -> Result<Arc<Self>, AlgebraError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let weights: Vec<u32> = weights.into_iter().collect();
        if names.len() != weights.len() {
            return Err(AlgebraError::InvalidVariableSpace(format!(
                "{} names but {} weights",
                names.len(),
                weights.len()
            )));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(AlgebraError::InvalidVariableSpace("empty name".to_string()));
            }
            if names[..i].contains(name) {
                return Err(AlgebraError::InvalidVariableSpace(format!("duplicate name `{name}`")));
            }
        }
        if let Some(pos) = weights.iter().position(|&w| w == 0) {
            return Err(AlgebraError::InvalidVariableSpace(format!("weight of `{}` must be positive", names[pos])));
        }
        Ok(Arc::new(Self { names, weights }))
    }

    /// All weights equal to one.
    pub fn unweighted<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Self>, AlgebraError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let n = names.len();
        Self::new(names, core::iter::repeat_n(1, n))
    }

    /// `x1, ..., xn` with unit weights.
    pub fn generic(n: usize) -> Arc<Self> {
        Self::unweighted((1..=n).map(|i| format!("x{i}"))).expect("generic names are valid")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Two spaces are compatible when they are the same allocation or
/// structurally identical.
pub(crate) fn same_space(a: &Arc<VariableSpace>, b: &Arc<VariableSpace>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
