//! Finite-dimensional linear algebra on truncated jet modules
//! `θ(h) / 𝔪^{d+1} θ(h)`.

mod basis;
mod subspace;

use thiserror::Error;

pub use basis::JetBasis;
pub use subspace::{homogeneous_complement, module_span, quotient_dim, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JetError {
    #[error("vector uses a different variable space than the jet basis")]
    VariableMismatch,
    #[error("vector has {found} components, jet basis has {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("subspaces live in different jet spaces")]
    AmbientMismatch,
}
