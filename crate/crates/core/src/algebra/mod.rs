//! Exact polynomial arithmetic over the rationals.

mod germ;
mod monomial;
mod parse;
mod poly;
mod polyvec;
mod vars;

use alloc::string::String;
use thiserror::Error;

pub use germ::{apply_derivation, GermMap};
pub use monomial::Monomial;
pub use parse::{parse_germ, parse_poly, parse_polyvec, ParseError};
pub use poly::{DegreeMode, Poly};
pub use polyvec::PolyVec;
pub use vars::VariableSpace;

/// Coefficient field.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("variable spaces differ")]
    VariableMismatch,
    #[error("invalid variable space: {0}")]
    InvalidVariableSpace(String),
    #[error("variable `{0}` has no assigned image")]
    UnassignedVariable(String),
    #[error("expected {expected} components, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("component {index} has nonzero constant term")]
    NonzeroConstant { index: usize },
}
