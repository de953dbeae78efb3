//! Exact symbolic engine for map-germs on minimal cross caps.
//!
//! The crate works entirely over the rationals. Germs are polynomial maps,
//! tangent modules are truncated to finite jet spaces, and every question
//! (membership, codimension, determinacy, complete transversals) is answered
//! by exact row reduction in those jet spaces.
//!
//! Layout:
//! - [`algebra`]: sparse multivariate polynomials, vectors of them, germs.
//! - [`jetspace`]: truncated jet modules and their subspaces.
//! - [`crosscap`]: the minimal cross cap, its liftable vector fields and
//!   the sharp pullback.
//! - [`equivalence`]: tangent spaces, codimension, determinacy, transversals.
//! - [`classify`]: verification suites for the codimension-two
//!   classification on cross caps.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod classify;
pub mod crosscap;
pub mod equivalence;
pub mod jetspace;
mod linalg;

pub use algebra::{
    apply_derivation, parse_germ, parse_poly, parse_polyvec, AlgebraError, DegreeMode, GermMap, Monomial, ParseError,
    Poly, PolyVec, Rational, VariableSpace,
};
pub use crosscap::{CrossCapContext, Family, LiftableField};
pub use equivalence::{Codim, CodimReport, DeterminacyMode, ThetaV, Variant};
pub use jetspace::{JetBasis, Subspace};
