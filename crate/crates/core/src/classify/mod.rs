//! Verification suites for the codimension-two classification on cross caps.
//!
//! Each suite recomputes a published claim with the engine and returns a
//! [`VerificationReport`]: one named check per compared quantity, each
//! holding the expected and the computed value as canonical strings.
//! Comparisons are exact.

mod codim_two;
mod counterexample;
mod pullback;
mod scaling;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::algebra::{GermMap, ParseError, PolyVec};
use crate::crosscap::{CrossCapError, PullbackError};
use crate::equivalence::{Codim, EquivalenceError};

pub use codim_two::{classify_codim_two, NormalForm, NEGATIVE_SAMPLES, NEGATIVE_SEED};
pub use counterexample::family_necessity_counterexample;
pub use pullback::{pullback_normal_form, PullbackOutcome};
pub use scaling::{verify_scaling_family, ScalingForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("{0}")]
    Range(String),
    #[error(transparent)]
    CrossCap(#[from] CrossCapError),
    #[error(transparent)]
    Equivalence(#[from] EquivalenceError),
    #[error(transparent)]
    Pullback(#[from] PullbackError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// One compared quantity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim_id: String,
    pub k: Option<usize>,
    pub germ: Option<String>,
    pub codim: Option<Codim>,
    pub determinacy: Option<u32>,
    pub normal_basis: Vec<PolyVec>,
    pub transversal: Vec<PolyVec>,
    pub checks: Vec<Check>,
    /// Context that is reported but not compared.
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub(crate) fn new(claim_id: impl Into<String>, k: Option<usize>) -> Self {
        VerificationReport {
            claim_id: claim_id.into(),
            k,
            germ: None,
            codim: None,
            determinacy: None,
            normal_basis: Vec::new(),
            transversal: Vec::new(),
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn status(&self) -> Status {
        if !self.checks.is_empty() && self.checks.iter().all(|c| c.passed) {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }

    pub(crate) fn with_germ(mut self, h: &GermMap) -> Self {
        self.germ = Some(h.to_string());
        self
    }

    /// Records an exact comparison.
    pub(crate) fn compare<T: PartialEq + fmt::Display>(&mut self, name: &str, expected: T, computed: T) {
        let passed = expected == computed;
        self.checks.push(Check {
            name: name.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            passed,
        });
    }

    pub(crate) fn require(&mut self, name: &str, computed: bool) {
        self.compare(name, true, computed);
    }

    pub(crate) fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.claim_id, self.status())?;
        if let Some(g) = &self.germ {
            writeln!(f, "  germ: {g}")?;
        }
        for c in &self.checks {
            let mark = if c.passed { "ok" } else { "FAIL" };
            writeln!(f, "  [{mark}] {}: expected {}, computed {}", c.name, c.expected, c.computed)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

/// Comma-separated list in brackets, each vector in canonical form.
pub(crate) struct VecList<'a>(pub &'a [PolyVec]);

impl fmt::Display for VecList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({v})")?;
        }
        f.write_str("]")
    }
}

pub(crate) fn list(v: &[PolyVec]) -> String {
    VecList(v).to_string()
}

/// Displays an `Option` as its value or `unknown`.
pub(crate) fn opt<T: fmt::Display>(v: Option<T>) -> String {
    match v {
        Some(x) => x.to_string(),
        None => String::from("unknown"),
    }
}
