//! The minimal cross cap `φ_k` and vector fields tangent to its image.

mod fields;
mod lift;
mod pullback;

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use thiserror::Error;

use crate::algebra::{GermMap, Poly, PolyVec, VariableSpace};
use crate::equivalence::ThetaV;

pub use fields::{euler_field, family_field};
pub use lift::{verify_liftable, Lift};
pub use pullback::{sharp_pullback, PullbackError, SharpPullback};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrossCapError {
    #[error("multiplicity must be at least 2, got {0}")]
    Multiplicity(usize),
    #[error("no field with family {family} and index {j} for k = {k}")]
    FieldIndex { family: u8, j: usize, k: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Euler,
    First,
    Second,
    Third,
}

impl Family {
    pub fn number(self) -> u8 {
        match self {
            Family::Euler => 0,
            Family::First => 1,
            Family::Second => 2,
            Family::Third => 3,
        }
    }

    pub fn from_number(f: u8) -> Option<Family> {
        match f {
            1 => Some(Family::First),
            2 => Some(Family::Second),
            3 => Some(Family::Third),
            _ => None,
        }
    }
}

/// A vector field on the target of `φ_k`, tagged with its family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftableField {
    pub family: Family,
    /// `None` for the Euler field.
    pub j: Option<usize>,
    pub components: PolyVec,
}

impl LiftableField {
    pub fn label(&self) -> String {
        match self.j {
            None => String::from("euler"),
            Some(j) => format!("family{}[{}]", self.family.number(), j),
        }
    }
}

/// Everything attached to the multiplicity-`k` minimal cross cap.
#[derive(Debug, Clone)]
pub struct CrossCapContext {
    k: usize,
    target: Arc<VariableSpace>,
    source: Arc<VariableSpace>,
    phi: GermMap,
    theta: Vec<LiftableField>,
}

impl CrossCapContext {
    /// Builds `φ_k`, the target coordinates `U, V, W` with their weights, and
    /// the Euler field followed by `ξ_j^1, ξ_j^2, ξ_j^3` for `j = 1..k-1`.
    pub fn new(k: usize) -> Result<Self, CrossCapError> {
        if k < 2 {
            return Err(CrossCapError::Multiplicity(k));
        }
        let weight = |i: usize| (k - i) as u32;
        let mut tnames = Vec::new();
        let mut tweights = Vec::new();
        let mut snames = Vec::new();
        let mut sweights = Vec::new();
        for i in 1..=k - 2 {
            tnames.push(format!("U{i}"));
            tweights.push(weight(i));
            snames.push(format!("u{i}"));
            sweights.push(weight(i));
        }
        for i in 1..k {
            tnames.push(format!("V{i}"));
            tweights.push(weight(i));
            snames.push(format!("v{i}"));
            sweights.push(weight(i));
        }
        tnames.extend([String::from("W1"), String::from("W2")]);
        tweights.extend([k as u32, k as u32]);
        snames.push(String::from("y"));
        sweights.push(1);
        let target = VariableSpace::new(tnames, tweights).expect("valid names");
        let source = VariableSpace::new(snames, sweights).expect("valid names");

        let nu = k - 2;
        let y = Poly::var(&source, source.len() - 1);
        let mut comps: Vec<Poly> = (0..source.len() - 1).map(|i| Poly::var(&source, i)).collect();
        let mut w1 = y.pow(k as u32);
        for i in 1..=nu {
            w1 = &w1 + &(&Poly::var(&source, i - 1) * &y.pow(i as u32));
        }
        let mut w2 = Poly::zero(&source);
        for i in 1..k {
            w2 = &w2 + &(&Poly::var(&source, nu + i - 1) * &y.pow(i as u32));
        }
        comps.push(w1);
        comps.push(w2);
        let phi = GermMap::new(&source, comps).expect("vanishes at 0");

        let mut ctx = CrossCapContext { k, target, source, phi, theta: Vec::new() };
        let mut theta = alloc::vec![LiftableField { family: Family::Euler, j: None, components: euler_field(&ctx) }];
        for f in 1..=3 {
            for j in 1..k {
                theta.push(family_field(&ctx, f, j).expect("index in range"));
            }
        }
        ctx.theta = theta;
        Ok(ctx)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Coordinates `U_1..U_{k-2}, V_1..V_{k-1}, W_1, W_2`.
    pub fn target_vars(&self) -> &Arc<VariableSpace> {
        &self.target
    }

    /// Coordinates `u_1..u_{k-2}, v_1..v_{k-1}, y`.
    pub fn source_vars(&self) -> &Arc<VariableSpace> {
        &self.source
    }

    pub fn phi(&self) -> &GermMap {
        &self.phi
    }

    /// Euler field first, then families 1, 2, 3 each for `j = 1..k-1`.
    pub fn fields(&self) -> &[LiftableField] {
        &self.theta
    }

    pub fn euler(&self) -> &LiftableField {
        &self.theta[0]
    }

    /// All fields as a generator list for tangent-space computations.
    pub fn theta_v(&self) -> ThetaV {
        self.theta_v_where(|_| true)
    }

    /// Generator list restricted to the fields accepted by `keep`.
    pub fn theta_v_where(&self, keep: impl Fn(&LiftableField) -> bool) -> ThetaV {
        let fields = self.theta.iter().filter(|f| keep(f)).map(|f| f.components.clone()).collect();
        ThetaV::new(&self.target, fields).expect("fields live on the target")
    }

    /// Variable index of `U_i` (1-based `i`), if it exists for this `k`.
    pub fn u_index(&self, i: usize) -> Option<usize> {
        (1..=self.k - 2).contains(&i).then(|| i - 1)
    }

    /// Variable index of `V_i` (1-based `i`), if it exists for this `k`.
    pub fn v_index(&self, i: usize) -> Option<usize> {
        (1..self.k).contains(&i).then(|| self.k - 2 + i - 1)
    }

    /// Variable index of `W_i`, `i ∈ {1, 2}`.
    pub fn w_index(&self, i: usize) -> Option<usize> {
        (1..=2).contains(&i).then(|| 2 * self.k - 3 + i - 1)
    }
}

/// Shorthand for [`CrossCapContext::new`].
pub fn minimal_crosscap(k: usize) -> Result<CrossCapContext, CrossCapError> {
    CrossCapContext::new(k)
}
