//! The machine-readable report.

use crosscap_core::classify::{Status, VerificationReport};
use crosscap_core::{Codim, PolyVec};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

/// Fixed keys come first and are always present; command-specific data
/// goes in `extra`, which serializes in sorted key order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub k: Option<usize>,
    pub germ: Option<String>,
    pub codimension: Option<usize>,
    pub normal_basis: Vec<String>,
    pub determinacy: Option<u32>,
    pub stabilization_degree: Option<u32>,
    pub transversal: Vec<String>,
    pub status: String,
    #[serde(flatten)]
    pub extra: Map<String, Value>,
}

impl Report {
    pub fn new(command: &str, k: Option<usize>) -> Self {
        Report {
            command: command.into(),
            k,
            germ: None,
            codimension: None,
            normal_basis: Vec::new(),
            determinacy: None,
            stabilization_degree: None,
            transversal: Vec::new(),
            status: pass_fail(true).into(),
            extra: Map::new(),
        }
    }

    pub fn set(&mut self, key: &str, value: Value) {
        self.extra.insert(key.into(), value);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data") + "\n"
    }
}

pub fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

pub fn strings(v: &[PolyVec]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn codim_value(c: Codim) -> Option<usize> {
    c.finite()
}

pub fn verification(r: &VerificationReport) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| json!({"name": c.name, "expected": c.expected, "computed": c.computed, "passed": c.passed}))
        .collect();
    json!({
        "claim_id": r.claim_id,
        "k": r.k,
        "germ": r.germ,
        "codimension": r.codim.and_then(codim_value),
        "determinacy": r.determinacy,
        "normal_basis": strings(&r.normal_basis),
        "transversal": strings(&r.transversal),
        "status": r.status().to_string(),
        "checks": checks,
        "notes": r.notes,
    })
}

pub fn status_of(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.status() == Status::Pass)
}
