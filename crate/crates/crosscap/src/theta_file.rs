//! Plain-text vector field files.
//!
//! ```text
//! # Euler field on x1, x2
//! x1; 2*x2
//! x2^2; 0   # a second generator
//! ```

use std::sync::Arc;

use crosscap_core::{parse_polyvec, ParseError, PolyVec, VariableSpace};
use thiserror::Error;

#[derive(Debug, Error)]
#[error("line {line}: {source}")]
pub struct FieldFileError {
    pub line: usize,
    pub source: ParseError,
}

/// One field per non-blank line, `#` starting a comment.
pub fn parse_fields(text: &str, vars: &Arc<VariableSpace>) -> Result<Vec<PolyVec>, FieldFileError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let v = parse_polyvec(body, vars).map_err(|source| FieldFileError { line: i + 1, source })?;
        out.push(v);
    }
    Ok(out)
}

/// The inverse of [`parse_fields`], without comments.
pub fn write_fields(fields: &[PolyVec]) -> String {
    fields.iter().map(|f| format!("{f}\n")).collect()
}
