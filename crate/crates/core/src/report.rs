//! Structured check records shared by the verification suite and the
//! discrepancy reports.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// Failing this check fails the run.
    Assertion,
    /// Comparison against a printed formula; recorded but never fatal.
    Informational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub paper_anchor: String,
    pub kind: CheckKind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl CheckRecord {
    /// Passes when `residual <= tolerance` (NaN never passes).
    pub fn assertion(name: impl Into<String>, residual: f64, tolerance: f64, anchor: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            residual,
            tolerance,
            pass: residual <= tolerance,
            paper_anchor: anchor.into(),
            kind: CheckKind::Assertion,
            note: None,
        }
    }

    /// Passes when `residual > threshold`; used for negative controls.
    pub fn exceeds(name: impl Into<String>, residual: f64, threshold: f64, anchor: impl Into<String>) -> Self {
        Self {
            pass: residual > threshold,
            ..Self::assertion(name, residual, threshold, anchor)
        }
    }

    pub fn informational(name: impl Into<String>, residual: f64, tolerance: f64, anchor: impl Into<String>) -> Self {
        Self {
            kind: CheckKind::Informational,
            ..Self::assertion(name, residual, tolerance, anchor)
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// True unless this is a failing assertion.
    pub fn ok(&self) -> bool {
        self.pass || self.kind == CheckKind::Informational
    }
}
