use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// A documented deviation: the identity is known not to hold and the
    /// check confirms it still does not.
    ExpectedFailure,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::ExpectedFailure => "expected-failure",
        })
    }
}

/// A basis vector on which the two sides of an identity differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub state: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub identity: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl Entry {
    pub fn pass(identity: impl Into<String>) -> Self {
        Self {
            identity: identity.into(),
            status: Status::Pass,
            witness: None,
            note: None,
        }
    }

    pub fn fail(identity: impl Into<String>, witness: Witness) -> Self {
        Self {
            identity: identity.into(),
            status: Status::Fail,
            witness: Some(witness),
            note: None,
        }
    }

    pub fn from_witness(identity: impl Into<String>, witness: Option<Witness>) -> Self {
        match witness {
            None => Self::pass(identity),
            Some(w) => Self::fail(identity, w),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Outcome of one suite at one rank.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub rank: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_boxes: Option<u32>,
    pub entries: Vec<Entry>,
    pub duration_ms: f64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn summary_line(&self) -> String {
        let scope = match self.max_boxes {
            Some(b) => format!("n={} boxes<={b}", self.rank),
            None => format!("n={}", self.rank),
        };
        format!(
            "{:<14} {:<16} {} ({} pass, {} fail, {} expected-failure, {:.1} ms)",
            self.check,
            scope,
            if self.passed() { "PASS" } else { "FAIL" },
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::ExpectedFailure),
            self.duration_ms
        )
    }
}
