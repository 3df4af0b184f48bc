//! Outcome of a single verification.

use std::fmt;

use serde::{Deserialize, Serialize};

/// `fail` is reserved for identities that are proved; conjecture instances
/// that hold are `pass`, and exploratory observations are `finding`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Finding,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Finding => "finding",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub witness: Option<String>,
}

impl CheckOutcome {
    pub fn pass(expected: impl Into<String>, actual: impl Into<String>) -> Self {
        CheckOutcome {
            status: Status::Pass,
            expected: expected.into(),
            actual: actual.into(),
            witness: None,
        }
    }

    pub fn fail(
        expected: impl Into<String>,
        actual: impl Into<String>,
        witness: impl Into<String>,
    ) -> Self {
        CheckOutcome {
            status: Status::Fail,
            expected: expected.into(),
            actual: actual.into(),
            witness: Some(witness.into()),
        }
    }

    pub fn finding(expected: impl Into<String>, actual: impl Into<String>) -> Self {
        CheckOutcome {
            status: Status::Finding,
            expected: expected.into(),
            actual: actual.into(),
            witness: None,
        }
    }

    /// Pass when `expected == actual`, otherwise fail with `witness`.
    pub fn compare<T: PartialEq + fmt::Display>(expected: &T, actual: &T) -> Self {
        if expected == actual {
            Self::pass(expected.to_string(), actual.to_string())
        } else {
            Self::fail(
                expected.to_string(),
                actual.to_string(),
                format!("{expected} != {actual}"),
            )
        }
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }

    /// Downgrades a failure to a finding (used for experimental claims).
    pub fn as_finding(mut self) -> Self {
        if self.status == Status::Fail {
            self.status = Status::Finding;
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    /// Combines sub-checks: first failure wins, otherwise a pass summarizing
    /// how many parts were checked.
    pub fn all<I: IntoIterator<Item = CheckOutcome>>(label: &str, parts: I) -> Self {
        let mut count = 0usize;
        let mut finding = None;
        for part in parts {
            count += 1;
            match part.status {
                Status::Fail => return part,
                Status::Finding if finding.is_none() => finding = Some(part),
                _ => {}
            }
        }
        if let Some(f) = finding {
            return f;
        }
        CheckOutcome::pass(format!("{label}: {count} ok"), format!("{label}: {count} ok"))
    }
}

/// Renders at most `limit` leading terms of a long expression.
pub(crate) fn abbreviate(text: &str, limit: usize) -> String {
    if text.len() <= limit {
        text.to_string()
    } else {
        let mut cut = limit;
        while !text.is_char_boundary(cut) {
            cut -= 1;
        }
        format!("{} ...", &text[..cut])
    }
}
