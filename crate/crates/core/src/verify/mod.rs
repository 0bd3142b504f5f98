//! Checks of Betti-number identities against directly computed tables.
//!
//! Every check produces data: a [`VerificationReport`] with one [`Check`]
//! per identity, carrying the expected and actual values and, on failure,
//! a witness entry.

mod checks;
mod taylor;

use std::fmt;

pub use checks::{
    check_betti_splitting, check_closed_formulas, check_complete_sink, check_linear_splittings,
    check_mapping_cone, check_weight_reduction, oracle_compare,
};
pub use taylor::{taylor_betti, TAYLOR_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Pass => "PASS",
            Self::Fail => "FAIL",
            Self::NotApplicable => "N/A",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    /// Offending entry with both values, set on failure.
    pub witness: Option<String>,
    /// Unmet hypothesis, set when not applicable.
    pub hypothesis: Option<String>,
}

impl Check {
    pub fn compare(
        id: impl Into<String>,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let ok = expected == actual;
        Self {
            id: id.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness: (!ok).then(|| format!("expected={expected},actual={actual}")),
            expected,
            actual,
            hypothesis: None,
        }
    }

    pub fn holds(
        id: impl Into<String>,
        ok: bool,
        expected: impl Into<String>,
        actual: impl Into<String>,
    ) -> Self {
        let (expected, actual) = (expected.into(), actual.into());
        Self {
            id: id.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness: (!ok).then(|| format!("expected={expected},actual={actual}")),
            expected,
            actual,
            hypothesis: None,
        }
    }

    pub fn not_applicable(id: impl Into<String>, hypothesis: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            status: Status::NotApplicable,
            expected: String::new(),
            actual: String::new(),
            witness: None,
            hypothesis: Some(hypothesis.into()),
        }
    }

    /// `lhs == rhs` over all keys; the first mismatch becomes the witness.
    pub(crate) fn identity<K: fmt::Debug>(
        id: impl Into<String>,
        keys: impl IntoIterator<Item = K>,
        mut lhs: impl FnMut(&K) -> i64,
        mut rhs: impl FnMut(&K) -> i64,
    ) -> Self {
        let mut checked = 0usize;
        let mut mismatches = 0usize;
        let mut witness = None;
        for k in keys {
            checked += 1;
            let (l, r) = (lhs(&k), rhs(&k));
            if l != r {
                mismatches += 1;
                witness.get_or_insert_with(|| format!("{k:?}:lhs={l},rhs={r}"));
            }
        }
        Self {
            id: id.into(),
            status: if mismatches == 0 {
                Status::Pass
            } else {
                Status::Fail
            },
            expected: format!("0/{checked}-mismatches"),
            actual: format!("{mismatches}/{checked}-mismatches"),
            witness,
            hypothesis: None,
        }
    }

    pub fn with_prefix(mut self, prefix: &str) -> Self {
        self.id = format!("{prefix}/{}", self.id);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub subject: String,
    pub field: u32,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>, field: u32) -> Self {
        Self {
            subject: subject.into(),
            field,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Appends another report's checks under `prefix`.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        self.checks
            .extend(other.checks.into_iter().map(|c| c.with_prefix(prefix)));
    }

    /// No check failed.
    pub fn overall(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn applicable(&self) -> bool {
        self.checks
            .iter()
            .any(|c| c.status != Status::NotApplicable)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn find(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }
}

impl fmt::Display for VerificationReport {
    /// Line-oriented records: a `report` header, one `check` line per check
    /// and an `overall` footer.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "report {} field={}", self.subject, self.field)?;
        for c in &self.checks {
            write!(f, "check {} {}", c.id, c.status)?;
            match c.status {
                Status::NotApplicable => write!(
                    f,
                    " hypothesis={}",
                    c.hypothesis.as_deref().unwrap_or("-").replace(' ', "_")
                )?,
                _ => write!(f, " expected={} actual={}", c.expected, c.actual)?,
            }
            if let Some(w) = &c.witness {
                write!(f, " witness={}", w.replace(' ', ""))?;
            }
            writeln!(f)?;
        }
        writeln!(
            f,
            "overall {}",
            if self.overall() { "PASS" } else { "FAIL" }
        )
    }
}
