//! Uniform pass/fail records returned by the verification operations.

use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "pass"),
            CheckStatus::Fail => write!(f, "fail"),
            CheckStatus::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// One named check with an optional reproduction witness (exact inputs in
/// canonical text form).
#[derive(Clone, Debug)]
pub struct CheckRecord {
    pub name: String,
    pub status: CheckStatus,
    pub witness: Option<String>,
}

impl CheckRecord {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckRecord {
            name: name.into(),
            status: CheckStatus::Pass,
            witness: None,
        }
    }

    pub fn pass_with(name: impl Into<String>, witness: impl Into<String>) -> Self {
        CheckRecord {
            name: name.into(),
            status: CheckStatus::Pass,
            witness: Some(witness.into()),
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        CheckRecord {
            name: name.into(),
            status: CheckStatus::Fail,
            witness: Some(witness.into()),
        }
    }

    pub fn inconclusive(name: impl Into<String>, witness: impl Into<String>) -> Self {
        CheckRecord {
            name: name.into(),
            status: CheckStatus::Inconclusive,
            witness: Some(witness.into()),
        }
    }

    pub fn of(name: impl Into<String>, ok: bool, witness: impl Into<String>) -> Self {
        if ok {
            CheckRecord::pass(name)
        } else {
            CheckRecord::fail(name, witness)
        }
    }
}

/// A bundle of check records produced by one operation or suite.
#[derive(Clone, Debug, Default)]
pub struct OpReport {
    pub checks: Vec<CheckRecord>,
}

impl OpReport {
    pub fn new() -> Self {
        OpReport { checks: Vec::new() }
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.checks.push(record);
    }

    pub fn extend(&mut self, other: OpReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks
            .iter()
            .all(|c| c.status == CheckStatus::Pass)
    }

    pub fn has_failure(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Fail)
    }

    pub fn inconclusive_count(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Inconclusive)
            .count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
    }
}
