//! JSON report types for the suite runner.
//!
//! Schema: `{suite, config, checks:[{name,status,witness?,millis}], total_millis}`.
//! All check content (names, statuses, witnesses, order) is deterministic for
//! a fixed (config, seed); the `millis` fields carry wall-clock timings and
//! are the one exception.

use serde::Serialize;

#[derive(Serialize, Clone, Debug)]
pub struct ConfigEcho {
    pub r: u32,
    pub n: usize,
    pub degree: u32,
    pub c_short: String,
    pub c_long: String,
    pub seed: u64,
}

#[derive(Serialize, Clone, Debug)]
pub struct CheckOut {
    pub name: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub millis: u128,
}

#[derive(Serialize, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub config: ConfigEcho,
    pub checks: Vec<CheckOut>,
    pub total_millis: u128,
}

impl SuiteReport {
    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == "fail")
    }

    pub fn inconclusive(&self) -> usize {
        self.checks.iter().filter(|c| c.status == "inconclusive").count()
    }
}
