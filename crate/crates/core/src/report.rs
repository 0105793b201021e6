//! Machine-readable results of a verification run.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn is_pass(self) -> bool {
        self == Status::Pass
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    pub max_degree: usize,
    pub specializations: Vec<String>,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseResult {
    pub name: String,
    pub status: Status,
    pub witness: Option<String>,
    pub wall_time_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub parameters: Parameters,
    pub cases: Vec<CaseResult>,
    pub totals: Totals,
    pub wall_time_ms: u64,
    pub status: Status,
}

impl Report {
    pub fn new(suite: String, parameters: Parameters, cases: Vec<CaseResult>, wall_time_ms: u64) -> Self {
        let passed = cases.iter().filter(|c| c.status.is_pass()).count();
        let totals = Totals { total: cases.len(), passed, failed: cases.len() - passed };
        let status = if totals.failed == 0 { Status::Pass } else { Status::Fail };
        Self { suite, parameters, cases, totals, wall_time_ms, status }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cases {
            write!(f, "{} {} ({} ms)", c.status, c.name, c.wall_time_ms)?;
            if let Some(w) = &c.witness {
                write!(f, "\n    {w}")?;
            }
            writeln!(f)?;
        }
        write!(
            f,
            "{}: {} passed, {} failed of {} in {} ms: {}",
            self.suite, self.totals.passed, self.totals.failed, self.totals.total, self.wall_time_ms, self.status
        )
    }
}
