use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub description: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub checks: Vec<CheckResult>,
    /// All non-skipped checks passed.
    pub overall: bool,
    pub toolkit_version: String,
    /// Input name → SHA-256 of its bytes, hex.
    pub input_digests: BTreeMap<String, String>,
    pub disclaimer: String,
    /// Wall time per check id in milliseconds; excluded from the
    /// deterministic JSON form.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

impl CertificateReport {
    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Pass).count()
    }

    /// Pretty JSON; byte-identical across runs on identical inputs unless
    /// `with_timings` is set.
    pub fn to_json(&self, with_timings: bool) -> String {
        let mut copy = self.clone();
        if !with_timings {
            copy.timings_ms = None;
        }
        serde_json::to_string_pretty(&copy).expect("report serializes")
    }

    /// One line per check, then an overall line.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{:<4} {:<4} {}: {}\n", c.id, c.status, c.description, c.detail));
        }
        let counted = self.checks.iter().filter(|c| c.status != Status::Skip).count();
        out.push_str(&format!(
            "overall: {} ({}/{} checks passed)\n",
            if self.overall { "pass" } else { "fail" },
            self.passed_count(),
            counted
        ));
        out
    }
}
