use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub description: String,
    pub status: Status,
    /// The identity or statement the check establishes.
    pub reference: String,
    pub details: Value,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let timestamp = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        let summary = Summary::tally(&checks);
        Report {
            version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp,
            checks,
            summary,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match (self.summary.error, self.summary.fail) {
            (0, 0) => 0,
            (0, _) => 1,
            _ => 2,
        }
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!("# goldentiles {} verification report\n\n", self.version);
        out.push_str("| id | status | description |\n|---|---|---|\n");
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Error => "ERROR",
            };
            out.push_str(&format!("| {} | {} | {} |\n", c.id, status, c.description));
        }
        out.push_str(&format!(
            "\n{} passed, {} failed, {} errors\n",
            self.summary.pass, self.summary.fail, self.summary.error
        ));
        for c in self.checks.iter().filter(|c| c.status != Status::Pass) {
            out.push_str(&format!("\n## {}\n\n```\n{}\n```\n", c.id, pretty(&c.details)));
        }
        out
    }
}

impl Summary {
    pub fn tally(checks: &[CheckResult]) -> Self {
        let count = |s: Status| checks.iter().filter(|c| c.status == s).count();
        Summary {
            pass: count(Status::Pass),
            fail: count(Status::Fail),
            error: count(Status::Error),
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).unwrap_or_default()
}
