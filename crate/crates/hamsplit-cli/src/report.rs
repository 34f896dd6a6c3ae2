//! Report types and renderers shared by the verify sweep.

use serde_json::{json, Value};

use hamsplit::Check;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

/// One check outcome at one degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckRecord {
    pub n: u32,
    pub name: String,
    pub anchor: String,
    pub status: Status,
    pub detail: String,
}

impl CheckRecord {
    pub fn from_check(n: u32, check: &Check) -> Self {
        CheckRecord {
            n,
            name: check.name.clone(),
            anchor: check.anchor.clone(),
            status: if check.pass { Status::Pass } else { Status::Fail },
            detail: check.detail.clone(),
        }
    }

    pub fn skipped(n: u32, name: &str, anchor: &str, detail: &str) -> Self {
        CheckRecord {
            n,
            name: name.to_string(),
            anchor: anchor.to_string(),
            status: Status::Skipped,
            detail: detail.to_string(),
        }
    }

    pub fn outcome(n: u32, name: &str, anchor: &str, pass: bool, detail: String) -> Self {
        CheckRecord {
            n,
            name: name.to_string(),
            anchor: anchor.to_string(),
            status: if pass { Status::Pass } else { Status::Fail },
            detail,
        }
    }
}

/// Full sweep report. Records stay sorted by (n, name).
pub struct VerifyReport {
    pub suite: String,
    pub n_from: u32,
    pub n_to: u32,
    pub checks: Vec<CheckRecord>,
}

impl VerifyReport {
    pub fn new(suite: &str, n_from: u32, n_to: u32, mut checks: Vec<CheckRecord>) -> Self {
        checks.sort_by(|a, b| a.n.cmp(&b.n).then_with(|| a.name.cmp(&b.name)));
        VerifyReport {
            suite: suite.to_string(),
            n_from,
            n_to,
            checks,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "n": c.n,
                    "name": c.name,
                    "anchor": c.anchor,
                    "status": c.status.as_str(),
                    "detail": c.detail,
                })
            })
            .collect();
        json!({
            "command": "verify",
            "suite": self.suite,
            "n_from": self.n_from,
            "n_to": self.n_to,
            "status": if self.all_pass() { "pass" } else { "fail" },
            "checks": checks,
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,name,anchor,status,detail\n");
        for c in &self.checks {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                c.n,
                csv_field(&c.name),
                csv_field(&c.anchor),
                c.status.as_str(),
                csv_field(&c.detail)
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut passed = 0;
        let mut failed = 0;
        let mut skipped = 0;
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => {
                    passed += 1;
                    "PASS"
                }
                Status::Fail => {
                    failed += 1;
                    "FAIL"
                }
                Status::Skipped => {
                    skipped += 1;
                    "SKIP"
                }
            };
            out.push_str(&format!("[{tag}] n={} {}: {}\n", c.n, c.name, c.detail));
        }
        out.push_str(&format!(
            "overall: {} ({passed} passed, {failed} failed, {skipped} skipped)\n",
            if self.all_pass() { "pass" } else { "fail" }
        ));
        out
    }
}

/// Quotes a CSV field when it contains a delimiter, quote, or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
