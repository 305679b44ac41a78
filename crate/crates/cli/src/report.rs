//! Machine-readable verification reports: per-check records with a stable
//! order and deterministic serialization. Wall-clock timing never enters the
//! serialized output (it goes to stderr), keeping reports byte-identical
//! across runs.

use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub details: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl Report {
    pub fn new(
        command: &str,
        parameters: BTreeMap<String, String>,
        mut checks: Vec<Check>,
    ) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let passed = checks.iter().filter(|c| c.status == Status::Pass).count();
        let failed = checks.iter().filter(|c| c.status == Status::Fail).count();
        let skipped = checks.iter().filter(|c| c.status == Status::Skip).count();
        Report {
            command: command.to_string(),
            parameters,
            checks,
            passed,
            failed,
            skipped,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# {}\n", self.command));
        for (k, v) in &self.parameters {
            out.push_str(&format!("#   {k} = {v}\n"));
        }
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skip => "skip",
            };
            out.push_str(&format!("{tag}  {}  {}\n", c.name, c.details));
        }
        out.push_str(&format!(
            "summary: {} passed, {} failed, {} skipped\n",
            self.passed, self.failed, self.skipped
        ));
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,status,details\n");
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
                Status::Skip => "skip",
            };
            let details = c.details.replace('"', "''");
            out.push_str(&format!("{},{},\"{}\"\n", c.name, status, details));
        }
        out
    }
}

pub fn check(name: String, ok: bool, details: String) -> Check {
    Check {
        name,
        status: if ok { Status::Pass } else { Status::Fail },
        details,
    }
}

pub fn skip(name: String, details: String) -> Check {
    Check {
        name,
        status: Status::Skip,
        details,
    }
}
