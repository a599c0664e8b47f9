//! Check reports with a plain-text and a JSON rendering.
//!
//! Output is deterministic: values are kept in a sorted map, and timing is
//! dropped entirely under `--no-timing` so repeated runs compare equal.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use ptwreath::Error;
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub n: usize,
    pub m: usize,
    pub checks: Vec<Check>,
    #[serde(skip)]
    timing: bool,
}

impl Report {
    pub fn new(command: &str, n: usize, m: usize, timing: bool) -> Self {
        Report {
            command: command.to_string(),
            n,
            m,
            checks: Vec::new(),
            timing,
        }
    }

    /// Runs one check. `Ok(true)` passes, `Ok(false)` fails, and a blown
    /// enumeration or coset budget skips the check instead of failing it.
    /// Any other error also fails, with the message recorded.
    pub fn run(
        &mut self,
        name: &str,
        body: impl FnOnce(&mut BTreeMap<String, String>) -> ptwreath::Result<bool>,
    ) -> Status {
        let mut values = BTreeMap::new();
        let start = Instant::now();
        let status = match body(&mut values) {
            Ok(true) => Status::Pass,
            Ok(false) => Status::Fail,
            Err(Error::LimitExceeded { limit }) => {
                values.insert("reason".into(), format!("limit of {limit} exceeded"));
                Status::Skipped
            }
            Err(e) => {
                values.insert("error".into(), e.to_string());
                Status::Fail
            }
        };
        self.checks.push(Check {
            name: name.to_string(),
            status,
            values,
            elapsed_ms: self
                .timing
                .then(|| u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX)),
        });
        status
    }

    /// Records a check that never ran, with the reason it was skipped.
    pub fn skip(&mut self, name: &str, reason: &str) {
        self.checks.push(Check {
            name: name.to_string(),
            status: Status::Skipped,
            values: BTreeMap::from([("reason".to_string(), reason.to_string())]),
            elapsed_ms: None,
        });
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("ptwreath {} n={} m={}\n", self.command, self.n, self.m);
        for check in &self.checks {
            let _ = write!(out, "[{:<7}] {}", check.status.label(), check.name);
            for (key, value) in &check.values {
                let _ = write!(out, "  {key}={value}");
            }
            if let Some(ms) = check.elapsed_ms {
                let _ = write!(out, "  ({ms} ms)");
            }
            out.push('\n');
        }
        let count = |s: Status| self.checks.iter().filter(|c| c.status == s).count();
        let _ = writeln!(
            out,
            "summary: {} pass, {} fail, {} skipped",
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Skipped)
        );
        out
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
