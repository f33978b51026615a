//! Running checks and assembling their reports.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::checks::{run_check, Check, Settings};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub id: String,
    pub criterion: usize,
    pub anchor: String,
    pub status: Status,
    pub values: Value,
    pub runtime: Duration,
    pub budget: Option<Duration>,
}

impl VerificationReport {
    pub fn within_budget(&self) -> bool {
        self.budget.is_none_or(|b| self.runtime <= b)
    }

    /// The report as JSON; runtimes are left out unless asked for, so that
    /// equal runs give equal bytes.
    pub fn to_json(&self, timings: bool) -> Value {
        let mut v = json!({
            "id": self.id,
            "criterion": self.criterion,
            "anchor": self.anchor,
            "status": self.status.to_string(),
            "budget_seconds": self.budget.map(|b| b.as_secs()),
            "values": self.values,
        });
        if timings {
            v["runtime_ms"] = json!(self.runtime.as_millis() as u64);
        }
        v
    }

    /// One line: status, criterion, id, runtime and the claim checked.
    pub fn line(&self) -> String {
        let over = if self.within_budget() { "" } else { " over budget" };
        format!(
            "[{}] {:>2} {} ({:.1} s{over}): {}",
            self.status,
            self.criterion,
            self.id,
            self.runtime.as_secs_f64(),
            self.anchor
        )
    }
}

/// Runs one check and times it; exceeding the budget is a failure.
pub fn verify(c: &Check, s: &Settings) -> VerificationReport {
    let start = Instant::now();
    let out = run_check(c, s);
    let runtime = start.elapsed();
    let mut r = VerificationReport {
        id: c.id.to_string(),
        criterion: c.criterion,
        anchor: c.anchor.to_string(),
        status: Status::Fail,
        values: out.values,
        runtime,
        budget: c.budget,
    };
    if out.passed && r.within_budget() {
        r.status = Status::Pass;
    }
    r
}

/// Runs the checks on the current rayon pool; reports keep the input order.
pub fn verify_all(checks: &[Check], s: &Settings) -> Vec<VerificationReport> {
    checks.par_iter().map(|c| verify(c, s)).collect()
}

/// The reports as one JSON document.
pub fn reports_json(reports: &[VerificationReport], timings: bool) -> Value {
    json!({
        "passed": reports.iter().all(|r| r.status == Status::Pass),
        "checks": reports.iter().map(|r| r.to_json(timings)).collect::<Vec<_>>(),
    })
}
