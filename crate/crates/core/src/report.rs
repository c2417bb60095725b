//! Verification records shared by the oracle suites and the CLI.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Outcome of one verification check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub pass: bool,
    pub max_residual: f64,
    pub details: Vec<String>,
    /// Not run, e.g. because the operators exceed the size cap.
    #[serde(default)]
    pub skipped: bool,
}

impl CheckReport {
    pub fn new(check: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            params: BTreeMap::new(),
            pass: true,
            max_residual: 0.0,
            details: Vec::new(),
            skipped: false,
        }
    }

    /// A passing report recording why the check did not run.
    pub fn skip(check: impl Into<String>, reason: impl Into<String>) -> Self {
        let mut r = CheckReport::new(check);
        r.skipped = true;
        r.details.push(reason.into());
        r
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    /// Records a residual; the check fails once any residual reaches `tol`.
    /// The first failure is described by `what`.
    pub fn residual(&mut self, r: f64, tol: f64, what: impl FnOnce() -> String) {
        let r = if r.is_finite() { r } else { f64::MAX };
        self.max_residual = self.max_residual.max(r);
        if r >= tol && self.pass {
            self.pass = false;
            self.details.push(format!("{} (residual {r:.3e})", what()));
        }
    }

    /// Records a boolean condition.
    pub fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            if self.pass {
                self.details.push(what());
            }
            self.pass = false;
        }
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.details.push(line.into());
    }

    /// One-line summary: `PASS check [k=v ...] max residual r`.
    pub fn summary(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!(
            "{} {} [{}] max residual {:.3e}",
            match (self.skipped, self.pass) {
                (true, _) => "SKIP",
                (false, true) => "PASS",
                (false, false) => "FAIL",
            },
            self.check,
            params.join(" "),
            self.max_residual
        )
    }
}
