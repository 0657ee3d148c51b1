//! Pass/fail reports shared by every verification routine.
//!
//! A check is either *asserted* (a theorem or identity; failure fails the
//! report) or *reported* (an empirical probe; recorded but never fatal).

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub asserted: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Self { title: title.into(), checks: Vec::new() }
    }

    pub fn assert(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> &mut Self {
        self.push(name, passed, true, detail)
    }

    pub fn probe(&mut self, name: impl Into<String>, observed: bool, detail: impl Into<String>) -> &mut Self {
        self.push(name, observed, false, detail)
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, asserted: bool, detail: impl Into<String>) -> &mut Self {
        self.checks.push(Check { name: name.into(), passed, asserted, detail: detail.into() });
        self
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// True iff every asserted check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || !c.asserted)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.asserted && !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {}", self.title)?;
        for c in &self.checks {
            let tag = match (c.asserted, c.passed) {
                (true, true) => "PASS",
                (true, false) => "FAIL",
                (false, true) => "NOTE",
                (false, false) => "NOTE!",
            };
            write!(f, "[{tag}] {}", c.name)?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        let failed = self.failures().count();
        writeln!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn probes_never_fail_a_report() {
        let mut r = Report::new("t");
        r.assert("a", true, "").probe("b", false, "observed violation");
        assert!(r.passed());
        r.assert("c", false, "witness");
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
        let text = r.to_string();
        assert!(text.contains("[NOTE!] b: observed violation"));
        assert!(text.contains("[FAIL] c: witness"));
    }
}
