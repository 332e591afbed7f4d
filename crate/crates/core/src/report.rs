//! Pass/fail records for the verification suites.

use serde::Serialize;
use std::fmt;

/// How many counterexamples a check keeps verbatim.
pub const MAX_EXAMPLES: usize = 10;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub counterexamples: Vec<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            cases: 0,
            failures: 0,
            counterexamples: Vec::new(),
        }
    }

    /// Builds a check from per-case outcomes, `Some(description)` marking a failure.
    pub fn from_outcomes(name: impl Into<String>, outcomes: Vec<Option<String>>) -> Self {
        let mut c = Check::new(name);
        for o in outcomes {
            c.record(o);
        }
        c
    }

    pub fn record(&mut self, failure: Option<String>) {
        self.cases += 1;
        if let Some(msg) = failure {
            self.failures += 1;
            if self.counterexamples.len() < MAX_EXAMPLES {
                self.counterexamples.push(msg);
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().map(|c| c.failures).sum()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Names and pass/fail status only.
    pub fn status(&self) -> Vec<(String, bool)> {
        self.checks
            .iter()
            .map(|c| (c.name.clone(), c.passed()))
            .collect()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "{tag} {} ({} cases, {} failures)",
                c.name, c.cases, c.failures
            )?;
            for ex in &c.counterexamples {
                writeln!(f, "    {ex}")?;
            }
        }
        let total: usize = self.checks.iter().map(|c| c.cases).sum();
        write!(
            f,
            "{} checks, {} cases, {} failures",
            self.checks.len(),
            total,
            self.failures()
        )
    }
}
