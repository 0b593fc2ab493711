//! Verification reports: a flat list of named checks with outcomes.
//!
//! Every verifier in this crate returns a [`VerificationReport`] rather
//! than a bare bool, so a failing axiom always comes with a witness
//! string pinpointing the first offending input.

use std::fmt;

use serde::Serialize;

/// One verified statement.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    /// Stable, machine-readable name of the axiom or property.
    pub axiom: String,
    pub pass: bool,
    /// For failures: the offending input and the two sides that differ.
    /// For passes: optionally a short note on what was swept.
    pub witness: Option<String>,
}

/// An ordered collection of checks; serializes as a JSON array of
/// `{axiom, pass, witness}` objects.
#[derive(Debug, Clone, Default, Serialize)]
#[serde(transparent)]
pub struct VerificationReport {
    checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> VerificationReport {
        VerificationReport::default()
    }

    pub fn record(&mut self, axiom: impl Into<String>, pass: bool, witness: Option<String>) {
        self.checks.push(Check {
            axiom: axiom.into(),
            pass,
            witness,
        });
    }

    pub fn pass(&mut self, axiom: impl Into<String>) {
        self.record(axiom, true, None);
    }

    pub fn pass_note(&mut self, axiom: impl Into<String>, note: impl Into<String>) {
        self.record(axiom, true, Some(note.into()));
    }

    pub fn fail(&mut self, axiom: impl Into<String>, witness: impl Into<String>) {
        self.record(axiom, false, Some(witness.into()));
    }

    /// Record an equality check: passes when `ok`, otherwise stores the
    /// witness produced by `describe`.
    pub fn check(&mut self, axiom: impl Into<String>, ok: bool, describe: impl FnOnce() -> String) {
        if ok {
            self.pass(axiom);
        } else {
            self.fail(axiom, describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    /// The failing checks, for quick assertions in tests.
    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            write!(f, "{status}  {}", c.axiom)?;
            if let Some(w) = &c.witness {
                write!(f, "  [{w}]")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
