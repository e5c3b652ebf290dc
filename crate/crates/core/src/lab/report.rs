//! Report values produced by the verifiers and scanners.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

/// Result of one clause.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Outcome {
    Pass,
    Fail,
    /// Not applicable: a hypothesis of the statement does not hold.
    Skip,
    /// Evidence for an open question; never counts as a failure.
    Note,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Skip => "skip",
            Outcome::Note => "note",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One named clause of a statement with its outcome and, when relevant, a
/// human-readable witness (a counterexample, a skip reason, or evidence).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Clause {
    pub name: String,
    pub outcome: Outcome,
    pub witness: Option<String>,
}

impl Clause {
    pub fn pass(name: &str) -> Self {
        Clause {
            name: String::from(name),
            outcome: Outcome::Pass,
            witness: None,
        }
    }

    /// A passing clause carrying a short summary (e.g. how many cases ran).
    pub fn pass_with(name: &str, detail: String) -> Self {
        Clause {
            name: String::from(name),
            outcome: Outcome::Pass,
            witness: Some(detail),
        }
    }

    pub fn fail(name: &str, witness: String) -> Self {
        Clause {
            name: String::from(name),
            outcome: Outcome::Fail,
            witness: Some(witness),
        }
    }

    pub fn skip(name: &str, reason: String) -> Self {
        Clause {
            name: String::from(name),
            outcome: Outcome::Skip,
            witness: Some(reason),
        }
    }

    pub fn note(name: &str, evidence: String) -> Self {
        Clause {
            name: String::from(name),
            outcome: Outcome::Note,
            witness: Some(evidence),
        }
    }

    /// Pass when `failure` is `None`, otherwise fail with that witness.
    pub fn from_check(name: &str, failure: Option<String>) -> Self {
        match failure {
            None => Clause::pass(name),
            Some(w) => Clause::fail(name, w),
        }
    }
}

/// Outcome of checking one statement on one subject.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckReport {
    /// Statement name and subject, e.g. `theorem1 w=3412`.
    pub subject: String,
    pub clauses: Vec<Clause>,
    /// Wall-clock time, filled in by callers that have a clock.
    pub elapsed: Option<Duration>,
}

impl CheckReport {
    pub fn new(subject: String, clauses: Vec<Clause>) -> Self {
        CheckReport {
            subject,
            clauses,
            elapsed: None,
        }
    }

    /// No clause failed (skips and notes allowed).
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.outcome != Outcome::Fail)
    }

    /// Every clause was skipped.
    pub fn skipped(&self) -> bool {
        !self.clauses.is_empty() && self.clauses.iter().all(|c| c.outcome == Outcome::Skip)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| c.outcome == Outcome::Fail)
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }

    pub fn clause_names(&self) -> Vec<&str> {
        self.clauses.iter().map(|c| c.name.as_str()).collect()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for c in &self.clauses {
            write!(f, "  [{}] {}", c.outcome, c.name)?;
            if let Some(w) = &c.witness {
                write!(f, ": {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
