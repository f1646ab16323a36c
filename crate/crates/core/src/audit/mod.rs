//! Finite checks of the curvature inequalities: exact integer inequalities
//! taken from the proofs, plus interval surrogates for the asymptotic
//! statements.

mod checks;
mod modx;
mod suite;
mod statements;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::Value;

pub use checks::{check_first_inequality, check_length_identity, general_bound};
pub use modx::{ci_reference_betti, modx_check};
pub use suite::{invariant_suite, SuiteOptions};
pub use statements::{audit_first, audit_second_ext, audit_second_tor, audit_third, simplest_rational};

use crate::algebra::QuotientAlgebra;
use crate::asymptotics::{DEFAULT_DEPTH, DEFAULT_WINDOW};
use crate::resolution::DEFAULT_BUDGET;

/// Tolerance for comparisons involving curvature intervals.
pub const DEFAULT_TOLERANCE: f64 = 0.05;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Vacuous,
    SetupViolation,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Vacuous => "VACUOUS",
            Verdict::SetupViolation => "SETUP_VIOLATION",
            Verdict::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AuditConfig {
    pub depth: usize,
    pub window: usize,
    pub tolerance: f64,
    pub budget: usize,
    pub seed: u64,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            depth: DEFAULT_DEPTH,
            window: DEFAULT_WINDOW,
            tolerance: DEFAULT_TOLERANCE,
            budget: DEFAULT_BUDGET,
            seed: 0,
        }
    }
}

impl AuditConfig {
    pub(crate) fn resolve_options(&self) -> crate::resolution::ResolveOptions {
        crate::resolution::ResolveOptions {
            budget: self.budget,
            seed: None,
        }
    }
}

/// A violated instance with both sides of the inequality.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub index: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub verdict: Verdict,
    pub hypothesis: String,
    pub instances: usize,
    /// Instances where the inequality is an equality.
    pub equalities: usize,
    /// Smallest `lhs - rhs` over the instances (normalized where noted).
    pub margin: Option<f64>,
    pub failures: Vec<Violation>,
    pub caveats: Vec<String>,
    pub details: BTreeMap<String, Value>,
}

impl CheckRecord {
    pub fn new(name: impl Into<String>) -> Self {
        CheckRecord {
            name: name.into(),
            verdict: Verdict::Pass,
            hypothesis: "none".into(),
            instances: 0,
            equalities: 0,
            margin: None,
            failures: Vec::new(),
            caveats: Vec::new(),
            details: BTreeMap::new(),
        }
    }

    pub(crate) fn setup_violation(name: &str) -> Self {
        let mut r = CheckRecord::new(name);
        r.verdict = Verdict::SetupViolation;
        r.hypothesis = "A is a complete intersection; the statement requires a non-CI ring".into();
        r
    }

    pub(crate) fn vacuous(mut self, why: impl Into<String>) -> Self {
        self.verdict = Verdict::Vacuous;
        self.hypothesis = why.into();
        self
    }

    /// Records one instance `lhs ≥ rhs` (or `lhs > rhs` when `strict`),
    /// with `margin` its normalized slack.
    pub(crate) fn instance(&mut self, index: String, lhs: i128, rhs: i128, margin: f64, strict: bool) {
        self.instances += 1;
        if lhs == rhs {
            self.equalities += 1;
        }
        self.margin = Some(self.margin.map_or(margin, |m| m.min(margin)));
        let ok = if strict { lhs > rhs } else { lhs >= rhs };
        if !ok {
            self.verdict = Verdict::Fail;
            self.failures.push(Violation {
                index,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    /// Records an exact identity `lhs = rhs`.
    pub(crate) fn exact(&mut self, index: String, lhs: i128, rhs: i128) {
        self.instances += 1;
        self.equalities += usize::from(lhs == rhs);
        let diff = 0.0 - (lhs - rhs).abs() as f64;
        self.margin = Some(self.margin.map_or(diff, |m| m.min(diff)));
        if lhs != rhs {
            self.verdict = Verdict::Fail;
            self.failures.push(Violation {
                index,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    /// Records a float comparison `lhs ≤ rhs`.
    pub(crate) fn bound(&mut self, index: impl Into<String>, lhs: f64, rhs: f64, strict: bool) {
        self.instances += 1;
        let slack = rhs - lhs;
        self.margin = Some(self.margin.map_or(slack, |m| m.min(slack)));
        let ok = if strict { lhs < rhs } else { lhs <= rhs };
        if !ok {
            self.verdict = Verdict::Fail;
            self.failures.push(Violation {
                index: index.into(),
                lhs: format!("{lhs:.6}"),
                rhs: format!("{rhs:.6}"),
            });
        }
    }

    pub(crate) fn detail(&mut self, key: &str, value: impl Serialize) {
        self.details.insert(key.into(), serde_json::to_value(value).expect("serializable detail"));
    }

    pub(crate) fn caveat(&mut self, text: impl Into<String>) {
        self.caveats.push(text.into());
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RingSummary {
    pub presentation: String,
    pub characteristic: u32,
    pub e: usize,
    pub length: Option<usize>,
    pub embdim: usize,
    pub dim: usize,
    pub ci: bool,
}

impl RingSummary {
    pub fn of(a: &QuotientAlgebra) -> crate::error::Result<Self> {
        Ok(RingSummary {
            presentation: a.summary(),
            characteristic: a.characteristic(),
            e: a.multiplicity()?,
            length: a.length(),
            embdim: a.embedding_dim(),
            dim: a.krull_dim(),
            ci: a.is_complete_intersection(),
        })
    }
}

impl fmt::Display for RingSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring     {}", self.presentation)?;
        let len = self.length.map_or("infinite".to_string(), |l| l.to_string());
        write!(
            f,
            "e = {}, length = {}, embdim = {}, dim = {}, CI = {}",
            self.e, len, self.embdim, self.dim, self.ci
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuditReport {
    pub schema: u32,
    pub command: String,
    pub ring: RingSummary,
    pub depth: usize,
    pub window: usize,
    pub checks: Vec<CheckRecord>,
}

impl AuditReport {
    pub fn new(command: &str, ring: RingSummary, cfg: &AuditConfig) -> Self {
        AuditReport {
            schema: 1,
            command: command.into(),
            ring,
            depth: cfg.depth,
            window: cfg.window,
            checks: Vec::new(),
        }
    }

    /// The worst verdict over all checks, ordered PASS < VACUOUS <
    /// SETUP_VIOLATION < FAIL.
    pub fn verdict(&self) -> Verdict {
        self.checks.iter().map(|c| c.verdict).max().unwrap_or(Verdict::Pass)
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.ring)?;
        writeln!(f, "audit {} (depth {}, window {})", self.command, self.depth, self.window)?;
        for c in &self.checks {
            write!(f, "  [{}] {}", c.verdict, c.name)?;
            if c.instances > 0 {
                write!(f, ": {} instances", c.instances)?;
                if c.equalities > 0 {
                    write!(f, ", {} equalities", c.equalities)?;
                }
                if let Some(m) = c.margin {
                    write!(f, ", worst margin {m:.4}")?;
                }
            }
            writeln!(f)?;
            if c.hypothesis != "none" {
                writeln!(f, "      hypothesis: {}", c.hypothesis)?;
            }
            for v in &c.failures {
                writeln!(f, "      violated at {}: {} vs {}", v.index, v.lhs, v.rhs)?;
            }
            for (k, v) in &c.details {
                writeln!(f, "      {k}: {v}")?;
            }
            for cv in &c.caveats {
                writeln!(f, "      note: {cv}")?;
            }
        }
        write!(f, "overall: {}", self.verdict())
    }
}
