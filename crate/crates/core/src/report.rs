//! Structured pass/fail records for axiom checks.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::field::Field;
use crate::linalg::LinMap;

/// Why a check failed. Matrix residuals are kept exact, in scalar text form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Residual {
    Matrix {
        cod: usize,
        dom: usize,
        entries: Vec<Vec<String>>,
    },
    /// Elements of a finite set witnessing a violated identity.
    Witness(Vec<usize>),
    Message(String),
}

impl Residual {
    pub fn matrix<K: Field>(m: &LinMap<K>) -> Self {
        Residual::Matrix {
            cod: m.cod(),
            dom: m.dom(),
            entries: (0..m.cod())
                .map(|i| m.row(i).iter().map(|v| v.to_string()).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub anchor: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<Residual>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    /// Reported properties that do not affect the verdict.
    pub flags: BTreeMap<String, bool>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `lhs = rhs`; the residual is `lhs - rhs`.
    pub fn equal<K: Field>(&mut self, name: &str, anchor: &str, lhs: &LinMap<K>, rhs: &LinMap<K>) -> bool {
        if lhs.shape() != rhs.shape() {
            self.record(
                name,
                anchor,
                false,
                Some(Residual::Message(format!(
                    "shape {:?} vs {:?}",
                    lhs.shape(),
                    rhs.shape()
                ))),
            );
            return false;
        }
        let diff = lhs.sub(rhs).expect("shapes and fields checked");
        self.zero(name, anchor, &diff)
    }

    /// Records that `residual` is the zero map.
    pub fn zero<K: Field>(&mut self, name: &str, anchor: &str, residual: &LinMap<K>) -> bool {
        let pass = residual.is_zero();
        let res = (!pass).then(|| Residual::matrix(residual));
        self.record(name, anchor, pass, res);
        pass
    }

    pub fn record(&mut self, name: &str, anchor: &str, pass: bool, residual: Option<Residual>) {
        self.checks.push(Check {
            name: name.to_string(),
            anchor: anchor.to_string(),
            pass,
            residual,
        });
    }

    pub fn flag(&mut self, name: &str, value: bool) {
        self.flags.insert(name.to_string(), value);
    }

    /// Appends another report's checks and flags with names prefixed.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
        for (k, v) in other.flags {
            self.flags.insert(format!("{prefix}{k}"), v);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Whether some check carrying this anchor failed.
    pub fn fails_anchor(&self, anchor: &str) -> bool {
        self.failures().any(|c| c.anchor == anchor)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "[{}] {} ({})",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.anchor
            )?;
        }
        for (k, v) in &self.flags {
            writeln!(f, "  flag {k} = {v}")?;
        }
        write!(
            f,
            "{}: {}/{} checks passed",
            if self.passed() { "PASS" } else { "FAIL" },
            self.checks.iter().filter(|c| c.pass).count(),
            self.checks.len()
        )
    }
}
