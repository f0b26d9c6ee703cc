//! Pass/fail records shared by every verification routine.

use serde::{Deserialize, Serialize};

use crate::scalars::ScalarRing;

/// Evidence attached to a failing (or otherwise notable) check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    /// Lattice elements or basis indices.
    Elements(Vec<usize>),
    /// Coefficient tuple of an algebra element or form.
    Coords(Vec<f64>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub pass: bool,
    pub max_residual: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

impl CheckResult {
    pub fn new(check: impl Into<String>, pass: bool, max_residual: f64) -> Self {
        Self {
            check: check.into(),
            pass,
            max_residual,
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: Option<Witness>) -> Self {
        self.witness = witness;
        self
    }

    /// Boolean check with an optional element witness; residual 0 or 1.
    pub fn exact(check: impl Into<String>, witness: Option<Vec<usize>>) -> Self {
        let pass = witness.is_none();
        Self::new(check, pass, if pass { 0.0 } else { 1.0 })
            .with_witness(witness.map(Witness::Elements))
    }
}

/// An ordered list of named checks.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub checks: Vec<CheckResult>,
}

impl AxiomReport {
    pub fn push(&mut self, c: CheckResult) {
        self.checks.push(c);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check == name)
    }

    pub fn passes(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.pass)
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.checks.extend(other.checks);
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().fold(0.0, |a, c| a.max(c.max_residual))
    }
}

pub const TOOL_VERSION: &str = concat!("starlattice ", env!("CARGO_PKG_VERSION"));

/// Top-level report emitted by the command-line tool.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: Vec<CheckResult>,
    pub seed: u64,
    pub tool_version: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ring: Option<ScalarRing>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ambient_dim: Option<usize>,
    /// Checks declared as expected to fail.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub expected_failures: Vec<String>,
    /// Checks not run because an earlier stage failed.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub skipped: Vec<String>,
}

impl VerificationReport {
    /// Builds a report with cases sorted by check name.
    pub fn new(suite: impl Into<String>, seed: u64, mut cases: Vec<CheckResult>) -> Self {
        cases.sort_by(|a, b| a.check.cmp(&b.check));
        Self {
            suite: suite.into(),
            cases,
            seed,
            tool_version: TOOL_VERSION.to_string(),
            ring: None,
            ambient_dim: None,
            expected_failures: Vec::new(),
            skipped: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    /// Every case passed except the expected failures, and each expected
    /// failure was run and did fail.
    pub fn as_expected(&self) -> bool {
        let unexpected = self
            .cases
            .iter()
            .any(|c| c.pass == self.expected_failures.contains(&c.check));
        let missing = self
            .expected_failures
            .iter()
            .any(|e| !self.cases.iter().any(|c| &c.check == e));
        !unexpected && !missing
    }

    /// One line per case.
    pub fn to_text(&self) -> String {
        let mut out = format!("suite {} (seed {}, {})\n", self.suite, self.seed, self.tool_version);
        if let (Some(r), Some(n)) = (self.ring, self.ambient_dim) {
            out.push_str(&format!("ring {r}, ambient dimension {n}\n"));
        }
        for c in &self.cases {
            let tag = match (c.pass, self.expected_failures.contains(&c.check)) {
                (true, _) => "PASS",
                (false, true) => "XFAIL",
                (false, false) => "FAIL",
            };
            out.push_str(&format!("{tag:<5} {:<36} {:.3e}", c.check, c.max_residual));
            if let Some(w) = &c.witness {
                out.push_str(&format!("  witness {}", serde_json::to_string(w).expect("witness")));
            }
            out.push('\n');
        }
        for s in &self.skipped {
            out.push_str(&format!("SKIP  {s}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cases_are_sorted_and_witness_shapes_serialize() {
        let r = VerificationReport::new(
            "t",
            1,
            vec![
                CheckResult::exact("zeta", Some(vec![1, 2])),
                CheckResult::new("alpha", true, 0.5)
                    .with_witness(Some(Witness::Coords(vec![0.25]))),
            ],
        );
        assert_eq!(r.cases[0].check, "alpha");
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains(r#""witness":[1,2]"#));
        assert!(json.contains(r#""witness":[0.25]"#));
        assert!(!r.passed() && !r.as_expected());
        let mut x = r.clone();
        x.expected_failures = vec!["zeta".into()];
        assert!(x.as_expected());
        x.expected_failures.push("alpha".into());
        assert!(!x.as_expected());
        assert!(r.to_text().contains("FAIL  zeta"));
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
