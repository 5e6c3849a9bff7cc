//! Structured pass/fail records produced by the verification suites.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Outside the stated domain of the identity; recorded, never asserted.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub check: String,
    pub params: BTreeMap<String, i64>,
    pub status: CheckStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

fn params(p: &[(&str, i64)]) -> BTreeMap<String, i64> {
    p.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

impl CheckEntry {
    pub fn pass(check: &str, p: &[(&str, i64)]) -> Self {
        CheckEntry {
            check: check.to_string(),
            params: params(p),
            status: CheckStatus::Pass,
            witness: None,
        }
    }

    pub fn fail(check: &str, p: &[(&str, i64)], witness: impl Into<String>) -> Self {
        CheckEntry {
            check: check.to_string(),
            params: params(p),
            status: CheckStatus::Fail,
            witness: Some(witness.into()),
        }
    }

    pub fn skipped(check: &str, p: &[(&str, i64)], note: impl Into<String>) -> Self {
        CheckEntry {
            check: check.to_string(),
            params: params(p),
            status: CheckStatus::Skipped,
            witness: Some(note.into()),
        }
    }

    /// `Ok` passes, `Err(witness)` fails.
    pub fn from_outcome(check: &str, p: &[(&str, i64)], outcome: Result<(), String>) -> Self {
        match outcome {
            Ok(()) => Self::pass(check, p),
            Err(w) => Self::fail(check, p, w),
        }
    }

    pub fn is_pass(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    fn sort_key(&self) -> (Option<i64>, Option<i64>, &str, &BTreeMap<String, i64>) {
        (
            self.params.get("k").copied(),
            self.params.get("n").copied(),
            &self.check,
            &self.params,
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub grid: serde_json::Map<String, serde_json::Value>,
    pub checks: Vec<CheckEntry>,
    pub runtime_ms: u64,
}

impl VerificationReport {
    pub fn new(suite: &str) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            ..Default::default()
        }
    }

    pub fn with_grid(mut self, key: &str, value: impl Serialize) -> Self {
        self.grid.insert(
            key.to_string(),
            serde_json::to_value(value).expect("grid values serialize"),
        );
        self
    }

    pub fn push(&mut self, entry: CheckEntry) {
        self.checks.push(entry);
    }

    pub fn extend(&mut self, entries: impl IntoIterator<Item = CheckEntry>) {
        self.checks.extend(entries);
    }

    /// Sorts checks by `k`, then `n`, then check name, then remaining params.
    pub fn canonicalize(&mut self) {
        self.checks.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    }

    pub fn count(&self, status: CheckStatus) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn is_success(&self) -> bool {
        self.failures().next().is_none()
    }

    /// Deterministic human-readable summary; omits the runtime.
    pub fn summary(&self) -> String {
        let mut by_check: BTreeMap<&str, [usize; 3]> = BTreeMap::new();
        for c in &self.checks {
            let slot = by_check.entry(&c.check).or_default();
            match c.status {
                CheckStatus::Pass => slot[0] += 1,
                CheckStatus::Fail => slot[1] += 1,
                CheckStatus::Skipped => slot[2] += 1,
            }
        }
        let mut out = String::new();
        for (name, [p, f, s]) in &by_check {
            let tag = if *f == 0 { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "{tag} {name}: {p} passed, {f} failed, {s} skipped");
        }
        for c in self.failures().take(20) {
            let _ = writeln!(
                out,
                "  failure {} {:?}: {}",
                c.check,
                c.params,
                c.witness.as_deref().unwrap_or("")
            );
        }
        let _ = write!(
            out,
            "suite {}: {} passed, {} failed, {} skipped",
            self.suite,
            self.count(CheckStatus::Pass),
            self.count(CheckStatus::Fail),
            self.count(CheckStatus::Skipped)
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_k_then_n_then_name() {
        let mut r = VerificationReport::new("t");
        r.push(CheckEntry::pass("b", &[("k", 1), ("n", 3)]));
        r.push(CheckEntry::pass("a", &[("k", 1), ("n", 3)]));
        r.push(CheckEntry::pass("z", &[("k", 0), ("n", 9)]));
        r.push(CheckEntry::fail("a", &[("k", 1), ("n", 2)], "x"));
        r.canonicalize();
        let order: Vec<_> = r
            .checks
            .iter()
            .map(|c| (c.check.as_str(), c.params["k"], c.params["n"]))
            .collect();
        assert_eq!(order, [("z", 0, 9), ("a", 1, 2), ("a", 1, 3), ("b", 1, 3)]);
        assert!(!r.is_success());
        assert_eq!(r.count(CheckStatus::Pass), 3);
    }

    #[test]
    fn json_schema() {
        let mut r = VerificationReport::new("demo").with_grid("k", [0, 2]);
        r.push(CheckEntry::skipped("x", &[("k", 0)], "outside"));
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["suite"], "demo");
        assert_eq!(v["grid"]["k"], serde_json::json!([0, 2]));
        assert_eq!(v["checks"][0]["status"], "skipped");
        assert_eq!(v["checks"][0]["witness"], "outside");
        let back: VerificationReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }
}
