//! Check records and the report that collects them.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use partition_verify::{FirstDiff, Verdict};
use serde::{Deserialize, Serialize};

/// Outcome of one check. Exact comparisons report `match`/`mismatch`,
/// tolerance checks `pass`/`fail`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Match,
    Mismatch,
    Pass,
    Fail,
}

impl CheckStatus {
    pub fn is_ok(self) -> bool {
        matches!(self, CheckStatus::Match | CheckStatus::Pass)
    }

    fn label(self) -> &'static str {
        match self {
            CheckStatus::Match => "match",
            CheckStatus::Mismatch => "mismatch",
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub module: String,
    pub id: String,
    pub parameters: BTreeMap<String, String>,
    pub status: CheckStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_diff: Option<FirstDiff>,
    /// Largest residual of a floating-point check.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    /// Further named quantities (candidates, empirical values).
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, f64>,
    pub elapsed_ms: u64,
    /// The identity is a proposal; its verdict is a finding.
    #[serde(default)]
    pub claim: bool,
}

impl Check {
    pub fn new(module: &str, id: impl Into<String>, status: CheckStatus) -> Self {
        Check {
            module: module.to_string(),
            id: id.into(),
            parameters: BTreeMap::new(),
            status,
            first_diff: None,
            residual: None,
            values: BTreeMap::new(),
            elapsed_ms: 0,
            claim: false,
        }
    }

    pub fn from_verdict(module: &str, id: impl Into<String>, verdict: Verdict) -> Self {
        let status = if verdict.is_match() { CheckStatus::Match } else { CheckStatus::Mismatch };
        Check { first_diff: verdict.first_diff, ..Check::new(module, id, status) }
    }

    pub fn tolerance(module: &str, id: impl Into<String>, residual: f64, tol: f64) -> Self {
        let status = if residual < tol { CheckStatus::Pass } else { CheckStatus::Fail };
        Check { residual: Some(residual), ..Check::new(module, id, status) }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn value(mut self, key: &str, v: f64) -> Self {
        self.values.insert(key.to_string(), v);
        self
    }

    pub fn elapsed(mut self, ms: u128) -> Self {
        self.elapsed_ms = ms.try_into().unwrap_or(u64::MAX);
        self
    }

    /// One deterministic line; timings are left out.
    fn text_line(&self) -> String {
        let mut line = format!("{:<10} {:<30} {}", self.module, self.id, self.status.label());
        if self.claim {
            line.push_str(" (claim)");
        }
        if !self.parameters.is_empty() {
            let params: Vec<String> = self.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = write!(line, " [{}]", params.join(" "));
        }
        if let Some(d) = &self.first_diff {
            let _ = write!(line, " first difference at {}: {} vs {}", d.index, d.left, d.right);
            if let Some(detail) = &d.detail {
                let _ = write!(line, " ({detail})");
            }
        }
        if let Some(r) = self.residual {
            let _ = write!(line, " residual={r:.3e}");
        }
        for (k, v) in &self.values {
            let _ = write!(line, " {k}={}", number(*v));
        }
        line
    }
}

fn number(v: f64) -> String {
    if v != 0.0 && v.abs() < 1e-3 { format!("{v:.3e}") } else { format!("{v:.6}") }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub timestamp: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(checks: Vec<Check>) -> Self {
        Report {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            checks,
        }
    }

    /// Checks that fail the run: every failure when `strict`, otherwise only
    /// those that are not flagged as claims.
    pub fn failures(&self, strict: bool) -> usize {
        self.checks.iter().filter(|c| !c.status.is_ok() && (strict || !c.claim)).count()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&c.text_line());
            out.push('\n');
        }
        let failed = self.checks.iter().filter(|c| !c.status.is_ok()).count();
        let _ = writeln!(out, "{} checks, {} passed, {} failed", self.checks.len(), self.checks.len() - failed, failed);
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let diff = FirstDiff { index: 9, left: 6.into(), right: 5.into(), detail: Some("a vs b".into()) };
        let mut claim = Check::from_verdict("identities", "proposal", Verdict::mismatch(diff)).param("order", 40);
        claim.claim = true;
        Report::new(vec![
            Check::from_verdict("identities", "euler", Verdict::matched()).param("order", 500).elapsed(3),
            Check::tolerance("analytic", "mellin", 7.1e-10, 1e-6).param("s", 1).value("quadrature", 0.6137),
            claim,
        ])
    }

    #[test]
    fn json_round_trips() {
        let report = sample();
        let json = report.to_json();
        let parsed: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, report);
        assert_eq!(parsed.to_json(), json);
    }

    #[test]
    fn strictness_decides_whether_claims_fail_the_run() {
        let report = sample();
        assert_eq!(report.failures(true), 1);
        assert_eq!(report.failures(false), 0);
        let mut broken = report.clone();
        broken.checks[0].status = CheckStatus::Mismatch;
        assert_eq!(broken.failures(false), 1);
    }

    #[test]
    fn text_omits_timings() {
        let mut a = sample();
        let mut b = sample();
        a.checks[0].elapsed_ms = 1;
        b.checks[0].elapsed_ms = 999;
        b.timestamp = "later".into();
        assert_eq!(a.to_text(), b.to_text());
        let text = a.to_text();
        assert!(text.contains("mismatch (claim) [order=40] first difference at 9: 6 vs 5 (a vs b)"), "{text}");
        assert!(text.ends_with("3 checks, 2 passed, 1 failed\n"));
    }

    #[test]
    fn tolerance_status() {
        assert_eq!(Check::tolerance("m", "x", 1e-3, 1e-6).status, CheckStatus::Fail);
        assert_eq!(Check::tolerance("m", "x", 1e-9, 1e-6).status, CheckStatus::Pass);
        assert!(!CheckStatus::Fail.is_ok() && CheckStatus::Pass.is_ok());
    }
}
