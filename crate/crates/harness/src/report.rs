//! Check records, the aggregated report and its two renderings.

use std::fmt::Write as _;
use std::time::Duration;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub verdict: Verdict,
    pub samples: u64,
    /// First failing case, in the text syntax of the algebra.
    pub counterexample: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Wall time; shown in text reports only.
    #[serde(skip)]
    pub elapsed: Option<Duration>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub seed: u64,
    pub algebra: String,
    pub overall: Verdict,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    /// Overall verdict is fail iff some check failed.
    pub fn new(seed: u64, algebra: String, checks: Vec<CheckRecord>) -> Self {
        let overall = if checks.iter().any(|c| c.verdict == Verdict::Fail) {
            Verdict::Fail
        } else {
            Verdict::Pass
        };
        Report { seed, algebra, overall, checks }
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.check == name)
    }

    pub fn exit_code(&self) -> i32 {
        match self.overall {
            Verdict::Fail => 1,
            _ => 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Text => text(report),
        Format::Machine => {
            let mut out = serde_json::to_string_pretty(report).expect("reports serialize");
            out.push('\n');
            out
        }
    }
}

pub fn parse_machine(src: &str) -> Result<Report, serde_json::Error> {
    serde_json::from_str(src)
}

fn text(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "algebra: {}  seed: {}", report.algebra, report.seed);
    let width = report.checks.iter().map(|c| c.check.len()).max().unwrap_or(0);
    for c in &report.checks {
        let _ = write!(out, "{:<12} {:<width$}  samples={}", c.verdict.label(), c.check, c.samples);
        if let Some(t) = c.elapsed {
            let _ = write!(out, "  {} ms", t.as_millis());
        }
        if let Some(cex) = &c.counterexample {
            let _ = write!(out, "  counterexample: {cex}");
        }
        if let Some(r) = &c.reason {
            let _ = write!(out, "  reason: {r}");
        }
        out.push('\n');
    }
    let _ = writeln!(out, "overall: {}", report.overall.label());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(name: &str, verdict: Verdict) -> CheckRecord {
        CheckRecord {
            check: name.into(),
            verdict,
            samples: 3,
            counterexample: (verdict == Verdict::Fail).then(|| "1 + i | j | k".to_string()),
            reason: None,
            elapsed: Some(Duration::from_millis(5)),
        }
    }

    #[test]
    fn overall_verdict() {
        let pass = Report::new(1, "x".into(), vec![record("a", Verdict::Pass), record("b", Verdict::Inconclusive)]);
        assert_eq!(pass.overall, Verdict::Pass);
        assert_eq!(pass.exit_code(), 0);
        let fail = Report::new(1, "x".into(), vec![record("a", Verdict::Pass), record("b", Verdict::Fail)]);
        assert_eq!(fail.overall, Verdict::Fail);
        assert_eq!(fail.exit_code(), 1);
    }

    #[test]
    fn machine_round_trip_drops_time() {
        let r = Report::new(9, "caseA a=-1 b=-1".into(), vec![record("a", Verdict::Fail)]);
        let out = emit_report(&r, Format::Machine);
        assert!(!out.contains("elapsed"));
        let back = parse_machine(&out).unwrap();
        assert_eq!(back.checks[0].counterexample.as_deref(), Some("1 + i | j | k"));
        assert_eq!(emit_report(&back, Format::Machine), out);
    }

    #[test]
    fn text_has_one_line_per_check() {
        let r = Report::new(9, "x".into(), vec![record("a", Verdict::Pass), record("b", Verdict::Fail)]);
        let out = emit_report(&r, Format::Text);
        assert_eq!(out.lines().count(), 4);
        assert!(out.contains("FAIL"));
        assert!(out.ends_with("overall: FAIL\n"));
    }
}
