//! The verification report and its text and JSON renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Case {
    pub id: String,
    pub inputs: BTreeMap<String, String>,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Case {
    /// A case that passes when `actual` equals `expected` verbatim.
    pub fn compare(
        id: String,
        inputs: &[(&str, String)],
        expected: String,
        actual: String,
    ) -> Case {
        let pass = expected == actual;
        Case {
            id,
            inputs: inputs
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            expected,
            actual,
            pass,
        }
    }

    /// A predicate check: expects `true`.
    pub fn holds(id: String, inputs: &[(&str, String)], actual: bool) -> Case {
        Case::compare(id, inputs, "true".into(), actual.to_string())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub cases: Vec<Case>,
    pub totals: Totals,
    /// Seconds.
    pub wall_time: f64,
}

impl Report {
    pub fn new(suite: &str, cases: Vec<Case>, wall_time: f64) -> Report {
        let pass = cases.iter().filter(|c| c.pass).count();
        let totals = Totals {
            pass,
            fail: cases.len() - pass,
        };
        Report {
            suite: suite.to_string(),
            cases,
            totals,
            wall_time,
        }
    }

    pub fn passed(&self) -> bool {
        self.totals.fail == 0
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} cases, {} pass, {} fail ({:.2} s)",
            self.suite,
            self.cases.len(),
            self.totals.pass,
            self.totals.fail,
            self.wall_time
        )
    }

    /// Failing cases in full, then the summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for case in self.cases.iter().filter(|c| !c.pass) {
            let inputs: Vec<String> = case
                .inputs
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            let _ = writeln!(out, "FAIL {} [{}]", case.id, inputs.join(", "));
            let _ = writeln!(out, "  expected: {}", case.expected);
            let _ = writeln!(out, "  actual:   {}", case.actual);
        }
        let _ = writeln!(out, "{}", self.summary());
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totals_follow_cases() {
        let cases = vec![
            Case::holds("a".into(), &[], true),
            Case::compare("b".into(), &[("n", "1".into())], "4".into(), "5".into()),
        ];
        let r = Report::new("demo", cases, 0.0);
        assert_eq!(r.totals, Totals { pass: 1, fail: 1 });
        assert!(!r.passed());
        assert!(r.to_text().contains("FAIL b [n=1]"));
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["cases"][1]["inputs"]["n"], "1");
        assert_eq!(v["totals"]["fail"], 1);
    }
}
