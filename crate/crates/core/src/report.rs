//! Structured, serializable outcome of a run.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    /// An internal contract was violated or a required result did not hold.
    Fail,
    /// The computation disagrees with a published statement.
    Finding,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Finding => "FINDING",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub status: Status,
    pub detail: String,
    pub data: Value,
}

impl CheckRecord {
    pub fn new(id: impl Into<String>, status: Status, detail: impl Into<String>) -> CheckRecord {
        CheckRecord {
            id: id.into(),
            status,
            detail: detail.into(),
            data: Value::Null,
        }
    }

    pub fn with_data(mut self, data: impl Serialize) -> CheckRecord {
        self.data = serde_json::to_value(data).unwrap_or_else(|e| Value::String(format!("unserializable: {e}")));
        self
    }

    pub fn pass_if(id: impl Into<String>, ok: bool, detail: impl Into<String>) -> CheckRecord {
        CheckRecord::new(id, if ok { Status::Pass } else { Status::Fail }, detail)
    }

    /// `Pass` when the stated result is confirmed, `Finding` otherwise.
    pub fn finding_unless(id: impl Into<String>, agrees: bool, detail: impl Into<String>) -> CheckRecord {
        CheckRecord::new(id, if agrees { Status::Pass } else { Status::Finding }, detail)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub finding: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerdictReport {
    pub schema_version: u32,
    pub tool_version: String,
    /// Filled in by the caller; excluded from determinism comparisons.
    pub generated_at: Option<String>,
    pub config: Value,
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
}

impl VerdictReport {
    pub fn new(config: impl Serialize, records: Vec<CheckRecord>) -> VerdictReport {
        let mut r = VerdictReport {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            generated_at: None,
            config: serde_json::to_value(config).unwrap_or(Value::Null),
            records,
            summary: Summary::default(),
        };
        r.summary = r.tally();
        r
    }

    pub fn tally(&self) -> Summary {
        let count = |s: Status| self.records.iter().filter(|r| r.status == s).count();
        Summary {
            total: self.records.len(),
            pass: count(Status::Pass),
            fail: count(Status::Fail),
            finding: count(Status::Finding),
        }
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.records.push(record);
        self.summary = self.tally();
    }

    /// 0 when nothing failed (findings escalate only under `strict_paper`), else 1.
    pub fn exit_code(&self, strict_paper: bool) -> i32 {
        if self.summary.fail > 0 || (strict_paper && self.summary.finding > 0) {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# fvblab report\n");
        let _ = writeln!(s, "tool {} · schema {}", self.tool_version, self.schema_version);
        if let Some(t) = &self.generated_at {
            let _ = writeln!(s, "generated {t}");
        }
        let _ = writeln!(
            s,
            "\n**{} checks: {} pass, {} fail, {} finding**\n",
            self.summary.total, self.summary.pass, self.summary.fail, self.summary.finding
        );
        let _ = writeln!(s, "| status | id | detail |");
        let _ = writeln!(s, "|---|---|---|");
        for r in &self.records {
            let detail = r.detail.replace('|', "\\|").replace('\n', " ");
            let _ = writeln!(s, "| {} | `{}` | {} |", r.status.label(), r.id, detail);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tallies_and_exit_codes() {
        let mut r = VerdictReport::new(
            serde_json::json!({"seed": 1}),
            vec![CheckRecord::new("a", Status::Pass, ""), CheckRecord::new("b", Status::Finding, "x|y")],
        );
        assert_eq!(r.summary, Summary { total: 2, pass: 1, fail: 0, finding: 1 });
        assert_eq!(r.exit_code(false), 0);
        assert_eq!(r.exit_code(true), 1);
        assert!(r.to_markdown().contains("x\\|y"));
        r.push(CheckRecord::pass_if("c", false, ""));
        assert_eq!(r.summary.fail, 1);
        assert_eq!(r.exit_code(false), 1);
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["summary"]["total"], 3);
    }
}
