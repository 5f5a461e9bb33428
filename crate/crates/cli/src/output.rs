use serde::Serialize;
use serde_json::Value;

use axb_core::suites::CaseReport;

use crate::args::Format;

/// One line of output. `status` is `pass`, `fail` or `value`.
#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub suite: String,
    pub case: String,
    pub status: &'static str,
    pub witness: Value,
    /// Replaces the witness in human output.
    #[serde(skip)]
    pub human: Option<String>,
}

impl Record {
    pub fn value(suite: &str, case: &str, witness: impl Into<Value>) -> Self {
        Self {
            suite: suite.into(),
            case: case.into(),
            status: "value",
            witness: witness.into(),
            human: None,
        }
    }

    pub fn check(suite: &str, case: &str, passed: bool, witness: impl Into<Value>) -> Self {
        Self {
            suite: suite.into(),
            case: case.into(),
            status: if passed { "pass" } else { "fail" },
            witness: witness.into(),
            human: None,
        }
    }

    pub fn with_human(mut self, text: String) -> Self {
        self.human = Some(text);
        self
    }

    pub fn failed(&self) -> bool {
        self.status == "fail"
    }
}

impl From<&CaseReport> for Record {
    fn from(r: &CaseReport) -> Self {
        let witness = match &r.witness {
            Some(w) => Value::String(format!("{w} ({} checked)", r.checked)),
            None => Value::String(format!("{} checked", r.checked)),
        };
        Record::check(&r.suite, &r.case, r.passed, witness)
    }
}

fn human_witness(r: &Record) -> String {
    if let Some(h) = &r.human {
        return h.clone();
    }
    match &r.witness {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Renders buffered records in order; returns the rendered text.
pub fn render(records: &[Record], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Structured => {
            for r in records {
                out.push_str(&serde_json::to_string(r).expect("records serialize"));
                out.push('\n');
            }
        }
        // a single queried value is printed bare
        Format::Human if records.len() == 1 && records[0].status == "value" => {
            out.push_str(&human_witness(&records[0]));
            out.push('\n');
        }
        Format::Human => {
            for r in records {
                let w = human_witness(r);
                let line = match r.status {
                    "value" => format!("{} {}: {w}", r.suite, r.case),
                    s => format!("{s:<4}  {} / {}: {w}", r.suite, r.case),
                };
                out.push_str(line.trim_end());
                out.push('\n');
            }
            let checks = records.iter().filter(|r| r.status != "value").count();
            if checks > 0 {
                let failed = records.iter().filter(|r| r.failed()).count();
                out.push_str(&format!("{checks} checks, {failed} failed\n"));
            }
        }
    }
    out
}
