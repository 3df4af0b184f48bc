//! Verification reports and their serializations.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;

use serde::Serialize;

use crate::check::{CheckOutcome, Status};
use crate::error::{Error, Result};

/// Fields are declared in alphabetical order so that serialized objects have
/// sorted keys.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportEntry {
    pub actual: String,
    pub check_id: String,
    pub elapsed_ms: u64,
    pub expected: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub witness: Option<String>,
}

impl ReportEntry {
    pub fn new(check_id: &str, params: BTreeMap<String, String>, outcome: CheckOutcome, elapsed_ms: u64) -> Self {
        ReportEntry {
            actual: outcome.actual,
            check_id: check_id.to_string(),
            elapsed_ms,
            expected: outcome.expected,
            params,
            status: outcome.status,
            witness: outcome.witness,
        }
    }

    pub fn params_text(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub entries: Vec<ReportEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "text" => Ok(ReportFormat::Text),
            other => Err(Error::Parse(format!("unknown report format {other:?}"))),
        }
    }
}

/// Orders parameter maps numerically where values are integers, so `n=10`
/// sorts after `n=9`.
fn param_key(params: &BTreeMap<String, String>) -> Vec<(String, (i64, String))> {
    params
        .iter()
        .map(|(k, v)| {
            let num = v.parse::<i64>().ok();
            (k.clone(), (num.unwrap_or(i64::MIN), if num.is_some() { String::new() } else { v.clone() }))
        })
        .collect()
}

impl VerificationReport {
    pub fn new(mut entries: Vec<ReportEntry>) -> Self {
        entries.sort_by(|a, b| {
            a.check_id
                .cmp(&b.check_id)
                .then_with(|| param_key(&a.params).cmp(&param_key(&b.params)))
                .then_with(|| a.params.cmp(&b.params))
        });
        VerificationReport { entries }
    }

    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn has_failures(&self) -> bool {
        self.count(Status::Fail) > 0
    }

    /// The same report with timings zeroed, so that reruns compare equal.
    pub fn without_timings(&self) -> Self {
        let mut out = self.clone();
        for e in &mut out.entries {
            e.elapsed_ms = 0;
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(["check_id", "params", "status", "expected", "actual", "witness", "elapsed_ms"])
            .map_err(io)?;
        for e in &self.entries {
            w.write_record([
                e.check_id.as_str(),
                &e.params_text(),
                &e.status.to_string(),
                &e.expected,
                &e.actual,
                e.witness.as_deref().unwrap_or(""),
                &e.elapsed_ms.to_string(),
            ])
            .map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let _ = write!(out, "{:<7} {} [{}] {}", e.status.to_string(), e.check_id, e.params_text(), e.actual);
            if e.status != Status::Pass {
                if let Some(w) = &e.witness {
                    let _ = write!(out, " | {w}");
                }
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "{} entries: {} pass, {} fail, {} finding",
            self.entries.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Finding)
        );
        out
    }

    pub fn render(&self, format: ReportFormat) -> Result<String> {
        match format {
            ReportFormat::Json => Ok(self.to_json()),
            ReportFormat::Csv => self.to_csv(),
            ReportFormat::Text => Ok(self.to_text()),
        }
    }

    pub fn emit(&self, format: ReportFormat, path: &std::path::Path) -> Result<()> {
        let text = self.render(format)?;
        let mut f = std::fs::File::create(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        f.write_all(text.as_bytes())
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}

/// A table of exact numbers, one row per key.
pub fn numbers_csv(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(id: &str, n: &str) -> ReportEntry {
        ReportEntry::new(
            id,
            BTreeMap::from([("n".to_string(), n.to_string())]),
            CheckOutcome::pass("1", "1"),
            5,
        )
    }

    #[test]
    fn empty_report_json() {
        assert_eq!(VerificationReport::default().to_json(), r#"{"entries":[]}"#);
    }

    #[test]
    fn entry_has_all_fields_in_order() {
        let r = VerificationReport::new(vec![entry("a", "1")]);
        assert_eq!(
            r.to_json(),
            r#"{"entries":[{"actual":"1","check_id":"a","elapsed_ms":5,"expected":"1","params":{"n":"1"},"status":"pass","witness":null}]}"#
        );
    }

    #[test]
    fn sorted_regardless_of_input_order() {
        let r = VerificationReport::new(vec![entry("b", "1"), entry("a", "10"), entry("a", "9")]);
        let ids: Vec<(String, String)> = r.entries.iter().map(|e| (e.check_id.clone(), e.params_text())).collect();
        assert_eq!(
            ids,
            vec![("a".into(), "n=9".into()), ("a".into(), "n=10".into()), ("b".into(), "n=1".into())]
        );
        let csv = r.without_timings().to_csv().unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("check_id,params,status,expected,actual,witness,elapsed_ms"));
        assert_eq!(lines.next(), Some("a,n=9,pass,1,1,,0"));
        assert!(!r.has_failures());
    }
}
