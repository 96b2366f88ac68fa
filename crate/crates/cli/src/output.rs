use std::fmt::Write;

use nijenhuis_core::multilinear::DegreeRow;
use nijenhuis_core::{Error, Report, Witness};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct Table {
    pub name: String,
    pub rows: Vec<DegreeRow>,
    /// Cocycles completing the coboundaries, per degree, as coordinate vectors.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub representatives: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    pub tables: Vec<Table>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl RunReport {
    pub fn from_report(report: Report) -> Self {
        let status = if report.is_ok() { Status::Pass } else { Status::Fail };
        Self {
            command: String::new(),
            status,
            witnesses: report.witnesses,
            tables: Vec::new(),
            output: None,
            error: None,
        }
    }

    pub fn tables(tables: Vec<Table>, failures: Report) -> Self {
        Self { tables, ..Self::from_report(failures) }
    }

    pub fn written(path: Option<String>) -> Self {
        Self { output: path, ..Self::from_report(Report::new()) }
    }

    pub fn error(command: &str, e: &Error) -> Self {
        Self {
            command: command.to_string(),
            status: Status::Error,
            witnesses: Vec::new(),
            tables: Vec::new(),
            output: None,
            error: Some(e.to_string()),
        }
    }

    pub fn named(mut self, command: &str) -> Self {
        self.command = command.to_string();
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn render(&self, witnesses: bool) -> String {
        let mut s = String::new();
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Error => "error",
        };
        let _ = writeln!(s, "{}: {status}", self.command);
        if let Some(e) = &self.error {
            let _ = writeln!(s, "  {e}");
        }
        if let Some(o) = &self.output {
            let _ = writeln!(s, "  wrote {o}");
        }
        if !self.witnesses.is_empty() {
            let report = Report { witnesses: self.witnesses.clone() };
            for label in report.labels() {
                let _ = writeln!(s, "  {label}: {} failed", report.count(label));
            }
            if witnesses {
                for w in &self.witnesses {
                    let idx = w.indices.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
                    let _ = writeln!(s, "  {} [{idx}] ({})", w.label, w.residual.join(", "));
                }
            }
        }
        for t in &self.tables {
            let _ = writeln!(s, "{}", t.name);
            let _ = writeln!(
                s,
                "  {:>6} {:>9} {:>9} {:>12} {:>10}",
                "degree", "cochains", "cocycles", "coboundaries", "cohomology"
            );
            for r in &t.rows {
                let _ = writeln!(
                    s,
                    "  {:>6} {:>9} {:>9} {:>12} {:>10}",
                    r.degree, r.cochains, r.cocycles, r.coboundaries, r.cohomology
                );
            }
            for (n, reps) in t.representatives.iter().enumerate() {
                for v in reps {
                    let _ = writeln!(s, "  H^{n}: ({})", v.join(", "));
                }
            }
        }
        s
    }
}
