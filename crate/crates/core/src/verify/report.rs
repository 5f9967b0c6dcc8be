use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// No verdict is claimed.
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Info => "info",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub id: String,
    pub anchor: String,
    pub expected: String,
    pub observed: String,
    pub status: Status,
    pub ms: u64,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub rows: Vec<Row>,
    /// The filter matched no registered id.
    pub unknown_filter: bool,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        !self.unknown_filter && self.rows.iter().all(|r| r.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "markdown" | "md" => Ok(ReportFormat::Markdown),
            _ => Err(Error::Domain(format!("unknown report format {s:?}"))),
        }
    }
}

pub fn emit_report(r: &Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["id", "anchor", "expected", "observed", "status", "ms"])
                .expect("in-memory write");
            for row in &r.rows {
                let ms = row.ms.to_string();
                let status = row.status.to_string();
                w.write_record([&row.id, &row.anchor, &row.expected, &row.observed, &status, &ms])
                    .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
        }
        ReportFormat::Markdown => {
            let cell = |s: &str| s.replace('|', "\\|");
            let mut out = String::from("| id | anchor | expected | observed | status | ms |\n|---|---|---|---|---|---|\n");
            for row in &r.rows {
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} |\n",
                    cell(&row.id),
                    cell(&row.anchor),
                    cell(&row.expected),
                    cell(&row.observed),
                    row.status,
                    row.ms
                ));
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(status: Status) -> Row {
        Row {
            id: "X_1".into(),
            anchor: "a, b".into(),
            expected: "avoids".into(),
            observed: "avoids".into(),
            status,
            ms: 3,
        }
    }

    #[test]
    fn csv_layout() {
        let empty = Report::default();
        assert_eq!(emit_report(&empty, ReportFormat::Csv), "id,anchor,expected,observed,status,ms\n");
        let one = Report {
            rows: vec![row(Status::Pass)],
            unknown_filter: false,
        };
        let text = emit_report(&one, ReportFormat::Csv);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[1], "X_1,\"a, b\",avoids,avoids,pass,3");
    }

    #[test]
    fn markdown_layout() {
        let one = Report {
            rows: vec![row(Status::Info)],
            unknown_filter: false,
        };
        let text = emit_report(&one, ReportFormat::Markdown);
        assert!(text.starts_with("| id | anchor | expected | observed | status | ms |"));
        assert!(text.contains("| X_1 | a, b | avoids | avoids | info | 3 |"));
        assert!(one.all_passed());
    }
}
