//! Finite checks of the avoidability claims, and the report they produce.

mod check;
mod registry;
mod report;

pub use check::{Check, Expectation, LemmaCheck};
pub use registry::registry;
pub use report::{emit_report, Report, ReportFormat, Row, Status};

use std::time::Instant;

use crate::error::{Error, Result};

pub const DEFAULT_PREFIX_LEN: usize = 10_000;

/// Runs every registered check whose id starts with `filter`.
pub fn run_suite(filter: Option<&str>, prefix_len: usize, depth: usize) -> Result<Report> {
    if prefix_len < 100 {
        return Err(Error::Domain(format!("prefix_len must be at least 100, got {prefix_len}")));
    }
    if depth == 0 {
        return Err(Error::Domain("depth must be at least 1".into()));
    }
    let selected: Vec<LemmaCheck> = registry()
        .into_iter()
        .filter(|c| filter.map_or(true, |f| c.id.starts_with(f)))
        .collect();
    let mut rows = Vec::with_capacity(selected.len());
    for c in &selected {
        let clock = Instant::now();
        let (observed, status) = match c.check.run(prefix_len, depth) {
            Ok(outcome) => outcome,
            Err(e) => (format!("error: {e}"), Status::Fail),
        };
        rows.push(Row {
            id: c.id.clone(),
            anchor: c.anchor.clone(),
            expected: c.check.expected(prefix_len),
            observed,
            status,
            ms: clock.elapsed().as_millis() as u64,
        });
    }
    rows.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(Report {
        unknown_filter: filter.is_some() && rows.is_empty(),
        rows,
    })
}
