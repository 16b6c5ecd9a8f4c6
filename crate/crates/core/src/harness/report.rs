//! JSON and CSV report documents.

use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use super::{HarnessError, TheoremCheckResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(format!("unknown report format `{other}` (json|csv)")),
        }
    }
}

/// Run header. `timestamp` stays `None` unless supplied, so identical runs
/// produce identical bytes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunInfo {
    pub seed: u64,
    pub timestamp: Option<String>,
    pub version: String,
}

impl RunInfo {
    pub fn new(seed: u64) -> RunInfo {
        RunInfo {
            seed,
            timestamp: None,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

#[derive(Serialize)]
struct Report<'a> {
    run: &'a RunInfo,
    results: &'a [TheoremCheckResult],
}

#[derive(Serialize)]
struct Row<'a> {
    id: &'a str,
    instances_checked: u64,
    verdict: &'a str,
    counterexample_count: usize,
}

pub fn emit_report(
    run: &RunInfo,
    results: &[TheoremCheckResult],
    format: ReportFormat,
) -> Result<String, HarnessError> {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&Report { run, results })
                .map_err(|e| HarnessError::Encode(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            if results.is_empty() {
                w.write_record(["id", "instances_checked", "verdict", "counterexample_count"])
                    .map_err(|e| HarnessError::Encode(e.to_string()))?;
            }
            for r in results {
                w.serialize(Row {
                    id: &r.id,
                    instances_checked: r.instances_checked,
                    verdict: r.verdict.as_str(),
                    counterexample_count: r.counterexamples.len(),
                })
                .map_err(|e| HarnessError::Encode(e.to_string()))?;
            }
            let bytes = w
                .into_inner()
                .map_err(|e| HarnessError::Encode(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| HarnessError::Encode(e.to_string()))
        }
    }
}

/// Writes the report to `path`, or to standard output when `path` is `None`.
pub fn write_report(
    path: Option<&Path>,
    run: &RunInfo,
    results: &[TheoremCheckResult],
    format: ReportFormat,
) -> Result<(), HarnessError> {
    let doc = emit_report(run, results, format)?;
    match path {
        Some(p) => std::fs::write(p, doc)?,
        None => std::io::stdout().write_all(doc.as_bytes())?,
    }
    Ok(())
}
