//! Run a few registered claim checks and print the CSV report.

use wfcover::harness::{emit_report, verify, ReportFormat, RunInfo, ScaleOverrides};

fn main() {
    let overrides = ScaleOverrides {
        seed: Some(7),
        random_trials: Some(50),
        ..Default::default()
    };
    let results: Vec<_> = ["T5.2", "T6.1", "L6.5", "C6.16"]
        .iter()
        .map(|id| verify(id, &overrides).unwrap())
        .collect();
    print!("{}", emit_report(&RunInfo::new(7), &results, ReportFormat::Csv).unwrap());
    for r in &results {
        for (k, v) in &r.tallies {
            println!("{:6} {k}: {v}", r.id);
        }
    }
}
