use std::fmt::Write as _;

use poisson_core::crosscheck::{CaseOutcome, OracleSummary};

/// One line per grid point followed by a summary line.
pub fn render_summary(summary: &OracleSummary) -> String {
    let mut out = String::new();
    for case in &summary.cases {
        let status = match &case.outcome {
            CaseOutcome::Match { value } => format!("ok        engine = oracle = {value}"),
            CaseOutcome::Mismatch { engine, oracle } => {
                format!("MISMATCH  engine = {engine}, oracle = {oracle}")
            }
            CaseOutcome::Skipped { reason } => format!("skipped   {reason}"),
        };
        let _ = writeln!(out, "g={} e={:<4} {:<18} {status}", case.genus, case.e, case.label);
    }
    let _ = write!(
        out,
        "{} passed, {} failed, {} skipped",
        summary.passed(),
        summary.failed(),
        summary.skipped()
    );
    if let Some(first) = summary.first_mismatch() {
        let _ = write!(out, "; first mismatch at g={} e={} ({})", first.genus, first.e, first.label);
    }
    out.push('\n');
    out
}
