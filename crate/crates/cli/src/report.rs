use std::fmt::Write as _;

use poisson_core::{ClassificationReport, Condition, DimAnswer, RuleStep, SurfaceSpec, Verdict};
use serde::{Deserialize, Serialize};

/// Process exit statuses.
pub mod exit {
    pub const POISSON: u8 = 0;
    pub const NOT_POISSON: u8 = 1;
    pub const CONDITIONAL: u8 = 2;
    pub const PARSE_ERROR: u8 = 64;
    pub const VALIDATION_ERROR: u8 = 65;
}

pub fn exit_status(verdict: &Verdict) -> u8 {
    match verdict {
        Verdict::Poisson => exit::POISSON,
        Verdict::NotPoisson => exit::NOT_POISSON,
        Verdict::Conditional { .. } => exit::CONDITIONAL,
    }
}

/// A classification as emitted by `classify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub surface: SurfaceSpec,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub dimension: DimAnswer,
    pub rule_chain: Vec<RuleStep>,
}

impl ReportDocument {
    pub fn new(surface: SurfaceSpec, report: ClassificationReport) -> Self {
        ReportDocument {
            surface,
            verdict: report.verdict,
            dimension: report.dim,
            rule_chain: report.rule_chain,
        }
    }

    pub fn exit_status(&self) -> u8 {
        exit_status(&self.verdict)
    }

    pub fn to_machine(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_machine(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "verdict:   {}", self.verdict);
        let _ = writeln!(out, "h0(-K_X):  {}", render_dimension(&self.dimension));
        if let Verdict::Conditional { condition } = &self.verdict {
            let _ = writeln!(out, "condition: {}", render_condition(condition));
        }
        let _ = writeln!(out, "rules:");
        for (i, step) in self.rule_chain.iter().enumerate() {
            let _ = writeln!(
                out,
                "  {}. [{}] {} => {}",
                i + 1,
                step.rule.name(),
                step.rule,
                render_dimension(&step.outcome)
            );
        }
        out
    }
}

pub fn render_dimension(dim: &DimAnswer) -> String {
    match dim {
        DimAnswer::Exact { value } => value.to_string(),
        DimAnswer::Interval { lo, hi } => format!("between {lo} and {hi}"),
        DimAnswer::ConditionalOn { class } => {
            format!("0 unless {class} is effective")
        }
    }
}

fn render_condition(condition: &Condition) -> String {
    match condition {
        Condition::Effective { class } => {
            format!("Poisson iff -K_C - det V (the class {class}) is effective")
        }
        Condition::BlowUps {
            residual,
            unresolved,
            base_open,
        } => {
            let mut open = Vec::new();
            if *unresolved > 0 {
                open.push(format!(
                    "{unresolved} blown-up point(s) with unknown base-point status"
                ));
            }
            if let Some(class) = residual {
                open.push(format!("effectiveness of {class}"));
            }
            if *base_open {
                open.push("the exact h0(-K) of the minimal model".to_string());
            }
            format!("depends on {}", open.join("; "))
        }
    }
}
