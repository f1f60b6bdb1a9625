//! Grid comparison of the case analysis against the pushforward oracle.

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::anticanonical::{h0_antik_elliptic, h0_antik_rational, pushforward_oracle, BundleSpec};
use crate::answer::DimAnswer;
use crate::curve::CurveClass;
use crate::error::ValidationError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CaseOutcome {
    Match { value: u64 },
    Mismatch { engine: DimAnswer, oracle: u64 },
    Skipped { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCase {
    pub genus: u32,
    pub e: i64,
    pub label: String,
    pub outcome: CaseOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub cases: Vec<OracleCase>,
}

impl OracleSummary {
    fn count(&self, pred: impl Fn(&CaseOutcome) -> bool) -> usize {
        self.cases.iter().filter(|c| pred(&c.outcome)).count()
    }

    pub fn passed(&self) -> usize {
        self.count(|o| matches!(o, CaseOutcome::Match { .. }))
    }

    pub fn failed(&self) -> usize {
        self.count(|o| matches!(o, CaseOutcome::Mismatch { .. }))
    }

    pub fn skipped(&self) -> usize {
        self.count(|o| matches!(o, CaseOutcome::Skipped { .. }))
    }

    pub fn first_mismatch(&self) -> Option<&OracleCase> {
        self.cases
            .iter()
            .find(|c| matches!(c.outcome, CaseOutcome::Mismatch { .. }))
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }
}

/// Largest |e| accepted by the grid.
pub const MAX_ABS_E: i64 = 100_000;

/// Runs the oracle against the case analysis for every `e` in the range over
/// a base of genus 0 or 1. Points outside the oracle's preconditions are
/// reported as skipped.
pub fn oracle_grid(
    genus: u32,
    e_range: RangeInclusive<i64>,
) -> Result<OracleSummary, ValidationError> {
    if genus > 1 {
        return Err(ValidationError::GenusOutOfScope {
            genus,
            expected: "genus 0 or 1",
        });
    }
    let (lo, hi) = (*e_range.start(), *e_range.end());
    if lo > hi || lo.abs() > MAX_ABS_E || hi.abs() > MAX_ABS_E {
        return Err(ValidationError::InvalidRange(format!(
            "e range [{lo}, {hi}] must be non-empty and within ±{MAX_ABS_E}"
        )));
    }

    let mut cases = Vec::new();
    for e in e_range {
        let skip = |reason: &str| OracleCase {
            genus,
            e,
            label: "-".into(),
            outcome: CaseOutcome::Skipped {
                reason: reason.into(),
            },
        };
        if e < 0 {
            cases.push(skip("no split normalized bundle with e < 0"));
            continue;
        }
        if genus == 0 {
            if e == 1 {
                cases.push(skip("F_1 is not minimal"));
                continue;
            }
            let engine = h0_antik_rational(e).map(DimAnswer::exact)?;
            let oracle = pushforward_oracle(0, &CurveClass::of_degree(-e))?;
            cases.push(compare(genus, e, "O+O(-e)", engine, oracle));
            continue;
        }
        let splits: Vec<(&str, CurveClass)> = if e == 0 {
            vec![
                ("O+O", CurveClass::trivial()),
                ("O+L,L nontrivial", CurveClass::torsion(2).expect("order 2")),
            ]
        } else {
            vec![("O+L", CurveClass::of_degree(-e))]
        };
        for (label, l) in splits {
            let engine = h0_antik_elliptic(&BundleSpec::decomposable_with(l, e))?;
            let oracle = pushforward_oracle(1, &l)?;
            cases.push(compare(genus, e, label, engine, oracle));
        }
    }
    Ok(OracleSummary { cases })
}

fn compare(genus: u32, e: i64, label: &str, engine: DimAnswer, oracle: u64) -> OracleCase {
    let outcome = if engine.as_exact() == Some(oracle) {
        CaseOutcome::Match { value: oracle }
    } else {
        CaseOutcome::Mismatch { engine, oracle }
    };
    OracleCase {
        genus,
        e,
        label: label.into(),
        outcome,
    }
}
