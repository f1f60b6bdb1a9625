//! Top-level decision procedure.
//!
//! A surface carrying a Poisson structure has Kodaira dimension 0 or
//! `-inf`. The first case is K3 or abelian with trivial canonical bundle; the
//! second is ruled, handled through its minimal model and the blow-ups on top
//! of it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::answer::{DimAnswer, TriState};
use crate::anticanonical::{self, BundleKind, BundleSpec};
use crate::curve::{self, Curve, CurveClass};
use crate::error::{Bound, ValidationError};
use crate::rules::{Rule, RuleStep, Trace};

/// One blown-up point, with whether it is a base point of `|-K|` on the
/// surface obtained so far.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowUpPoint {
    pub base_point_of_antik: TriState,
}

impl BlowUpPoint {
    pub fn new(base_point_of_antik: TriState) -> Self {
        BlowUpPoint {
            base_point_of_antik,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SurfaceSpec {
    K3,
    Abelian,
    ProjectivePlane,
    /// The Hirzebruch surface `F_e`.
    MinimalRuledRational {
        e: i64,
    },
    /// `P(V)` over a curve of genus `g >= 1`.
    MinimalRuledOverCurve {
        genus: u32,
        bundle: BundleSpec,
    },
    BlowUp {
        base: Box<SurfaceSpec>,
        points: Vec<BlowUpPoint>,
    },
    /// Any surface of Kodaira dimension 0, 1 or 2 other than K3 and abelian.
    OtherKodaira {
        kodaira: u8,
    },
}

impl SurfaceSpec {
    pub fn ruled(genus: u32, bundle: BundleSpec) -> Self {
        SurfaceSpec::MinimalRuledOverCurve { genus, bundle }
    }

    pub fn blow_up(base: SurfaceSpec, flags: &[TriState]) -> Self {
        SurfaceSpec::BlowUp {
            base: Box::new(base),
            points: flags.iter().copied().map(BlowUpPoint::new).collect(),
        }
    }
}

/// What a conditional verdict waits on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "on", rename_all = "snake_case")]
pub enum Condition {
    /// Poisson if and only if this class on the base curve is effective.
    Effective { class: CurveClass },
    /// Depends on blow-up flags left unknown, and on the residual class if one
    /// is still open.
    BlowUps {
        residual: Option<CurveClass>,
        unresolved: usize,
        /// The base surface's h0 is itself only bounded.
        base_open: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Poisson,
    NotPoisson,
    Conditional { condition: Condition },
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Poisson => f.write_str("Poisson"),
            Verdict::NotPoisson => f.write_str("NotPoisson"),
            Verdict::Conditional { .. } => f.write_str("Conditional"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub verdict: Verdict,
    pub dim: DimAnswer,
    pub rule_chain: Vec<RuleStep>,
}

/// Checks admissibility and normalizes: genus-0 ruled input becomes `F_e`,
/// `F_1` becomes the plane blown up at a non-base point, and indecomposable
/// elliptic bundles become the Atiyah bundles.
pub fn validate(spec: &SurfaceSpec) -> Result<SurfaceSpec, ValidationError> {
    match spec {
        SurfaceSpec::K3 | SurfaceSpec::Abelian | SurfaceSpec::ProjectivePlane => Ok(spec.clone()),
        SurfaceSpec::OtherKodaira { kodaira } => {
            if *kodaira > 2 {
                Err(ValidationError::KodairaMarker(*kodaira))
            } else {
                Ok(spec.clone())
            }
        }
        SurfaceSpec::MinimalRuledRational { e } => validate_rational(*e),
        SurfaceSpec::MinimalRuledOverCurve { genus: 0, bundle } => match bundle.kind {
            BundleKind::Decomposable { l } => {
                let curve = Curve::new(0);
                l.check(&curve).map_err(ValidationError::Class)?;
                if l.degree != -bundle.e {
                    return Err(ValidationError::DeterminantDegree {
                        degree: l.degree,
                        expected: -bundle.e,
                    });
                }
                if bundle.e < 0 {
                    return Err(ValidationError::InadmissibleInvariant {
                        genus: 0,
                        e: bundle.e,
                        bound: Bound::DecomposableNonNegative,
                    });
                }
                let residual = bundle.residual_class(&curve);
                curve::is_effective(&curve, &residual).map_err(ValidationError::Contradiction)?;
                validate_rational(bundle.e)
            }
            // -g <= e <= 2g - 2 is empty for g = 0.
            _ => Err(ValidationError::InadmissibleInvariant {
                genus: 0,
                e: bundle.e,
                bound: if bundle.e < 0 {
                    Bound::IndecomposableLower
                } else {
                    Bound::IndecomposableUpper
                },
            }),
        },
        SurfaceSpec::MinimalRuledOverCurve { genus, bundle } => {
            let curve = Curve::new(*genus);
            let bundle = anticanonical::check_bundle(&curve, bundle)?;
            let residual = bundle.residual_class(&curve);
            curve::is_effective(&curve, &residual).map_err(ValidationError::Contradiction)?;
            Ok(SurfaceSpec::MinimalRuledOverCurve {
                genus: *genus,
                bundle,
            })
        }
        SurfaceSpec::BlowUp { base, points } => {
            let base = validate(base)?;
            Ok(match base {
                // Flatten nested blow-ups, keeping their order.
                SurfaceSpec::BlowUp {
                    base: inner,
                    points: mut first,
                } => {
                    first.extend(points.iter().copied());
                    SurfaceSpec::BlowUp {
                        base: inner,
                        points: first,
                    }
                }
                base => SurfaceSpec::BlowUp {
                    base: Box::new(base),
                    points: points.clone(),
                },
            })
        }
    }
}

fn validate_rational(e: i64) -> Result<SurfaceSpec, ValidationError> {
    if e < 0 {
        return Err(ValidationError::InadmissibleInvariant {
            genus: 0,
            e,
            bound: Bound::HirzebruchNonNegative,
        });
    }
    if e == 1 {
        // |-K| on the plane is base-point free.
        return Ok(SurfaceSpec::blow_up(SurfaceSpec::ProjectivePlane, &[TriState::No]));
    }
    Ok(SurfaceSpec::MinimalRuledRational { e })
}

/// Classifies a surface, citing the rules used.
pub fn classify(spec: &SurfaceSpec) -> Result<ClassificationReport, ValidationError> {
    let spec = validate(spec)?;
    let mut trace = Trace::new();
    let (dim, condition) = evaluate(&spec, &mut trace)?;
    let verdict = verdict_for(&dim, condition);
    Ok(ClassificationReport {
        verdict,
        dim,
        rule_chain: trace.into_steps(),
    })
}

/// The verdict implied by a dimension answer.
fn verdict_for(dim: &DimAnswer, condition: Option<Condition>) -> Verdict {
    match dim {
        DimAnswer::ConditionalOn { class } => Verdict::Conditional {
            condition: Condition::Effective { class: *class },
        },
        _ if dim.lower() >= 1 => Verdict::Poisson,
        _ if dim.is_zero() => Verdict::NotPoisson,
        _ => Verdict::Conditional {
            condition: condition.unwrap_or(Condition::BlowUps {
                residual: None,
                unresolved: 0,
                base_open: true,
            }),
        },
    }
}

/// Evaluates a validated spec. The second component describes what an
/// interval answer containing zero is waiting on.
fn evaluate(
    spec: &SurfaceSpec,
    trace: &mut Trace,
) -> Result<(DimAnswer, Option<Condition>), ValidationError> {
    let dim = match spec {
        SurfaceSpec::K3 | SurfaceSpec::Abelian => {
            let dim = DimAnswer::exact(1);
            trace.push(Rule::TrivialCanonical, dim.clone());
            dim
        }
        SurfaceSpec::OtherKodaira { kodaira } => {
            let dim = DimAnswer::exact(0);
            trace.push(Rule::KodairaObstruction { kodaira: *kodaira }, dim.clone());
            dim
        }
        SurfaceSpec::ProjectivePlane => {
            let dim = DimAnswer::exact(PLANE_CUBICS);
            trace.push(Rule::PlaneCubics, dim.clone());
            dim
        }
        SurfaceSpec::MinimalRuledRational { e } => anticanonical::rational_traced(*e, trace)?,
        SurfaceSpec::MinimalRuledOverCurve { genus: 1, bundle } => {
            anticanonical::elliptic_traced(bundle, trace)?
        }
        SurfaceSpec::MinimalRuledOverCurve { genus, bundle } => {
            anticanonical::highgenus_traced(*genus, bundle, trace)?
        }
        SurfaceSpec::BlowUp { base, points } => return evaluate_blow_up(base, points, trace),
    };
    Ok((dim, None))
}

/// `h0(P2, O(3))`.
const PLANE_CUBICS: u64 = 10;

fn evaluate_blow_up(
    base: &SurfaceSpec,
    points: &[BlowUpPoint],
    trace: &mut Trace,
) -> Result<(DimAnswer, Option<Condition>), ValidationError> {
    let (base_dim, _) = evaluate(base, trace)?;
    let unresolved = points
        .iter()
        .filter(|p| p.base_point_of_antik == TriState::Unknown)
        .count();
    let all_base_points = points
        .iter()
        .all(|p| p.base_point_of_antik == TriState::Yes);

    let base_open = matches!(base_dim, DimAnswer::Interval { .. });
    let (mut dim, residual) = match base_dim {
        DimAnswer::ConditionalOn { class } if !all_base_points => {
            // Either no sections at all, or as many as the class has once effective.
            let genus = match base {
                SurfaceSpec::MinimalRuledOverCurve { genus, .. } => *genus,
                _ => unreachable!("only ruled surfaces over curves give conditional answers"),
            };
            let hi = curve::h0(&Curve::new(genus), &class.with_effective(Some(true)))
                .upper()
                .expect("resolved class has an upper bound");
            (DimAnswer::between(0, hi), Some(class))
        }
        other => (other, None),
    };
    for point in points {
        dim = blowup_step(&dim, point.base_point_of_antik);
        trace.push(
            Rule::BlowUp {
                base_point: point.base_point_of_antik,
            },
            dim.clone(),
        );
    }
    Ok((
        dim,
        Some(Condition::BlowUps {
            residual,
            unresolved,
            base_open,
        }),
    ))
}

/// `h0(-K)` after blowing up the given points in order. Unchanged at a base
/// point of `|-K|`, one less elsewhere, and either when unknown. A
/// conditional answer is returned as is.
pub fn blowup_propagate(base_dim: &DimAnswer, points: &[BlowUpPoint]) -> DimAnswer {
    points
        .iter()
        .fold(base_dim.clone(), |dim, p| blowup_step(&dim, p.base_point_of_antik))
}

fn blowup_step(dim: &DimAnswer, base_point: TriState) -> DimAnswer {
    let (lo, hi) = match *dim {
        DimAnswer::Exact { value } => (value, value),
        DimAnswer::Interval { lo, hi } => (lo, hi),
        DimAnswer::ConditionalOn { .. } => return dim.clone(),
    };
    let drop = |n: u64| n.saturating_sub(1);
    match base_point {
        TriState::Yes => DimAnswer::between(lo, hi),
        TriState::No => DimAnswer::between(drop(lo), drop(hi)),
        TriState::Unknown => DimAnswer::between(drop(lo), hi),
    }
}
