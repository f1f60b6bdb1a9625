//! `h0(X, -K_X)` for minimal ruled surfaces.
//!
//! For `X = P(V)` over a curve `C` with `V` normalized and `L = det V`,
//! `-K_X = 2 tau + pi^*(-K_C - L)` and the projection formula gives
//! `H0(X, -K_X) = H0(C, S^2 V (x) L^-1(-K_C))`. The case analysis below
//! evaluates that space rule by rule; [`pushforward_oracle`] expands it
//! directly for split bundles as a cross-check.

use serde::{Deserialize, Serialize};

use crate::answer::{DimAnswer, TriState};
use crate::curve::{self, ClassTag, Curve, CurveClass};
use crate::error::{Bound, ValidationError};
use crate::rules::{Rule, Trace};
use crate::ruled::RuledNum;

/// The shape of a normalized rank-2 bundle `V`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum BundleKind {
    /// `V = O + L`.
    Decomposable { l: CurveClass },
    /// Elliptic base, the nonsplit extension `0 -> O -> V -> O -> 0`.
    IndecomposableG1E0,
    /// Elliptic base, the nonsplit extension `0 -> O -> V -> O(P) -> 0`.
    IndecomposableG1Em1,
    /// Any other indecomposable bundle, known through `L = det V`.
    IndecomposableGeneral { l: CurveClass },
}

impl BundleKind {
    pub fn is_decomposable(&self) -> bool {
        matches!(self, BundleKind::Decomposable { .. })
    }
}

/// A normalized bundle with invariant `e = -deg V`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleSpec {
    pub kind: BundleKind,
    pub e: i64,
    /// Answer to "is `-K_C - det V` effective?" when known from outside.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual_effective: Option<bool>,
}

impl BundleSpec {
    /// `O + L` with `L` of degree `-e` and no further structure.
    pub fn decomposable(e: i64) -> Self {
        Self::decomposable_with(CurveClass::of_degree(-e), e)
    }

    pub fn decomposable_with(l: CurveClass, e: i64) -> Self {
        BundleSpec {
            kind: BundleKind::Decomposable { l },
            e,
            residual_effective: None,
        }
    }

    pub fn indecomposable(e: i64) -> Self {
        BundleSpec {
            kind: BundleKind::IndecomposableGeneral {
                l: CurveClass::of_degree(-e),
            },
            e,
            residual_effective: None,
        }
    }

    pub fn elliptic_unipotent() -> Self {
        BundleSpec {
            kind: BundleKind::IndecomposableG1E0,
            e: 0,
            residual_effective: None,
        }
    }

    pub fn elliptic_odd() -> Self {
        BundleSpec {
            kind: BundleKind::IndecomposableG1Em1,
            e: -1,
            residual_effective: None,
        }
    }

    pub fn with_residual_effective(mut self, effective: Option<bool>) -> Self {
        self.residual_effective = effective;
        self
    }

    /// The class of `L = det V`.
    pub fn determinant(&self) -> CurveClass {
        match self.kind {
            BundleKind::Decomposable { l } | BundleKind::IndecomposableGeneral { l } => l,
            BundleKind::IndecomposableG1E0 => CurveClass::trivial(),
            BundleKind::IndecomposableG1Em1 => CurveClass::point_sum(1),
        }
    }

    /// `-K_C - det V`, carrying the supplied effectiveness answer. For an
    /// indecomposable bundle with `e = 2g - 2`, `g >= 2`, it is trivial.
    pub fn residual_class(&self, curve: &Curve) -> CurveClass {
        let g = i64::from(curve.genus());
        if g >= 2 && self.e == 2 * g - 2 && matches!(self.kind, BundleKind::IndecomposableGeneral { .. }) {
            return CurveClass::trivial().with_effective(self.residual_effective);
        }
        let l_dual = curve::dual(&self.determinant());
        let residual = if curve.genus() == 1 {
            // K_C is trivial.
            l_dual
        } else {
            curve::add(&l_dual, &CurveClass::canonical(curve, -1))
        };
        residual.with_effective(self.residual_effective)
    }
}

/// Checks the constraints on `e` for a normalized bundle over a curve of
/// genus `g >= 1`, and normalizes indecomposable elliptic input to the two
/// Atiyah bundles.
pub fn check_bundle(curve: &Curve, bundle: &BundleSpec) -> Result<BundleSpec, ValidationError> {
    let genus = curve.genus();
    let g = i64::from(genus);
    let e = bundle.e;
    let inadmissible = |bound| ValidationError::InadmissibleInvariant { genus, e, bound };
    let unsupported = |kind| ValidationError::UnsupportedBundleKind { kind, genus, e };

    let mut out = *bundle;
    match bundle.kind {
        BundleKind::Decomposable { .. } => {
            if e < 0 {
                return Err(inadmissible(Bound::DecomposableNonNegative));
            }
        }
        BundleKind::IndecomposableGeneral { .. } => {
            if e < -g {
                return Err(inadmissible(Bound::IndecomposableLower));
            }
            if e > 2 * g - 2 {
                if e <= 3 * g - 3 {
                    return Err(ValidationError::InconsistentBundleKind { genus, e });
                }
                return Err(inadmissible(Bound::IndecomposableUpper));
            }
            if genus == 1 {
                let atiyah = if e == 0 {
                    BundleKind::IndecomposableG1E0
                } else {
                    BundleKind::IndecomposableG1Em1
                };
                check_tag_matches(curve, &bundle.determinant(), &atiyah_determinant(atiyah))?;
                out.kind = atiyah;
            }
        }
        BundleKind::IndecomposableG1E0 => {
            if genus != 1 || e != 0 {
                return Err(unsupported("indecomposable (elliptic, e = 0)"));
            }
        }
        BundleKind::IndecomposableG1Em1 => {
            if genus != 1 || e != -1 {
                return Err(unsupported("indecomposable (elliptic, e = -1)"));
            }
        }
    }

    let l = out.determinant();
    l.check(curve).map_err(ValidationError::Class)?;
    if l.degree != -e {
        return Err(ValidationError::DeterminantDegree {
            degree: l.degree,
            expected: -e,
        });
    }
    Ok(out)
}

fn atiyah_determinant(kind: BundleKind) -> CurveClass {
    BundleSpec {
        kind,
        e: 0,
        residual_effective: None,
    }
    .determinant()
}

/// A user-supplied determinant class for an Atiyah bundle must not contradict
/// the known one.
fn check_tag_matches(
    curve: &Curve,
    given: &CurveClass,
    known: &CurveClass,
) -> Result<(), ValidationError> {
    given.check(curve).map_err(ValidationError::Class)?;
    if given.tag != ClassTag::Unspecified && given.tag != known.tag {
        return Err(ValidationError::UnsupportedBundleKind {
            kind: "indecomposable with a determinant tag other than the Atiyah class",
            genus: curve.genus(),
            e: -known.degree,
        });
    }
    Ok(())
}

/// `h0(F_n, -K)` for the minimal rational ruled surfaces, `n != 1`.
pub fn h0_antik_rational(e: i64) -> Result<u64, ValidationError> {
    if e < 0 {
        return Err(ValidationError::InadmissibleInvariant {
            genus: 0,
            e,
            bound: Bound::HirzebruchNonNegative,
        });
    }
    if e == 1 {
        return Err(ValidationError::InadmissibleInvariant {
            genus: 0,
            e,
            bound: Bound::HirzebruchNotMinimal,
        });
    }
    Ok(if e <= 2 { 9 } else { e as u64 + 6 })
}

pub(crate) fn rational_traced(e: i64, trace: &mut Trace) -> Result<DimAnswer, ValidationError> {
    let n = h0_antik_rational(e)?;
    let dim = DimAnswer::exact(n);
    trace.push(Rule::HirzebruchCount { n: e }, dim.clone());
    Ok(dim)
}

/// `h0(X, -K)` over an elliptic base.
///
/// The only non-exact answer is `[1, 3]`, for `O + L` with `deg L = 0` when
/// neither the tag of `L` nor a supplied effectiveness answer says whether
/// `L` is trivial.
pub fn h0_antik_elliptic(bundle: &BundleSpec) -> Result<DimAnswer, ValidationError> {
    elliptic_traced(bundle, &mut Trace::new())
}

pub(crate) fn elliptic_traced(
    bundle: &BundleSpec,
    trace: &mut Trace,
) -> Result<DimAnswer, ValidationError> {
    let curve = Curve::new(1);
    let bundle = check_bundle(&curve, bundle)?;
    let (rule, dim) = match bundle.kind {
        BundleKind::IndecomposableG1Em1 => (Rule::EllipticTwoTorsion, DimAnswer::exact(0)),
        BundleKind::IndecomposableG1E0 => (Rule::EllipticUnipotent, DimAnswer::exact(1)),
        BundleKind::Decomposable { .. } if bundle.e >= 1 => (
            Rule::EllipticSplitPositive { e: bundle.e },
            DimAnswer::exact(bundle.e as u64 + 1),
        ),
        BundleKind::Decomposable { .. } => {
            // deg L = 0: the residual class is L^-1, effective iff L is trivial.
            let residual = bundle.residual_class(&curve);
            match curve::is_effective(&curve, &residual).map_err(ValidationError::Contradiction)? {
                TriState::Yes => (Rule::EllipticProduct, DimAnswer::exact(3)),
                TriState::No => (Rule::EllipticNontrivialSplit, DimAnswer::exact(1)),
                TriState::Unknown => (Rule::EllipticSplitUndetermined, DimAnswer::between(1, 3)),
            }
        }
        BundleKind::IndecomposableGeneral { .. } => unreachable!("normalized by check_bundle"),
    };
    trace.push(rule, dim.clone());
    Ok(dim)
}

/// `h0(X, -K)` over a base of genus at least 2, which equals
/// `h0(C, -K_C - det V)` except for `g = 2, e = -2`.
pub fn h0_antik_highgenus(genus: u32, bundle: &BundleSpec) -> Result<DimAnswer, ValidationError> {
    highgenus_traced(genus, bundle, &mut Trace::new())
}

pub(crate) fn highgenus_traced(
    genus: u32,
    bundle: &BundleSpec,
    trace: &mut Trace,
) -> Result<DimAnswer, ValidationError> {
    if genus < 2 {
        return Err(ValidationError::GenusOutOfScope {
            genus,
            expected: "genus >= 2",
        });
    }
    let curve = Curve::new(genus);
    let bundle = check_bundle(&curve, bundle)?;
    let g = i64::from(genus);
    let e = bundle.e;

    let mut residual = bundle.residual_class(&curve);

    if genus == 2 && e == -2 {
        // The reduction to the curve fails here since L(-K_C) has degree 0;
        // use the intersection form instead.
        let surface = RuledNum::new(genus, e);
        let antik = surface.anticanonical_class();
        let test_class = surface
            .obstructing_ample_class(antik)
            .expect("tau is ample and orthogonal to -K when g = 2, e = -2");
        let dim = DimAnswer::exact(0);
        curve::is_effective(&curve, &residual).map_err(ValidationError::Contradiction)?;
        trace.push(
            Rule::AmpleObstruction {
                test_class,
                intersection: surface.intersect(antik, test_class),
            },
            dim.clone(),
        );
        return Ok(dim);
    }

    let forced_trivial = e == 2 * g - 2 && !bundle.kind.is_decomposable();
    if forced_trivial {
        residual = CurveClass::trivial().with_effective(bundle.residual_effective);
    }
    let effective =
        curve::is_effective(&curve, &residual).map_err(ValidationError::Contradiction)?;
    let dim = curve::h0(&curve, &residual);

    trace.push(
        Rule::ResidualReduction {
            degree: residual.degree,
        },
        DimAnswer::conditional(residual),
    );
    if forced_trivial {
        trace.push(Rule::ResidualForcedTrivial, dim.clone());
        return Ok(dim);
    }

    let bare = curve::h0(&curve, &residual.with_effective(None));
    if bare.lower() == 0 && !bare.is_zero() {
        // Effectiveness is not decided by degree and tag.
        if let Some(effective) = effective.as_bool() {
            trace.push(Rule::SuppliedEffectiveness { effective }, dim.clone());
            return Ok(dim);
        }
        let dim = DimAnswer::conditional(residual);
        trace.push(Rule::ResidualConditional, dim.clone());
        return Ok(dim);
    }
    trace.push(Rule::ResidualCount, dim.clone());
    Ok(dim)
}

/// `h0(X, -K)` for `X = P(O + L)` over a base of genus 0 or 1, computed by
/// expanding `S^2(O + L) (x) L^-1(-K_C) = L^-1(-K_C) + O(-K_C) + L(-K_C)` and
/// counting sections of each line bundle directly.
///
/// Shares nothing with the case analysis above.
pub fn pushforward_oracle(genus: u32, l: &CurveClass) -> Result<u64, ValidationError> {
    if genus > 1 {
        return Err(ValidationError::GenusOutOfScope {
            genus,
            expected: "genus 0 or 1",
        });
    }
    if l.degree > 0 {
        return Err(ValidationError::InadmissibleInvariant {
            genus,
            e: -l.degree,
            bound: Bound::DecomposableNonNegative,
        });
    }
    let anti_canonical_degree = 2 - 2 * i64::from(genus);
    let l_trivial = if l.degree == 0 {
        Some(split_class_is_trivial(genus, l)?)
    } else {
        Some(false)
    };
    let summands = [
        // (degree, is the bundle trivial?) for L^k (x) L^-1 (x) O(-K_C), k = 0, 1, 2.
        (-l.degree + anti_canonical_degree, l_trivial),
        (anti_canonical_degree, Some(genus == 1)),
        (l.degree + anti_canonical_degree, l_trivial),
    ];
    summands
        .into_iter()
        .map(|(degree, trivial)| line_bundle_sections(genus, degree, trivial))
        .sum()
}

/// Whether a degree-0 class on a curve of genus <= 1 is the structure sheaf.
fn split_class_is_trivial(genus: u32, l: &CurveClass) -> Result<bool, ValidationError> {
    if genus == 0 {
        return Ok(true);
    }
    match l.tag {
        ClassTag::Trivial | ClassTag::Canonical { .. } => Ok(true),
        ClassTag::Torsion { order } => Ok(order == 1),
        ClassTag::PointSum { multiplicity } => Ok(multiplicity == 0),
        ClassTag::Unspecified => l.user_effective.ok_or_else(|| {
            ValidationError::Underdetermined(
                "degree-0 class on an elliptic curve with no tag or effectiveness".into(),
            )
        }),
    }
}

/// Sections of a line bundle of the given degree on a curve of genus 0 or 1.
/// `trivial` only matters in degree 0 on an elliptic curve.
fn line_bundle_sections(genus: u32, degree: i64, trivial: Option<bool>) -> Result<u64, ValidationError> {
    if degree < 0 {
        return Ok(0);
    }
    match genus {
        // Degree-d forms in two variables.
        0 => Ok((0..=degree)
            .map(|i| (i, degree - i))
            .filter(|&(a, b)| a >= 0 && b >= 0)
            .count() as u64),
        _ if degree > 0 => Ok(degree as u64),
        _ => match trivial {
            Some(t) => Ok(u64::from(t)),
            None => Err(ValidationError::Underdetermined(
                "degree-0 summand of unknown triviality".into(),
            )),
        },
    }
}
