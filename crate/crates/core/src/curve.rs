//! Line-bundle classes on a smooth projective curve and their section counts.
//!
//! A class is known through its degree plus an optional structural tag. The
//! tag is what lets degree-zero and canonical-degree classes be counted
//! exactly; everything else in the window `0 <= deg <= 2g - 2` is bracketed
//! between the Riemann–Roch lower bound and Clifford's upper bound.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::answer::{DimAnswer, TriState};

/// A smooth projective curve, known only by its genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Curve {
    genus: u32,
}

impl Curve {
    pub fn new(genus: u32) -> Self {
        Curve { genus }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// `2g - 2`.
    pub fn canonical_degree(&self) -> i64 {
        2 * i64::from(self.genus) - 2
    }

    /// Riemann–Roch: `h0 - h1 = deg + 1 - g`.
    pub fn euler_characteristic(&self, degree: i64) -> i64 {
        degree + 1 - i64::from(self.genus)
    }
}

/// Structural information known about a class beyond its degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum ClassTag {
    Unspecified,
    Trivial,
    /// `k` times the canonical class.
    Canonical { multiple: i64 },
    /// Degree zero with the given order in the Picard group.
    Torsion { order: u32 },
    /// `n` times a marked point.
    PointSum { multiplicity: i64 },
}

impl ClassTag {
    /// True when the tag alone pins the class to the structure sheaf.
    fn forces_trivial(&self, curve: &Curve) -> bool {
        match *self {
            ClassTag::Trivial => true,
            ClassTag::Canonical { multiple } => multiple == 0 || curve.genus == 1,
            ClassTag::Torsion { order } => order == 1,
            ClassTag::PointSum { multiplicity } => multiplicity == 0,
            ClassTag::Unspecified => false,
        }
    }

    /// True when the tag alone rules out the structure sheaf.
    fn forces_nontrivial(&self) -> bool {
        matches!(*self, ClassTag::Torsion { order } if order >= 2)
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ClassTag::Unspecified => f.write_str("unspecified"),
            ClassTag::Trivial => f.write_str("trivial"),
            ClassTag::Canonical { multiple } => write!(f, "canonical({multiple})"),
            ClassTag::Torsion { order } => write!(f, "torsion({order})"),
            ClassTag::PointSum { multiplicity } => write!(f, "point({multiplicity})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("class tag {tag} requires degree {expected}, got {degree}")]
    TagDegree {
        tag: ClassTag,
        expected: i64,
        degree: i64,
    },
    #[error("torsion order must be at least 1")]
    ZeroTorsionOrder,
    #[error("effectiveness supplied as {supplied} but the class of degree {degree} is forced to be {forced}")]
    InconsistentEffectiveness {
        degree: i64,
        supplied: bool,
        forced: bool,
    },
}

/// A divisor class on a curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveClass {
    pub degree: i64,
    pub tag: ClassTag,
    /// Externally supplied answer to "is this class effective?".
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub user_effective: Option<bool>,
}

impl CurveClass {
    /// A class with no structure beyond its degree.
    pub fn of_degree(degree: i64) -> Self {
        CurveClass {
            degree,
            tag: ClassTag::Unspecified,
            user_effective: None,
        }
    }

    pub fn trivial() -> Self {
        CurveClass {
            degree: 0,
            tag: ClassTag::Trivial,
            user_effective: None,
        }
    }

    pub fn canonical(curve: &Curve, multiple: i64) -> Self {
        CurveClass {
            degree: multiple * curve.canonical_degree(),
            tag: ClassTag::Canonical { multiple },
            user_effective: None,
        }
    }

    pub fn torsion(order: u32) -> Result<Self, CurveError> {
        if order == 0 {
            return Err(CurveError::ZeroTorsionOrder);
        }
        Ok(CurveClass {
            degree: 0,
            tag: ClassTag::Torsion { order },
            user_effective: None,
        })
    }

    pub fn point_sum(multiplicity: i64) -> Self {
        CurveClass {
            degree: multiplicity,
            tag: ClassTag::PointSum { multiplicity },
            user_effective: None,
        }
    }

    /// Builds a class with an arbitrary tag, checking the tag against the degree.
    pub fn tagged(curve: &Curve, degree: i64, tag: ClassTag) -> Result<Self, CurveError> {
        let class = CurveClass {
            degree,
            tag,
            user_effective: None,
        };
        class.check(curve)?;
        Ok(class)
    }

    pub fn with_effective(mut self, effective: Option<bool>) -> Self {
        self.user_effective = effective;
        self
    }

    /// Checks the tag/degree invariants on the given curve.
    pub fn check(&self, curve: &Curve) -> Result<(), CurveError> {
        let expected = match self.tag {
            ClassTag::Unspecified => return Ok(()),
            ClassTag::Trivial => 0,
            ClassTag::Canonical { multiple } => multiple * curve.canonical_degree(),
            ClassTag::Torsion { order } => {
                if order == 0 {
                    return Err(CurveError::ZeroTorsionOrder);
                }
                0
            }
            ClassTag::PointSum { multiplicity } => multiplicity,
        };
        if self.degree != expected {
            return Err(CurveError::TagDegree {
                tag: self.tag,
                expected,
                degree: self.degree,
            });
        }
        Ok(())
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "deg {} ({})", self.degree, self.tag)
    }
}

/// Tensor product of line bundles. Tags survive only where the result is
/// determined by the tags alone; `user_effective` never survives.
pub fn add(x: &CurveClass, y: &CurveClass) -> CurveClass {
    use ClassTag::*;
    let tag = match (x.tag, y.tag) {
        (Trivial, t) | (t, Trivial) => t,
        (Canonical { multiple: j }, Canonical { multiple: k }) => Canonical { multiple: j + k },
        _ => Unspecified,
    };
    CurveClass {
        degree: x.degree + y.degree,
        tag,
        user_effective: None,
    }
}

/// Inverse in the Picard group.
pub fn dual(x: &CurveClass) -> CurveClass {
    use ClassTag::*;
    let tag = match x.tag {
        Trivial => Trivial,
        Canonical { multiple } => Canonical {
            multiple: -multiple,
        },
        Torsion { order } => Torsion { order },
        PointSum { .. } | Unspecified => Unspecified,
    };
    CurveClass {
        degree: -x.degree,
        tag,
        user_effective: None,
    }
}

/// `h0` from degree and tag alone, ignoring any supplied effectiveness.
fn forced_h0(curve: &Curve, x: &CurveClass) -> DimAnswer {
    let g = i64::from(curve.genus);
    let d = x.degree;
    if d < 0 {
        return DimAnswer::exact(0);
    }
    if d > curve.canonical_degree() {
        // h1 vanishes by Serre duality.
        return DimAnswer::exact(to_dim(d + 1 - g));
    }
    // Mid-range window, only reachable for g >= 1.
    if d == 0 {
        if x.tag.forces_trivial(curve) {
            return DimAnswer::exact(1);
        }
        if x.tag.forces_nontrivial() {
            return DimAnswer::exact(0);
        }
        return DimAnswer::between(0, 1);
    }
    if matches!(x.tag, ClassTag::Canonical { multiple: 1 }) {
        return DimAnswer::exact(to_dim(g));
    }
    let mut lo = (d + 1 - g).max(0);
    if matches!(x.tag, ClassTag::PointSum { .. }) {
        // A non-negative multiple of a point is effective.
        lo = lo.max(1);
    }
    let hi = d / 2 + 1;
    DimAnswer::between(to_dim(lo), to_dim(hi))
}

fn to_dim(n: i64) -> u64 {
    u64::try_from(n).expect("section counts are non-negative")
}

/// `h0(C, x)`, refined by `x.user_effective` when degree and tag leave
/// effectiveness open. A supplied answer that contradicts a forced one is
/// ignored here; [`is_effective`] reports it.
pub fn h0(curve: &Curve, x: &CurveClass) -> DimAnswer {
    let forced = forced_h0(curve, x);
    match (forced, x.user_effective) {
        (DimAnswer::Interval { lo: 0, hi }, Some(true)) => DimAnswer::between(1, hi),
        (DimAnswer::Interval { lo: 0, .. }, Some(false)) => DimAnswer::exact(0),
        (forced, _) => forced,
    }
}

/// `h1(C, x) = h0(C, K_C - x)`.
pub fn h1(curve: &Curve, x: &CurveClass) -> DimAnswer {
    h0(curve, &add(&dual(x), &CurveClass::canonical(curve, 1)))
}

/// Whether `x` is effective. A supplied answer settles only what degree and
/// tag leave open; contradicting a forced answer is an error.
pub fn is_effective(curve: &Curve, x: &CurveClass) -> Result<TriState, CurveError> {
    let forced = forced_h0(curve, x);
    let state = if forced.lower() >= 1 {
        TriState::Yes
    } else if forced.is_zero() {
        TriState::No
    } else {
        TriState::Unknown
    };
    match (state.as_bool(), x.user_effective) {
        (Some(forced), Some(supplied)) if forced != supplied => {
            Err(CurveError::InconsistentEffectiveness {
                degree: x.degree,
                supplied,
                forced,
            })
        }
        (None, Some(supplied)) => Ok(TriState::from_bool(supplied)),
        _ => Ok(state),
    }
}
