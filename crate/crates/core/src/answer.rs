//! Three-valued truth and dimension answers shared by every layer.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curve::CurveClass;

/// Yes / No / Unknown.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

impl TriState {
    pub fn from_bool(b: bool) -> Self {
        if b {
            TriState::Yes
        } else {
            TriState::No
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            TriState::Yes => Some(true),
            TriState::No => Some(false),
            TriState::Unknown => None,
        }
    }
}

impl fmt::Display for TriState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriState::Yes => "yes",
            TriState::No => "no",
            TriState::Unknown => "unknown",
        })
    }
}

/// A dimension of a space of sections: known exactly, bracketed, or
/// dependent on whether a curve class is effective.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DimAnswer {
    Exact { value: u64 },
    Interval { lo: u64, hi: u64 },
    /// Zero unless the carried class is effective.
    ConditionalOn { class: CurveClass },
}

impl DimAnswer {
    pub fn exact(value: u64) -> Self {
        DimAnswer::Exact { value }
    }

    /// Builds `[lo, hi]`, collapsing to `Exact` when the endpoints agree.
    ///
    /// Panics if `lo > hi`.
    pub fn between(lo: u64, hi: u64) -> Self {
        assert!(lo <= hi, "empty dimension interval [{lo}, {hi}]");
        if lo == hi {
            DimAnswer::Exact { value: lo }
        } else {
            DimAnswer::Interval { lo, hi }
        }
    }

    pub fn conditional(class: CurveClass) -> Self {
        DimAnswer::ConditionalOn { class }
    }

    /// Guaranteed lower bound; a conditional answer may be zero.
    pub fn lower(&self) -> u64 {
        match *self {
            DimAnswer::Exact { value } => value,
            DimAnswer::Interval { lo, .. } => lo,
            DimAnswer::ConditionalOn { .. } => 0,
        }
    }

    /// Upper bound when one is carried.
    pub fn upper(&self) -> Option<u64> {
        match *self {
            DimAnswer::Exact { value } => Some(value),
            DimAnswer::Interval { hi, .. } => Some(hi),
            DimAnswer::ConditionalOn { .. } => None,
        }
    }

    pub fn as_exact(&self) -> Option<u64> {
        match *self {
            DimAnswer::Exact { value } => Some(value),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.as_exact() == Some(0)
    }
}

impl fmt::Display for DimAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimAnswer::Exact { value } => write!(f, "{value}"),
            DimAnswer::Interval { lo, hi } => write!(f, "[{lo},{hi}]"),
            DimAnswer::ConditionalOn { class } => write!(f, "cond:deg={}", class.degree),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn between_collapses() {
        assert_eq!(DimAnswer::between(3, 3), DimAnswer::exact(3));
        assert_eq!(DimAnswer::between(0, 2), DimAnswer::Interval { lo: 0, hi: 2 });
    }

    #[test]
    #[should_panic]
    fn between_rejects_empty() {
        let _ = DimAnswer::between(2, 1);
    }

    #[test]
    fn bounds() {
        let c = DimAnswer::conditional(CurveClass::of_degree(1));
        assert_eq!(c.lower(), 0);
        assert_eq!(c.upper(), None);
        assert!(DimAnswer::exact(0).is_zero());
        assert!(!DimAnswer::between(0, 1).is_zero());
    }
}
