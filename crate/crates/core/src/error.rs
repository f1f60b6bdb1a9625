use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::curve::CurveError;

/// A violated constraint on the invariant `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    /// `e >= 0` for `O + L`.
    DecomposableNonNegative,
    /// `e >= -g` for indecomposable `V`.
    IndecomposableLower,
    /// `e <= 2g - 2` for indecomposable `V`.
    IndecomposableUpper,
    /// `F_n` needs `n >= 0`.
    HirzebruchNonNegative,
    /// `F_1` is not minimal.
    HirzebruchNotMinimal,
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Bound::DecomposableNonNegative => "a decomposable normalized bundle has e >= 0",
            Bound::IndecomposableLower => "an indecomposable normalized bundle has e >= -g",
            Bound::IndecomposableUpper => "an indecomposable normalized bundle has e <= 2g - 2",
            Bound::HirzebruchNonNegative => "F_n requires n >= 0",
            Bound::HirzebruchNotMinimal => "F_1 is the blow-up of the plane, not a minimal surface",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("inadmissible invariant e = {e} over genus {genus}: {bound}")]
    InadmissibleInvariant { genus: u32, e: i64, bound: Bound },

    #[error(
        "indecomposable bundle claimed with e = {e} over genus {genus}, but \
         2g - 2 = {} < e <= 3g - 3 = {} forces V to be decomposable",
        2 * i64::from(*genus) - 2,
        3 * i64::from(*genus) - 3
    )]
    InconsistentBundleKind { genus: u32, e: i64 },

    #[error("bundle kind {kind} does not exist over genus {genus} with e = {e}")]
    UnsupportedBundleKind {
        kind: &'static str,
        genus: u32,
        e: i64,
    },

    #[error("class of L = det V has degree {degree}, expected -e = {expected}")]
    DeterminantDegree { degree: i64, expected: i64 },

    #[error("invalid class: {0}")]
    Class(CurveError),

    #[error("contradictory effectiveness answer: {0}")]
    Contradiction(CurveError),

    #[error("Kodaira dimension marker must be 0, 1 or 2, got {0}")]
    KodairaMarker(u8),

    #[error("genus {genus} is outside the scope of this operation ({expected})")]
    GenusOutOfScope { genus: u32, expected: &'static str },

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("the class of L is not determined well enough to count sections: {0}")]
    Underdetermined(String),
}
