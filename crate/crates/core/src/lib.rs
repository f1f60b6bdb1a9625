//! Poisson structures on complex projective surfaces.
//!
//! A Poisson structure on a surface `X` is a section of `O(-K_X)`, so the
//! number of independent ones is `h0(X, -K_X)`. This crate decides whether
//! that number is positive and computes it, exactly or as a tight interval,
//! for K3 and abelian surfaces, the plane, Hirzebruch surfaces, minimal ruled
//! surfaces over curves of any genus, and blow-ups of all of these.

pub mod answer;
pub mod anticanonical;
pub mod classify;
pub mod crosscheck;
pub mod curve;
pub mod error;
pub mod ruled;
pub mod rules;

pub use answer::{DimAnswer, TriState};
pub use anticanonical::{BundleKind, BundleSpec};
pub use classify::{
    blowup_propagate, classify, validate, BlowUpPoint, ClassificationReport, Condition,
    SurfaceSpec, Verdict,
};
pub use curve::{ClassTag, Curve, CurveClass};
pub use error::{Bound, ValidationError};
pub use ruled::{NumClass, RuledNum};
pub use rules::{Rule, RuleStep};
