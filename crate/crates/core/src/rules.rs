//! The steps a classification cites, in the order they fire.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::answer::{DimAnswer, TriState};
use crate::ruled::NumClass;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum Rule {
    /// K3 or abelian: `-K` is trivial.
    TrivialCanonical,
    /// Kodaira dimension neither 0 (K3/abelian) nor -infinity.
    KodairaObstruction { kodaira: u8 },
    /// Plane cubics.
    PlaneCubics,
    /// `F_n` count from the sequence `0 -> V(-L - K) -> S^2 V (-L - K) -> L(-K) -> 0`.
    HirzebruchCount { n: i64 },
    /// Elliptic base, `e = -1`: `S^2 V (-P)` is a sum of the nontrivial 2-torsion bundles.
    EllipticTwoTorsion,
    /// Elliptic base, `e = 0`, the nonsplit self-extension of `O`.
    EllipticUnipotent,
    /// Elliptic base, `V = O + O`: `H0(C, O) x H0(P1, O(2))`.
    EllipticProduct,
    /// Elliptic base, `V = O + L` with `L` nontrivial of degree 0.
    EllipticNontrivialSplit,
    /// Elliptic base, `V = O + L` of degree 0 with triviality of `L` open.
    EllipticSplitUndetermined,
    /// Elliptic base, `e >= 1`: `e + 1`.
    EllipticSplitPositive { e: i64 },
    /// Genus >= 2: `h0(X, -K) = h0(C, L^-1(-K_C))`.
    ResidualReduction { degree: i64 },
    /// Indecomposable with `e = 2g - 2`: `h1(L^-1) != 0` and Serre duality make `L(K_C)` trivial.
    ResidualForcedTrivial,
    /// `-K` meets an ample class non-positively, so it is not effective.
    AmpleObstruction { test_class: NumClass, intersection: i64 },
    /// Section count of the residual class from its degree and tag.
    ResidualCount,
    /// Effectiveness of the residual class is open.
    ResidualConditional,
    /// Effectiveness of the residual class taken from the input.
    SuppliedEffectiveness { effective: bool },
    /// One blow-up: unchanged at a base point of `|-K|`, drops by one elsewhere.
    BlowUp { base_point: TriState },
}

impl Rule {
    pub fn name(&self) -> &'static str {
        match self {
            Rule::TrivialCanonical => "trivial-canonical",
            Rule::KodairaObstruction { .. } => "kodaira-obstruction",
            Rule::PlaneCubics => "plane-cubics",
            Rule::HirzebruchCount { .. } => "hirzebruch-count",
            Rule::EllipticTwoTorsion => "elliptic-two-torsion",
            Rule::EllipticUnipotent => "elliptic-unipotent",
            Rule::EllipticProduct => "elliptic-product",
            Rule::EllipticNontrivialSplit => "elliptic-nontrivial-split",
            Rule::EllipticSplitUndetermined => "elliptic-split-undetermined",
            Rule::EllipticSplitPositive { .. } => "elliptic-split-positive",
            Rule::ResidualReduction { .. } => "residual-reduction",
            Rule::ResidualForcedTrivial => "residual-forced-trivial",
            Rule::AmpleObstruction { .. } => "ample-obstruction",
            Rule::ResidualCount => "residual-count",
            Rule::ResidualConditional => "residual-conditional",
            Rule::SuppliedEffectiveness { .. } => "supplied-effectiveness",
            Rule::BlowUp { .. } => "blow-up",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::TrivialCanonical => {
                f.write_str("trivial canonical bundle (K3 or abelian): h0(-K) = h0(O) = 1")
            }
            Rule::KodairaObstruction { kodaira } => write!(
                f,
                "Kodaira dimension {kodaira} with nontrivial canonical class admits no anticanonical section"
            ),
            Rule::PlaneCubics => f.write_str("-K of the plane is O(3): 10 cubic monomials"),
            Rule::HirzebruchCount { n } => write!(
                f,
                "F_{n}: 9 for n in {{0, 2}}, n + 6 for n >= 3"
            ),
            Rule::EllipticTwoTorsion => f.write_str(
                "elliptic base, e = -1: S^2 V (-P) is the sum of the three nontrivial 2-torsion bundles, no sections",
            ),
            Rule::EllipticUnipotent => {
                f.write_str("elliptic base, e = 0, V indecomposable: h0(S^2 V) = 1")
            }
            Rule::EllipticProduct => {
                f.write_str("elliptic base, V = O + O: X = C x P1, h0 = 1 * 3")
            }
            Rule::EllipticNontrivialSplit => {
                f.write_str("elliptic base, V = O + L with L nontrivial of degree 0: h0 = 1")
            }
            Rule::EllipticSplitUndetermined => f.write_str(
                "elliptic base, V = O + L with deg L = 0: 3 if L is trivial, 1 otherwise",
            ),
            Rule::EllipticSplitPositive { e } => {
                write!(f, "elliptic base, V = O + L with e = {e} >= 1: h0 = e + 1")
            }
            Rule::ResidualReduction { degree } => write!(
                f,
                "genus >= 2: h0(X, -K) = h0(C, -K_C - det V), a class of degree {degree}"
            ),
            Rule::ResidualForcedTrivial => f.write_str(
                "V indecomposable with e = 2g - 2: the extension is nonsplit, so h0(C, det V + K_C) != 0 \
                 in degree 0, hence the residual class is trivial",
            ),
            Rule::AmpleObstruction {
                test_class,
                intersection,
            } => write!(
                f,
                "-K . ({test_class}) = {intersection} <= 0 against an ample class, so -K is not effective"
            ),
            Rule::ResidualCount => {
                f.write_str("residual class counted by degree (Riemann-Roch, Serre duality) and tag")
            }
            Rule::ResidualConditional => f.write_str(
                "residual class lies in 0 <= deg <= g - 1: Poisson iff it is effective",
            ),
            Rule::SuppliedEffectiveness { effective } => {
                write!(f, "effectiveness of the residual class supplied as {effective}")
            }
            Rule::BlowUp { base_point } => write!(
                f,
                "blow-up at a point (base point of |-K|: {base_point}): h0 kept at a base point, \
                 otherwise decreases by one"
            ),
        }
    }
}

/// A fired rule and the dimension known after it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleStep {
    pub rule: Rule,
    pub outcome: DimAnswer,
}

/// Records fired rules.
#[derive(Debug, Default, Clone)]
pub struct Trace {
    steps: Vec<RuleStep>,
}

impl Trace {
    pub fn new() -> Self {
        Trace::default()
    }

    pub fn push(&mut self, rule: Rule, outcome: DimAnswer) {
        self.steps.push(RuleStep { rule, outcome });
    }

    pub fn steps(&self) -> &[RuleStep] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<RuleStep> {
        self.steps
    }
}
