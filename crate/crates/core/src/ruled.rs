//! The numerical lattice `Z tau + Z f` of a geometrically ruled surface.
//!
//! `tau` is the normalized section with `tau^2 = -e` and `f` the fibre class,
//! so `tau . f = 1` and `f^2 = 0`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::answer::TriState;

/// Base genus and invariant `e` of a ruled surface `P(V) -> C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RuledNum {
    pub genus: u32,
    pub e: i64,
}

/// The class `a tau + b f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NumClass {
    pub a: i64,
    pub b: i64,
}

impl NumClass {
    pub const ZERO: NumClass = NumClass { a: 0, b: 0 };
    pub const SECTION: NumClass = NumClass { a: 1, b: 0 };
    pub const FIBRE: NumClass = NumClass { a: 0, b: 1 };

    pub fn new(a: i64, b: i64) -> Self {
        NumClass { a, b }
    }

    pub fn is_zero(&self) -> bool {
        *self == NumClass::ZERO
    }
}

impl std::ops::Add for NumClass {
    type Output = NumClass;

    fn add(self, rhs: NumClass) -> NumClass {
        NumClass::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl std::ops::Mul<NumClass> for i64 {
    type Output = NumClass;

    fn mul(self, rhs: NumClass) -> NumClass {
        NumClass::new(self * rhs.a, self * rhs.b)
    }
}

impl fmt::Display for NumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}τ + {}f", self.a, self.b)
    }
}

impl RuledNum {
    pub fn new(genus: u32, e: i64) -> Self {
        RuledNum { genus, e }
    }

    /// `d1 . d2 = -e a1 a2 + a1 b2 + a2 b1`.
    pub fn intersect(&self, d1: NumClass, d2: NumClass) -> i64 {
        -self.e * d1.a * d2.a + d1.a * d2.b + d2.a * d1.b
    }

    /// `-K_X = 2 tau + (e + 2 - 2g) f`.
    pub fn anticanonical_class(&self) -> NumClass {
        NumClass::new(2, self.e + 2 - 2 * i64::from(self.genus))
    }

    /// Ampleness of `a tau + b f`: `a > 0` and `b > a e` for `e >= 0`,
    /// `a > 0` and `2b > a e` for `e < 0`.
    pub fn is_ample(&self, d: NumClass) -> bool {
        if d.a <= 0 {
            return false;
        }
        if self.e >= 0 {
            d.b > d.a * self.e
        } else {
            2 * d.b > d.a * self.e
        }
    }

    /// The fixed battery `tau`, `f`, `tau + k f` filtered down to the ample members,
    /// where `k = e + 1` for `e >= 0` and `k = ceil(e / 2) + 1` otherwise.
    pub fn ample_test_classes(&self) -> Vec<NumClass> {
        let k = if self.e >= 0 {
            self.e + 1
        } else {
            // ceil(e / 2) for negative e is truncating division.
            self.e / 2 + 1
        };
        [
            NumClass::SECTION,
            NumClass::FIBRE,
            NumClass::SECTION + k * NumClass::FIBRE,
        ]
        .into_iter()
        .filter(|&a| self.is_ample(a))
        .collect()
    }

    /// Refutes effectiveness of a nonzero class that meets some ample test
    /// class non-positively. Never answers `Yes`.
    pub fn numerical_noneffective(&self, d: NumClass) -> TriState {
        if d.is_zero() {
            return TriState::Unknown;
        }
        if self.obstructing_ample_class(d).is_some() {
            TriState::No
        } else {
            TriState::Unknown
        }
    }

    /// The first ample test class `A` with `d . A <= 0`, if any.
    pub fn obstructing_ample_class(&self, d: NumClass) -> Option<NumClass> {
        if d.is_zero() {
            return None;
        }
        self.ample_test_classes()
            .into_iter()
            .find(|&a| self.intersect(d, a) <= 0)
    }
}
