//! Numerical semirings: counting, Boolean, probability, tropical, max-plus,
//! max-times, softmax, bottleneck and expectation.

use std::cmp::Ordering;
use std::fmt;

use super::{float_equiv, Selective, Semiring};
use crate::error::{DpError, Result};

/// Natural number with checked arithmetic. `Overflow` is absorbing except
/// under multiplication by zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub enum Count {
    Finite(u128),
    Overflow,
}

impl Count {
    pub const ZERO: Count = Count::Finite(0);
    pub const ONE: Count = Count::Finite(1);

    pub fn get(self) -> Result<u128> {
        match self {
            Count::Finite(n) => Ok(n),
            Count::Overflow => Err(DpError::Overflow),
        }
    }
}

impl From<u128> for Count {
    fn from(n: u128) -> Self {
        Count::Finite(n)
    }
}

impl fmt::Debug for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Finite(n) => write!(f, "{n}"),
            Count::Overflow => f.write_str("overflow"),
        }
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `(ℕ, +, ×, 0, 1)`: counts solutions. Overflow of the 128-bit carrier is
/// reported as [`Count::Overflow`] rather than wrapped.
#[derive(Clone, Copy, Debug, Default)]
pub struct Counting;

impl Semiring for Counting {
    type Value = Count;

    fn zero(&self) -> Count {
        Count::ZERO
    }
    fn one(&self) -> Count {
        Count::ONE
    }
    fn add(&self, a: &Count, b: &Count) -> Count {
        match (a, b) {
            (Count::Finite(x), Count::Finite(y)) => {
                x.checked_add(*y).map_or(Count::Overflow, Count::Finite)
            }
            _ => Count::Overflow,
        }
    }
    fn mul(&self, a: &Count, b: &Count) -> Count {
        match (a, b) {
            (Count::Finite(0), _) | (_, Count::Finite(0)) => Count::ZERO,
            (Count::Finite(x), Count::Finite(y)) => {
                x.checked_mul(*y).map_or(Count::Overflow, Count::Finite)
            }
            _ => Count::Overflow,
        }
    }
    fn equiv(&self, a: &Count, b: &Count) -> bool {
        a == b
    }
}

/// `(𝔹, ∨, ∧, F, T)`: solution existence.
#[derive(Clone, Copy, Debug, Default)]
pub struct Boolean;

impl Semiring for Boolean {
    type Value = bool;

    fn zero(&self) -> bool {
        false
    }
    fn one(&self) -> bool {
        true
    }
    fn add(&self, a: &bool, b: &bool) -> bool {
        *a || *b
    }
    fn mul(&self, a: &bool, b: &bool) -> bool {
        *a && *b
    }
    fn equiv(&self, a: &bool, b: &bool) -> bool {
        a == b
    }
}

impl Selective for Boolean {
    fn prefer(&self, a: &bool, b: &bool) -> Ordering {
        a.cmp(b)
    }
}

macro_rules! real_semiring {
    ($(#[$doc:meta])* $name:ident, zero = $zero:expr, one = $one:expr,
     add = |$a:ident, $b:ident| $add:expr, mul = |$x:ident, $y:ident| $mul:expr) => {
        $(#[$doc])*
        #[derive(Clone, Copy, Debug, Default)]
        pub struct $name;

        impl Semiring for $name {
            type Value = f64;

            fn zero(&self) -> f64 {
                $zero
            }
            fn one(&self) -> f64 {
                $one
            }
            fn add(&self, $a: &f64, $b: &f64) -> f64 {
                let ($a, $b) = (*$a, *$b);
                $add
            }
            fn mul(&self, $x: &f64, $y: &f64) -> f64 {
                let ($x, $y) = (*$x, *$y);
                $mul
            }
            fn equiv(&self, a: &f64, b: &f64) -> bool {
                float_equiv(*a, *b)
            }
        }
    };
}

real_semiring!(
    /// `(ℝ, +, ×, 0, 1)`: probabilities and likelihoods.
    Real, zero = 0.0, one = 1.0, add = |a, b| a + b, mul = |a, b| a * b
);

real_semiring!(
    /// Tropical `(ℝ ∪ {∞}, min, +, ∞, 0)`.
    MinPlus, zero = f64::INFINITY, one = 0.0, add = |a, b| a.min(b), mul = |a, b| a + b
);

real_semiring!(
    /// `(ℝ ∪ {−∞}, max, +, −∞, 0)`.
    MaxPlus, zero = f64::NEG_INFINITY, one = 0.0, add = |a, b| a.max(b), mul = |a, b| a + b
);

real_semiring!(
    /// `(ℝ⁺, max, ×, 0, 1)`: most probable solution.
    MaxTimes, zero = 0.0, one = 1.0, add = |a, b| a.max(b), mul = |a, b| a * b
);

real_semiring!(
    /// `([0, 1], max, min, 0, 1)`: fuzzy constraint satisfaction.
    Bottleneck, zero = 0.0, one = 1.0, add = |a, b| a.max(b), mul = |a, b| a.min(b)
);

real_semiring!(
    /// Softmax (smoothed minimum) `(ℝ ∪ {∞}, −ln(e^−x + e^−y), +, ∞, 0)`.
    ///
    /// `add` uses the stable form `min(x, y) − ln(1 + e^−|x−y|)`.
    Softmax, zero = f64::INFINITY, one = 0.0,
    add = |a, b| softmin(a, b), mul = |a, b| a + b
);

fn softmin(a: f64, b: f64) -> f64 {
    if a == f64::INFINITY {
        return b;
    }
    if b == f64::INFINITY {
        return a;
    }
    let lo = a.min(b);
    let gap = (a - b).abs();
    if gap.is_nan() {
        // both −∞
        return lo;
    }
    lo - (-gap).exp().ln_1p()
}

impl Selective for MinPlus {
    fn prefer(&self, a: &f64, b: &f64) -> Ordering {
        b.partial_cmp(a).unwrap_or(Ordering::Equal)
    }
}

impl Selective for MaxPlus {
    fn prefer(&self, a: &f64, b: &f64) -> Ordering {
        a.partial_cmp(b).unwrap_or(Ordering::Equal)
    }
}

impl Selective for MaxTimes {
    fn prefer(&self, a: &f64, b: &f64) -> Ordering {
        a.partial_cmp(b).unwrap_or(Ordering::Equal)
    }
}

impl Selective for Bottleneck {
    fn prefer(&self, a: &f64, b: &f64) -> Ordering {
        a.partial_cmp(b).unwrap_or(Ordering::Equal)
    }
}

/// Expectation semiring over pairs `(x, p)`:
/// `(x, p) ⊕ (y, q) = (x + y, p + q)` and `(x, p) ⊗ (y, q) = (p·y + q·x, p·q)`.
///
/// The multiplicative identity is `(0, 1)`. The pair `(1, 0)`
/// ([`EXPECTATION_PRINTED_ONE`]) is sometimes quoted as the identity but
/// fails the identity law: `(1, 0) ⊗ (y, q) = (q, 0)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Expectation;

/// The commonly quoted, incorrect multiplicative identity `(1, 0)`.
pub const EXPECTATION_PRINTED_ONE: (f64, f64) = (1.0, 0.0);

impl Semiring for Expectation {
    type Value = (f64, f64);

    fn zero(&self) -> (f64, f64) {
        (0.0, 0.0)
    }
    fn one(&self) -> (f64, f64) {
        (0.0, 1.0)
    }
    fn add(&self, a: &(f64, f64), b: &(f64, f64)) -> (f64, f64) {
        (a.0 + b.0, a.1 + b.1)
    }
    fn mul(&self, a: &(f64, f64), b: &(f64, f64)) -> (f64, f64) {
        let (x, p) = *a;
        let (y, q) = *b;
        (p * y + q * x, p * q)
    }
    fn equiv(&self, a: &(f64, f64), b: &(f64, f64)) -> bool {
        float_equiv(a.0, b.0) && float_equiv(a.1, b.1)
    }
}

/// Runtime choice among the real-valued semirings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RealSemiring {
    Real,
    MinPlus,
    MaxPlus,
    MaxTimes,
    Softmax,
    Bottleneck,
}

impl RealSemiring {
    pub const ALL: [RealSemiring; 6] = [
        RealSemiring::Real,
        RealSemiring::MinPlus,
        RealSemiring::MaxPlus,
        RealSemiring::MaxTimes,
        RealSemiring::Softmax,
        RealSemiring::Bottleneck,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RealSemiring::Real => "prob",
            RealSemiring::MinPlus => "minplus",
            RealSemiring::MaxPlus => "maxplus",
            RealSemiring::MaxTimes => "maxtimes",
            RealSemiring::Softmax => "softmax",
            RealSemiring::Bottleneck => "bottleneck",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.name() == name)
    }

    /// Whether `add` is a selection (needed for tupling).
    pub fn is_selective(self) -> bool {
        !matches!(self, RealSemiring::Real | RealSemiring::Softmax)
    }
}

impl Semiring for RealSemiring {
    type Value = f64;

    fn zero(&self) -> f64 {
        match self {
            RealSemiring::Real => Real.zero(),
            RealSemiring::MinPlus => MinPlus.zero(),
            RealSemiring::MaxPlus => MaxPlus.zero(),
            RealSemiring::MaxTimes => MaxTimes.zero(),
            RealSemiring::Softmax => Softmax.zero(),
            RealSemiring::Bottleneck => Bottleneck.zero(),
        }
    }
    fn one(&self) -> f64 {
        match self {
            RealSemiring::Real => Real.one(),
            RealSemiring::MinPlus => MinPlus.one(),
            RealSemiring::MaxPlus => MaxPlus.one(),
            RealSemiring::MaxTimes => MaxTimes.one(),
            RealSemiring::Softmax => Softmax.one(),
            RealSemiring::Bottleneck => Bottleneck.one(),
        }
    }
    fn add(&self, a: &f64, b: &f64) -> f64 {
        match self {
            RealSemiring::Real => Real.add(a, b),
            RealSemiring::MinPlus => MinPlus.add(a, b),
            RealSemiring::MaxPlus => MaxPlus.add(a, b),
            RealSemiring::MaxTimes => MaxTimes.add(a, b),
            RealSemiring::Softmax => Softmax.add(a, b),
            RealSemiring::Bottleneck => Bottleneck.add(a, b),
        }
    }
    fn mul(&self, a: &f64, b: &f64) -> f64 {
        match self {
            RealSemiring::Real => Real.mul(a, b),
            RealSemiring::MinPlus => MinPlus.mul(a, b),
            RealSemiring::MaxPlus => MaxPlus.mul(a, b),
            RealSemiring::MaxTimes => MaxTimes.mul(a, b),
            RealSemiring::Softmax => Softmax.mul(a, b),
            RealSemiring::Bottleneck => Bottleneck.mul(a, b),
        }
    }
    fn equiv(&self, a: &f64, b: &f64) -> bool {
        float_equiv(*a, *b)
    }
}

impl Selective for RealSemiring {
    /// Non-selective variants fall back to "larger is better", which is
    /// only meaningful for the selective ones.
    fn prefer(&self, a: &f64, b: &f64) -> Ordering {
        match self {
            RealSemiring::MinPlus | RealSemiring::Softmax => MinPlus.prefer(a, b),
            _ => MaxPlus.prefer(a, b),
        }
    }
}
