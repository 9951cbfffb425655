//! The semiring abstraction and the concrete catalog.
//!
//! A semiring `(S, ⊕, ⊗, 0, 1)` is described by a value implementing
//! [`Semiring`]. Operations take `&self` so that a semiring may carry
//! state: the lifted semiring holds its constraint algebra, the tupled
//! semirings hold their base, and [`Instrumented`] holds operation counters.
//!
//! Every recurrence in [`crate::dp`] is written against this trait only,
//! which is what lets the generator semiring in [`crate::oracle`] enumerate
//! the solutions of the very same code that computes optima or counts.

mod instrumented;
pub mod laws;
mod numeric;
mod tupled;

pub use instrumented::{Instrumented, OpCounts};
pub use numeric::{
    Boolean, Bottleneck, Count, Counting, Expectation, MaxPlus, MaxTimes, MinPlus, Real,
    RealSemiring, Softmax, EXPECTATION_PRINTED_ONE,
};
pub use tupled::{Tupled, TupledSet, Viterbi, ViterbiSimple};

use std::cmp::Ordering;
use std::fmt::Debug;

/// A semiring over the value domain [`Semiring::Value`].
///
/// Implementations must satisfy the usual laws under [`Semiring::equiv`]:
/// `add` is associative and commutative with identity `zero`, `mul` is
/// associative with identity `one`, `mul` distributes over `add` on both
/// sides, and `zero` annihilates under `mul`. [`laws::check`] tests them.
pub trait Semiring {
    type Value: Clone + Debug;

    fn zero(&self) -> Self::Value;
    fn one(&self) -> Self::Value;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;

    /// Equality used by the law checks and the fusion oracles. Exact for
    /// discrete carriers, tolerance-based for floating ones.
    fn equiv(&self, a: &Self::Value, b: &Self::Value) -> bool;

    /// ⊕-fold of `values`, `zero` when empty.
    fn sum<'a, I>(&self, values: I) -> Self::Value
    where
        I: IntoIterator<Item = &'a Self::Value>,
        Self::Value: 'a,
    {
        values
            .into_iter()
            .fold(self.zero(), |acc, v| self.add(&acc, v))
    }

    /// ⊗-fold of `values` left to right, `one` when empty.
    fn product<'a, I>(&self, values: I) -> Self::Value
    where
        I: IntoIterator<Item = &'a Self::Value>,
        Self::Value: 'a,
    {
        values
            .into_iter()
            .fold(self.one(), |acc, v| self.mul(&acc, v))
    }
}

/// A selection semiring: `add` picks one of its operands according to a
/// total preference order on values (max-plus, min-plus, max-times, ...).
pub trait Selective: Semiring {
    /// `Greater` when `a` is strictly preferred over `b`.
    fn prefer(&self, a: &Self::Value, b: &Self::Value) -> Ordering;
}

impl<S: Semiring + ?Sized> Semiring for &S {
    type Value = S::Value;

    fn zero(&self) -> Self::Value {
        (**self).zero()
    }
    fn one(&self) -> Self::Value {
        (**self).one()
    }
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        (**self).add(a, b)
    }
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        (**self).mul(a, b)
    }
    fn equiv(&self, a: &Self::Value, b: &Self::Value) -> bool {
        (**self).equiv(a, b)
    }
}

impl<S: Selective + ?Sized> Selective for &S {
    fn prefer(&self, a: &Self::Value, b: &Self::Value) -> Ordering {
        (**self).prefer(a, b)
    }
}

/// Relative tolerance for floating-point carriers.
pub const REL_TOL: f64 = 1e-9;
/// Absolute tolerance used near zero.
pub const ABS_TOL: f64 = 1e-12;

/// Tolerance-based float equality: infinities compare exactly, finite
/// values within [`REL_TOL`] relative or [`ABS_TOL`] absolute.
pub fn float_equiv(a: f64, b: f64) -> bool {
    if a == b {
        return true;
    }
    if !a.is_finite() || !b.is_finite() {
        return false;
    }
    let diff = (a - b).abs();
    diff <= ABS_TOL || diff <= REL_TOL * a.abs().max(b.abs())
}
