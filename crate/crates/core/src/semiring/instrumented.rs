use std::sync::atomic::{AtomicU64, Ordering};

use super::{Selective, Semiring};

/// Number of base operations performed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCounts {
    pub add: u64,
    pub mul: u64,
}

impl OpCounts {
    pub fn total(&self) -> u64 {
        self.add + self.mul
    }
}

/// Wraps a semiring and counts `add` / `mul` calls. Identity constructors
/// and `equiv` are not counted.
#[derive(Debug, Default)]
pub struct Instrumented<S> {
    inner: S,
    adds: AtomicU64,
    muls: AtomicU64,
}

impl<S> Instrumented<S> {
    pub fn new(inner: S) -> Self {
        Instrumented {
            inner,
            adds: AtomicU64::new(0),
            muls: AtomicU64::new(0),
        }
    }

    pub fn inner(&self) -> &S {
        &self.inner
    }

    pub fn counts(&self) -> OpCounts {
        OpCounts {
            add: self.adds.load(Ordering::Relaxed),
            mul: self.muls.load(Ordering::Relaxed),
        }
    }

    pub fn reset(&self) {
        self.adds.store(0, Ordering::Relaxed);
        self.muls.store(0, Ordering::Relaxed);
    }
}

impl<S: Semiring> Semiring for Instrumented<S> {
    type Value = S::Value;

    fn zero(&self) -> S::Value {
        self.inner.zero()
    }
    fn one(&self) -> S::Value {
        self.inner.one()
    }
    fn add(&self, a: &S::Value, b: &S::Value) -> S::Value {
        self.adds.fetch_add(1, Ordering::Relaxed);
        self.inner.add(a, b)
    }
    fn mul(&self, a: &S::Value, b: &S::Value) -> S::Value {
        self.muls.fetch_add(1, Ordering::Relaxed);
        self.inner.mul(a, b)
    }
    fn equiv(&self, a: &S::Value, b: &S::Value) -> bool {
        self.inner.equiv(a, b)
    }
}

impl<S: Selective> Selective for Instrumented<S> {
    fn prefer(&self, a: &S::Value, b: &S::Value) -> std::cmp::Ordering {
        self.inner.prefer(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::Real;

    #[test]
    fn counts_calls() {
        let s = Instrumented::new(Real);
        let x = s.add(&s.one(), &s.mul(&2.0, &3.0));
        assert_eq!(x, 7.0);
        assert_eq!(s.counts(), OpCounts { add: 1, mul: 1 });
        s.reset();
        assert_eq!(s.counts().total(), 0);
    }
}
