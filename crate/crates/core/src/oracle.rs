//! Exhaustive path oracle.
//!
//! Running a recurrence in the [`Generator`] semiring with singleton edge
//! weights enumerates every solution it encodes as a [`PathSet`].
//! [`hom_eval`] maps a path set into any other semiring, and
//! [`filter_paths`] keeps the paths whose constraint fold is accepted.
//! Comparing these against direct runs is how the recurrences are tested.

use std::collections::BTreeSet;
use std::fmt::Debug;

use crate::error::{DpError, Result};
use crate::lifting::{Acceptance, Combine, ConstraintAlgebra};
use crate::semiring::Semiring;

/// Default cap on labels stored by one path set.
pub const DEFAULT_LABEL_BUDGET: usize = 1_000_000;

/// Finite set of label sequences, canonically ordered.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathSet<L: Ord> {
    paths: BTreeSet<Vec<L>>,
}

impl<L: Ord + Clone> PathSet<L> {
    /// `∅`
    pub fn empty() -> Self {
        PathSet {
            paths: BTreeSet::new(),
        }
    }

    /// `{[]}`
    pub fn unit() -> Self {
        Self::from_paths([Vec::new()])
    }

    /// `{[label]}`
    pub fn singleton(label: L) -> Self {
        Self::from_paths([vec![label]])
    }

    pub fn from_paths<I: IntoIterator<Item = Vec<L>>>(paths: I) -> Self {
        PathSet {
            paths: paths.into_iter().collect(),
        }
    }

    pub fn paths(&self) -> &BTreeSet<Vec<L>> {
        &self.paths
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<L>> {
        self.paths.iter()
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn contains(&self, path: &[L]) -> bool {
        self.paths.contains(path)
    }

    /// Storage cost in labels; the empty path counts as one.
    pub fn label_count(&self) -> usize {
        self.paths.iter().map(|p| p.len().max(1)).sum()
    }

    pub fn union(&self, other: &Self) -> Self {
        PathSet {
            paths: self.paths.union(&other.paths).cloned().collect(),
        }
    }

    /// Every path of `self` followed by every path of `other`.
    pub fn cross_join(&self, other: &Self) -> Self {
        let mut paths = BTreeSet::new();
        for a in &self.paths {
            for b in &other.paths {
                let mut p = Vec::with_capacity(a.len() + b.len());
                p.extend_from_slice(a);
                p.extend_from_slice(b);
                paths.insert(p);
            }
        }
        PathSet { paths }
    }

    /// Keep the paths satisfying `keep`.
    pub fn retain(&self, mut keep: impl FnMut(&[L]) -> Result<bool>) -> Result<Self> {
        let mut paths = BTreeSet::new();
        for p in &self.paths {
            if keep(p)? {
                paths.insert(p.clone());
            }
        }
        Ok(PathSet { paths })
    }
}

/// The generator semiring `(PathSet, ∪, ∘, ∅, {[]})`.
///
/// Values are `Result`s: once an operation would exceed the label budget
/// the error propagates through every later operation.
#[derive(Clone, Debug)]
pub struct Generator<L> {
    max_labels: usize,
    _label: std::marker::PhantomData<fn() -> L>,
}

impl<L> Default for Generator<L> {
    fn default() -> Self {
        Self::with_budget(DEFAULT_LABEL_BUDGET)
    }
}

impl<L> Generator<L> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_budget(max_labels: usize) -> Self {
        Generator {
            max_labels,
            _label: std::marker::PhantomData,
        }
    }

    pub fn budget(&self) -> usize {
        self.max_labels
    }

    fn guard(&self, needed: usize) -> Result<()> {
        if needed > self.max_labels {
            Err(DpError::BudgetExceeded {
                needed,
                cap: self.max_labels,
            })
        } else {
            Ok(())
        }
    }

    /// Singleton weight `{[label]}` for use as a DP edge weight.
    pub fn edge(&self, label: L) -> Result<PathSet<L>>
    where
        L: Ord + Clone,
    {
        Ok(PathSet::singleton(label))
    }
}

impl<L: Ord + Clone + Debug> Semiring for Generator<L> {
    type Value = Result<PathSet<L>>;

    fn zero(&self) -> Self::Value {
        Ok(PathSet::empty())
    }

    fn one(&self) -> Self::Value {
        Ok(PathSet::unit())
    }

    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        let (a, b) = (
            a.as_ref().map_err(Clone::clone)?,
            b.as_ref().map_err(Clone::clone)?,
        );
        self.guard(a.label_count().saturating_add(b.label_count()))?;
        Ok(a.union(b))
    }

    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        let (a, b) = (
            a.as_ref().map_err(Clone::clone)?,
            b.as_ref().map_err(Clone::clone)?,
        );
        let len_sum = |s: &PathSet<L>| s.iter().map(Vec::len).sum::<usize>();
        let empties = |s: &PathSet<L>| s.iter().filter(|p| p.is_empty()).count();
        let needed = b
            .len()
            .saturating_mul(len_sum(a))
            .saturating_add(a.len().saturating_mul(len_sum(b)))
            .saturating_add(empties(a).saturating_mul(empties(b)));
        self.guard(needed)?;
        Ok(a.cross_join(b))
    }

    fn equiv(&self, a: &Self::Value, b: &Self::Value) -> bool {
        match (a, b) {
            (Ok(x), Ok(y)) => x == y,
            (Err(x), Err(y)) => x == y,
            _ => false,
        }
    }
}

/// Homomorphic evaluation `g`: `⊕` over paths of the `⊗`-fold of mapped
/// labels. The empty path maps to `one`, the empty set to `zero`.
pub fn hom_eval<S, L, W>(s: &S, weight: W, paths: &PathSet<L>) -> Result<S::Value>
where
    S: Semiring,
    L: Ord + Clone + Debug,
    W: Fn(&L) -> Option<S::Value>,
{
    let mut total = s.zero();
    for path in paths.iter() {
        let mut prod = s.one();
        for label in path {
            let w = weight(label).ok_or_else(|| DpError::MissingLabel(format!("{label:?}")))?;
            prod = s.mul(&prod, &w);
        }
        total = s.add(&total, &prod);
    }
    Ok(total)
}

/// Left fold `h_l = h_{l-1} ⊙ v(e_l)` from the identity. `Ok(None)` when the
/// fold leaves the carrier (truncation) or the algebra has no identity.
/// Edge values outside the carrier are an error, except additive values
/// above the cap, which truncate.
pub fn constraint_fold<L, V>(alg: &ConstraintAlgebra, value: V, path: &[L]) -> Result<Option<i64>>
where
    L: Debug,
    V: Fn(&L) -> Option<i64>,
{
    let Some(mut h) = alg.identity() else {
        return Ok(None);
    };
    for label in path {
        let v = value(label).ok_or_else(|| DpError::MissingLabel(format!("{label:?}")))?;
        if !alg.contains(v) {
            // an additive value past the cap can only overshoot it
            if alg.op() == Combine::Sum && v > alg.bounds().1 {
                return Ok(None);
            }
            return Err(DpError::OutOfCarrier {
                algebra: alg.name().to_string(),
                value: v,
            });
        }
        match alg.combine(h, v) {
            Some(next) => h = next,
            None => return Ok(None),
        }
    }
    Ok(Some(h))
}

/// The filter `φ`: keep paths whose constraint fold is accepted.
pub fn filter_paths<L, V>(
    alg: &ConstraintAlgebra,
    value: V,
    accept: &Acceptance,
    paths: &PathSet<L>,
) -> Result<PathSet<L>>
where
    L: Ord + Clone + Debug,
    V: Fn(&L) -> Option<i64>,
{
    paths.retain(|p| Ok(constraint_fold(alg, &value, p)?.is_some_and(|m| accept.accepts(m))))
}
