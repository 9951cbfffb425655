use std::fmt;
use std::sync::Arc;

use crate::error::{DpError, Result};

/// Boolean carrier encoding used by the existence and for-all algebras.
pub const FALSE: i64 = 0;
pub const TRUE: i64 = 1;

/// The binary operator `⊙` of a constraint algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Combine {
    /// Integer addition; group-like with `m ⊙ v⁻¹ = m − v`.
    Sum,
    Min,
    Max,
    /// `|x − y|`. Not associative, so the lifted product is only meaningful
    /// for left-to-right folds.
    AbsDiff,
    Or,
    And,
}

impl Combine {
    fn apply(self, a: i64, b: i64) -> i64 {
        match self {
            Combine::Sum => a + b,
            Combine::Min => a.min(b),
            Combine::Max => a.max(b),
            Combine::AbsDiff => (a - b).abs(),
            Combine::Or => a | b,
            Combine::And => a & b,
        }
    }
}

/// A finite constraint algebra `(𝕄, ⊙, i_⊙)` whose carrier is the
/// contiguous integer range `lo..=hi`. Results of `⊙` falling outside the
/// carrier are dropped (truncation).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintAlgebra {
    name: String,
    lo: i64,
    hi: i64,
    op: Combine,
    identity: Option<i64>,
}

impl ConstraintAlgebra {
    pub fn new(
        name: impl Into<String>,
        lo: i64,
        hi: i64,
        op: Combine,
        identity: Option<i64>,
    ) -> Result<Self> {
        let name = name.into();
        if lo > hi {
            return Err(DpError::InvalidConstraint(format!(
                "empty carrier {lo}..={hi} for `{name}`"
            )));
        }
        if let Some(id) = identity {
            if !(lo..=hi).contains(&id) {
                return Err(DpError::OutOfCarrier {
                    algebra: name,
                    value: id,
                });
            }
        }
        Ok(ConstraintAlgebra {
            name,
            lo,
            hi,
            op,
            identity,
        })
    }

    /// Subset size `({0..cap}, +, 0)`, truncated at `cap`.
    pub fn subset_size(cap: usize) -> Self {
        Self::new("subset-size", 0, cap as i64, Combine::Sum, Some(0)).expect("valid carrier")
    }

    /// Minimum count `({1..m}, min, m)`.
    pub fn min_count(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(DpError::InvalidConstraint(
                "min-count cap must be positive".into(),
            ));
        }
        Self::new("min-count", 1, m as i64, Combine::Min, Some(m as i64))
    }

    /// Maximum count `({0..m}, max, 0)`.
    pub fn max_count(m: usize) -> Self {
        Self::new("max-count", 0, m as i64, Combine::Max, Some(0)).expect("valid carrier")
    }

    /// Absolute difference `({0..m}, |x − y|, 0)`.
    pub fn abs_difference(m: usize) -> Self {
        Self::new("abs-difference", 0, m as i64, Combine::AbsDiff, Some(0)).expect("valid carrier")
    }

    /// Existence `(𝔹, ∨, F)`.
    pub fn existence() -> Self {
        Self::new("existence", FALSE, TRUE, Combine::Or, Some(FALSE)).expect("valid carrier")
    }

    /// For-all `(𝔹, ∧, T)`.
    pub fn for_all() -> Self {
        Self::new("for-all", FALSE, TRUE, Combine::And, Some(TRUE)).expect("valid carrier")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn op(&self) -> Combine {
        self.op
    }

    pub fn bounds(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    /// `|𝕄|`.
    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, m: i64) -> bool {
        (self.lo..=self.hi).contains(&m)
    }

    pub fn index_of(&self, m: i64) -> Option<usize> {
        self.contains(m).then(|| (m - self.lo) as usize)
    }

    pub fn element(&self, index: usize) -> i64 {
        debug_assert!(index < self.len());
        self.lo + index as i64
    }

    pub fn elements(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }

    pub fn identity(&self) -> Option<i64> {
        self.identity
    }

    /// `a ⊙ b`, or `None` when the result leaves the carrier.
    pub fn combine(&self, a: i64, b: i64) -> Option<i64> {
        let r = self.op.apply(a, b);
        self.contains(r).then_some(r)
    }

    pub fn combine_index(&self, a: usize, b: usize) -> Option<usize> {
        self.combine(self.element(a), self.element(b))
            .map(|r| (r - self.lo) as usize)
    }

    /// Whether unique solutions `m″ = (m′)⁻¹ ⊙ m` exist.
    pub fn is_group_like(&self) -> bool {
        self.op == Combine::Sum
    }

    /// `m ⊙ v⁻¹` for group-like algebras; `None` when it leaves the carrier
    /// or the algebra has no inverses.
    pub fn divide(&self, m: i64, v: i64) -> Option<i64> {
        match self.op {
            Combine::Sum => {
                let r = m - v;
                self.contains(r).then_some(r)
            }
            _ => None,
        }
    }

    /// Exhaustive associativity check over the carrier (truncated results
    /// count as a single "dropped" value).
    pub fn is_associative(&self) -> bool {
        let els: Vec<i64> = self.elements().collect();
        els.iter().all(|&a| {
            els.iter().all(|&b| {
                els.iter().all(|&c| {
                    let left = self.combine(a, b).and_then(|ab| self.combine(ab, c));
                    let right = self.combine(b, c).and_then(|bc| self.combine(a, bc));
                    left == right
                })
            })
        })
    }

    /// Names of the invariants this algebra violates: `associativity`,
    /// `identity`, `inverse`.
    pub fn invariant_violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.is_associative() {
            out.push("associativity");
        }
        if let Some(id) = self.identity {
            let ok = self
                .elements()
                .all(|m| self.combine(id, m) == Some(m) && self.combine(m, id) == Some(m));
            if !ok {
                out.push("identity");
            }
        }
        if self.is_group_like() {
            let ok = self.elements().all(|m| {
                self.elements().all(|v| match self.divide(m, v) {
                    Some(q) => self.combine(q, v) == Some(m),
                    None => true,
                })
            });
            if !ok {
                out.push("inverse");
            }
        }
        out
    }
}

/// The Appendix-style catalog of standard algebras, all with carriers
/// bounded by `cap` where the natural carrier is unbounded.
pub fn algebra_catalog(cap: usize) -> Result<Vec<ConstraintAlgebra>> {
    if cap == 0 {
        return Err(DpError::InvalidConstraint(
            "catalog cap must be positive".into(),
        ));
    }
    Ok(vec![
        ConstraintAlgebra::subset_size(cap),
        ConstraintAlgebra::min_count(cap)?,
        ConstraintAlgebra::max_count(cap),
        ConstraintAlgebra::abs_difference(cap),
        ConstraintAlgebra::existence(),
        ConstraintAlgebra::for_all(),
    ])
}

/// Acceptance predicate `a : 𝕄 → 𝔹`.
#[derive(Clone)]
pub enum Acceptance {
    Any,
    Exactly(i64),
    AtLeast(i64),
    AtMost(i64),
    /// Inclusive range.
    Between(i64, i64),
    Custom(Arc<dyn Fn(i64) -> bool + Send + Sync>),
}

impl Acceptance {
    pub fn custom(f: impl Fn(i64) -> bool + Send + Sync + 'static) -> Self {
        Acceptance::Custom(Arc::new(f))
    }

    pub fn accepts(&self, m: i64) -> bool {
        match self {
            Acceptance::Any => true,
            Acceptance::Exactly(x) => m == *x,
            Acceptance::AtLeast(x) => m >= *x,
            Acceptance::AtMost(x) => m <= *x,
            Acceptance::Between(lo, hi) => (*lo..=*hi).contains(&m),
            Acceptance::Custom(f) => f(m),
        }
    }
}

impl fmt::Debug for Acceptance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Acceptance::Any => f.write_str("Any"),
            Acceptance::Exactly(x) => write!(f, "Exactly({x})"),
            Acceptance::AtLeast(x) => write!(f, "AtLeast({x})"),
            Acceptance::AtMost(x) => write!(f, "AtMost({x})"),
            Acceptance::Between(a, b) => write!(f, "Between({a}, {b})"),
            Acceptance::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

/// Sequential-value ordering over positions `1..=N` of a value sequence:
/// `i ⪯ j = j` when `i < j` and `R(u_i, u_j)`, the annihilator otherwise.
///
/// Only left-associative and without identity, so it is never turned into a
/// lifted semiring; it drives the ordered-subsequence recurrence and the
/// matching path filter.
pub struct SequentialOrder<'a, T, R> {
    values: &'a [T],
    relation: R,
}

impl<'a, T, R> SequentialOrder<'a, T, R>
where
    R: Fn(&T, &T) -> bool,
{
    pub fn new(values: &'a [T], relation: R) -> Self {
        SequentialOrder { values, relation }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Whether `R(u_i, u_j)` holds (1-based positions).
    pub fn relates(&self, i: usize, j: usize) -> bool {
        (self.relation)(&self.values[i - 1], &self.values[j - 1])
    }

    /// `i ⪯ j`; `None` is the annihilator.
    pub fn combine(&self, i: usize, j: usize) -> Option<usize> {
        (i < j && self.relates(i, j)).then_some(j)
    }

    /// Left-to-right fold over a sequence of positions. `None` for the empty
    /// sequence (no identity) and for sequences that are not chains.
    pub fn fold(&self, positions: &[usize]) -> Option<usize> {
        let (first, rest) = positions.split_first()?;
        rest.iter()
            .try_fold(*first, |acc, &next| self.combine(acc, next))
    }
}
