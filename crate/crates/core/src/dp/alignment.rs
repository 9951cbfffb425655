//! Needleman-Wunsch alignment over the `(N+1) × (M+1)` lattice.

use crate::error::{DpError, Result};
use crate::lifting::Acceptance;
use crate::semiring::Semiring;

/// One alignment step, identified by the cell it enters.
///
/// `Match` enters `(i, j)` from `(i-1, j-1)`, `Delete` from `(i-1, j)` and
/// `Insert` from `(i, j-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlignStep {
    Match { i: usize, j: usize },
    Delete { i: usize, j: usize },
    Insert { i: usize, j: usize },
}

impl AlignStep {
    /// Destination cell.
    pub fn cell(&self) -> (usize, usize) {
        match *self {
            AlignStep::Match { i, j } | AlignStep::Delete { i, j } | AlignStep::Insert { i, j } => {
                (i, j)
            }
        }
    }

    /// Index into the cost map: `(i, j)` for matches, `(i, 0)` for
    /// deletions and `(0, j)` for insertions.
    pub fn cost_index(&self) -> (usize, usize) {
        match *self {
            AlignStep::Match { i, j } => (i, j),
            AlignStep::Delete { i, .. } => (i, 0),
            AlignStep::Insert { j, .. } => (0, j),
        }
    }

    /// Misalignment `|i - j|` of the destination cell.
    pub fn misalignment(&self) -> usize {
        let (i, j) = self.cell();
        i.abs_diff(j)
    }
}

/// Unconstrained alignment:
/// `f_{i,j} = f_{i-1,j-1} ⊗ w(match) ⊕ f_{i-1,j} ⊗ w(delete) ⊕ f_{i,j-1} ⊗ w(insert)`.
///
/// Two rolling rows; `O(N M)` base operations.
pub fn nw_align<S, W>(rows: usize, cols: usize, s: &S, w: W) -> S::Value
where
    S: Semiring,
    W: Fn(AlignStep) -> S::Value,
{
    let mut prev: Vec<S::Value> = Vec::with_capacity(cols + 1);
    prev.push(s.one());
    for j in 1..=cols {
        let v = s.mul(&prev[j - 1], &w(AlignStep::Insert { i: 0, j }));
        prev.push(v);
    }
    for i in 1..=rows {
        let mut cur: Vec<S::Value> = Vec::with_capacity(cols + 1);
        cur.push(s.mul(&prev[0], &w(AlignStep::Delete { i, j: 0 })));
        for j in 1..=cols {
            let diag = s.mul(&prev[j - 1], &w(AlignStep::Match { i, j }));
            let up = s.mul(&prev[j], &w(AlignStep::Delete { i, j }));
            let left = s.mul(&cur[j - 1], &w(AlignStep::Insert { i, j }));
            cur.push(s.add(&s.add(&diag, &up), &left));
        }
        prev = cur;
    }
    prev.swap_remove(cols)
}

/// Number of alignments `D(N, M)`:
/// `D(n, m) = D(n-1, m-1) + D(n-1, m) + D(n, m-1)`, `D(n, 0) = D(0, m) = 1`.
pub fn delannoy(n: usize, m: usize) -> Result<u128> {
    let mut row = vec![1u128; m + 1];
    for _ in 1..=n {
        let mut diag = row[0];
        for j in 1..=m {
            let up = row[j];
            row[j] = diag
                .checked_add(up)
                .and_then(|x| x.checked_add(row[j - 1]))
                .ok_or(DpError::Overflow)?;
            diag = up;
        }
    }
    Ok(row[m])
}

fn shift_into<S: Semiring>(s: &S, out: &mut [S::Value], c: &[S::Value], w: &S::Value, d: usize) {
    for m in d..out.len() {
        out[m] = s.add(&out[m], &s.mul(&c[m - d], w));
    }
}

fn project<S: Semiring>(s: &S, accept: &Acceptance, f: &[S::Value]) -> S::Value {
    f.iter()
        .enumerate()
        .filter(|(m, _)| accept.accepts(*m as i64))
        .fold(s.zero(), |acc, (_, v)| s.add(&acc, v))
}

/// Alignments whose summed misalignment `Σ |i - j|` over visited cells is
/// accepted (default `≤ l_max`).
///
/// Lifted over `{0..l_max}` under `+`; sums beyond `l_max` are truncated
/// and never accepted. Each step shifts by `|i - j|`. `O(N M l_max)` base
/// operations.
pub fn nw_align_sum_constrained<S, W>(
    rows: usize,
    cols: usize,
    l_max: usize,
    accept: Option<&Acceptance>,
    s: &S,
    w: W,
) -> S::Value
where
    S: Semiring,
    W: Fn(AlignStep) -> S::Value,
{
    let width = l_max + 1;
    let default = Acceptance::AtMost(l_max as i64);
    let accept = accept.unwrap_or(&default);
    let zero_row = || vec![s.zero(); width];

    let mut prev: Vec<Vec<S::Value>> = Vec::with_capacity(cols + 1);
    let mut origin = zero_row();
    origin[0] = s.one();
    prev.push(origin);
    for j in 1..=cols {
        let step = AlignStep::Insert { i: 0, j };
        let mut cell = zero_row();
        shift_into(s, &mut cell, &prev[j - 1], &w(step), step.misalignment());
        prev.push(cell);
    }
    for i in 1..=rows {
        let mut cur: Vec<Vec<S::Value>> = Vec::with_capacity(cols + 1);
        let step = AlignStep::Delete { i, j: 0 };
        let mut cell = zero_row();
        shift_into(s, &mut cell, &prev[0], &w(step), step.misalignment());
        cur.push(cell);
        for j in 1..=cols {
            let d = i.abs_diff(j);
            let mut cell = zero_row();
            shift_into(s, &mut cell, &prev[j - 1], &w(AlignStep::Match { i, j }), d);
            shift_into(s, &mut cell, &prev[j], &w(AlignStep::Delete { i, j }), d);
            shift_into(s, &mut cell, &cur[j - 1], &w(AlignStep::Insert { i, j }), d);
            cur.push(cell);
        }
        prev = cur;
    }
    project(s, accept, &prev[cols])
}

fn max_into<S: Semiring>(s: &S, out: &mut [S::Value], c: &[S::Value], w: &S::Value, d: usize) {
    // m = d collects every m′ ≤ d; m > d keeps its own entry
    let low = c[..=d].iter().fold(s.zero(), |acc, x| s.add(&acc, x));
    out[d] = s.add(&out[d], &s.mul(&low, w));
    for m in d + 1..out.len() {
        out[m] = s.add(&out[m], &s.mul(&c[m], w));
    }
}

/// Alignments whose largest misalignment `max |i - j|` over visited cells is
/// accepted (default `≤ l_max`).
///
/// Lifted over `{0..max(N, M)}` under `max` with identity 0.
/// `O(N M max(N, M))` base operations.
pub fn nw_align_max_constrained<S, W>(
    rows: usize,
    cols: usize,
    l_max: usize,
    accept: Option<&Acceptance>,
    s: &S,
    w: W,
) -> S::Value
where
    S: Semiring,
    W: Fn(AlignStep) -> S::Value,
{
    let width = rows.max(cols) + 1;
    let default = Acceptance::AtMost(l_max as i64);
    let accept = accept.unwrap_or(&default);
    let zero_row = || vec![s.zero(); width];

    let mut prev: Vec<Vec<S::Value>> = Vec::with_capacity(cols + 1);
    let mut origin = zero_row();
    origin[0] = s.one();
    prev.push(origin);
    for j in 1..=cols {
        let step = AlignStep::Insert { i: 0, j };
        let mut cell = zero_row();
        max_into(s, &mut cell, &prev[j - 1], &w(step), step.misalignment());
        prev.push(cell);
    }
    for i in 1..=rows {
        let mut cur: Vec<Vec<S::Value>> = Vec::with_capacity(cols + 1);
        let step = AlignStep::Delete { i, j: 0 };
        let mut cell = zero_row();
        max_into(s, &mut cell, &prev[0], &w(step), step.misalignment());
        cur.push(cell);
        for j in 1..=cols {
            let d = i.abs_diff(j);
            let mut cell = zero_row();
            max_into(s, &mut cell, &prev[j - 1], &w(AlignStep::Match { i, j }), d);
            max_into(s, &mut cell, &prev[j], &w(AlignStep::Delete { i, j }), d);
            max_into(s, &mut cell, &cur[j - 1], &w(AlignStep::Insert { i, j }), d);
            cur.push(cell);
        }
        prev = cur;
    }
    project(s, accept, &prev[cols])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{Count, Counting, MinPlus};

    fn one(_: AlignStep) -> Count {
        Count::ONE
    }

    #[test]
    fn delannoy_values() {
        for n in 0..6 {
            assert_eq!(delannoy(n, 0).unwrap(), 1);
            assert_eq!(delannoy(0, n).unwrap(), 1);
        }
        assert_eq!(delannoy(1, 1).unwrap(), 3);
        assert_eq!(delannoy(2, 2).unwrap(), 13);
        assert_eq!(delannoy(3, 3).unwrap(), 63);
        assert_eq!(nw_align(2, 2, &Counting, one), Count::Finite(13));
        assert!(delannoy(200, 200).is_err());
    }

    #[test]
    fn boundary_row() {
        let w = |st: AlignStep| st.cost_index().1 as f64;
        assert_eq!(nw_align(0, 3, &MinPlus, w), 6.0);
    }

    #[test]
    fn diagonal_only_at_zero() {
        let w = |_| Count::ONE;
        assert_eq!(
            nw_align_sum_constrained(4, 4, 0, None, &Counting, w),
            Count::ONE
        );
        assert_eq!(
            nw_align_max_constrained(4, 4, 0, None, &Counting, w),
            Count::ONE
        );
        // one step off the diagonal and straight back
        assert_eq!(
            nw_align_sum_constrained(1, 1, 2, None, &Counting, one),
            Count::Finite(3)
        );
    }

    #[test]
    fn vacuous_constraints() {
        let big = 4 * 5 * 5;
        assert_eq!(
            nw_align_sum_constrained(4, 5, big, None, &Counting, one),
            Count::Finite(681)
        );
        assert_eq!(
            nw_align_max_constrained(4, 5, 5, None, &Counting, one),
            Count::Finite(681)
        );
        assert_eq!(delannoy(4, 5).unwrap(), 681);
    }
}
