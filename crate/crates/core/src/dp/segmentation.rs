//! Segmentation recurrences over contiguous intervals `[i, j]`.

use crate::error::{DpError, Result};
use crate::lifting::{Acceptance, ConstraintAlgebra};
use crate::semiring::Semiring;

/// Closed interval `start..=end` of 1-based sample positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    pub start: usize,
    pub end: usize,
}

impl Segment {
    pub fn new(start: usize, end: usize) -> Self {
        debug_assert!(1 <= start && start <= end);
        Segment { start, end }
    }

    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// All segmentations of `1..=N`: `f_j = ⊕_{i ≤ j} f_{i-1} ⊗ w(i, j)`,
/// `f_0 = 1`.
pub fn segment_opt<S, W>(n: usize, s: &S, w: W) -> S::Value
where
    S: Semiring,
    W: Fn(Segment) -> S::Value,
{
    let mut f: Vec<S::Value> = Vec::with_capacity(n + 1);
    f.push(s.one());
    for j in 1..=n {
        let fj = (1..=j).fold(s.zero(), |acc, i| {
            s.add(&acc, &s.mul(&f[i - 1], &w(Segment::new(i, j))))
        });
        f.push(fj);
    }
    f.swap_remove(n)
}

/// Segmentations with between `lo` and `hi` segments (inclusive).
///
/// Lifted over segment counts `{0..hi}` with every segment contributing
/// one, so the edge product is a shift: `f_{j,m} = ⊕_i f_{i-1,m-1} ⊗ w(i,j)`.
/// `O(N² hi)` base operations.
pub fn segment_fixed_count<S, W>(n: usize, lo: usize, hi: usize, s: &S, w: W) -> Result<S::Value>
where
    S: Semiring,
    W: Fn(Segment) -> S::Value,
{
    if lo == 0 || lo > hi {
        return Err(DpError::InvalidConstraint(format!(
            "segment count range [{lo}, {hi}] is empty or includes zero"
        )));
    }
    let width = hi + 1;
    // f[j * width + m]
    let mut f = vec![s.zero(); (n + 1) * width];
    f[0] = s.one();
    for j in 1..=n {
        for i in 1..=j {
            let wij = w(Segment::new(i, j));
            for m in 1..=hi.min(i) {
                let prev = &f[(i - 1) * width + m - 1];
                let term = s.mul(prev, &wij);
                let cell = &mut f[j * width + m];
                *cell = s.add(cell, &term);
            }
        }
    }
    let last = &f[n * width..];
    Ok(s.sum(last[lo..=hi].iter()))
}

/// Segmentations whose shortest segment length is accepted.
///
/// Lifted over the min algebra on `{1..N}` with identity `N`; a segment of
/// length `v` moves entries `m < v` to `m`, collects all `m′ ≥ v` into `v`,
/// and clears everything above `v`. Suffix sums `⊕_{m′ ≥ v} f_{i-1,m′}` are
/// computed once per finished row, so the whole run is `O(N³)`.
pub fn segment_min_length<S, W>(n: usize, accept: &Acceptance, s: &S, w: W) -> Result<S::Value>
where
    S: Semiring,
    W: Fn(Segment) -> S::Value,
{
    let alg = ConstraintAlgebra::min_count(n)?;
    // entry k (0-based) holds minimum length k + 1
    let mut rows: Vec<Vec<S::Value>> = Vec::with_capacity(n + 1);
    let mut suffix: Vec<Vec<S::Value>> = Vec::with_capacity(n + 1);
    let suffix_of = |row: &[S::Value]| {
        let mut out = vec![s.zero(); n + 1];
        for k in (0..n).rev() {
            out[k] = s.add(&row[k], &out[k + 1]);
        }
        out
    };
    let mut f0 = vec![s.zero(); n];
    f0[n - 1] = s.one();
    suffix.push(suffix_of(&f0));
    rows.push(f0);
    for j in 1..=n {
        let mut fj = vec![s.zero(); n];
        for i in 1..=j {
            let seg = Segment::new(i, j);
            let v = seg.len();
            let wij = w(seg);
            let prev = &rows[i - 1];
            for k in 0..v - 1 {
                fj[k] = s.add(&fj[k], &s.mul(&prev[k], &wij));
            }
            let at = s.mul(&suffix[i - 1][v - 1], &wij);
            fj[v - 1] = s.add(&fj[v - 1], &at);
        }
        suffix.push(suffix_of(&fj));
        rows.push(fj);
    }
    let last = rows.pop().expect("n >= 1");
    Ok(alg
        .elements()
        .zip(&last)
        .filter(|(m, _)| accept.accepts(*m))
        .fold(s.zero(), |acc, (_, v)| s.add(&acc, v)))
}
