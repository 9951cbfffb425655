//! Subsequence, combination, event and ordered-chain recurrences.

use crate::error::Result;
use crate::lifting::{lift_edge, Acceptance, ConstraintAlgebra, Lifted};
use crate::semiring::{MaxPlus, Semiring, Tupled, ViterbiSimple};

/// Outcome of event `index`: occurred or not.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EventOutcome {
    pub index: usize,
    pub occurred: bool,
}

/// All `2^N` subsequences: `f_n = f_{n-1} ⊗ (1 ⊕ w(n))`, `f_0 = 1`.
pub fn subsequences<S, W>(n: usize, s: &S, w: W) -> S::Value
where
    S: Semiring,
    W: Fn(usize) -> S::Value,
{
    let one = s.one();
    (1..=n).fold(s.one(), |f, k| s.mul(&f, &s.add(&one, &w(k))))
}

/// The `2^N - 1` non-empty subsequences:
/// `f_n = f_{n-1} ⊕ (f_{n-1} ⊗ w(n)) ⊕ w(n)`, `f_0 = 0`.
pub fn nonempty_subsequences<S, W>(n: usize, s: &S, w: W) -> S::Value
where
    S: Semiring,
    W: Fn(usize) -> S::Value,
{
    (1..=n).fold(s.zero(), |f, k| {
        let wk = w(k);
        s.add(&s.add(&f, &s.mul(&f, &wk)), &wk)
    })
}

/// Subsequences of length exactly `m`:
/// `f_{n,k} = f_{n-1,k} ⊕ (f_{n-1,k-1} ⊗ w(n))`. Zero when `m > n`.
///
/// One row of `m + 1` entries, updated from high `k` to low.
pub fn combinations<S, W>(n: usize, m: usize, s: &S, w: W) -> S::Value
where
    S: Semiring,
    W: Fn(usize) -> S::Value,
{
    if m > n {
        return s.zero();
    }
    let mut f = vec![s.zero(); m + 1];
    f[0] = s.one();
    for k in 1..=n {
        let wk = w(k);
        for j in (1..=m).rev() {
            f[j] = s.add(&f[j], &s.mul(&f[j - 1], &wk));
        }
    }
    f.swap_remove(m)
}

/// All `2^N` outcome sequences:
/// `f_n = (f_{n-1} ⊗ w(n, no)) ⊕ (f_{n-1} ⊗ w(n, yes))`.
pub fn event_sequences<S, W>(n: usize, s: &S, w: W) -> S::Value
where
    S: Semiring,
    W: Fn(EventOutcome) -> S::Value,
{
    (1..=n).fold(s.one(), |f, index| {
        let no = w(EventOutcome {
            index,
            occurred: false,
        });
        let yes = w(EventOutcome {
            index,
            occurred: true,
        });
        s.add(&s.mul(&f, &no), &s.mul(&f, &yes))
    })
}

/// Outcome sequences with exactly `m` occurrences:
/// `f_{n,k} = (f_{n-1,k} ⊗ w(n, no)) ⊕ (f_{n-1,k-1} ⊗ w(n, yes))`.
///
/// With probabilities `p_n` and `1 - p_n` in the probability semiring this
/// is the Poisson-binomial mass at `m`. Zero when `m > n`.
pub fn events_m_of_n<S, W>(n: usize, m: usize, s: &S, w: W) -> S::Value
where
    S: Semiring,
    W: Fn(EventOutcome) -> S::Value,
{
    if m > n {
        return s.zero();
    }
    let mut f = vec![s.zero(); m + 1];
    f[0] = s.one();
    for index in 1..=n {
        let no = w(EventOutcome {
            index,
            occurred: false,
        });
        let yes = w(EventOutcome {
            index,
            occurred: true,
        });
        for k in (1..=m).rev() {
            f[k] = s.add(&s.mul(&f[k], &no), &s.mul(&f[k - 1], &yes));
        }
        f[0] = s.mul(&f[0], &no);
    }
    f.swap_remove(m)
}

/// Subsequences run in the lifted semiring `S[𝕄]`: each element `n` is an
/// edge with weight `w(n)` and constraint value `v(n)`, folded left to right.
/// Returns the projection onto `accept`.
pub fn lifted_subsequences<S, W, V>(
    n: usize,
    s: &S,
    alg: &ConstraintAlgebra,
    accept: &Acceptance,
    w: W,
    v: V,
) -> Result<S::Value>
where
    S: Semiring,
    W: Fn(usize) -> S::Value,
    V: Fn(usize) -> i64,
{
    let lifted = Lifted::new(s, alg.clone())?;
    let mut edges = Vec::with_capacity(n);
    for k in 1..=n {
        edges.push(lift_edge(s, alg, &w(k), v(k))?);
    }
    let f = subsequences(n, &lifted, |k| edges[k - 1].clone());
    Ok(lifted.project(accept, &f))
}

/// Non-empty subsequences forming an `R`-chain (`R(u_i, u_j)` for every
/// consecutive pair):
/// `f_n = (1 ⊕ ⊕_{j<n, R(u_j,u_n)} f_j) ⊗ w(n)`, result `⊕_n f_n`.
///
/// This is the lifted recurrence over `{1..N}` with `v(n) = n`, where entry
/// `n` of the lifted vector holds the chains ending at `n`.
pub fn ordered_subsequences<T, R, S, W>(u: &[T], relation: R, s: &S, w: W) -> S::Value
where
    R: Fn(&T, &T) -> bool,
    S: Semiring,
    W: Fn(usize) -> S::Value,
{
    let mut f: Vec<S::Value> = Vec::with_capacity(u.len());
    for n in 1..=u.len() {
        let mut prefix = s.one();
        for j in 1..n {
            if relation(&u[j - 1], &u[n - 1]) {
                prefix = s.add(&prefix, &f[j - 1]);
            }
        }
        f.push(s.mul(&prefix, &w(n)));
    }
    s.sum(f.iter())
}

/// Longest strictly increasing subsequence: length and one witness of
/// 1-based positions.
pub fn lis(u: &[f64]) -> (usize, Vec<usize>) {
    let s = ViterbiSimple::<MaxPlus, usize>::new(MaxPlus);
    let best = ordered_subsequences(
        u,
        |a: &f64, b: &f64| a < b,
        &s,
        |n| Tupled::decision(1.0, n),
    );
    if best.score.is_finite() {
        (best.score as usize, best.witness)
    } else {
        (0, Vec::new())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{Count, Counting, MinPlus, Real};

    fn one(_: usize) -> Count {
        Count::ONE
    }

    #[test]
    fn subsequence_counts() {
        assert_eq!(subsequences(0, &Counting, one), Count::ONE);
        assert_eq!(subsequences(10, &Counting, one), Count::Finite(1024));
        let x = [-1.0, 2.0, -3.0, 4.0];
        assert_eq!(subsequences(4, &MaxPlus, |n| x[n - 1]), 6.0);
        assert_eq!(nonempty_subsequences(4, &Counting, one), Count::Finite(15));
        assert_eq!(nonempty_subsequences(0, &Counting, one), Count::ZERO);
    }

    #[test]
    fn combination_examples() {
        assert_eq!(combinations(4, 2, &Counting, one), Count::Finite(6));
        assert_eq!(combinations(4, 0, &Counting, one), Count::ONE);
        assert_eq!(combinations(3, 4, &Counting, one), Count::ZERO);
        let x = [3.0, 1.0, 4.0, 1.0];
        assert_eq!(combinations(4, 2, &MinPlus, |n| x[n - 1]), 2.0);
    }

    #[test]
    fn event_examples() {
        let p = [0.5, 0.5];
        let w = |e: EventOutcome| {
            if e.occurred {
                p[e.index - 1]
            } else {
                1.0 - p[e.index - 1]
            }
        };
        assert_eq!(events_m_of_n(2, 1, &Real, w), 0.5);
        let p = [0.2, 0.7, 0.4];
        let w = |e: EventOutcome| {
            if e.occurred {
                p[e.index - 1]
            } else {
                1.0 - p[e.index - 1]
            }
        };
        assert!((events_m_of_n(3, 0, &Real, w) - 0.8 * 0.3 * 0.6).abs() < 1e-15);
        assert!((event_sequences(3, &Real, w) - 1.0).abs() < 1e-15);
        assert_eq!(events_m_of_n(3, 4, &Real, w), 0.0);
    }

    #[test]
    fn ordered_examples() {
        let lt = |a: &f64, b: &f64| a < b;
        let le = |a: &f64, b: &f64| a <= b;
        assert_eq!(
            ordered_subsequences(&[1.0, 2.0, 3.0], lt, &Counting, one),
            Count::Finite(7)
        );
        assert_eq!(
            ordered_subsequences(&[3.0, 2.0, 1.0], lt, &Counting, one),
            Count::Finite(3)
        );
        assert_eq!(
            ordered_subsequences(&[1.0, 1.0], le, &Counting, one),
            Count::Finite(3)
        );
    }

    #[test]
    fn lis_examples() {
        assert_eq!(lis(&[3.0, 1.0, 2.0]).0, 2);
        assert_eq!(lis(&[]), (0, vec![]));
        let (len, wit) = lis(&[5.0, 1.0, 6.0, 2.0, 3.0, 9.0]);
        assert_eq!(len, 4);
        assert_eq!(wit.len(), 4);
    }

    #[test]
    fn lifted_subsequences_match_combinations() {
        let alg = ConstraintAlgebra::subset_size(6);
        for m in 0..=6 {
            let got = lifted_subsequences(6, &Counting, &alg, &Acceptance::Exactly(m), one, |_| 1)
                .unwrap();
            assert_eq!(got, combinations(6, m as usize, &Counting, one));
        }
    }
}
