//! Tupled selection semirings that carry the optimal solution alongside the
//! optimal score, so that no backtracking pass is needed.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt::Debug;
use std::marker::PhantomData;

use super::{Selective, Semiring};

/// Score paired with the set of all optimal decision sequences.
#[derive(Clone, Debug, PartialEq)]
pub struct TupledSet<V, L: Ord> {
    pub score: V,
    pub witnesses: BTreeSet<Vec<L>>,
}

/// Score paired with a single optimal decision sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct Tupled<V, L> {
    pub score: V,
    pub witness: Vec<L>,
}

impl<V, L> Tupled<V, L> {
    /// A single decision `label` with weight `score`.
    pub fn decision(score: V, label: L) -> Self {
        Tupled {
            score,
            witness: vec![label],
        }
    }
}

impl<V, L: Ord> TupledSet<V, L> {
    pub fn decision(score: V, label: L) -> Self {
        TupledSet {
            score,
            witnesses: BTreeSet::from([vec![label]]),
        }
    }
}

/// Ambiguous Viterbi semiring over a selective base: `add` keeps the
/// preferred operand and merges witness sets when the scores tie; `mul`
/// multiplies scores in the base and cross-joins the witness sets.
///
/// Identities are `(0_base, ∅)` and `(1_base, {[]})`.
#[derive(Clone, Debug, Default)]
pub struct Viterbi<S, L> {
    pub base: S,
    _label: PhantomData<fn() -> L>,
}

impl<S, L> Viterbi<S, L> {
    pub fn new(base: S) -> Self {
        Viterbi {
            base,
            _label: PhantomData,
        }
    }
}

impl<S, L> Semiring for Viterbi<S, L>
where
    S: Selective,
    L: Ord + Clone + Debug,
{
    type Value = TupledSet<S::Value, L>;

    fn zero(&self) -> Self::Value {
        TupledSet {
            score: self.base.zero(),
            witnesses: BTreeSet::new(),
        }
    }

    fn one(&self) -> Self::Value {
        TupledSet {
            score: self.base.one(),
            witnesses: BTreeSet::from([Vec::new()]),
        }
    }

    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        match self.base.prefer(&a.score, &b.score) {
            Ordering::Greater => a.clone(),
            Ordering::Less => b.clone(),
            Ordering::Equal => TupledSet {
                score: a.score.clone(),
                witnesses: a.witnesses.union(&b.witnesses).cloned().collect(),
            },
        }
    }

    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        let mut witnesses = BTreeSet::new();
        for x in &a.witnesses {
            for y in &b.witnesses {
                let mut joined = Vec::with_capacity(x.len() + y.len());
                joined.extend_from_slice(x);
                joined.extend_from_slice(y);
                witnesses.insert(joined);
            }
        }
        TupledSet {
            score: self.base.mul(&a.score, &b.score),
            witnesses,
        }
    }

    fn equiv(&self, a: &Self::Value, b: &Self::Value) -> bool {
        if !self.base.equiv(&a.score, &b.score) {
            return false;
        }
        let zero = self.base.zero();
        self.base.equiv(&a.score, &zero) || a.witnesses == b.witnesses
    }
}

impl<S, L> Selective for Viterbi<S, L>
where
    S: Selective,
    L: Ord + Clone + Debug,
{
    fn prefer(&self, a: &Self::Value, b: &Self::Value) -> Ordering {
        self.base.prefer(&a.score, &b.score)
    }
}

/// Unambiguous Viterbi semiring: `add` keeps the left operand unless the
/// right one is strictly preferred; `mul` concatenates the witnesses.
///
/// Strictly a semiring only up to ties between distinct witnesses, which
/// is the intended use with real-valued weights.
#[derive(Clone, Debug, Default)]
pub struct ViterbiSimple<S, L> {
    pub base: S,
    _label: PhantomData<fn() -> L>,
}

impl<S, L> ViterbiSimple<S, L> {
    pub fn new(base: S) -> Self {
        ViterbiSimple {
            base,
            _label: PhantomData,
        }
    }
}

impl<S, L> ViterbiSimple<S, L>
where
    S: Selective,
    L: Clone + Debug,
{
    /// Re-evaluate a witness under the base semiring: ⊗-fold of the mapped
    /// labels. Matches the reported score for any value built by this
    /// semiring from singleton decisions.
    pub fn evaluate_witness<F>(&self, witness: &[L], weight: F) -> S::Value
    where
        F: Fn(&L) -> S::Value,
    {
        witness
            .iter()
            .fold(self.base.one(), |acc, l| self.base.mul(&acc, &weight(l)))
    }
}

impl<S, L> Semiring for ViterbiSimple<S, L>
where
    S: Selective,
    L: Clone + Debug + PartialEq,
{
    type Value = Tupled<S::Value, L>;

    fn zero(&self) -> Self::Value {
        Tupled {
            score: self.base.zero(),
            witness: Vec::new(),
        }
    }

    fn one(&self) -> Self::Value {
        Tupled {
            score: self.base.one(),
            witness: Vec::new(),
        }
    }

    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        if self.base.prefer(&a.score, &b.score) == Ordering::Less {
            b.clone()
        } else {
            a.clone()
        }
    }

    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        let mut witness = Vec::with_capacity(a.witness.len() + b.witness.len());
        witness.extend_from_slice(&a.witness);
        witness.extend_from_slice(&b.witness);
        Tupled {
            score: self.base.mul(&a.score, &b.score),
            witness,
        }
    }

    fn equiv(&self, a: &Self::Value, b: &Self::Value) -> bool {
        if !self.base.equiv(&a.score, &b.score) {
            return false;
        }
        let zero = self.base.zero();
        self.base.equiv(&a.score, &zero) || a.witness == b.witness
    }
}

impl<S, L> Selective for ViterbiSimple<S, L>
where
    S: Selective,
    L: Clone + Debug + PartialEq,
{
    fn prefer(&self, a: &Self::Value, b: &Self::Value) -> Ordering {
        self.base.prefer(&a.score, &b.score)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::MaxPlus;

    fn set(score: f64, paths: &[&[char]]) -> TupledSet<f64, char> {
        TupledSet {
            score,
            witnesses: paths.iter().map(|p| p.to_vec()).collect(),
        }
    }

    #[test]
    fn ambiguous_add_picks_winner_or_merges() {
        let s = Viterbi::<_, char>::new(MaxPlus);
        assert_eq!(
            s.add(&set(3.0, &[&['a']]), &set(5.0, &[&['b']])),
            set(5.0, &[&['b']])
        );
        assert_eq!(
            s.add(&set(4.0, &[&['a']]), &set(4.0, &[&['b']])),
            set(4.0, &[&['a'], &['b']])
        );
    }

    #[test]
    fn ambiguous_mul_adds_and_cross_joins() {
        let s = Viterbi::<_, char>::new(MaxPlus);
        assert_eq!(
            s.mul(&set(2.0, &[&['a']]), &set(3.0, &[&['b']])),
            set(5.0, &[&['a', 'b']])
        );
        let x = set(1.5, &[&['a'], &['c']]);
        assert_eq!(s.mul(&s.one(), &x), x);
        assert_eq!(s.mul(&s.zero(), &x), s.zero());
    }

    #[test]
    fn simple_add_keeps_left_on_ties() {
        let s = ViterbiSimple::<_, char>::new(MaxPlus);
        let a = Tupled::decision(4.0, 'a');
        let b = Tupled::decision(4.0, 'b');
        assert_eq!(s.add(&a, &b), a);
        assert_eq!(s.add(&b, &a), b);
        let x = Tupled::decision(7.0, 'x');
        assert_eq!(s.mul(&s.one(), &x), x);
    }

    #[test]
    fn simple_fold_over_decisions() {
        let s = ViterbiSimple::<_, &str>::new(MaxPlus);
        let ds = [
            Tupled::decision(1.0, "d1"),
            Tupled::decision(2.0, "d2"),
            Tupled::decision(3.0, "d3"),
        ];
        let folded = s.product(&ds);
        assert_eq!(folded.score, 6.0);
        assert_eq!(folded.witness, vec!["d1", "d2", "d3"]);
        let w = |l: &&str| match *l {
            "d1" => 1.0,
            "d2" => 2.0,
            _ => 3.0,
        };
        assert_eq!(s.evaluate_witness(&folded.witness, w), 6.0);
    }
}
