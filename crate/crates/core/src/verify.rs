//! Differential checks of the recurrences against the path oracle.
//!
//! Each recurrence is wrapped in a small descriptor implementing
//! [`Recurrence`], so the same instance can be run directly in any semiring
//! or in the generator semiring. Constrained descriptors also implement
//! [`Constrained`], which rebuilds their solution set by filtering the
//! unconstrained enumeration.

use std::collections::hash_map::DefaultHasher;
use std::fmt::Debug;
use std::hash::{Hash, Hasher};

use crate::dp::{self, AlignStep, Dag, Edge, EventOutcome, Segment};
use crate::error::Result;
use crate::lifting::{Acceptance, ConstraintAlgebra, TRUE};
use crate::oracle::{filter_paths, hom_eval, Generator, PathSet, DEFAULT_LABEL_BUDGET};
use crate::semiring::Semiring;

/// A recurrence instance that can be evaluated in any semiring.
pub trait Recurrence {
    type Label: Ord + Clone + Debug + Hash;

    fn describe(&self) -> String;

    fn run<S: Semiring>(&self, s: &S, w: &dyn Fn(Self::Label) -> S::Value) -> S::Value;

    /// Every solution, by running in the generator semiring.
    fn enumerate(&self, budget: usize) -> Result<PathSet<Self::Label>> {
        self.run(&Generator::with_budget(budget), &|l| {
            Ok(PathSet::singleton(l))
        })
    }
}

/// A constrained recurrence whose solutions can also be obtained by
/// filtering an unconstrained enumeration.
pub trait Constrained: Recurrence {
    fn filtered(&self, budget: usize) -> Result<PathSet<Self::Label>>;
}

/// Direct value and oracle value for one semiring.
#[derive(Clone, Debug)]
pub struct Comparison<V> {
    pub direct: V,
    pub oracle: V,
    pub agree: bool,
}

/// Fusion: direct evaluation against `hom_eval` of the enumeration.
pub fn fusion<R, S>(r: &R, s: &S, w: &dyn Fn(&R::Label) -> S::Value) -> Result<Comparison<S::Value>>
where
    R: Recurrence,
    S: Semiring,
{
    let paths = r.enumerate(DEFAULT_LABEL_BUDGET)?;
    compare(r, s, w, &paths)
}

/// Constrained fusion: direct evaluation against `hom_eval` of the filtered
/// unconstrained enumeration.
pub fn constrained_fusion<R, S>(
    r: &R,
    s: &S,
    w: &dyn Fn(&R::Label) -> S::Value,
) -> Result<Comparison<S::Value>>
where
    R: Constrained,
    S: Semiring,
{
    let paths = r.filtered(DEFAULT_LABEL_BUDGET)?;
    compare(r, s, w, &paths)
}

fn compare<R, S>(
    r: &R,
    s: &S,
    w: &dyn Fn(&R::Label) -> S::Value,
    paths: &PathSet<R::Label>,
) -> Result<Comparison<S::Value>>
where
    R: Recurrence,
    S: Semiring,
{
    let direct = r.run(s, &|l| w(&l));
    let oracle = hom_eval(s, |l| Some(w(l)), paths)?;
    let agree = s.equiv(&direct, &oracle);
    Ok(Comparison {
        direct,
        oracle,
        agree,
    })
}

/// Comparisons made by a catalog sweep and the ones that failed.
#[derive(Clone, Debug, Default)]
pub struct Sweep {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Sweep {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: Sweep) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

/// Fusion in the counting, Boolean, min-plus, max-plus and probability
/// semirings, with weights drawn from `LabelWeights::new(seed)`.
pub fn fusion_over_catalog<R: Recurrence>(r: &R, seed: u64) -> Result<Sweep> {
    let paths = r.enumerate(DEFAULT_LABEL_BUDGET)?;
    catalog(r, seed, &paths)
}

/// Constrained fusion over the same semirings. Also checks that the
/// generator run of the constrained recurrence produces exactly the
/// filtered path set.
pub fn constrained_fusion_over_catalog<R: Constrained>(r: &R, seed: u64) -> Result<Sweep> {
    let filtered = r.filtered(DEFAULT_LABEL_BUDGET)?;
    let mut sweep = catalog(r, seed, &filtered)?;
    sweep.checked += 1;
    if r.enumerate(DEFAULT_LABEL_BUDGET)? != filtered {
        sweep.failures.push(format!(
            "{}: generated paths differ from filtered paths",
            r.describe()
        ));
    }
    Ok(sweep)
}

fn catalog<R: Recurrence>(r: &R, seed: u64, paths: &PathSet<R::Label>) -> Result<Sweep> {
    use crate::semiring::{Boolean, Count, Counting, MaxPlus, MinPlus, Real};
    let lw = LabelWeights::new(seed);
    let mut sweep = Sweep::default();
    let mut record = |name: &str, agree: bool, detail: String| {
        sweep.checked += 1;
        if !agree {
            sweep
                .failures
                .push(format!("{} in {name}: {detail}", r.describe()));
        }
    };
    let c = compare(
        r,
        &Counting,
        &|l| Count::Finite(1 + (lw.bits(l) % 3) as u128),
        paths,
    )?;
    record(
        "counting",
        c.agree,
        format!("{:?} vs {:?}", c.direct, c.oracle),
    );
    let c = compare(r, &Boolean, &|l| !lw.bits(l).is_multiple_of(4), paths)?;
    record(
        "boolean",
        c.agree,
        format!("{:?} vs {:?}", c.direct, c.oracle),
    );
    let c = compare(r, &MinPlus, &|l| lw.unit(l) * 10.0 - 5.0, paths)?;
    record(
        "min-plus",
        c.agree,
        format!("{:?} vs {:?}", c.direct, c.oracle),
    );
    let c = compare(r, &MaxPlus, &|l| lw.unit(l) * 10.0 - 5.0, paths)?;
    record(
        "max-plus",
        c.agree,
        format!("{:?} vs {:?}", c.direct, c.oracle),
    );
    let c = compare(r, &Real, &|l| lw.unit(l), paths)?;
    record(
        "probability",
        c.agree,
        format!("{:?} vs {:?}", c.direct, c.oracle),
    );
    Ok(sweep)
}

/// Deterministic pseudo-random weights keyed by label.
#[derive(Clone, Copy, Debug)]
pub struct LabelWeights {
    pub seed: u64,
}

impl LabelWeights {
    pub fn new(seed: u64) -> Self {
        LabelWeights { seed }
    }

    pub fn bits<L: Hash>(&self, label: &L) -> u64 {
        let mut h = DefaultHasher::new();
        self.seed.hash(&mut h);
        label.hash(&mut h);
        h.finish()
    }

    /// Uniform in `[0, 1)`.
    pub fn unit<L: Hash>(&self, label: &L) -> f64 {
        (self.bits(label) >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform integer in `lo..=hi`.
    pub fn int<L: Hash>(&self, label: &L, lo: i64, hi: i64) -> i64 {
        lo + (self.bits(label) % (hi - lo + 1) as u64) as i64
    }
}

pub struct DagPaths {
    pub dag: Dag,
}

impl Recurrence for DagPaths {
    type Label = Edge;
    fn describe(&self) -> String {
        format!("dag_bellman(N={})", self.dag.node_count())
    }
    fn run<S: Semiring>(&self, s: &S, w: &dyn Fn(Edge) -> S::Value) -> S::Value {
        dp::dag_bellman(&self.dag, s, w)
    }
}

pub struct Subsequences {
    pub n: usize,
}

impl Recurrence for Subsequences {
    type Label = usize;
    fn describe(&self) -> String {
        format!("subsequences(N={})", self.n)
    }
    fn run<S: Semiring>(&self, s: &S, w: &dyn Fn(usize) -> S::Value) -> S::Value {
        dp::subsequences(self.n, s, w)
    }
}

pub struct NonemptySubsequences {
    pub n: usize,
}

impl Recurrence for NonemptySubsequences {
    type Label = usize;
    fn describe(&self) -> String {
        format!("nonempty_subsequences(N={})", self.n)
    }
    fn run<S: Semiring>(&self, s: &S, w: &dyn Fn(usize) -> S::Value) -> S::Value {
        dp::nonempty_subsequences(self.n, s, w)
    }
}

impl Constrained for NonemptySubsequences {
    fn filtered(&self, budget: usize) -> Result<PathSet<usize>> {
        let all = Subsequences { n: self.n }.enumerate(budget)?;
        let exists = ConstraintAlgebra::existence();
        filter_paths(&exists, |_| Some(TRUE), &Acceptance::Exactly(TRUE), &all)
    }
}

pub struct Combinations {
    pub n: usize,
    pub m: usize,
}

impl Recurrence for Combinations {
    type Label = usize;
    fn describe(&self) -> String {
        format!("combinations(N={}, M={})", self.n, self.m)
    }
    fn run<S: Semiring>(&self, s: &S, w: &dyn Fn(usize) -> S::Value) -> S::Value {
        dp::combinations(self.n, self.m, s, w)
    }
}

impl Constrained for Combinations {
    fn filtered(&self, budget: usize) -> Result<PathSet<usize>> {
        let all = Subsequences { n: self.n }.enumerate(budget)?;
        let size = ConstraintAlgebra::subset_size(self.m);
        filter_paths(
            &size,
            |_| Some(1),
            &Acceptance::Exactly(self.m as i64),
            &all,
        )
    }
}

/// Subsequences lifted over an arbitrary algebra with per-element
/// constraint values.
pub struct LiftedSubsequences {
    pub algebra: ConstraintAlgebra,
    pub values: Vec<i64>,
    pub accept: Acceptance,
}

impl Recurrence for LiftedSubsequences {
    type Label = usize;
    fn describe(&self) -> String {
        format!(
            "lifted_subsequences(N={}, {}, {:?})",
            self.values.len(),
            self.algebra.name(),
            self.accept
        )
    }
    fn run<S: Semiring>(&self, s: &S, w: &dyn Fn(usize) -> S::Value) -> S::Value {
        dp::lifted_subsequences(self.values.len(), s, &self.algebra, &self.accept, w, |k| {
            self.values[k - 1]
        })
        .expect("constraint values lie in the carrier")
    }
}

impl Constrained for LiftedSubsequences {
    fn filtered(&self, budget: usize) -> Result<PathSet<usize>> {
        let all = Subsequences {
            n: self.values.len(),
        }
        .enumerate(budget)?;
        filter_paths(
            &self.algebra,
            |&k| self.values.get(k - 1).copied(),
            &self.accept,
            &all,
        )
    }
}

pub struct EventSequences {
    pub n: usize,
}

impl Recurrence for EventSequences {
    type Label = EventOutcome;
    fn describe(&self) -> String {
        format!("event_sequences(N={})", self.n)
    }
    fn run<S: Semiring>(&self, s: &S, w: &dyn Fn(EventOutcome) -> S::Value) -> S::Value {
        dp::event_sequences(self.n, s, w)
    }
}

pub struct EventsMofN {
    pub n: usize,
    pub m: usize,
}

impl Recurrence for EventsMofN {
    type Label = EventOutcome;
    fn describe(&self) -> String {
        format!("events_m_of_n(N={}, M={})", self.n, self.m)
    }
    fn run<S: Semiring>(&self, s: &S, w: &dyn Fn(EventOutcome) -> S::Value) -> S::Value {
        dp::events_m_of_n(self.n, self.m, s, w)
    }
}

impl Constrained for EventsMofN {
    fn filtered(&self, budget: usize) -> Result<PathSet<EventOutcome>> {
        let all = EventSequences { n: self.n }.enumerate(budget)?;
        let size = ConstraintAlgebra::subset_size(self.m);
        let v = |e: &EventOutcome| Some(e.occurred as i64);
        filter_paths(&size, v, &Acceptance::Exactly(self.m as i64), &all)
    }
}

/// Chain relation for ordered subsequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Less,
    LessEqual,
    /// Values are bit masks; `a R b` when `a ⊆ b`.
    Subset,
}

impl Relation {
    pub fn holds(&self, a: &f64, b: &f64) -> bool {
        match self {
            Relation::Less => a < b,
            Relation::LessEqual => a <= b,
            Relation::Subset => {
                let (a, b) = (*a as u64, *b as u64);
                a & !b == 0
            }
        }
    }
}

pub struct OrderedChains {
    pub values: Vec<f64>,
    pub relation: Relation,
}

impl Recurrence for OrderedChains {
    type Label = usize;
    fn describe(&self) -> String {
        format!(
            "ordered_subsequences(N={}, {:?})",
            self.values.len(),
            self.relation
        )
    }
    fn run<S: Semiring>(&self, s: &S, w: &dyn Fn(usize) -> S::Value) -> S::Value {
        dp::ordered_subsequences(&self.values, |a, b| self.relation.holds(a, b), s, w)
    }
}

impl Constrained for OrderedChains {
    fn filtered(&self, budget: usize) -> Result<PathSet<usize>> {
        let all = NonemptySubsequences {
            n: self.values.len(),
        }
        .enumerate(budget)?;
        let order = crate::lifting::SequentialOrder::new(&self.values, |a: &f64, b: &f64| {
            self.relation.holds(a, b)
        });
        all.retain(|p| Ok(order.fold(p).is_some()))
    }
}

pub struct Segmentations {
    pub n: usize,
}

impl Recurrence for Segmentations {
    type Label = Segment;
    fn describe(&self) -> String {
        format!("segment_opt(N={})", self.n)
    }
    fn run<S: Semiring>(&self, s: &S, w: &dyn Fn(Segment) -> S::Value) -> S::Value {
        dp::segment_opt(self.n, s, w)
    }
}

pub struct SegmentCount {
    pub n: usize,
    pub lo: usize,
    pub hi: usize,
}

impl Recurrence for SegmentCount {
    type Label = Segment;
    fn describe(&self) -> String {
        format!(
            "segment_fixed_count(N={}, {}..={})",
            self.n, self.lo, self.hi
        )
    }
    fn run<S: Semiring>(&self, s: &S, w: &dyn Fn(Segment) -> S::Value) -> S::Value {
        dp::segment_fixed_count(self.n, self.lo, self.hi, s, w).expect("valid count range")
    }
}

impl Constrained for SegmentCount {
    fn filtered(&self, budget: usize) -> Result<PathSet<Segment>> {
        let all = Segmentations { n: self.n }.enumerate(budget)?;
        let size = ConstraintAlgebra::subset_size(self.hi);
        let accept = Acceptance::Between(self.lo as i64, self.hi as i64);
        filter_paths(&size, |_| Some(1), &accept, &all)
    }
}

pub struct SegmentMinLength {
    pub n: usize,
    pub accept: Acceptance,
}

impl Recurrence for SegmentMinLength {
    type Label = Segment;
    fn describe(&self) -> String {
        format!("segment_min_length(N={}, {:?})", self.n, self.accept)
    }
    fn run<S: Semiring>(&self, s: &S, w: &dyn Fn(Segment) -> S::Value) -> S::Value {
        dp::segment_min_length(self.n, &self.accept, s, w).expect("N >= 1")
    }
}

impl Constrained for SegmentMinLength {
    fn filtered(&self, budget: usize) -> Result<PathSet<Segment>> {
        let all = Segmentations { n: self.n }.enumerate(budget)?;
        let min = ConstraintAlgebra::min_count(self.n)?;
        filter_paths(&min, |g: &Segment| Some(g.len() as i64), &self.accept, &all)
    }
}

pub struct Alignments {
    pub rows: usize,
    pub cols: usize,
}

impl Recurrence for Alignments {
    type Label = AlignStep;
    fn describe(&self) -> String {
        format!("nw_align({}x{})", self.rows, self.cols)
    }
    fn run<S: Semiring>(&self, s: &S, w: &dyn Fn(AlignStep) -> S::Value) -> S::Value {
        dp::nw_align(self.rows, self.cols, s, w)
    }
}

pub struct AlignSumConstrained {
    pub rows: usize,
    pub cols: usize,
    pub l_max: usize,
    pub accept: Option<Acceptance>,
}

impl AlignSumConstrained {
    fn acceptance(&self) -> Acceptance {
        self.accept
            .clone()
            .unwrap_or(Acceptance::AtMost(self.l_max as i64))
    }
}

impl Recurrence for AlignSumConstrained {
    type Label = AlignStep;
    fn describe(&self) -> String {
        format!(
            "nw_align_sum_constrained({}x{}, L={}, {:?})",
            self.rows,
            self.cols,
            self.l_max,
            self.acceptance()
        )
    }
    fn run<S: Semiring>(&self, s: &S, w: &dyn Fn(AlignStep) -> S::Value) -> S::Value {
        dp::nw_align_sum_constrained(self.rows, self.cols, self.l_max, self.accept.as_ref(), s, w)
    }
}

impl Constrained for AlignSumConstrained {
    fn filtered(&self, budget: usize) -> Result<PathSet<AlignStep>> {
        let all = Alignments {
            rows: self.rows,
            cols: self.cols,
        }
        .enumerate(budget)?;
        let size = ConstraintAlgebra::subset_size(self.l_max);
        let v = |st: &AlignStep| Some(st.misalignment() as i64);
        filter_paths(&size, v, &self.acceptance(), &all)
    }
}

pub struct AlignMaxConstrained {
    pub rows: usize,
    pub cols: usize,
    pub l_max: usize,
    pub accept: Option<Acceptance>,
}

impl AlignMaxConstrained {
    fn acceptance(&self) -> Acceptance {
        self.accept
            .clone()
            .unwrap_or(Acceptance::AtMost(self.l_max as i64))
    }
}

impl Recurrence for AlignMaxConstrained {
    type Label = AlignStep;
    fn describe(&self) -> String {
        format!(
            "nw_align_max_constrained({}x{}, L={}, {:?})",
            self.rows,
            self.cols,
            self.l_max,
            self.acceptance()
        )
    }
    fn run<S: Semiring>(&self, s: &S, w: &dyn Fn(AlignStep) -> S::Value) -> S::Value {
        dp::nw_align_max_constrained(self.rows, self.cols, self.l_max, self.accept.as_ref(), s, w)
    }
}

impl Constrained for AlignMaxConstrained {
    fn filtered(&self, budget: usize) -> Result<PathSet<AlignStep>> {
        let all = Alignments {
            rows: self.rows,
            cols: self.cols,
        }
        .enumerate(budget)?;
        let max = ConstraintAlgebra::max_count(self.rows.max(self.cols));
        let v = |st: &AlignStep| Some(st.misalignment() as i64);
        filter_paths(&max, v, &self.acceptance(), &all)
    }
}

/// Random DAG on `n` nodes: node `v` keeps each earlier node as a parent
/// with probability one half, and always keeps at least one.
pub fn random_dag(n: usize, seed: u64) -> Dag {
    let lw = LabelWeights::new(seed);
    let mut parents = vec![Vec::new(); n.max(1)];
    for v in 2..=n {
        let mut ps: Vec<usize> = (1..v)
            .filter(|&p| lw.bits(&(v, p)).is_multiple_of(2))
            .collect();
        if ps.is_empty() {
            ps.push(1 + (lw.bits(&v) % (v as u64 - 1)) as usize);
        }
        parents[v - 1] = ps;
    }
    Dag::new(parents).expect("parents precede children")
}

fn small_values(n: usize, seed: u64, lo: i64, hi: i64) -> Vec<i64> {
    let lw = LabelWeights::new(seed);
    (1..=n).map(|k| lw.int(&k, lo, hi)).collect()
}

/// Fusion for every recurrence at `N ≤ 8` (alignment `N, M ≤ 5`).
pub fn fusion_suite(seed: u64) -> Result<Sweep> {
    let mut sweep = Sweep::default();
    for n in 1..=8 {
        for t in 0..3 {
            let dag = random_dag(n, seed ^ (t * 1000 + n as u64));
            sweep.merge(fusion_over_catalog(&DagPaths { dag }, seed)?);
        }
    }
    for n in 0..=8 {
        sweep.merge(fusion_over_catalog(&Subsequences { n }, seed)?);
        sweep.merge(fusion_over_catalog(&NonemptySubsequences { n }, seed)?);
        sweep.merge(fusion_over_catalog(&EventSequences { n }, seed)?);
        for m in 0..=n + 1 {
            sweep.merge(fusion_over_catalog(&Combinations { n, m }, seed)?);
            sweep.merge(fusion_over_catalog(&EventsMofN { n, m }, seed)?);
        }
        for relation in [Relation::Less, Relation::LessEqual, Relation::Subset] {
            let hi = if relation == Relation::Subset { 15 } else { 4 };
            let values = small_values(n, seed + n as u64, 0, hi);
            let values = values.into_iter().map(|v| v as f64).collect();
            sweep.merge(fusion_over_catalog(
                &OrderedChains { values, relation },
                seed,
            )?);
        }
    }
    for n in 1..=8 {
        sweep.merge(fusion_over_catalog(&Segmentations { n }, seed)?);
        for lo in 1..=n.min(4) {
            for hi in lo..=n.min(4) {
                sweep.merge(fusion_over_catalog(&SegmentCount { n, lo, hi }, seed)?);
            }
        }
        for l in 1..=n {
            let accept = Acceptance::Exactly(l as i64);
            sweep.merge(fusion_over_catalog(&SegmentMinLength { n, accept }, seed)?);
        }
    }
    for rows in 0..=5 {
        for cols in 0..=5 {
            sweep.merge(fusion_over_catalog(&Alignments { rows, cols }, seed)?);
            for l_max in [0, 1, 3] {
                let sum = AlignSumConstrained {
                    rows,
                    cols,
                    l_max,
                    accept: None,
                };
                sweep.merge(fusion_over_catalog(&sum, seed)?);
                let max = AlignMaxConstrained {
                    rows,
                    cols,
                    l_max,
                    accept: None,
                };
                sweep.merge(fusion_over_catalog(&max, seed)?);
            }
        }
    }
    Ok(sweep)
}

/// Constrained fusion for every catalog algebra paired with the
/// recurrences that consume it, plus the sequential ordering.
pub fn constrained_fusion_suite(seed: u64) -> Result<Sweep> {
    let mut sweep = Sweep::default();
    // subset size
    for n in 0..=8 {
        for m in 0..=n {
            sweep.merge(constrained_fusion_over_catalog(
                &Combinations { n, m },
                seed,
            )?);
            sweep.merge(constrained_fusion_over_catalog(&EventsMofN { n, m }, seed)?);
        }
    }
    for n in 1..=8 {
        for lo in 1..=n.min(4) {
            for hi in lo..=n.min(4) {
                sweep.merge(constrained_fusion_over_catalog(
                    &SegmentCount { n, lo, hi },
                    seed,
                )?);
            }
        }
    }
    for rows in 0..=5 {
        for cols in 0..=5 {
            for l_max in [0, 1, 2, 4, 8] {
                let sum = AlignSumConstrained {
                    rows,
                    cols,
                    l_max,
                    accept: None,
                };
                sweep.merge(constrained_fusion_over_catalog(&sum, seed)?);
            }
            let exact = AlignSumConstrained {
                rows,
                cols,
                l_max: 6,
                accept: Some(Acceptance::Exactly(2)),
            };
            sweep.merge(constrained_fusion_over_catalog(&exact, seed)?);
            // maximum count
            for l_max in 0..=rows.max(cols) {
                let max = AlignMaxConstrained {
                    rows,
                    cols,
                    l_max,
                    accept: None,
                };
                sweep.merge(constrained_fusion_over_catalog(&max, seed)?);
            }
            let band = AlignMaxConstrained {
                rows,
                cols,
                l_max: 0,
                accept: Some(Acceptance::Between(1, 2)),
            };
            sweep.merge(constrained_fusion_over_catalog(&band, seed)?);
        }
    }
    // minimum count
    for n in 1..=8 {
        for l in 1..=n {
            for accept in [Acceptance::Exactly(l as i64), Acceptance::AtLeast(l as i64)] {
                sweep.merge(constrained_fusion_over_catalog(
                    &SegmentMinLength { n, accept },
                    seed,
                )?);
            }
        }
    }
    // existence
    for n in 0..=8 {
        sweep.merge(constrained_fusion_over_catalog(
            &NonemptySubsequences { n },
            seed,
        )?);
    }
    // every algebra lifted directly over subsequences
    let cap = 4;
    for (k, algebra) in crate::lifting::algebra_catalog(cap)?
        .into_iter()
        .enumerate()
    {
        let (lo, hi) = algebra.bounds();
        for n in 0..=8 {
            let values = small_values(n, seed + (k * 100 + n) as u64, lo, hi);
            for m in algebra.elements() {
                let lifted = LiftedSubsequences {
                    algebra: algebra.clone(),
                    values: values.clone(),
                    accept: Acceptance::Exactly(m),
                };
                sweep.merge(constrained_fusion_over_catalog(&lifted, seed)?);
            }
        }
    }
    // sequential ordering
    for n in 0..=8 {
        for relation in [Relation::Less, Relation::LessEqual, Relation::Subset] {
            let hi = if relation == Relation::Subset { 15 } else { 4 };
            let values = small_values(n, seed + n as u64, 0, hi);
            let values = values.into_iter().map(|v| v as f64).collect();
            sweep.merge(constrained_fusion_over_catalog(
                &OrderedChains { values, relation },
                seed,
            )?);
        }
    }
    Ok(sweep)
}
