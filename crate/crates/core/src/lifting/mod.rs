//! Constraint lifting: the semiring `S[𝕄]` of constraint-indexed vectors.
//!
//! A lifted value holds one base-semiring value per element of the
//! constraint carrier. `⊕` is elementwise and `⊗` is the convolution
//! `(x ⊗ y)_m = ⊕_{m′ ⊙ m″ = m} x_{m′} ⊗ y_{m″}`. Running any polymorphic
//! recurrence in `S[𝕄]` with edges lifted by [`lift_edge`] and then
//! applying [`project`] evaluates only the solutions whose constraint value
//! is accepted.
//!
//! The general product costs `O(|𝕄|²)` base operations. Products against a
//! single lifted edge drop to `O(|𝕄|)` ([`mul_by_lifted_edge_general`]),
//! and to `O(1)` per entry for group-like algebras
//! ([`mul_by_lifted_edge_group`]). [`closed_form`] has the per-algebra
//! simplified products.

mod algebra;
pub mod closed_form;

pub use algebra::{
    algebra_catalog, Acceptance, Combine, ConstraintAlgebra, SequentialOrder, FALSE, TRUE,
};

use crate::error::{DpError, Result};
use crate::semiring::Semiring;

/// Dense vector of base values indexed by carrier position.
#[derive(Clone, Debug, PartialEq)]
pub struct LiftedVector<V> {
    entries: Vec<V>,
}

impl<V: Clone> LiftedVector<V> {
    pub fn new(entries: Vec<V>) -> Self {
        LiftedVector { entries }
    }

    pub fn filled(len: usize, value: V) -> Self {
        LiftedVector {
            entries: vec![value; len],
        }
    }

    pub fn entries(&self) -> &[V] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<V> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: usize) -> &V {
        &self.entries[index]
    }

    /// Entry at carrier element `m`.
    pub fn at(&self, alg: &ConstraintAlgebra, m: i64) -> Option<&V> {
        alg.index_of(m).map(|i| &self.entries[i])
    }
}

/// The lifted semiring `S[𝕄]`.
#[derive(Clone, Debug)]
pub struct Lifted<S> {
    base: S,
    algebra: ConstraintAlgebra,
    unit: usize,
}

impl<S: Semiring> Lifted<S> {
    /// Fails when the algebra has no identity (the lifted `one` needs it).
    pub fn new(base: S, algebra: ConstraintAlgebra) -> Result<Self> {
        let id = algebra
            .identity()
            .ok_or_else(|| DpError::MissingIdentity(algebra.name().to_string()))?;
        let unit = algebra.index_of(id).expect("identity lies in carrier");
        Ok(Lifted {
            base,
            algebra,
            unit,
        })
    }

    pub fn base(&self) -> &S {
        &self.base
    }

    pub fn algebra(&self) -> &ConstraintAlgebra {
        &self.algebra
    }

    pub fn lift_edge(&self, w: &S::Value, v: i64) -> Result<LiftedVector<S::Value>> {
        lift_edge(&self.base, &self.algebra, w, v)
    }

    pub fn project(&self, accept: &Acceptance, x: &LiftedVector<S::Value>) -> S::Value {
        project(&self.base, &self.algebra, accept, x)
    }
}

impl<S: Semiring> Semiring for Lifted<S> {
    type Value = LiftedVector<S::Value>;

    fn zero(&self) -> Self::Value {
        LiftedVector::filled(self.algebra.len(), self.base.zero())
    }

    fn one(&self) -> Self::Value {
        let mut v = self.zero();
        v.entries[self.unit] = self.base.one();
        v
    }

    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        LiftedVector::new(
            a.entries
                .iter()
                .zip(&b.entries)
                .map(|(x, y)| self.base.add(x, y))
                .collect(),
        )
    }

    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        mul_general(&self.base, &self.algebra, a, b)
    }

    fn equiv(&self, a: &Self::Value, b: &Self::Value) -> bool {
        a.len() == b.len()
            && a.entries
                .iter()
                .zip(&b.entries)
                .all(|(x, y)| self.base.equiv(x, y))
    }
}

/// Construct `S[𝕄]`; see [`Lifted::new`].
pub fn lifted_semiring<S: Semiring>(base: S, alg: &ConstraintAlgebra) -> Result<Lifted<S>> {
    Lifted::new(base, alg.clone())
}

fn check_member(alg: &ConstraintAlgebra, v: i64) -> Result<usize> {
    alg.index_of(v).ok_or_else(|| DpError::OutOfCarrier {
        algebra: alg.name().to_string(),
        value: v,
    })
}

/// The general double-sum product, `|𝕄|²` base multiplications at most.
pub fn mul_general<S: Semiring>(
    base: &S,
    alg: &ConstraintAlgebra,
    x: &LiftedVector<S::Value>,
    y: &LiftedVector<S::Value>,
) -> LiftedVector<S::Value> {
    let n = alg.len();
    let mut z = vec![base.zero(); n];
    for i in 0..n {
        for j in 0..n {
            if let Some(k) = alg.combine_index(i, j) {
                z[k] = base.add(&z[k], &base.mul(&x.entries[i], &y.entries[j]));
            }
        }
    }
    LiftedVector::new(z)
}

/// Lifted edge value: `w` at position `v`, base zero elsewhere.
pub fn lift_edge<S: Semiring>(
    base: &S,
    alg: &ConstraintAlgebra,
    w: &S::Value,
    v: i64,
) -> Result<LiftedVector<S::Value>> {
    let at = check_member(alg, v)?;
    let mut out = vec![base.zero(); alg.len()];
    out[at] = w.clone();
    Ok(LiftedVector::new(out))
}

/// `⊕` over the entries whose carrier element is accepted; base zero when
/// nothing is accepted.
pub fn project<S: Semiring>(
    base: &S,
    alg: &ConstraintAlgebra,
    accept: &Acceptance,
    x: &LiftedVector<S::Value>,
) -> S::Value {
    alg.elements()
        .zip(&x.entries)
        .filter(|(m, _)| accept.accepts(*m))
        .fold(base.zero(), |acc, (_, v)| base.add(&acc, v))
}

/// `c ⊗ w_𝕄(e)` by scattering: for each `m`, add `c_m ⊗ w` into position
/// `m ⊙ v`. At most `|𝕄|` base multiplications.
pub fn mul_by_lifted_edge_general<S: Semiring>(
    base: &S,
    alg: &ConstraintAlgebra,
    c: &LiftedVector<S::Value>,
    w: &S::Value,
    v: i64,
) -> Result<LiftedVector<S::Value>> {
    check_member(alg, v)?;
    let mut z = vec![base.zero(); alg.len()];
    for (i, m) in alg.elements().enumerate() {
        if let Some(t) = alg.combine(m, v) {
            let t = alg.index_of(t).expect("combine stays in carrier");
            z[t] = base.add(&z[t], &base.mul(&c.entries[i], w));
        }
    }
    Ok(LiftedVector::new(z))
}

/// Group product `(x ⊗ y)_m = ⊕_{m′} x_{m′} ⊗ y_{(m′)⁻¹ ⊙ m}`, with
/// out-of-carrier indices contributing zero.
pub fn mul_group<S: Semiring>(
    base: &S,
    alg: &ConstraintAlgebra,
    x: &LiftedVector<S::Value>,
    y: &LiftedVector<S::Value>,
) -> Result<LiftedVector<S::Value>> {
    if !alg.is_group_like() {
        return Err(DpError::NotGroupLike(alg.name().to_string()));
    }
    let z = alg
        .elements()
        .map(|m| {
            alg.elements()
                .enumerate()
                .fold(base.zero(), |acc, (i, m1)| match alg.divide(m, m1) {
                    Some(m2) => {
                        let j = alg.index_of(m2).expect("divide stays in carrier");
                        base.add(&acc, &base.mul(&x.entries[i], &y.entries[j]))
                    }
                    None => acc,
                })
        })
        .collect();
    Ok(LiftedVector::new(z))
}

/// Group edge product: entry `m` is `c_{m ⊙ v⁻¹} ⊗ w`, or zero when
/// `m ⊙ v⁻¹` leaves the carrier.
pub fn mul_by_lifted_edge_group<S: Semiring>(
    base: &S,
    alg: &ConstraintAlgebra,
    c: &LiftedVector<S::Value>,
    w: &S::Value,
    v: i64,
) -> Result<LiftedVector<S::Value>> {
    if !alg.is_group_like() {
        return Err(DpError::NotGroupLike(alg.name().to_string()));
    }
    check_member(alg, v)?;
    let z = alg
        .elements()
        .map(|m| match alg.divide(m, v) {
            Some(src) => base.mul(c.at(alg, src).expect("in carrier"), w),
            None => base.zero(),
        })
        .collect();
    Ok(LiftedVector::new(z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{Count, Counting, Instrumented, MaxPlus};

    fn counts(xs: &[u128]) -> LiftedVector<Count> {
        LiftedVector::new(xs.iter().map(|&x| Count::Finite(x)).collect())
    }

    #[test]
    fn truncated_subset_product() {
        let alg = ConstraintAlgebra::subset_size(1);
        let s = Lifted::new(Counting, alg).unwrap();
        assert_eq!(s.mul(&counts(&[1, 1]), &counts(&[1, 1])), counts(&[1, 2]));
    }

    #[test]
    fn identities_and_annihilation() {
        let alg = ConstraintAlgebra::subset_size(3);
        let s = Lifted::new(Counting, alg).unwrap();
        let x = counts(&[4, 0, 7, 2]);
        assert_eq!(s.mul(&s.one(), &x), x);
        assert_eq!(s.mul(&x, &s.one()), x);
        assert_eq!(s.mul(&s.zero(), &x), s.zero());
        assert_eq!(s.one(), counts(&[1, 0, 0, 0]));
    }

    #[test]
    fn existence_one_is_unit_at_false() {
        let s = Lifted::new(Counting, ConstraintAlgebra::existence()).unwrap();
        assert_eq!(s.one(), counts(&[1, 0]));
    }

    #[test]
    fn missing_identity_is_rejected() {
        let alg = ConstraintAlgebra::new("no-id", 0, 3, Combine::Max, None).unwrap();
        assert!(matches!(
            Lifted::new(Counting, alg),
            Err(DpError::MissingIdentity(_))
        ));
    }

    #[test]
    fn lift_edge_and_projection() {
        let alg = ConstraintAlgebra::subset_size(3);
        let e = lift_edge(&Counting, &alg, &Count::Finite(5), 2).unwrap();
        assert_eq!(e, counts(&[0, 0, 5, 0]));
        assert!(lift_edge(&Counting, &alg, &Count::ONE, 4).is_err());

        let x = counts(&[1, 2, 3, 4]);
        assert_eq!(
            project(&Counting, &alg, &Acceptance::Exactly(3), &x),
            Count::Finite(4)
        );
        assert_eq!(
            project(&Counting, &alg, &Acceptance::Between(1, 2), &x),
            Count::Finite(5)
        );
        assert_eq!(
            project(&Counting, &alg, &Acceptance::custom(|_| false), &x),
            Count::ZERO
        );
    }

    #[test]
    fn shift_and_scale_on_subset_size() {
        let alg = ConstraintAlgebra::subset_size(3);
        let c = LiftedVector::new(vec![1.5, 2.5, f64::NEG_INFINITY, f64::NEG_INFINITY]);
        let expect = LiftedVector::new(vec![
            f64::NEG_INFINITY,
            1.5 + 4.0,
            2.5 + 4.0,
            f64::NEG_INFINITY,
        ]);
        let general = mul_by_lifted_edge_general(&MaxPlus, &alg, &c, &4.0, 1).unwrap();
        let group = mul_by_lifted_edge_group(&MaxPlus, &alg, &c, &4.0, 1).unwrap();
        assert_eq!(general, expect);
        assert_eq!(group, expect);
        // v = identity scales every entry
        let scaled = mul_by_lifted_edge_group(&MaxPlus, &alg, &c, &1.0, 0).unwrap();
        assert_eq!(scaled.entries()[..2], [2.5, 3.5]);
    }

    #[test]
    fn group_paths_reject_monoids() {
        let alg = ConstraintAlgebra::max_count(3);
        let x = LiftedVector::filled(4, 0.0);
        assert!(matches!(
            mul_group(&MaxPlus, &alg, &x, &x),
            Err(DpError::NotGroupLike(_))
        ));
        assert!(mul_by_lifted_edge_group(&MaxPlus, &alg, &x, &0.0, 1).is_err());
    }

    #[test]
    fn operation_count_contracts() {
        let alg = ConstraintAlgebra::subset_size(7);
        let base = Instrumented::new(MaxPlus);
        let x = LiftedVector::filled(8, 1.0);
        mul_general(&base, &alg, &x, &x);
        assert!(base.counts().mul <= 64);
        base.reset();
        mul_by_lifted_edge_group(&base, &alg, &x, &2.0, 3).unwrap();
        assert!(base.counts().mul <= 8);
        base.reset();
        mul_by_lifted_edge_general(&base, &alg, &x, &2.0, 3).unwrap();
        assert!(base.counts().mul <= 8);
    }
}
