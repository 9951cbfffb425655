//! Simplified lifted products for each catalog algebra.
//!
//! [`edge_product`] computes `(c ⊗ w_𝕄(x))_m` and [`product`] computes
//! `(x ⊗ y)_m` using the solution sets of `m′ ⊙ m″ = m` worked out per
//! operator, with summation bounds taken from the carrier.

use super::{Combine, ConstraintAlgebra, LiftedVector, FALSE, TRUE};
use crate::error::{DpError, Result};
use crate::semiring::Semiring;

fn sum_range<S: Semiring>(base: &S, c: &[S::Value], from: usize, to_incl: usize) -> S::Value {
    if from > to_incl {
        return base.zero();
    }
    c[from..=to_incl]
        .iter()
        .fold(base.zero(), |acc, v| base.add(&acc, v))
}

/// `c ⊗ w_𝕄(x)` for an edge with weight `w` and constraint value `v`.
pub fn edge_product<S: Semiring>(
    base: &S,
    alg: &ConstraintAlgebra,
    c: &LiftedVector<S::Value>,
    w: &S::Value,
    v: i64,
) -> Result<LiftedVector<S::Value>> {
    let vi = alg.index_of(v).ok_or_else(|| DpError::OutOfCarrier {
        algebra: alg.name().to_string(),
        value: v,
    })?;
    let c = c.entries();
    let n = alg.len();
    let zero = base.zero();
    let scaled = |x: &S::Value| base.mul(x, w);
    let z: Vec<S::Value> = match alg.op() {
        Combine::Sum => alg
            .elements()
            .map(|m| match alg.divide(m, v) {
                Some(src) => scaled(c.get(alg.index_of(src).unwrap()).unwrap()),
                None => zero.clone(),
            })
            .collect(),
        // {m} below v, {m..hi} at v, nothing above
        Combine::Min => (0..n)
            .map(|i| match i.cmp(&vi) {
                std::cmp::Ordering::Less => scaled(&c[i]),
                std::cmp::Ordering::Equal => scaled(&sum_range(base, c, i, n - 1)),
                std::cmp::Ordering::Greater => zero.clone(),
            })
            .collect(),
        // {m} above v, {lo..m} at v, nothing below
        Combine::Max => (0..n)
            .map(|i| match i.cmp(&vi) {
                std::cmp::Ordering::Greater => scaled(&c[i]),
                std::cmp::Ordering::Equal => scaled(&sum_range(base, c, 0, i)),
                std::cmp::Ordering::Less => zero.clone(),
            })
            .collect(),
        // |m′ − v| = m  ⇔  m′ ∈ {v − m, v + m}
        Combine::AbsDiff => alg
            .elements()
            .map(|m| {
                let mut acc = zero.clone();
                if let Some(j) = alg.index_of(v - m) {
                    acc = base.add(&acc, &c[j]);
                }
                if m != 0 {
                    if let Some(j) = alg.index_of(v + m) {
                        acc = base.add(&acc, &c[j]);
                    }
                }
                scaled(&acc)
            })
            .collect(),
        Combine::Or => {
            let (f, t) = (&c[0], &c[1]);
            if v == FALSE {
                vec![scaled(f), scaled(t)]
            } else {
                vec![zero, scaled(&base.add(f, t))]
            }
        }
        Combine::And => {
            let (f, t) = (&c[0], &c[1]);
            if v == TRUE {
                vec![scaled(f), scaled(t)]
            } else {
                vec![scaled(&base.add(f, t)), zero]
            }
        }
    };
    Ok(LiftedVector::new(z))
}

/// `x ⊗ y` using the per-operator solution sets of `m′ ⊙ m″ = m`.
pub fn product<S: Semiring>(
    base: &S,
    alg: &ConstraintAlgebra,
    x: &LiftedVector<S::Value>,
    y: &LiftedVector<S::Value>,
) -> LiftedVector<S::Value> {
    let (x, y) = (x.entries(), y.entries());
    let n = alg.len();
    let zero = base.zero();
    let acc = |a: S::Value, p: &S::Value, q: &S::Value| base.add(&a, &base.mul(p, q));
    let z: Vec<S::Value> = match alg.op() {
        Combine::Sum => alg
            .elements()
            .map(|m| {
                alg.elements().enumerate().fold(zero.clone(), |a, (i, m1)| {
                    match alg.index_of(m - m1) {
                        Some(j) => acc(a, &x[i], &y[j]),
                        None => a,
                    }
                })
            })
            .collect(),
        Combine::Min => (0..n)
            .map(|m| {
                let a = (m..n).fold(zero.clone(), |a, i| acc(a, &x[i], &y[m]));
                (m + 1..n).fold(a, |a, j| acc(a, &x[m], &y[j]))
            })
            .collect(),
        Combine::Max => (0..n)
            .map(|m| {
                let a = (0..m).fold(zero.clone(), |a, i| acc(a, &x[i], &y[m]));
                (0..=m).fold(a, |a, j| acc(a, &x[m], &y[j]))
            })
            .collect(),
        Combine::AbsDiff => alg
            .elements()
            .map(|m| {
                // m″ = m′ − m, then m″ = m′ + m for m > 0
                let mut a = zero.clone();
                for (i, m1) in alg.elements().enumerate() {
                    if let Some(j) = alg.index_of(m1 - m) {
                        a = acc(a, &x[i], &y[j]);
                    }
                }
                if m != 0 {
                    for (i, m1) in alg.elements().enumerate() {
                        if let Some(j) = alg.index_of(m1 + m) {
                            a = acc(a, &x[i], &y[j]);
                        }
                    }
                }
                a
            })
            .collect(),
        Combine::Or => {
            let f = base.mul(&x[0], &y[0]);
            let t = acc(acc(base.mul(&x[0], &y[1]), &x[1], &y[0]), &x[1], &y[1]);
            vec![f, t]
        }
        Combine::And => {
            let f = acc(acc(base.mul(&x[0], &y[0]), &x[1], &y[0]), &x[0], &y[1]);
            let t = base.mul(&x[1], &y[1]);
            vec![f, t]
        }
    };
    LiftedVector::new(z)
}
