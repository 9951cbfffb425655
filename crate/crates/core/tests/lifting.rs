use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use semiring_dp::lifting::closed_form::{edge_product, product};
use semiring_dp::lifting::{
    algebra_catalog, mul_by_lifted_edge_general, mul_by_lifted_edge_group, mul_general, mul_group,
    Combine, ConstraintAlgebra, LiftedVector,
};
use semiring_dp::semiring::{Count, Counting, MaxPlus, Real, Semiring};

const CASES: usize = 200;

fn vector<S: Semiring>(
    s: &S,
    alg: &ConstraintAlgebra,
    r: &mut StdRng,
    sample: &dyn Fn(&mut StdRng) -> S::Value,
) -> LiftedVector<S::Value> {
    LiftedVector::new(
        (0..alg.len())
            .map(|_| if r.gen_bool(0.2) { s.zero() } else { sample(r) })
            .collect(),
    )
}

fn fast_paths_agree<S: Semiring>(s: &S, sample: &dyn Fn(&mut StdRng) -> S::Value, seed: u64) {
    let mut r = StdRng::seed_from_u64(seed);
    let same = |a: &LiftedVector<S::Value>, b: &LiftedVector<S::Value>| {
        a.len() == b.len()
            && a.entries()
                .iter()
                .zip(b.entries())
                .all(|(x, y)| s.equiv(x, y))
    };
    for alg in algebra_catalog(7).unwrap() {
        let (lo, hi) = alg.bounds();
        for _ in 0..CASES {
            let x = vector(s, &alg, &mut r, sample);
            let y = vector(s, &alg, &mut r, sample);
            let w = sample(&mut r);
            let v = r.gen_range(lo..=hi);
            let general = mul_general(s, &alg, &x, &y);
            assert!(
                same(&general, &product(s, &alg, &x, &y)),
                "{} product",
                alg.name()
            );

            let edge = semiring_dp::lifting::lift_edge(s, &alg, &w, v).unwrap();
            let reference = mul_general(s, &alg, &x, &edge);
            let scatter = mul_by_lifted_edge_general(s, &alg, &x, &w, v).unwrap();
            let closed = edge_product(s, &alg, &x, &w, v).unwrap();
            assert!(same(&reference, &scatter), "{} scatter", alg.name());
            assert!(same(&reference, &closed), "{} closed form", alg.name());

            if alg.is_group_like() {
                let group = mul_group(s, &alg, &x, &y).unwrap();
                assert!(same(&general, &group), "{} group product", alg.name());
                let shifted = mul_by_lifted_edge_group(s, &alg, &x, &w, v).unwrap();
                assert!(same(&reference, &shifted), "{} group edge", alg.name());
            }
        }
    }
}

#[test]
fn simplified_products_match_general() {
    fast_paths_agree(&Counting, &|r| Count::Finite(r.gen_range(0..100)), 1);
    fast_paths_agree(&MaxPlus, &|r| r.gen_range(-10.0..10.0), 2);
    fast_paths_agree(&Real, &|r| r.gen_range(0.0..1.0), 3);
}

/// The abs-difference row as printed, evaluated literally on `{0..M}`:
/// indices outside the carrier contribute zero.
fn printed_abs_difference_edge(
    alg: &ConstraintAlgebra,
    c: &[Count],
    w: Count,
    v: i64,
) -> Vec<Count> {
    let (_, big_m) = alg.bounds();
    let at = |k: i64| alg.index_of(k).map(|i| c[i]).unwrap_or(Count::ZERO);
    alg.elements()
        .map(|m| {
            let first = if m > v - 1 {
                Count::ZERO
            } else {
                Counting.mul(&at(m - v), &w)
            };
            let second = if m > big_m - v {
                Count::ZERO
            } else {
                Counting.mul(&at(m + v), &w)
            };
            Counting.add(&first, &second)
        })
        .collect()
}

fn printed_abs_difference_product(alg: &ConstraintAlgebra, x: &[Count], y: &[Count]) -> Vec<Count> {
    let (_, big_m) = alg.bounds();
    let at = |v: &[Count], k: i64| alg.index_of(k).map(|i| v[i]).unwrap_or(Count::ZERO);
    alg.elements()
        .map(|m| {
            let mut acc = Count::ZERO;
            for m1 in m + 1..=big_m - 1 {
                acc = Counting.add(&acc, &Counting.mul(&at(x, m1), &at(y, m1 - m)));
            }
            for m1 in 1..=big_m - m - 1 {
                acc = Counting.add(&acc, &Counting.mul(&at(x, m1), &at(y, m1 + m)));
            }
            acc
        })
        .collect()
}

#[test]
fn printed_abs_difference_row_disagrees_with_general_product() {
    let alg = ConstraintAlgebra::abs_difference(5);
    let mut r = StdRng::seed_from_u64(9);
    let mut edge_mismatch = 0;
    let mut product_mismatch = 0;
    for _ in 0..CASES {
        let x: Vec<Count> = (0..alg.len())
            .map(|_| Count::Finite(r.gen_range(1..9)))
            .collect();
        let y: Vec<Count> = (0..alg.len())
            .map(|_| Count::Finite(r.gen_range(1..9)))
            .collect();
        let v = r.gen_range(0..=5);
        let lx = LiftedVector::new(x.clone());
        let reference = mul_by_lifted_edge_general(&Counting, &alg, &lx, &Count::ONE, v).unwrap();
        if printed_abs_difference_edge(&alg, &x, Count::ONE, v) != reference.entries() {
            edge_mismatch += 1;
        }
        let general = mul_general(&Counting, &alg, &lx, &LiftedVector::new(y.clone()));
        if printed_abs_difference_product(&alg, &x, &y) != general.entries() {
            product_mismatch += 1;
        }
    }
    eprintln!("abs-difference printed forms: edge {edge_mismatch}/{CASES}, product {product_mismatch}/{CASES} mismatches");
    assert!(edge_mismatch > 0 && product_mismatch > 0);
}

#[test]
#[allow(clippy::needless_range_loop)]
fn printed_max_row_misses_zero_terms() {
    let alg = ConstraintAlgebra::max_count(4);
    assert_eq!(alg.op(), Combine::Max);
    let printed = |x: &[Count], y: &[Count]| -> Vec<Count> {
        (0..alg.len())
            .map(|m| {
                let mut acc = Count::ZERO;
                for m1 in 1..m {
                    acc = Counting.add(&acc, &Counting.mul(&x[m1], &y[m]));
                }
                for m1 in 1..=m {
                    acc = Counting.add(&acc, &Counting.mul(&x[m], &y[m1]));
                }
                acc
            })
            .collect()
    };
    let x: Vec<Count> = [3, 1, 4, 1, 5].map(Count::Finite).to_vec();
    let y: Vec<Count> = [2, 7, 1, 8, 2].map(Count::Finite).to_vec();
    let general = mul_general(
        &Counting,
        &alg,
        &LiftedVector::new(x.clone()),
        &LiftedVector::new(y.clone()),
    );
    assert_ne!(printed(&x, &y), general.entries());
    // with nothing at 0 the printed bounds are exact
    let mut x0 = x.clone();
    let mut y0 = y.clone();
    x0[0] = Count::ZERO;
    y0[0] = Count::ZERO;
    let general = mul_general(
        &Counting,
        &alg,
        &LiftedVector::new(x0.clone()),
        &LiftedVector::new(y0.clone()),
    );
    assert_eq!(printed(&x0, &y0), general.entries());
}
