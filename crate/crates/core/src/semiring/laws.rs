//! Executable semiring laws.

use std::fmt;

use super::Semiring;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Law {
    AddAssociative,
    AddCommutative,
    AddIdentity,
    MulAssociative,
    MulIdentity,
    LeftDistributive,
    RightDistributive,
    Annihilation,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Law::AddAssociative => "⊕ associativity",
            Law::AddCommutative => "⊕ commutativity",
            Law::AddIdentity => "⊕ identity",
            Law::MulAssociative => "⊗ associativity",
            Law::MulIdentity => "⊗ identity",
            Law::LeftDistributive => "left distributivity",
            Law::RightDistributive => "right distributivity",
            Law::Annihilation => "zero annihilation",
        };
        f.write_str(name)
    }
}

/// A failed law together with the operands that broke it.
#[derive(Clone, Debug)]
pub struct LawViolation<V> {
    pub law: Law,
    pub operands: Vec<V>,
}

impl<V: fmt::Debug> fmt::Display for LawViolation<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails for {:?}", self.law, self.operands)
    }
}

/// Check every semiring law on the triple `(a, b, c)`.
pub fn check<S: Semiring>(
    s: &S,
    a: &S::Value,
    b: &S::Value,
    c: &S::Value,
) -> Result<(), LawViolation<S::Value>> {
    let fail = |law, ops: &[&S::Value]| LawViolation {
        law,
        operands: ops.iter().map(|v| (*v).clone()).collect(),
    };
    let zero = s.zero();
    let one = s.one();

    let lhs = s.add(&s.add(a, b), c);
    let rhs = s.add(a, &s.add(b, c));
    if !s.equiv(&lhs, &rhs) {
        return Err(fail(Law::AddAssociative, &[a, b, c]));
    }
    if !s.equiv(&s.add(a, b), &s.add(b, a)) {
        return Err(fail(Law::AddCommutative, &[a, b]));
    }
    if !s.equiv(&s.add(a, &zero), a) || !s.equiv(&s.add(&zero, a), a) {
        return Err(fail(Law::AddIdentity, &[a]));
    }
    let lhs = s.mul(&s.mul(a, b), c);
    let rhs = s.mul(a, &s.mul(b, c));
    if !s.equiv(&lhs, &rhs) {
        return Err(fail(Law::MulAssociative, &[a, b, c]));
    }
    if !s.equiv(&s.mul(a, &one), a) || !s.equiv(&s.mul(&one, a), a) {
        return Err(fail(Law::MulIdentity, &[a]));
    }
    let lhs = s.mul(a, &s.add(b, c));
    let rhs = s.add(&s.mul(a, b), &s.mul(a, c));
    if !s.equiv(&lhs, &rhs) {
        return Err(fail(Law::LeftDistributive, &[a, b, c]));
    }
    let lhs = s.mul(&s.add(a, b), c);
    let rhs = s.add(&s.mul(a, c), &s.mul(b, c));
    if !s.equiv(&lhs, &rhs) {
        return Err(fail(Law::RightDistributive, &[a, b, c]));
    }
    if !s.equiv(&s.mul(&zero, a), &zero) || !s.equiv(&s.mul(a, &zero), &zero) {
        return Err(fail(Law::Annihilation, &[a]));
    }
    Ok(())
}

/// Run [`check`] on `trials` triples drawn from `sample`.
pub fn check_random<S, G>(s: &S, trials: usize, mut sample: G) -> Result<(), LawViolation<S::Value>>
where
    S: Semiring,
    G: FnMut() -> S::Value,
{
    for _ in 0..trials {
        let (a, b, c) = (sample(), sample(), sample());
        check(s, &a, &b, &c)?;
    }
    Ok(())
}
