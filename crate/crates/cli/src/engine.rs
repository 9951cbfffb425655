//! Semiring selection by name and instrumented execution of a recurrence,
//! with an optional cross-check against the path oracle.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use semiring_dp::oracle::{hom_eval, PathSet, DEFAULT_LABEL_BUDGET};
use semiring_dp::semiring::{
    Boolean, Count, Counting, Instrumented, OpCounts, RealSemiring, Semiring, Tupled, ViterbiSimple,
};
use semiring_dp::verify::Recurrence;
use semiring_dp::DpError;
use serde_json::Value;

use crate::error::{CliError, CliResult};
use crate::json;

pub const BUDGET_ENV: &str = "SEMIRING_DP_ORACLE_BUDGET";

/// A semiring picked on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Choice {
    Scalar(RealSemiring),
    Count,
    Bool,
    /// Tupled selection semiring carrying one optimal witness.
    Viterbi(RealSemiring),
}

impl Choice {
    pub fn is_tupled(&self) -> bool {
        matches!(self, Choice::Viterbi(_))
    }

    /// Real-valued base, if any.
    pub fn base(&self) -> Option<RealSemiring> {
        match self {
            Choice::Scalar(b) | Choice::Viterbi(b) => Some(*b),
            _ => None,
        }
    }
}

impl FromStr for Choice {
    type Err = CliError;

    fn from_str(name: &str) -> CliResult<Self> {
        let known =
            "minplus, maxplus, prob, softmax, bottleneck, maxtimes, count, bool, viterbi:<base>";
        match name {
            "count" => Ok(Choice::Count),
            "bool" => Ok(Choice::Bool),
            _ => {
                if let Some(base) = name.strip_prefix("viterbi:") {
                    let b = RealSemiring::from_name(base)
                        .ok_or_else(|| CliError::Usage(format!("unknown semiring `{base}`")))?;
                    if !b.is_selective() {
                        return Err(CliError::Usage(format!(
                            "viterbi needs a selective base; `{base}` is not"
                        )));
                    }
                    Ok(Choice::Viterbi(b))
                } else {
                    RealSemiring::from_name(name)
                        .map(Choice::Scalar)
                        .ok_or_else(|| {
                            CliError::Usage(format!(
                                "unknown semiring `{name}` (expected one of {known})"
                            ))
                        })
                }
            }
        }
    }
}

impl fmt::Display for Choice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Choice::Scalar(b) => f.write_str(b.name()),
            Choice::Count => f.write_str("count"),
            Choice::Bool => f.write_str("bool"),
            Choice::Viterbi(b) => write!(f, "viterbi:{}", b.name()),
        }
    }
}

/// Outcome of the oracle cross-check.
#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    NotRequested,
    Skipped(String),
    Pass,
    Fail(String),
}

impl Verdict {
    pub fn to_json(&self) -> Value {
        let (status, reason) = match self {
            Verdict::NotRequested => ("not-run", None),
            Verdict::Skipped(r) => ("skipped", Some(r)),
            Verdict::Pass => ("pass", None),
            Verdict::Fail(r) => ("fail", Some(r)),
        };
        let mut pairs = vec![("status", Value::from(status))];
        if let Some(r) = reason {
            pairs.push(("reason", Value::from(r.as_str())));
        }
        json::object(pairs)
    }
}

/// Result of one instrumented run.
#[derive(Clone, Debug)]
pub struct Outcome<L> {
    pub result: Value,
    /// Real-valued score, when the semiring has one.
    pub score: Option<f64>,
    pub witness: Option<Vec<L>>,
    pub ops: OpCounts,
    pub wall_ms: f64,
    pub oracle: Verdict,
}

/// Label budget for the oracle: `SEMIRING_DP_ORACLE_BUDGET` or the default.
pub fn oracle_budget() -> CliResult<usize> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Usage(format!(
                "{BUDGET_ENV} must be a non-negative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_LABEL_BUDGET),
    }
}

/// Solution set for the oracle, built within a label budget.
pub type Oracle<'a, L> = &'a dyn Fn(usize) -> semiring_dp::Result<PathSet<L>>;

pub fn count_json(c: Count) -> Value {
    match c {
        Count::Finite(x) => json::count(x),
        Count::Overflow => Value::from("overflow"),
    }
}

/// Run `r` in the chosen semiring with real weights `weight`. Counting and
/// Boolean runs give every label weight one. With `oracle`, the solution
/// set is enumerated and evaluated homomorphically as a cross-check.
pub fn execute<R: Recurrence>(
    r: &R,
    choice: Choice,
    weight: &dyn Fn(&R::Label) -> f64,
    oracle: Option<Oracle<'_, R::Label>>,
) -> CliResult<Outcome<R::Label>> {
    let budget = if oracle.is_some() {
        oracle_budget()?
    } else {
        0
    };
    let paths = || -> Option<Result<PathSet<R::Label>, String>> {
        let build = oracle?;
        Some(match build(budget) {
            Ok(p) => Ok(p),
            Err(e @ DpError::BudgetExceeded { .. }) => Err(e.to_string()),
            Err(e) => Err(format!("oracle error: {e}")),
        })
    };
    let start = Instant::now();
    macro_rules! finish {
        ($s:expr, $value:expr) => {{
            let v = $value;
            let wall_ms = start.elapsed().as_secs_f64() * 1e3;
            (wall_ms, $s.counts(), v)
        }};
    }
    let out = match choice {
        Choice::Scalar(b) => {
            let s = Instrumented::new(b);
            let (wall_ms, ops, v) = finish!(s, r.run(&s, &|l| weight(&l)));
            let oracle = check(paths(), |p| {
                let o = hom_eval(&b, |l| Some(weight(l)), p)?;
                Ok(b.equiv(&v, &o)
                    .then_some(())
                    .ok_or(format!("direct {v} vs oracle {o}")))
            })?;
            Outcome {
                result: json::float(v),
                score: Some(v),
                witness: None,
                ops,
                wall_ms,
                oracle,
            }
        }
        Choice::Count => {
            let s = Instrumented::new(Counting);
            let (wall_ms, ops, v) = finish!(s, r.run(&s, &|_| Count::ONE));
            let oracle = check(paths(), |p| {
                let o = hom_eval(&Counting, |_| Some(Count::ONE), p)?;
                Ok((v == o)
                    .then_some(())
                    .ok_or(format!("direct {v} vs oracle {o}")))
            })?;
            Outcome {
                result: count_json(v),
                score: None,
                witness: None,
                ops,
                wall_ms,
                oracle,
            }
        }
        Choice::Bool => {
            let s = Instrumented::new(Boolean);
            let (wall_ms, ops, v) = finish!(s, r.run(&s, &|_| true));
            let oracle = check(paths(), |p| {
                let o = hom_eval(&Boolean, |_| Some(true), p)?;
                Ok((v == o)
                    .then_some(())
                    .ok_or(format!("direct {v} vs oracle {o}")))
            })?;
            Outcome {
                result: Value::Bool(v),
                score: None,
                witness: None,
                ops,
                wall_ms,
                oracle,
            }
        }
        Choice::Viterbi(b) => {
            let tupled = ViterbiSimple::<RealSemiring, R::Label>::new(b);
            let s = Instrumented::new(tupled.clone());
            let (wall_ms, ops, v) = finish!(s, r.run(&s, &|l| Tupled::decision(weight(&l), l)));
            let Tupled { score, witness } = v;
            let oracle = check(paths(), |p| {
                let o = hom_eval(&b, |l| Some(weight(l)), p)?;
                if !b.equiv(&score, &o) {
                    return Ok(Err(format!("direct score {score} vs oracle {o}")));
                }
                if b.equiv(&score, &b.zero()) {
                    return Ok(Ok(()));
                }
                if !p.contains(&witness) {
                    return Ok(Err("witness is not a solution".into()));
                }
                let again = tupled.evaluate_witness(&witness, weight);
                Ok(b.equiv(&again, &score)
                    .then_some(())
                    .ok_or(format!("witness evaluates to {again}, score is {score}")))
            })?;
            Outcome {
                result: json::float(score),
                score: Some(score),
                witness: Some(witness),
                ops,
                wall_ms,
                oracle,
            }
        }
    };
    Ok(out)
}

fn check<L: Ord>(
    paths: Option<Result<PathSet<L>, String>>,
    compare: impl FnOnce(&PathSet<L>) -> semiring_dp::Result<Result<(), String>>,
) -> CliResult<Verdict> {
    Ok(match paths {
        None => Verdict::NotRequested,
        Some(Err(reason)) => Verdict::Skipped(reason),
        Some(Ok(p)) => match compare(&p)? {
            Ok(()) => Verdict::Pass,
            Err(why) => Verdict::Fail(why),
        },
    })
}

pub fn ops_json(ops: &OpCounts) -> Value {
    json::object([("add", Value::from(ops.add)), ("mul", Value::from(ops.mul))])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        for name in [
            "minplus",
            "maxplus",
            "prob",
            "softmax",
            "bottleneck",
            "maxtimes",
            "count",
            "bool",
            "viterbi:minplus",
        ] {
            assert_eq!(name.parse::<Choice>().unwrap().to_string(), name);
        }
        assert!("viterbi:prob".parse::<Choice>().is_err());
        assert!("tropical".parse::<Choice>().is_err());
    }
}
