use semiring_dp::dp::AlignStep;
use semiring_dp::semiring::RealSemiring;
use semiring_dp::verify::{
    AlignMaxConstrained, AlignSumConstrained, Alignments, Constrained, Recurrence,
};
use serde_json::Value;

use super::{choice, document, path_json, write_table};
use crate::args::AlignArgs;
use crate::engine::{execute, ops_json, Choice, Outcome};
use crate::error::{CliError, CliResult};
use crate::input::read_symbols;
use crate::json;

/// Number of prefix sizes timed by `--sweep`.
const SWEEP_STEPS: usize = 8;

#[derive(Clone, Copy)]
enum Constraint {
    None,
    Max(usize),
    Sum(usize),
}

fn step_json(st: &AlignStep) -> Value {
    let (op, (i, j)) = match st {
        AlignStep::Match { .. } => ("match", st.cell()),
        AlignStep::Delete { .. } => ("delete", st.cell()),
        AlignStep::Insert { .. } => ("insert", st.cell()),
    };
    json::object([
        ("op", Value::from(op)),
        ("i", Value::from(i)),
        ("j", Value::from(j)),
    ])
}

struct Costs<'a> {
    a: &'a [String],
    b: &'a [String],
    matched: f64,
    mismatched: f64,
    gap: f64,
}

impl Costs<'_> {
    fn weight(&self, st: &AlignStep) -> f64 {
        match *st {
            AlignStep::Match { i, j } => {
                if self.a[i - 1] == self.b[j - 1] {
                    self.matched
                } else {
                    self.mismatched
                }
            }
            AlignStep::Delete { .. } | AlignStep::Insert { .. } => self.gap,
        }
    }
}

fn align(
    rows: usize,
    cols: usize,
    constraint: Constraint,
    choice: Choice,
    weight: &dyn Fn(&AlignStep) -> f64,
    verify: bool,
) -> CliResult<Outcome<AlignStep>> {
    match constraint {
        Constraint::None => {
            let r = Alignments { rows, cols };
            execute(&r, choice, weight, verify.then_some(&|b| r.enumerate(b)))
        }
        Constraint::Max(l_max) => {
            let r = AlignMaxConstrained {
                rows,
                cols,
                l_max,
                accept: None,
            };
            execute(&r, choice, weight, verify.then_some(&|b| r.filtered(b)))
        }
        Constraint::Sum(l_max) => {
            let r = AlignSumConstrained {
                rows,
                cols,
                l_max,
                accept: None,
            };
            execute(&r, choice, weight, verify.then_some(&|b| r.filtered(b)))
        }
    }
}

/// The two rows of an alignment, gaps shown as `-`.
fn render(witness: &[AlignStep], a: &[String], b: &[String], sep: &str) -> [String; 2] {
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for st in witness {
        let (i, j) = st.cell();
        let (x, y) = match st {
            AlignStep::Match { .. } => (a[i - 1].as_str(), b[j - 1].as_str()),
            AlignStep::Delete { .. } => (a[i - 1].as_str(), "-"),
            AlignStep::Insert { .. } => ("-", b[j - 1].as_str()),
        };
        let width = x.chars().count().max(y.chars().count());
        top.push(format!("{x:<width$}"));
        bottom.push(format!("{y:<width$}"));
    }
    [top.join(sep), bottom.join(sep)]
}

pub fn run(args: &AlignArgs) -> CliResult<Value> {
    let choice = if args.count_paths {
        Choice::Count
    } else {
        choice(&args.common, Choice::Viterbi(RealSemiring::MinPlus))?
    };
    let a = read_symbols(&args.first, args.tokens)?;
    let b = read_symbols(&args.second, args.tokens)?;
    let costs = Costs {
        a: &a,
        b: &b,
        matched: args.match_cost,
        mismatched: args.mismatch_cost,
        gap: args.gap_cost,
    };
    let weight = |st: &AlignStep| costs.weight(st);
    let constraint = match (args.max_misalign, args.sum_misalign) {
        (Some(l), _) => Constraint::Max(l),
        (_, Some(l)) => Constraint::Sum(l),
        _ => Constraint::None,
    };
    let outcome = align(
        a.len(),
        b.len(),
        constraint,
        choice,
        &weight,
        args.common.verify,
    )?;

    let constraint_json = match constraint {
        Constraint::None => json::object([("kind", Value::from("none"))]),
        Constraint::Max(l) => json::object([
            ("kind", Value::from("max-misalign")),
            ("at_most", Value::from(l)),
        ]),
        Constraint::Sum(l) => json::object([
            ("kind", Value::from("sum-misalign")),
            ("at_most", Value::from(l)),
        ]),
    };
    let config = json::object([
        ("first", path_json(&args.first)),
        ("second", path_json(&args.second)),
        ("tokens", Value::Bool(args.tokens)),
        ("match_cost", json::float(args.match_cost)),
        ("mismatch_cost", json::float(args.mismatch_cost)),
        ("gap_cost", json::float(args.gap_cost)),
        ("constraint", constraint_json),
        ("verify", Value::Bool(args.common.verify)),
    ]);
    let mut extra = vec![("lengths", Value::from(vec![a.len(), b.len()]))];
    if let (Some(w), Some(score)) = (&outcome.witness, outcome.score) {
        if score.is_finite() {
            let sep = if args.tokens { " " } else { "" };
            extra.push(("alignment", Value::from(render(w, &a, &b, sep).to_vec())));
        }
    }
    if args.sweep {
        let mut rows = Vec::new();
        let mut table = Vec::new();
        for k in 1..=SWEEP_STEPS {
            let (n, m) = (a.len() * k / SWEEP_STEPS, b.len() * k / SWEEP_STEPS);
            let o = align(n, m, constraint, choice, &weight, false)?;
            table.push(vec![
                n.to_string(),
                m.to_string(),
                o.ops.add.to_string(),
                o.ops.mul.to_string(),
                json::format_float(o.wall_ms),
            ]);
            rows.push(json::object([
                ("rows", Value::from(n)),
                ("cols", Value::from(m)),
                ("op_counts", ops_json(&o.ops)),
                ("wall_time_ms", json::float(o.wall_ms)),
            ]));
        }
        if let Some(path) = &args.out_table {
            write_table(path, &["rows", "cols", "add", "mul", "wall_ms"], &table)?;
        }
        extra.push(("sweep", Value::Array(rows)));
    } else if args.out_table.is_some() {
        return Err(CliError::Usage("--out-table requires --sweep".into()));
    }
    Ok(document(
        "align", config, choice, &outcome, step_json, extra,
    ))
}
