use std::hash::Hash;

use clap::ValueEnum;
use semiring_dp::lifting::Acceptance;
use semiring_dp::semiring::RealSemiring;
use semiring_dp::verify::{
    AlignMaxConstrained, AlignSumConstrained, Alignments, Combinations, EventsMofN, LabelWeights,
    OrderedChains, Recurrence, Relation, SegmentCount, SegmentMinLength,
};
use serde_json::Value;

use super::{choice, write_table};
use crate::args::{Algorithm, BenchArgs};
use crate::engine::{execute, ops_json, Choice, Outcome};
use crate::error::{CliError, CliResult};
use crate::json;

fn timed<R: Recurrence>(r: &R, choice: Choice, seed: u64) -> CliResult<Outcome<R::Label>>
where
    R::Label: Hash,
{
    let lw = LabelWeights::new(seed);
    execute(r, choice, &|l| lw.unit(l), None)
}

fn run_one(args: &BenchArgs, choice: Choice, n: usize) -> CliResult<(usize, Outcome<()>)> {
    let m = args.m;
    let seed = args.seed;
    // the label type differs per algorithm, so the witness is dropped
    macro_rules! go {
        ($r:expr) => {{
            let o = timed(&$r, choice, seed)?;
            Outcome {
                result: o.result,
                score: o.score,
                witness: None,
                ops: o.ops,
                wall_ms: o.wall_ms,
                oracle: o.oracle,
            }
        }};
    }
    let out = match args.algorithm {
        Algorithm::Combinations => (m, go!(Combinations { n, m })),
        Algorithm::Events => (m, go!(EventsMofN { n, m })),
        Algorithm::Nw => (n, go!(Alignments { rows: n, cols: n })),
        Algorithm::NwSum => {
            let l_max = n / 2;
            (
                l_max,
                go!(AlignSumConstrained {
                    rows: n,
                    cols: n,
                    l_max,
                    accept: None
                }),
            )
        }
        Algorithm::NwMax => {
            let l_max = n / 2;
            (
                l_max,
                go!(AlignMaxConstrained {
                    rows: n,
                    cols: n,
                    l_max,
                    accept: None
                }),
            )
        }
        Algorithm::SegmentCount => {
            if n == 0 {
                return Err(CliError::Usage(
                    "segment-count needs sizes of at least 1".into(),
                ));
            }
            (
                m,
                go!(SegmentCount {
                    n,
                    lo: 1,
                    hi: m.clamp(1, n)
                }),
            )
        }
        Algorithm::SegmentMin => {
            if n == 0 {
                return Err(CliError::Usage(
                    "segment-min needs sizes of at least 1".into(),
                ));
            }
            (
                m,
                go!(SegmentMinLength {
                    n,
                    accept: Acceptance::AtLeast(m as i64)
                }),
            )
        }
        Algorithm::Lis => {
            let lw = LabelWeights::new(seed);
            let values = (0..n).map(|k| lw.unit(&k)).collect();
            (
                n,
                go!(OrderedChains {
                    values,
                    relation: Relation::Less
                }),
            )
        }
    };
    Ok(out)
}

pub fn run(args: &BenchArgs) -> CliResult<Value> {
    if args.sizes.is_empty() {
        return Err(CliError::Usage("--sizes is empty".into()));
    }
    let choice = choice(&args.common, Choice::Scalar(RealSemiring::MaxPlus))?;
    if args.common.verify {
        return Err(CliError::Usage("bench does not run the oracle".into()));
    }
    let algorithm = args
        .algorithm
        .to_possible_value()
        .expect("not skipped")
        .get_name()
        .to_owned();
    let mut rows = Vec::new();
    let mut table = Vec::new();
    let mut prev: Option<u64> = None;
    for &n in &args.sizes {
        let (m, o) = run_one(args, choice, n)?;
        let total = o.ops.total();
        let ratio = prev.filter(|&p| p > 0).map(|p| total as f64 / p as f64);
        prev = Some(total);
        table.push(vec![
            n.to_string(),
            m.to_string(),
            o.ops.add.to_string(),
            o.ops.mul.to_string(),
            total.to_string(),
            json::format_float(o.wall_ms),
        ]);
        rows.push(json::object([
            ("n", Value::from(n)),
            ("m", Value::from(m)),
            ("op_counts", ops_json(&o.ops)),
            ("total_ops", Value::from(total)),
            ("growth", ratio.map_or(Value::Null, json::float)),
            ("wall_time_ms", json::float(o.wall_ms)),
            ("result", o.result),
        ]));
    }
    if let Some(path) = &args.out_table {
        write_table(path, &["n", "m", "add", "mul", "total", "wall_ms"], &table)?;
    }
    let config = json::object([
        ("algorithm", Value::from(algorithm)),
        ("sizes", Value::from(args.sizes.clone())),
        ("m", Value::from(args.m)),
        ("seed", Value::from(args.seed)),
    ]);
    Ok(json::object([
        ("command", Value::from("bench")),
        ("config", config),
        ("semiring", Value::from(choice.to_string())),
        ("result", Value::Array(rows)),
    ]))
}
