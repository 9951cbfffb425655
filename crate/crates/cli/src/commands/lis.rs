use semiring_dp::semiring::RealSemiring;
use semiring_dp::verify::{Constrained, OrderedChains, Relation};
use serde_json::Value;

use super::{choice, document, path_json};
use crate::args::{LisArgs, RelationArg};
use crate::engine::{execute, Choice};
use crate::error::{CliError, CliResult};
use crate::input::read_column;
use crate::json;

pub fn run(args: &LisArgs) -> CliResult<Value> {
    let choice = choice(&args.common, Choice::Viterbi(RealSemiring::MaxPlus))?;
    let values = read_column(&args.input, args.header)?;
    let relation = match args.relation {
        RelationArg::Lt => Relation::Less,
        RelationArg::Le => Relation::LessEqual,
        RelationArg::SubsetDemo => {
            if let Some(k) = values
                .iter()
                .position(|&x| x < 0.0 || x.fract() != 0.0 || x >= 2f64.powi(53))
            {
                return Err(CliError::Data(format!(
                    "subset-demo values are bit masks; entry {} ({}) is not a non-negative integer",
                    k + 1,
                    values[k]
                )));
            }
            Relation::Subset
        }
    };
    let r = OrderedChains {
        values: values.clone(),
        relation,
    };
    let outcome = execute(
        &r,
        choice,
        &|_| 1.0,
        args.common.verify.then_some(&|b| r.filtered(b)),
    )?;
    let config = json::object([
        ("input", path_json(&args.input)),
        (
            "relation",
            Value::from(match args.relation {
                RelationArg::Lt => "lt",
                RelationArg::Le => "le",
                RelationArg::SubsetDemo => "subset-demo",
            }),
        ),
        ("verify", Value::Bool(args.common.verify)),
    ]);
    let mut extra = vec![("n", Value::from(values.len()))];
    if let Some(w) = &outcome.witness {
        extra.push(("length", Value::from(w.len())));
        let chain: Vec<Value> = w.iter().map(|&k| json::float(values[k - 1])).collect();
        extra.push(("values", Value::Array(chain)));
    }
    Ok(document(
        "lis",
        config,
        choice,
        &outcome,
        |&k| Value::from(k),
        extra,
    ))
}
