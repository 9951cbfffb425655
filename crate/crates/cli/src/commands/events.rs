use semiring_dp::dp::EventOutcome;
use semiring_dp::semiring::RealSemiring;
use semiring_dp::verify::{Constrained, EventsMofN};
use serde_json::Value;

use super::{choice, document, path_json};
use crate::args::{EventsArgs, EventsMode};
use crate::engine::{execute, Choice};
use crate::error::CliResult;
use crate::input::read_probabilities;
use crate::json;

fn outcome_json(e: &EventOutcome) -> Value {
    json::object([
        ("index", Value::from(e.index)),
        ("occurred", Value::Bool(e.occurred)),
    ])
}

pub fn run(args: &EventsArgs) -> CliResult<Value> {
    let default = match args.mode {
        EventsMode::Prob => Choice::Scalar(RealSemiring::Real),
        EventsMode::Viterbi => Choice::Viterbi(RealSemiring::MaxTimes),
    };
    let choice = choice(&args.common, default)?;
    let p = read_probabilities(&args.input, args.header)?;
    let weight = |e: &EventOutcome| {
        let q = p[e.index - 1];
        if e.occurred {
            q
        } else {
            1.0 - q
        }
    };
    let r = EventsMofN {
        n: p.len(),
        m: args.m,
    };
    let outcome = execute(
        &r,
        choice,
        &weight,
        args.common.verify.then_some(&|b| r.filtered(b)),
    )?;
    let config = json::object([
        ("input", path_json(&args.input)),
        ("m", Value::from(args.m)),
        (
            "mode",
            Value::from(format!("{:?}", args.mode).to_lowercase()),
        ),
        ("verify", Value::Bool(args.common.verify)),
    ]);
    let mut extra = vec![("n", Value::from(p.len()))];
    if let Some(w) = &outcome.witness {
        let occurred: Vec<usize> = w.iter().filter(|e| e.occurred).map(|e| e.index).collect();
        extra.push(("occurred", Value::from(occurred)));
    }
    Ok(document(
        "events",
        config,
        choice,
        &outcome,
        outcome_json,
        extra,
    ))
}
