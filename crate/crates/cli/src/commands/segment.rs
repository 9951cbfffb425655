use semiring_dp::dp::Segment;
use semiring_dp::lifting::Acceptance;
use semiring_dp::regression::{
    ModelKind, SegmentCostModel, SegmentCosts, Segmentation, TimeSeries,
};
use semiring_dp::semiring::RealSemiring;
use semiring_dp::verify::{Constrained, Recurrence, SegmentCount, SegmentMinLength, Segmentations};
use serde_json::Value;

use super::{choice, document, path_json, write_table};
use crate::args::{Model, SegmentArgs};
use crate::engine::{execute, Choice, Oracle, Outcome};
use crate::error::{CliError, CliResult};
use crate::input::read_column;
use crate::json;

fn segment_json(g: &Segment) -> Value {
    json::object([("start", Value::from(g.start)), ("end", Value::from(g.end))])
}

pub fn run(args: &SegmentArgs) -> CliResult<Value> {
    let choice = choice(&args.common, Choice::Viterbi(RealSemiring::MinPlus))?;
    let kind = match args.model {
        Model::Constant => ModelKind::ConstantMean,
        Model::Linear => ModelKind::Linear,
    };
    let model = SegmentCostModel::new(kind, args.exponent, args.lambda)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let samples = read_column(&args.input, args.header)?;
    let ts = TimeSeries::new(samples)?;
    let n = ts.len();
    let costs = SegmentCosts::new(&ts, model);
    let weight = |g: &Segment| costs.weight(*g);

    let range = args.count.map(|l| (l, l)).or(args.count_range);
    let mut config = vec![
        ("input", path_json(&args.input)),
        (
            "model",
            Value::from(format!("{:?}", args.model).to_lowercase()),
        ),
        ("lambda", json::float(args.lambda)),
        ("exponent", json::float(args.exponent)),
        ("verify", Value::Bool(args.common.verify)),
    ];
    let outcome = if let Some((lo, hi)) = range {
        if lo == 0 || lo > hi {
            return Err(CliError::Usage(format!(
                "segment count range {lo}:{hi} is empty or includes zero"
            )));
        }
        if lo > n {
            return Err(CliError::Data(format!(
                "infeasible constraint: cannot split {n} samples into {lo} or more segments"
            )));
        }
        config.push((
            "constraint",
            json::object([
                ("kind", Value::from("count")),
                ("lo", Value::from(lo)),
                ("hi", Value::from(hi)),
            ]),
        ));
        let r = SegmentCount {
            n,
            lo,
            hi: hi.min(n),
        };
        run_with(&r, choice, &weight, args.common.verify, &|b| r.filtered(b))?
    } else if let Some(l) = args.min_length {
        if l == 0 {
            return Err(CliError::Usage("--min-length must be at least 1".into()));
        }
        if l > n {
            return Err(CliError::Data(format!(
                "infeasible constraint: no segment of {n} samples can be {l} long"
            )));
        }
        config.push((
            "constraint",
            json::object([
                ("kind", Value::from("min-length")),
                ("at_least", Value::from(l)),
            ]),
        ));
        let r = SegmentMinLength {
            n,
            accept: Acceptance::AtLeast(l as i64),
        };
        run_with(&r, choice, &weight, args.common.verify, &|b| r.filtered(b))?
    } else {
        config.push(("constraint", json::object([("kind", Value::from("none"))])));
        let r = Segmentations { n };
        run_with(&r, choice, &weight, args.common.verify, &|b| r.enumerate(b))?
    };

    let mut extra = vec![("n", Value::from(n))];
    if let (Some(segments), Some(score)) = (&outcome.witness, outcome.score) {
        if !score.is_finite() {
            return Err(CliError::Data(
                "infeasible constraint: no segmentation satisfies it".into(),
            ));
        }
        let seg = Segmentation {
            cost: score,
            segments: segments.clone(),
        };
        if choice == Choice::Viterbi(RealSemiring::MinPlus) {
            extra.push(("breakpoints", Value::from(seg.breakpoints())));
            extra.push(("segments", segments_json(&seg, &costs)));
        }
        if let Some(path) = &args.out_table {
            let fitted = seg.fitted(&costs);
            let rows: Vec<Vec<String>> = seg
                .segments
                .iter()
                .enumerate()
                .flat_map(|(k, g)| (g.start..=g.end).map(move |t| (k, t)))
                .map(|(k, t)| {
                    vec![
                        t.to_string(),
                        json::format_float(ts.at(t)),
                        json::format_float(fitted[t - 1]),
                        (k + 1).to_string(),
                    ]
                })
                .collect();
            write_table(path, &["n", "y", "fit", "segment"], &rows)?;
        }
    } else if args.out_table.is_some() {
        return Err(CliError::Usage(
            "--out-table needs a tupled semiring such as viterbi:minplus".into(),
        ));
    }
    Ok(document(
        "segment",
        json::object(config),
        choice,
        &outcome,
        segment_json,
        extra,
    ))
}

fn run_with<R: Recurrence<Label = Segment>>(
    r: &R,
    choice: Choice,
    weight: &dyn Fn(&Segment) -> f64,
    verify: bool,
    oracle: Oracle<'_, Segment>,
) -> CliResult<Outcome<Segment>> {
    execute(r, choice, weight, verify.then_some(oracle))
}

fn segments_json(seg: &Segmentation, costs: &SegmentCosts<'_>) -> Value {
    Value::Array(
        seg.segments
            .iter()
            .map(|g| {
                let fit = costs.fit(g.start, g.end);
                json::object([
                    ("start", Value::from(g.start)),
                    ("end", Value::from(g.end)),
                    ("intercept", json::float(fit.intercept)),
                    ("slope", json::float(fit.slope)),
                    ("cost", json::float(costs.cost(g.start, g.end))),
                ])
            })
            .collect(),
    )
}
