use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_semiring-dp"));
    c.env_remove("SEMIRING_DP_ORACLE_BUDGET");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn ok(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    let doc: Value = serde_json::from_str(&text).unwrap();
    // canonical output survives a parse / print round trip
    assert_eq!(
        semiring_dp_cli::json::to_canonical_string(&doc) + "\n",
        text
    );
    doc
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn close(a: &Value, b: f64) -> bool {
    (a.as_f64().unwrap() - b).abs() < 1e-12
}

#[test]
fn events_examples() {
    let dir = tempfile::tempdir().unwrap();
    let half = write(&dir, "half.txt", "0.5\n0.5\n0.5\n0.5\n");
    let doc = ok(&["events", &half, "--m", "2"]);
    assert!(close(&doc["result"], 0.375));
    assert!(doc.get("witness").is_none());

    let probs = fixture("probs.txt");
    let probs = probs.to_str().unwrap();
    let doc = ok(&["events", probs, "--m", "0"]);
    let none: f64 = [0.2, 0.7, 0.4, 0.9, 0.5, 0.1]
        .iter()
        .map(|p| 1.0 - p)
        .product();
    assert!(close(&doc["result"], none));

    for m in 0..=6 {
        let doc = ok(&["events", probs, "--m", &m.to_string(), "--mode", "viterbi"]);
        assert_eq!(doc["occurred"].as_array().unwrap().len(), m);
        assert_eq!(doc["witness"].as_array().unwrap().len(), 6);
    }
    let doc = ok(&["events", probs, "--m", "9"]);
    assert!(close(&doc["result"], 0.0));
}

#[test]
fn probabilities_outside_unit_interval_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(&dir, "bad.txt", "0.5\n1.5\n");
    let out = run(&["events", &bad, "--m", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("outside [0, 1]"));
}

#[test]
fn lis_examples() {
    let dir = tempfile::tempdir().unwrap();
    let doc = ok(&["lis", &write(&dir, "u.txt", "3\n1\n2\n")]);
    assert_eq!(doc["length"], 2);
    assert_eq!(doc["witness"], serde_json::json!([2, 3]));
    let doc = ok(&["lis", &write(&dir, "s.txt", "1\n2\n4\n8\n9\n")]);
    assert_eq!(doc["length"], 5);
    let doc = ok(&["lis", &write(&dir, "e.txt", "")]);
    assert_eq!(doc["length"], 0);

    let seq = fixture("sequence.txt");
    assert_eq!(ok(&["lis", seq.to_str().unwrap()])["length"], 4);
    assert_eq!(
        ok(&["lis", seq.to_str().unwrap(), "--relation", "le"])["length"],
        4
    );
    let flat = write(&dir, "flat.txt", "1\n1\n1\n");
    assert_eq!(ok(&["lis", &flat])["length"], 1);
    assert_eq!(ok(&["lis", &flat, "--relation", "le"])["length"], 3);
    let masks = fixture("masks.txt");
    let doc = ok(&["lis", masks.to_str().unwrap(), "--relation", "subset-demo"]);
    // 1 ⊆ 3 ⊆ 7 ⊆ 15
    assert_eq!(doc["length"], 4);
    let out = run(&[
        "lis",
        seq.to_str().unwrap(),
        "--relation",
        "subset-demo",
        "--header",
    ]);
    assert!(out.status.success());
    let doc = ok(&["lis", &write(&dir, "f.txt", "0.5\n1\n"), "--relation", "le"]);
    assert_eq!(doc["length"], 2);
    let out = run(&[
        "lis",
        &write(&dir, "g.txt", "0.5\n1\n"),
        "--relation",
        "subset-demo",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn align_examples() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(&dir, "a.txt", "GATTACA\n");
    let doc = ok(&["align", &a, &a]);
    assert!(close(&doc["result"], 0.0));
    assert_eq!(doc["alignment"], serde_json::json!(["GATTACA", "GATTACA"]));

    let x = write(&dir, "x.txt", "AB");
    let y = write(&dir, "y.txt", "CD");
    assert_eq!(ok(&["align", &x, &y, "--count-paths"])["result"], 13);

    // with no misalignment only the diagonal survives
    let b = write(&dir, "b.txt", "GCTTAGA\n");
    let diagonal = "GATTACA"
        .chars()
        .zip("GCTTAGA".chars())
        .filter(|(p, q)| p != q)
        .count();
    let doc = ok(&["align", &a, &b, "--max-misalign", "0", "--gap-cost", "0.1"]);
    assert!(close(&doc["result"], diagonal as f64));
    assert_eq!(
        ok(&["align", &a, &b, "--max-misalign", "0", "--count-paths"])["result"],
        1
    );
    let doc = ok(&["align", &a, &b, "--gap-cost", "0.1"]);
    assert!(doc["result"].as_f64().unwrap() < diagonal as f64);

    let t1 = fixture("first_tokens.txt");
    let t2 = fixture("second_tokens.txt");
    let doc = ok(&[
        "align",
        t1.to_str().unwrap(),
        t2.to_str().unwrap(),
        "--tokens",
    ]);
    assert!(close(&doc["result"], 2.0));
}

#[test]
fn align_sweep_writes_table() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(&dir, "a.txt", &"ACGT".repeat(8));
    let b = write(&dir, "b.txt", &"AGCT".repeat(8));
    let table = dir.path().join("sweep.csv");
    let doc = ok(&[
        "align",
        &a,
        &b,
        "--sweep",
        "--out-table",
        table.to_str().unwrap(),
    ]);
    assert_eq!(doc["sweep"].as_array().unwrap().len(), 8);
    let text = std::fs::read_to_string(table).unwrap();
    assert!(text.starts_with("rows,cols,add,mul,wall_ms\n"));
    assert_eq!(text.lines().count(), 9);
}

#[test]
fn segment_examples() {
    let series = fixture("series.csv");
    let series = series.to_str().unwrap();
    let doc = ok(&["segment", series, "--count", "3"]);
    assert_eq!(doc["breakpoints"], serde_json::json!([4, 8]));
    let doc = ok(&["segment", series, "--lambda", "0", "--count", "1"]);
    assert_eq!(doc["witness"].as_array().unwrap().len(), 1);
    assert_eq!(doc["breakpoints"], serde_json::json!([]));
    let doc = ok(&["segment", series, "--min-length", "12"]);
    assert_eq!(doc["witness"].as_array().unwrap().len(), 1);
    let doc = ok(&[
        "segment",
        series,
        "--count-range",
        "2:5",
        "--model",
        "linear",
    ]);
    let k = doc["witness"].as_array().unwrap().len();
    assert!((2..=5).contains(&k));
    let doc = ok(&["segment", series, "--lambda", "1"]);
    assert_eq!(doc["breakpoints"], serde_json::json!([4, 8]));
    assert_eq!(
        ok(&["segment", series, "--semiring", "count"])["result"],
        2048
    );

    let header = fixture("header.csv");
    let doc = ok(&[
        "segment",
        header.to_str().unwrap(),
        "--header",
        "--count",
        "2",
        "--model",
        "linear",
    ]);
    assert_eq!(doc["breakpoints"], serde_json::json!([4]));
}

#[test]
fn segment_table_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let series = fixture("series.csv");
    let series = series.to_str().unwrap();
    let table = dir.path().join("fit.csv");
    ok(&[
        "segment",
        series,
        "--count",
        "3",
        "--out-table",
        table.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(table).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,y,fit,segment");
    assert_eq!(lines.len(), 13);
    assert!(lines[12].ends_with(",3"));

    let out = run(&["segment", series, "--count", "13"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("infeasible"));
    let out = run(&["segment", series, "--min-length", "13"]);
    assert_eq!(out.status.code(), Some(2));
    let bad = write(&dir, "bad.csv", "1\n2\n\n# note\nthree\n");
    let out = run(&["segment", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad.csv:5:"));
    let out = run(&["segment", series, "--count", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    let series = fixture("series.csv");
    let series = series.to_str().unwrap();
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["segment", series, "--bogus"]).status.code(), Some(1));
    assert_eq!(
        run(&["segment", series, "--semiring", "viterbi:prob"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["segment", series, "--count", "2", "--min-length", "2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    let out = bin()
        .args(["lis", series, "--verify"])
        .env("SEMIRING_DP_ORACLE_BUDGET", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_passes_on_fixtures() {
    let f = |n: &str| fixture(n).to_str().unwrap().to_owned();
    let (series, header, probs, seq, masks) = (
        f("series.csv"),
        f("header.csv"),
        f("probs.txt"),
        f("sequence.txt"),
        f("masks.txt"),
    );
    let (first, second) = (f("first.txt"), f("second.txt"));
    let (t1, t2) = (f("first_tokens.txt"), f("second_tokens.txt"));
    let mut runs: Vec<Vec<&str>> = vec![
        vec!["segment", &series],
        vec!["segment", &series, "--count", "3"],
        vec![
            "segment",
            &series,
            "--count-range",
            "2:4",
            "--model",
            "linear",
        ],
        vec!["segment", &series, "--min-length", "3", "--lambda", "0.5"],
        vec!["segment", &series, "--exponent", "1", "--count", "2"],
        vec![
            "segment",
            &header,
            "--header",
            "--min-length",
            "2",
            "--semiring",
            "count",
        ],
        vec!["align", &first, &second],
        vec!["align", &first, &second, "--count-paths"],
        vec!["align", &first, &second, "--max-misalign", "1"],
        vec![
            "align",
            &first,
            &second,
            "--sum-misalign",
            "4",
            "--semiring",
            "maxplus",
        ],
        vec![
            "align",
            &t1,
            &t2,
            "--tokens",
            "--semiring",
            "viterbi:bottleneck",
        ],
        vec!["lis", &seq],
        vec!["lis", &seq, "--relation", "le", "--semiring", "count"],
        vec![
            "lis",
            &masks,
            "--relation",
            "subset-demo",
            "--semiring",
            "bool",
        ],
        vec!["events", &probs, "--m", "3"],
        vec!["events", &probs, "--m", "2", "--mode", "viterbi"],
        vec!["events", &probs, "--m", "4", "--semiring", "softmax"],
    ];
    for args in &mut runs {
        args.push("--verify");
        let doc = ok(args);
        assert_eq!(doc["oracle"]["status"], "pass", "{args:?}: {doc}");
    }
}

#[test]
fn oracle_budget_is_configurable() {
    let seq = fixture("sequence.txt");
    let out = bin()
        .args(["lis", seq.to_str().unwrap(), "--verify"])
        .env("SEMIRING_DP_ORACLE_BUDGET", "10")
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["oracle"]["status"], "skipped");
    assert!(doc["oracle"]["reason"].as_str().unwrap().contains("budget"));
}

#[test]
fn out_flag_writes_document() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("doc.json");
    let seq = fixture("sequence.txt");
    let out = run(&[
        "lis",
        seq.to_str().unwrap(),
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(doc["command"], "lis");
}

#[test]
fn bench_reports_growth() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("bench.csv");
    let doc = ok(&[
        "bench",
        "--algorithm",
        "combinations",
        "--sizes",
        "100,200",
        "--m",
        "10",
        "--out-table",
        table.to_str().unwrap(),
    ]);
    let rows = doc["result"].as_array().unwrap();
    let growth = rows[1]["growth"].as_f64().unwrap();
    assert!((1.8..=2.3).contains(&growth), "{growth}");
    assert_eq!(std::fs::read_to_string(table).unwrap().lines().count(), 3);
    for alg in [
        "events",
        "nw",
        "nw-sum",
        "nw-max",
        "segment-count",
        "segment-min",
        "lis",
    ] {
        ok(&["bench", "--algorithm", alg, "--sizes", "4,8"]);
    }
}
