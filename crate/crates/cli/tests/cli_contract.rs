use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const GOLDEN_SWEEP: &str = include_str!("golden/sweep_n4.csv");

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hardy-rellich"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn constant_radial_example() {
    let o = run(&["constant", "--N", "5", "--m", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("value:        6.25"), "{text}");
    assert!(text.contains("Middle"));
    assert!(text.contains("l_min:        0"));
}

#[test]
fn constant_high_bad_json_example() {
    let doc = json(&["constant", "--N", "5", "--m", "8", "--json"]);
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["command"], "constant");
    assert_eq!(doc["l_min"], 1);
    assert_eq!(doc["k_m"], 3);
    let branches = doc["branch_values"].as_array().unwrap();
    let degrees: Vec<u64> = branches.iter().map(|b| b["degree"].as_u64().unwrap()).collect();
    assert_eq!(degrees, vec![0, 1, 2, 3]);
    let min = branches
        .iter()
        .map(|b| b["value"].as_f64().unwrap())
        .fold(f64::INFINITY, f64::min);
    assert!((min - 0.373457).abs() < 1e-6);
    assert!((doc["value"].as_f64().unwrap() - 121.0 / 324.0).abs() < 1e-15);
}

#[test]
fn invalid_weight_exits_with_usage_code() {
    let o = run(&["constant", "--N", "3", "--m", "-1"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("m > 2 - N"), "{err}");
}

#[test]
fn malformed_arguments_exit_with_usage_code() {
    for args in [
        &["constant", "--N", "five", "--m", "0"][..],
        &["constant", "--m", "0"],
        &["verify", "nonsense"],
        &["frobnicate"],
        &["boundaries", "--N", "0"],
        &["verify", "trial", "--eps", "0.01"],
        &["constant", "--N", "5", "--m", "0", "--json", "--csv"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn every_json_document_is_versioned() {
    for args in [
        &["constant", "--N", "4", "--m", "0", "--json"][..],
        &["classify", "--N", "5", "--m", "-2.5", "--json"],
        &["compare", "--N", "3", "--m", "0", "--json"],
        &["boundaries", "--N", "5", "--json"],
        &["sweep", "--N", "3", "--m-min", "0", "--m-max", "2", "--steps", "3", "--json"],
        &["verify", "identities", "--json"],
    ] {
        let doc = json(args);
        assert_eq!(doc["schema_version"], 1, "{args:?}");
        assert_eq!(doc["command"], args[0]);
    }
}

#[test]
fn classify_and_compare_examples() {
    let doc = json(&["classify", "--N", "5", "--m", "-2.5", "--json"]);
    assert_eq!(doc["branch"], "LowBad");

    let doc = json(&["compare", "--N", "4", "--m", "0", "--json"]);
    assert_eq!(doc["tilde"], 4.0);
    assert_eq!(doc["prior"], 3.0);
    assert_eq!(doc["strict_improvement"], true);

    let doc = json(&["compare", "--N", "5", "--m", "0", "--json"]);
    assert_eq!(doc["strict_improvement"], false);
}

#[test]
fn boundaries_examples() {
    let text = stdout(&run(&["boundaries", "--N", "5"]));
    assert!(text.contains("-2.12310562562"), "{text}");
    let text = stdout(&run(&["boundaries", "--N", "2"]));
    assert!(text.contains("3.41421356237"), "{text}");

    let csv = stdout(&run(&["boundaries", "--N", "1", "--csv"]));
    let values: Vec<&str> = csv
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap())
        .collect();
    assert_eq!(values, vec!["1", "3", "1", "3", "1"]);
}

#[test]
fn sweep_matches_the_golden_file_byte_for_byte() {
    let args = ["sweep", "--N", "4", "--m-min", "-1", "--m-max", "5", "--steps", "25"];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(stdout(&first), GOLDEN_SWEEP);
}

#[test]
fn sweep_format_is_fixed() {
    let lines: Vec<&str> = GOLDEN_SWEEP.split('\n').collect();
    assert_eq!(lines.len(), 27);
    assert_eq!(lines[26], "");
    assert!(!GOLDEN_SWEEP.contains('\r'));
    assert_eq!(
        lines[0],
        "N,m,regime,k_m,l_min,tilde_constant,upper_bound,prior_constant,strict_improvement,oracle_value,oracle_gap"
    );
    for row in &lines[1..26] {
        assert_eq!(row.split(',').count(), 11, "{row}");
        let m: f64 = row.split(',').nth(1).unwrap().parse().unwrap();
        assert!((-1.0..=5.0).contains(&m));
    }
    assert!(lines[1].starts_with("4,-1,"));
    assert!(lines[25].starts_with("4,5,"));
}

#[test]
fn one_dimensional_sweep_example() {
    let text = stdout(&run(&["sweep", "--N", "1", "--m-min", "1.1", "--m-max", "4", "--steps", "30"]));
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let mut rows = 0;
    for rec in rdr.records() {
        let rec = rec.unwrap();
        let m: f64 = rec[1].parse().unwrap();
        let tilde: f64 = rec[5].parse().unwrap();
        assert_eq!(&rec[2], "OneDim");
        assert!((tilde - ((1.0 - m) / 2.0).powi(2)).abs() <= 1e-14 * tilde.max(1.0));
        rows += 1;
    }
    assert_eq!(rows, 30);
}

#[test]
fn sweep_shows_the_low_bad_transition() {
    // N = 4 changes branch at 2 -+ sqrt(10), about -1.162 and 5.162
    let text = stdout(&run(&["sweep", "--N", "4", "--m-min", "-1.5", "--m-max", "6", "--steps", "31"]));
    let regimes: Vec<String> = csv::Reader::from_reader(text.as_bytes())
        .records()
        .map(|r| r.unwrap()[2].to_string())
        .collect();
    assert_eq!(regimes[0], "LowBad");
    assert!(regimes.iter().any(|r| r == "Middle"));
    assert!(regimes.iter().any(|r| r == "HighBad"));
}

#[test]
fn empty_sweep_range_exits_with_usage_code() {
    for args in [
        &["sweep", "--N", "4", "--m-min", "3", "--m-max", "3"][..],
        &["sweep", "--N", "4", "--m-min", "3", "--m-max", "1"],
        &["sweep", "--N", "4", "--m-min", "0", "--m-max", "1", "--steps", "1"],
        &["sweep", "--N", "4", "--m-min", "-3", "--m-max", "1"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn sweep_with_oracle_reports_gaps() {
    let text = stdout(&run(&[
        "sweep", "--N", "5", "--m-min", "0", "--m-max", "1", "--steps", "2", "--oracle", "--grid-T",
        "10", "--grid-points", "1500",
    ]));
    for rec in csv::Reader::from_reader(text.as_bytes()).records() {
        let rec = rec.unwrap();
        let gap: f64 = rec[10].parse().unwrap();
        assert!((0.0..0.05).contains(&gap), "{rec:?}");
    }
}

#[test]
fn output_file_receives_the_document() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let o = run(&[
        "sweep", "--N", "4", "--m-min", "-1", "--m-max", "5", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), GOLDEN_SWEEP);
}

#[test]
fn unwritable_output_exits_with_failure_code() {
    let o = run(&["boundaries", "--N", "3", "--out", "/nonexistent-dir/x/y.txt"]);
    assert!(!Path::new("/nonexistent-dir").exists());
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn failing_verification_exits_with_failure_code() {
    // a window too short for the oracle tolerance
    let o = run(&["verify", "oracle", "--grid-T", "2", "--grid-points", "200"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn verification_suites_pass() {
    for suite in ["trial", "oracle", "identities", "fulldim"] {
        let o = run(&["verify", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
        assert!(stdout(&o).contains(&format!("{suite}: PASS")));
    }
}
