use std::process::{Command, Output};

use uqf::analytic::LReport;
use uqf_cli::commands::{CfReport, FormReport, IndecReport, SieveReport};
use uqf_cli::survey::{SurveyRow, CSV_HEADER};

fn uqf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uqf")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json<T: serde::de::DeserializeOwned + serde::Serialize + PartialEq + std::fmt::Debug>(args: &[&str]) -> T {
    let o = uqf(args);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let text = String::from_utf8(o.stdout).unwrap();
    let v: T = serde_json::from_str(&text).unwrap();
    let again: T = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(again, v);
    v
}

/// Squarefree count by trial division.
fn squarefree_count(a: u64, b: u64) -> usize {
    (a..=b).filter(|&n| (2..).take_while(|p| p * p <= n).all(|p| n % (p * p) != 0)).count()
}

#[test]
fn cf_examples() {
    let r: CfReport = json(&["cf", "--d", "15", "--json"]);
    assert_eq!((r.period.as_str(), r.s), ("1-6", 2));
    assert!(r.palindrome && r.last_quotient_ok && r.invariants_ok);
    let r: CfReport = json(&["cf", "--d", "5", "--json"]);
    assert_eq!((r.period.as_str(), r.s), ("1", 1));
    assert!(r.eps0_negative_norm);
    let (lo, hi) = r.eps0_embeddings[0];
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    assert!(lo <= phi && phi <= hi);
    let o = uqf(&["cf", "--d", "15"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).contains("1-6"));
}

#[test]
fn bad_input_exits_two() {
    let o = uqf(&["cf", "--d", "12"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not squarefree"));
    assert_eq!(code(&uqf(&["cf", "--d", "1"])), 2);
    assert_eq!(code(&uqf(&["indec", "--d", "5", "--eps", "x"])), 2);
    assert_eq!(code(&uqf(&["form", "--d", "5", "--verify-trace", "1"])), 2);
    assert_eq!(code(&uqf(&["survey", "--range", "9:2"])), 2);
}

#[test]
fn precision_env_is_read() {
    let o = Command::new(env!("CARGO_BIN_EXE_uqf"))
        .args(["cf", "--d", "2", "--json"])
        .env("UQF_PRECISION_BITS", "16")
        .output()
        .unwrap();
    let r: CfReport = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r.precision_bits, 16);
    let o = Command::new(env!("CARGO_BIN_EXE_uqf")).args(["cf", "--d", "2"]).env("UQF_PRECISION_BITS", "4").output().unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn indec_report() {
    let r: IndecReport = json(&["indec", "--d", "15", "--json"]);
    assert_eq!(r.m_d, 1);
    assert_eq!(r.window.elements.len(), 1);
    let r: IndecReport = json(&["indec", "--d", "5", "--eps", "1/100", "--json"]);
    assert_eq!((r.m_d, r.m_star.a, r.m_star.b), (1, 1, 0));
}

#[test]
fn form_examples() {
    let r: FormReport = json(&["form", "--d", "15", "--verify-trace", "40", "--json"]);
    assert_eq!(r.arity, 8);
    assert!(r.failures.is_empty());
    assert_eq!(r.represented_by_search, r.targets);
    assert_eq!(r.represented_by_construction, r.targets);
    let r: FormReport = json(&["form", "--d", "2", "--verify-trace", "40", "--json"]);
    assert_eq!(r.arity, 16);
    assert_eq!(r.represented_by_search, r.targets);
    let r: FormReport = json(&["form", "--d", "5", "--verify-trace", "2", "--json"]);
    assert_eq!(r.targets, 1);
    assert!(r.failures.is_empty());
}

#[test]
fn sieve_report() {
    let r: SieveReport = json(&["sieve", "--d", "7", "--json"]);
    assert!(r.rows.iter().all(|row| row.lifting_bound_holds));
    assert!(r.inequivalence.collisions.is_empty());
}

#[test]
fn lvals_examples() {
    let r: LReport = json(&["lvals", "--d", "5", "--cutoff", "100000", "--json"]);
    assert!((r.l1.mid - 0.43041).abs() < 1e-5);
    assert!(r.identity_residual.unwrap().contains(0.0));
    let r: LReport = json(&["lvals", "--d", "2", "--json"]);
    assert!((r.l1.mid - 0.62323).abs() < 1e-5);
    assert_eq!(code(&uqf(&["lvals", "--d", "5", "--cutoff", "999"])), 4);
    assert_eq!(code(&uqf(&["survey", "--range", "2:3", "--cutoff", "10"])), 4);
}

#[test]
fn survey_rows_are_ordered_and_stable() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.csv");
    let o = uqf(&["survey", "--range", "2:100", "--jobs", "4", "--cutoff", "2000", "--csv", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().next(), Some(CSV_HEADER));
    let rows: Vec<SurveyRow> = csv::Reader::from_reader(text.as_bytes()).deserialize().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), squarefree_count(2, 100));
    assert!(rows.windows(2).all(|w| w[0].d < w[1].d));
    for r in &rows {
        assert_eq!(r.s0_size.map(|n| n as i64), r.m_d);
        assert_eq!(r.form_arity, r.m_d.map(|m| 8 * m));
        assert!(r.ratio.is_some_and(|x| x.is_finite() && x > 0.0));
    }

    let serial = uqf(&["survey", "--range", "2:100", "--jobs", "1", "--cutoff", "2000"]);
    assert_eq!(String::from_utf8(serial.stdout).unwrap(), text);

    let one: Vec<SurveyRow> = json(&["survey", "--range", "15:15", "--cutoff", "2000", "--json"]);
    assert_eq!(one.len(), 1);
    assert_eq!(one[0].period.as_deref(), Some("1-6"));
}
