use std::process::{Command, Output};

const EXAMPLE: &str = r#"{"n":8,"generators":[{"f2":"x^6+x^4+x^2+1","u":"x^5+x","u2":"x^4+x^2"}]}"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dnacodes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn table2_lists_28_strings() {
    let o = run(&["table2"]);
    assert!(o.status.success());
    let lines: Vec<_> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 28);
    let mut sorted = lines.clone();
    sorted.sort();
    assert_eq!(lines, sorted);
    assert!(lines.contains(&"CGCGCGCGCGCGCGCG".to_owned()));
}

#[test]
fn check_example_rc_both() {
    let o = run(&["check", "--spec", EXAMPLE, "--mode", "rc", "--method", "both"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["satisfied"], true);
    assert_eq!(v["agreement"], true);
    assert_eq!(v["theorem"]["case"], "A");
    assert_eq!(v["theorem"]["hypothesis_ok"], true);
}

#[test]
fn check_reports_discrepancy_with_exit_1() {
    let spec = r#"{"n":2,"generators":[{"f2":"x+1","u":"1"}]}"#;
    let o = run(&["check", "--spec", spec, "--method", "both"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["oracle"], true);
    assert_eq!(v["theorem"]["satisfied"], false);
    assert_eq!(v["agreement"], false);
}

#[test]
fn check_odd_length_theorem() {
    let spec = r#"{"n":7,"generators":[{"f2":"x^3+x+1"}]}"#;
    let o = run(&["check", "--spec", spec, "--method", "theorem"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["theorem"]["hypothesis_ok"], false);
}

#[test]
fn spec_from_file() {
    let dir = std::env::temp_dir().join(format!("dnacodes-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("example.json");
    std::fs::write(&path, EXAMPLE).unwrap();
    let o = run(&["distance", "--spec", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(json(&o)["min_distance"], 4);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn dual_cardinality() {
    let o = run(&["dual", "--spec", EXAMPLE, "--flavor", "euclidean"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["flavor"], "euclidean");
    let dim = v["dim"].as_u64().unwrap();
    assert_eq!(dim + 6, 24);
    assert_eq!(v["divisibility_claims"].as_array().unwrap().len(), 6);
}

#[test]
fn enumerate_zero_code() {
    let o = run(&["enumerate", "--spec", r#"{"n":5,"generators":[]}"#, "--format", "dna"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "GCGCGCGCGC");
}

#[test]
fn enumerate_round_trips() {
    let o = run(&["enumerate", "--spec", EXAMPLE, "--format", "dna"]);
    let lines: Vec<String> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 64);
    for l in &lines {
        assert_eq!(dnacodes::RingWord::from_dna(l).unwrap().to_dna(), *l);
    }
    assert_eq!(run(&["enumerate", "--spec", EXAMPLE, "--format", "dna"]).stdout, o.stdout);
}

#[test]
fn canonical_example() {
    let o = run(&["canonical", "--spec", EXAMPLE]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["g"], "x^6+x^4+x^2+1");
}

#[test]
fn search_is_sorted_and_summarised() {
    let o = run(&["search", "-n", "4", "--min-distance", "2", "--require", "rc"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let (summary, hits) = lines.split_last().unwrap();
    assert_eq!(summary["summary"]["truncated"], false);
    assert_eq!(summary["summary"]["hits"].as_u64().unwrap() as usize, hits.len());
    let d: Vec<u64> = hits.iter().map(|h| h["min_distance"].as_u64().unwrap()).collect();
    assert!(d.windows(2).all(|w| w[0] >= w[1]));
    assert!(hits.iter().all(|h| h["oracle_verified"] == true));
}

#[test]
fn search_truncation_exit_3() {
    let o = run(&["search", "-n", "8", "--max-candidates", "10"]);
    assert_eq!(o.status.code(), Some(3));
    let last = stdout(&o).lines().last().unwrap().to_owned();
    let v: serde_json::Value = serde_json::from_str(&last).unwrap();
    assert_eq!(v["summary"]["truncated"], true);
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(run(&["distance", "--spec", "{not json"]).status.code(), Some(2));
    assert_eq!(run(&["distance", "--spec", "/no/such/file.json"]).status.code(), Some(2));
    assert_eq!(run(&["search", "-n", "5"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}

#[test]
fn cap_exceeded_exit_3() {
    let full = r#"{"n":10,"generators":[{"f2":"1"}]}"#;
    assert_eq!(run(&["distance", "--spec", full, "--cap", "12"]).status.code(), Some(3));
}
