use std::path::PathBuf;
use std::process::{Command, Output};

fn hdepth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hdepth"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn ideal_file(name: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("hdepth-cli-{}-{name}.txt", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn principal_ideal_depths() {
    let path = ideal_file("principal", "x1*x2*x3*x4*x5*x6*x7*x8\n");
    let o = hdepth(&["hdepth", path.to_str().unwrap(), "--mode", "both"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "hdepth(S/I) = 7\nhdepth(I) = 8\n");
}

#[test]
fn family_member_from_file() {
    let gens: Vec<String> = (3..=10).map(|j| format!("x1*x2*x{j}")).collect();
    let path = ideal_file("i10_2", &gens.join("\n"));
    let o = hdepth(&["--format", "csv", "hdepth", path.to_str().unwrap(), "--mode", "both"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "target,hdepth\nquotient,7\nideal,6\n");
}

#[test]
fn empty_file_is_rejected() {
    let path = ideal_file("empty", "");
    let o = hdepth(&["hdepth", path.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(!o.stderr.is_empty());
}

#[test]
fn malformed_file_is_a_parse_error() {
    let path = ideal_file("bad", "x1*y2\n");
    assert_eq!(code(&hdepth(&["hdepth", path.to_str().unwrap()])), 2);
}

#[test]
fn family_record_csv() {
    let o = hdepth(&["--format", "csv", "family", "--n", "10", "--m", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "n,m,q,h_ideal,d\n10,2,7,6,1\n");
}

#[test]
fn family_record_at_large_n_uses_exact_values() {
    let o = hdepth(&["--format", "csv", "family", "--n", "350", "--m", "7"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "n,m,q,h_ideal,d\n350,7,217,179,38\n");
}

#[test]
fn witness_for_gap_two() {
    let o = hdepth(&["--format", "csv", "family", "--witness", "--d", "2", "--n-cap", "20"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "n,m,q,h_ideal,d\n15,3,11,9,2\n");
}

#[test]
fn witness_beyond_cap_exits_four() {
    let o = hdepth(&["family", "--witness", "--d", "6", "--n-cap", "20"]);
    assert_eq!(code(&o), 4);
    let o = hdepth(&["--format", "json", "family", "--witness", "--d", "6", "--n-cap", "37"]);
    assert_eq!(code(&o), 4);
    assert!(stdout(&o).contains("\"unconfirmed\""));
}

#[test]
fn gap_table_prefix() {
    let o = hdepth(&["--format", "csv", "family", "--table", "--d-max", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "n,m,q,h_ideal,d\n6,2,4,4,0\n10,2,7,6,1\n15,3,11,9,2\n20,4,15,12,3\n"
    );
}

#[test]
fn tables_with_only_known_typos_succeed() {
    let o = hdepth(&["verify", "tables", "--q", "9"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("known typo"));
    assert!(!text.contains("UNDOCUMENTED"));
}

#[test]
fn campaign_passes() {
    let o = hdepth(&["verify", "campaign", "--n", "10", "--trials", "1000", "--seed", "7"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn oracle_agrees() {
    let o = hdepth(&["verify", "oracle", "--n", "12", "--k", "4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("0 mismatches"));
}

#[test]
fn lemma_certifies() {
    let o = hdepth(&["--format", "json", "verify", "lemma", "--id", "L3.3", "--n", "10"]);
    assert_eq!(code(&o), 0);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["violation_count"], 0);
    assert_eq!(doc["truncated"], false);
}

#[test]
fn weakened_lemma_reports_violations() {
    let o = hdepth(&["verify", "lemma", "--id", "L3.3", "--n", "10", "--weakened"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn unknown_lemma_is_a_usage_error() {
    assert_eq!(code(&hdepth(&["verify", "lemma", "--id", "L9.9", "--n", "11"])), 2);
}

#[test]
fn small_node_cap_truncates() {
    assert_eq!(code(&hdepth(&["verify", "lemma", "--id", "L3.3", "--n", "11", "--node-cap", "3"])), 4);
}

#[test]
fn oversized_polytope_is_a_capacity_error() {
    assert_eq!(code(&hdepth(&["verify", "lemma", "--id", "L3.3", "--n", "40"])), 3);
}

#[test]
fn conflicting_flags_are_rejected() {
    assert_eq!(code(&hdepth(&["family", "--n", "10", "--m", "2", "--table"])), 2);
    assert_eq!(code(&hdepth(&["family", "--table", "--d-max", "3", "--d-list", "1,2"])), 2);
}

#[test]
fn machine_formats_are_deterministic() {
    for fmt in ["json", "csv"] {
        for args in [
            &["verify", "campaign", "--n", "8", "--trials", "200", "--seed", "3"][..],
            &["verify", "lemma", "--id", "L3.2-q9", "--n", "11"][..],
            &["family", "--table", "--d-max", "5"][..],
        ] {
            let mut full = vec!["--format", fmt];
            full.extend_from_slice(args);
            let a = hdepth(&full);
            let b = hdepth(&full);
            assert_eq!(code(&a), 0);
            assert_eq!(a.stdout, b.stdout, "{fmt} {args:?}");
        }
    }
}

#[test]
fn sequential_and_parallel_runs_agree() {
    let args = ["--format", "json", "verify", "campaign", "--n", "8", "--trials", "300", "--seed", "5"];
    let one = hdepth(&[&["--jobs", "1"][..], &args[..]].concat());
    let many = hdepth(&[&["--jobs", "4"][..], &args[..]].concat());
    assert_eq!(one.stdout, many.stdout);
}
