use std::process::Command;

use quaternary_forms::cli::Report;

fn qforms(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qforms"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exited normally"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn report(args: &[&str]) -> Report {
    let (status, stdout, stderr) = qforms(args);
    assert_eq!(status, 0, "{args:?}: {stderr}");
    serde_json::from_str(&stdout).expect("valid JSON report")
}

#[test]
fn count_and_hex() {
    let r = report(&["count", "--form", "1,1,1", "--n", "0"]);
    assert_eq!(r.command, "count");
    assert_eq!(r.result["count"], 1);
    assert_eq!(r.params["form"], serde_json::json!([1, 1, 1]));
    assert_eq!(r.verified_to, None);
    assert_eq!(report(&["hex", "--n", "7"]).result["count"], 12);
}

#[test]
fn series_coefficients() {
    let r = report(&["series", "--which", "psi", "--order", "6"]);
    assert_eq!(r.result["coeffs"], serde_json::json!([1, 1, 0, 1, 0, 0, 1]));
    let r = report(&["series", "--which", "hex", "--order", "3"]);
    assert_eq!(r.result["coeffs"], serde_json::json!([1, 6, 0, 6]));
}

#[test]
fn lemma_commands() {
    let r = report(&["exclusion", "--lemma", "L123b", "--n", "5"]);
    assert_eq!(r.result["excluded"], true);
    let r = report(&["verify-lemma", "--lemma", "P14", "--bound", "800"]);
    assert_eq!(r.verified_to, Some(800));
    assert!(r.witnesses.is_empty());
}

#[test]
fn identities_commands() {
    let r = report(&["identities", "--case", "base", "--order", "1000"]);
    assert_eq!(r.verified_to, Some(1000));
    let r = report(&["identities", "--case", "C3", "--order", "300"]);
    assert_eq!(r.result["routes_agree"], true);
    assert_eq!(r.verified_to, Some(300));
}

#[test]
fn escalator_and_universal() {
    let r = report(&["escalator", "--form", "1,1,3"]);
    assert_eq!(r.result["verdict"], "fail");
    assert_eq!(r.witnesses[0].n, 6);
    let r = report(&["universal", "--form", "1,5,2", "--bound", "2000"]);
    assert_eq!(r.result["universal"], true);
    assert_eq!(r.verified_to, Some(2000));
    let r = report(&["universal", "--form", "1,2,5", "--bound", "200"]);
    assert_eq!(r.result["first_gap"], 10);
    assert_eq!(r.verified_to, Some(9));
}

#[test]
fn ternary_gap() {
    let r = report(&["ternary-gap", "--a", "1", "--c", "2", "--bound", "100"]);
    assert_eq!(r.result, serde_json::json!({"outcome": "gap", "n": 5}));
    let r = report(&["ternary-gap", "--a", "1", "--c", "1", "--bound", "5"]);
    assert_eq!(r.result["outcome"], "inconclusive");
}

#[test]
fn classify_csv_and_table() {
    let args = ["classify", "--amax", "2", "--bmax", "10", "--cmax", "4", "--bound", "300"];
    let (status, csv, _) = qforms(&[&args[..], &["--format", "csv"]].concat());
    assert_eq!(status, 0);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("a,b,c,universal,first_gap"));
    let universal = lines.filter(|l| l.contains(",true,")).count();
    assert_eq!(universal, 22);
    let (status, table, _) = qforms(&[&args[..], &["--format", "table"]].concat());
    assert_eq!(status, 0);
    assert!(table.starts_with("22 universal triples"));
}

#[test]
fn usage_errors() {
    for args in [
        &["verify-lemma", "--lemma", "X1"][..],
        &["identities", "--case", "C7"],
        &["count", "--form", "1,2", "--n", "1"],
        &["escalator"],
        &["hex", "--n", "1", "--format", "csv"],
        &["classify", "--amax", "2", "--bmax", "9", "--cmax", "4"],
    ] {
        let (status, stdout, stderr) = qforms(args);
        assert_eq!(status, 2, "{args:?}");
        assert!(stdout.is_empty(), "partial output for {args:?}");
        assert!(!stderr.is_empty());
    }
}

#[test]
fn output_is_deterministic_and_round_trips() {
    let args = ["classify", "--amax", "2", "--bmax", "10", "--cmax", "5", "--bound", "400"];
    let (_, first, _) = qforms(&args);
    let (_, second, _) = qforms(&args);
    assert_eq!(first, second);
    let parsed: Report = serde_json::from_str(&first).unwrap();
    let reserialized = serde_json::to_string_pretty(&parsed).unwrap() + "\n";
    assert_eq!(reserialized, first);
    let again: Report = serde_json::from_str(&reserialized).unwrap();
    assert_eq!(again, parsed);
}
