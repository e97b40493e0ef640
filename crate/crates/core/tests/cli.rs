use obstruct::cli::{self, selftest, Faults};
use obstruct::report::{CacheEntry, ClassGroupCache, CACHE_ENV};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["obstruct"];
    full.extend_from_slice(args);
    let code = cli::run(full, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = run(args);
    assert!(err.is_empty(), "stderr: {err}");
    (code, serde_json::from_str(&out).unwrap())
}

#[test]
fn field_info_examples() {
    let (code, v) = run_json(&["field-info", "--m", "-15"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["field"]["D"], -15);
    assert_eq!(v["result"]["class_group"]["order"], 2);
    assert_eq!(
        v["result"]["cohomology"]["dims"],
        serde_json::json!([1, 1, 2, 1])
    );

    let (_, v) = run_json(&["field-info", "--m", "-3"]);
    assert_eq!(
        v["result"]["cohomology"]["dims"],
        serde_json::json!([1, 0, 1, 1])
    );

    // -4 is not squarefree; the Gaussian field is m = -1
    let (code, _, err) = run(&["field-info", "--m", "-4"]);
    assert_eq!(code, 2);
    assert!(err.contains("squarefree"));
    let (_, v) = run_json(&["field-info", "--m", "-1"]);
    assert_eq!(v["result"]["field"]["D"], -4);
    assert_eq!(v["result"]["class_group"]["order"], 1);

    assert_eq!(run(&["field-info", "--m", "7"]).0, 2);
    assert_eq!(run(&["field-info", "--m", "-18"]).0, 2);
}

#[test]
fn cup_examples() {
    let (code, v) = run_json(&["cup", "--m", "-15", "--x", "5", "--y", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["cup"]["parity"], 1);
    let (_, v) = run_json(&["cup", "--m", "-255", "--x", "5", "--y", "17"]);
    assert_eq!(v["result"]["cup"]["parity"], 1);
    let (_, v) = run_json(&["cup", "--m", "-255", "--x", "5", "--y", "0"]);
    assert_eq!(v["result"]["cup"]["parity"], 0);
    assert_eq!(v["result"]["cup"]["per_prime"], serde_json::json!([]));
    // either generator names the class
    let (_, a) = run_json(&["cup", "--m", "-255", "--x", "-3", "--y", "5"]);
    let (_, b) = run_json(&["cup", "--m", "-255", "--x", "85", "--y", "5"]);
    assert_eq!(a["result"]["cup"], b["result"]["cup"]);
    assert_eq!(run(&["cup", "--m", "-255", "--x", "7", "--y", "5"]).0, 2);
}

#[test]
fn obstruct_exit_codes() {
    let (code, v) = run_json(&["obstruct", "--m", "-15", "--group", "m", "--q", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["verdict"]["outcome"], "Obstructed");
    let (code, v) = run_json(&["obstruct", "--m", "-255", "--group", "aut", "--q", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["verdict"]["solvable_quotient_realizable"], true);
    let (code, v) = run_json(&["obstruct", "--m", "-3", "--group", "m", "--q", "3"]);
    assert_eq!(code, 4);
    assert_eq!(v["result"]["verdict"]["outcome"], "TriviallyBlocked");
    let (code, v) = run_json(&["obstruct", "--m", "-145", "--group", "m", "--q", "3"]);
    assert_eq!(code, 3);
    assert_eq!(
        v["result"]["verdict"]["field_condition"]["witness"]["a"]["label"],
        "5"
    );
    let (code, v) = run_json(&["obstruct", "--m", "-15", "--group", "m", "--q", "7"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["verdict"]["group_certificate"]["kind"], "cited");
    assert_eq!(
        run(&["obstruct", "--m", "-15", "--group", "m", "--q", "9"]).0,
        0
    );
    assert_eq!(
        run(&["obstruct", "--m", "-15", "--group", "m", "--q", "4"]).0,
        2
    );
    assert_eq!(
        run(&["obstruct", "--m", "-15", "--group", "x", "--q", "3"]).0,
        2
    );
    assert_eq!(run(&["obstruct", "--m", "-15", "--group", "m"]).0, 2);
}

#[test]
fn cocycle_examples() {
    let (code, v) = run_json(&["cocycle", "--q", "3", "--group", "m"]);
    assert_eq!(code, 0);
    let c = &v["result"]["cocycle"];
    assert_eq!(c["support"], serde_json::json!([[1, 1, 1]]));
    assert_eq!(c["is_cocycle"], true);
    assert_eq!(c["class"], "a^3");

    let (_, v) = run_json(&["cocycle", "--q", "3", "--group", "aut"]);
    let c = &v["result"]["cocycle"];
    assert!(["a^2 b", "a b^2"].contains(&c["class"].as_str().unwrap()));
    assert_eq!(c["pullbacks"]["first_factor"]["coboundary"], true);
    assert_eq!(c["pullbacks"]["second_factor"]["coboundary"], true);
    assert_eq!(c["pullbacks"]["diagonal"]["cohomologous_to_m_table"], true);

    let (_, v) = run_json(&["cocycle", "--q", "5", "--group", "m"]);
    assert_eq!(v["result"]["cocycle"]["class"], "a^3");

    let (code, _, err) = run(&["cocycle", "--q", "7", "--group", "m"]);
    assert_eq!(code, 2);
    assert!(err.contains("cap"));
}

#[test]
fn search_lines_and_summary() {
    let (code, out, _) = run(&["search", "--family", "a", "--max-prime", "10"]);
    assert_eq!(code, 0);
    let lines: Vec<Value> = out
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(
        lines.last().unwrap()["result"]["summary"]["hits"],
        lines.len() - 1
    );
    assert!(lines
        .iter()
        .any(|l| l["result"]["hit"]["primes"] == serde_json::json!([5, 3])));

    let (_, out, _) = run(&["search", "--family", "b", "--max-prime", "17"]);
    assert!(out.contains("\"primes\":[3,5,17]"));

    let (code, out, _) = run(&["search", "--family", "a", "--max-prime", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 1);
    assert!(out.contains("\"hits\":0"));

    assert_eq!(run(&["search", "--family", "c", "--max-prime", "10"]).0, 2);
    assert_eq!(run(&["search", "--family", "a", "--max-prime", "2"]).0, 2);
}

#[test]
fn search_order_is_independent_of_jobs() {
    let one = run(&[
        "search",
        "--family",
        "b",
        "--max-prime",
        "60",
        "--jobs",
        "1",
    ])
    .1;
    let four = run(&[
        "search",
        "--family",
        "b",
        "--max-prime",
        "60",
        "--jobs",
        "4",
    ])
    .1;
    assert_eq!(one, four);
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["field-info", "--m", "-255"][..],
        &["obstruct", "--m", "-255", "--group", "aut", "--q", "3"],
        &["cocycle", "--q", "3", "--group", "aut"],
    ] {
        assert_eq!(run(args).1, run(args).1);
    }
}

#[test]
fn every_report_has_schema_and_inert_note() {
    for args in [
        &["field-info", "--m", "-15"][..],
        &["cup", "--m", "-15", "--x", "5", "--y", "5"],
        &["obstruct", "--m", "-15", "--group", "m", "--q", "3"],
        &["cocycle", "--q", "3", "--group", "m"],
    ] {
        let (_, v) = run_json(args);
        assert_eq!(v["schema_version"], "1");
        assert!(v["notes"][0].as_str().unwrap().contains("inert in L"));
    }
}

#[test]
fn selftest_passes_and_detects_faults() {
    let (code, out, _) = run(&["selftest"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().any(|l| l == "PASS h3-dim-klein-four = 4"));
    let (code, out, _) = run(&["selftest", "--inject-fault", "corrupt-composition"]);
    assert_ne!(code, 0);
    assert!(out.contains("FAIL form-enumeration-vs-structure"));
    assert!(selftest(Faults::default()).iter().all(|r| r.passed));
}

#[test]
fn class_group_cache_through_field_info() {
    let dir = tempfile::tempdir().unwrap();
    let cache = ClassGroupCache::new(dir.path());
    let (fresh, _) = cli::cmd_field_info_with_cache(-255, None).unwrap();
    let (first, _) = cli::cmd_field_info_with_cache(-255, Some(&cache)).unwrap();
    let (second, _) = cli::cmd_field_info_with_cache(-255, Some(&cache)).unwrap();
    assert_eq!(fresh.result, first.result);
    assert_eq!(first.to_pretty(), second.to_pretty());

    let path = cache.path_for(-255);
    let mut e: CacheEntry = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    e.invariants = vec![12];
    std::fs::write(&path, serde_json::to_string(&e).unwrap()).unwrap();
    let (repaired, _) = cli::cmd_field_info_with_cache(-255, Some(&cache)).unwrap();
    assert_eq!(repaired.result, fresh.result);
    assert!(repaired.notes.iter().any(|n| n.contains("recomputed")));
    assert_eq!(CACHE_ENV, "OBSTRUCT_CACHE_DIR");
}

#[test]
fn binary_uses_cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let status = std::process::Command::new(env!("CARGO_BIN_EXE_obstruct"))
        .args(["field-info", "--m", "-195"])
        .env(CACHE_ENV, dir.path())
        .output()
        .unwrap();
    assert!(status.status.success());
    assert!(dir.path().join("classgroup_195.json").exists());
    let bad = std::process::Command::new(env!("CARGO_BIN_EXE_obstruct"))
        .args(["obstruct", "--m", "-3", "--group", "m", "--q", "3"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(4));
}
