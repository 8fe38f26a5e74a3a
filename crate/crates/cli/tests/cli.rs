use std::path::PathBuf;
use std::process::Command;

use sdalg::descriptor::{parse_descriptor, to_json};
use sdalg::report::Format;
use sdalg_cli::run_command;
use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> (Value, i32) {
    let mut argv = vec!["sdalg"];
    argv.extend_from_slice(args);
    argv.extend_from_slice(&["--format", "json"]);
    let (r, f) = run_command(argv);
    assert_eq!(f, Format::Json);
    (serde_json::to_value(&r).unwrap(), r.exit_status)
}

fn ids(v: &Value) -> Vec<String> {
    v["annotations"].as_array().unwrap().iter().map(|a| a["id"].as_str().unwrap().to_string()).collect()
}

#[test]
fn detect_z10() {
    let (v, code) = run(&["detect", "--property", "s-semigroup", "--in", &fixture("z10_mul.json")]);
    assert_eq!(code, 0);
    let els: Vec<u64> = serde_json::from_value(v["result"]["certificate"]["witness"]["elements"].clone()).unwrap();
    assert_eq!(els, vec![1, 3, 7, 9]);
}

#[test]
fn detect_not_found_is_one() {
    let (v, code) = run(&["detect", "--property", "s-special-definite-group", "--in", &fixture("s3.json")]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["outcome"], "not_found");
}

#[test]
fn cosets() {
    let (v, code) = run(&["dcoset", "--H", "2Z+", "--x", "-1", "--K", "3Z+"]);
    assert_eq!((v["result"]["set"].as_str().unwrap(), code), ("6*Z-", 0));
    assert_eq!(v["result"]["meets_H"], false);
    assert!(ids(&v).is_empty());
    let (v, _) = run(&["dcoset", "--H", "2Z+", "--x", "5", "--K", "3Z+"]);
    assert_eq!(v["result"]["set"], "30*Z+");
    assert_eq!(ids(&v), vec!["double-coset-listing"]);
    let (v, _) = run(&["coset", "--H", "Z+", "--a", "1/2"]);
    assert_eq!(v["result"]["contains_H"], true);
    let (v, _) = run(&["product", "--H", "5Z+", "--K", "3Z+"]);
    assert_eq!(v["result"]["set"], "15*Z+");
}

#[test]
fn sweep_exit_zero() {
    let (v, code) = run(&["sweep", "--conjecture", "C1", "--family", "cyclic", "--max", "64"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["witness_count"], 0);
    let (_, code) = run(&["sweep", "--conjecture", "C2", "--family", "cyclic", "--max", "4"]);
    assert_eq!(code, 2);
}

#[test]
fn quotient_annotation() {
    let (v, code) = run(&["quotient", "--p", "3", "--modulus", "1,0,0,0,1", "--inverse", "0,0,2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["order"], 81);
    assert_eq!(v["result"]["inverse"], "x^2");
    assert_eq!(v["result"]["irreducibility"]["irreducible"], false);
    assert_eq!(ids(&v), vec!["reducible-modulus"]);
    let (v, _) = run(&["quotient", "--p", "2", "--modulus", "1,1,0,1"]);
    assert!(ids(&v).is_empty());
    assert_eq!(v["result"]["field"]["field"], true);
}

#[test]
fn linear_commands() {
    let (v, code) = run(&["basis", "--vectors", "0,3,0;0,0,1;4,0,0"]);
    assert_eq!((v["result"]["s_definite_basis"].as_bool(), code), (Some(false), 1));
    let (_, code) = run(&["basis", "--vectors", "1,0,0;0,1,0;0,0,1"]);
    assert_eq!(code, 0);
    let (v, _) = run(&["innerprod", "--x", "1,0,0,0", "--y", "0,1,0,0"]);
    assert_eq!(v["result"]["value"], "0");
    assert_eq!(ids(&v), vec!["orthogonality"]);
    let (v, _) = run(&["product", "--trunc", "5", "--left", "1,-4,0,3,0,1", "--right", "-7,0,2,0,0,3"]);
    assert_eq!(v["result"]["text"], "2x^5 + 3x^4 - 29x^3 + 11x^2 + 30x - 19");
}

#[test]
fn automata_commands() {
    let (r, _) = run_command(["sdalg", "automaton", "--states", "4", "--alphabet", "1", "--word", "0 0 0"]);
    assert_eq!(r.render(Format::Text).lines().take(4).collect::<Vec<_>>(), vec!["0", "1", "2", "3"]);
    let (v, code) = run(&[
        "automaton", "--states", "12", "--alphabet", "4;7;5", "--word", "0 1 2", "--near", &fixture("z_near_ring.json"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["trace"], serde_json::json!([0, 4, 11, 4]));
    assert_eq!(v["result"]["freeness"]["verdict"], "not_free");
    let (_, code) = run(&["automaton", "--states", "5", "--alphabet", "1", "--near", &fixture("near_z5.json")]);
    assert_eq!(code, 2);
    let (v, code) = run(&["automaton", "--states", "2", "--alphabet", "1", "--word", "3"]);
    assert_eq!(code, 2);
    assert!(v["result"]["error"].as_str().unwrap().contains("unknown letter 3"));
}

#[test]
fn ideals_and_verify() {
    let (v, code) = run(&["ideals", "--in", &fixture("z12.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["ideals"].as_array().unwrap().len(), 6);
    let (_, code) = run(&["verify", "--in", &fixture("gf8.json"), "--class", "field"]);
    assert_eq!(code, 0);
    let (_, code) = run(&["verify", "--in", &fixture("z12.json"), "--class", "field"]);
    assert_eq!(code, 1);
}

#[test]
fn certificate_file_round_trip() {
    let (v, _) = run(&["detect", "--property", "s-semigroup", "--in", &fixture("z10_mul.json")]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    std::fs::write(&path, v["result"]["certificate"].to_string()).unwrap();
    let (ok, code) = run(&["verify", "--certificate", path.to_str().unwrap()]);
    assert_eq!((ok["result"]["verified"].as_bool(), code), (Some(true), 0));
    std::fs::write(&path, v.to_string()).unwrap();
    let (ok, code) = run(&["verify", "--certificate", path.to_str().unwrap()]);
    assert_eq!((ok["result"]["verified"].as_bool(), code), (Some(true), 0));
    let mut bad = v["result"]["certificate"].clone();
    bad["witness"]["elements"] = serde_json::json!([1, 3, 7]);
    std::fs::write(&path, bad.to_string()).unwrap();
    let (_, code) = run(&["verify", "--certificate", path.to_str().unwrap()]);
    assert_eq!(code, 1);
}

#[test]
fn errors_exit_two() {
    let (v, code) = run(&["detect", "--property", "s-semigroup", "--in", &fixture("ragged.json")]);
    assert_eq!(code, 2);
    assert!(v["result"]["error"].as_str().unwrap().contains("row 1"));
    let (r, _) = run_command(["sdalg", "frobnicate"]);
    assert_eq!(r.exit_status, 2);
    let (r, _) = run_command(["sdalg", "detect", "--property", "nonsense", "--in", "x"]);
    assert_eq!(r.exit_status, 2);
    let (r, _) = run_command(["sdalg", "--help"]);
    assert_eq!(r.exit_status, 0);
    let (_, code) = run(&["detect", "--property", "s-ring", "--in", &fixture("bad_group_ring.json")]);
    assert_eq!(code, 2);
}

#[test]
fn descriptor_fixtures_round_trip() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let mut n = 0;
    for e in std::fs::read_dir(dir).unwrap() {
        let p = e.unwrap().path();
        let text = std::fs::read_to_string(&p).unwrap();
        let Ok(d) = parse_descriptor(&text) else { continue };
        let again = parse_descriptor(&to_json(&d)).unwrap();
        assert_eq!(d, again, "{}", p.display());
        assert_eq!(to_json(&again), to_json(&d));
        n += 1;
    }
    assert!(n >= 9);
}

#[test]
fn binary_reports_are_deterministic() {
    let bin = env!("CARGO_BIN_EXE_sdalg");
    let go = |args: &[&str]| {
        let out = Command::new(bin).args(args).output().unwrap();
        (out.stdout, out.status.code().unwrap())
    };
    let args = ["innerprod", "--x", "1,2", "--y", "3,0", "--seed", "7", "--format", "json"];
    let (a, ca) = go(&args);
    let (b, cb) = go(&args);
    assert_eq!((a, ca), (b, cb));
    let z10 = fixture("z10_mul.json");
    let (_, c) = go(&["detect", "--property", "s-semigroup", "--in", &z10]);
    assert_eq!(c, 0);
    let (_, c) = go(&["detect", "--property", "s-semigroup", "--in", &fixture("ragged.json")]);
    assert_eq!(c, 2);
    let (_, c) = go(&["verify", "--in", &fixture("z12.json"), "--class", "field"]);
    assert_eq!(c, 1);
    let (out, c) = go(&["dcoset", "--H", "2Z+", "--x", "-1", "--K", "3Z+"]);
    assert_eq!((String::from_utf8(out).unwrap(), c), ("(2*Z+)·-1·(3*Z+) = 6*Z-\n".to_string(), 0));
}
