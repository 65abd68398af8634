use std::path::PathBuf;
use std::process::{Command, Output};

fn multirel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_multirel")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("multirel-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

const ENV: &str = r#"{"carriers":{"X":["a","b"]},"rels":{"Q":{"src":2,"dst":2,"pairs":[[0,1]]}},"mrels":{"R":{"src":2,"dst":2,"rows":[[[0,1]],[]]}}}"#;

#[test]
fn eval_prints_json_values() {
    let env = temp("env.json", ENV);
    let env = env.to_str().unwrap();
    let o = multirel(&["eval", "--env", env, "--expr", "R * R"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#"{"src":2,"dst":2,"rows":[[],[]]}"#);
    let o = multirel(&["eval", "--env", env, "--expr", "a(L(Q)) == Q"]);
    assert_eq!(stdout(&o).trim(), "true");
    let o = multirel(&["eval", "--env", env, "--expr", "down(R) == R * down(1)"]);
    assert_eq!(stdout(&o).trim(), "true");
    let out = temp("value.json", "");
    let o = multirel(&["eval", "--env", env, "--expr", "a(R)", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(out).unwrap().trim(), r#"{"src":2,"dst":2,"pairs":[[0,0],[0,1]]}"#);
}

#[test]
fn usage_and_cap_errors() {
    assert_eq!(multirel(&["eval", "--expr", "R ;"]).status.code(), Some(2));
    assert_eq!(multirel(&["eval", "--expr", "Q"]).status.code(), Some(2));
    assert_eq!(multirel(&["check"]).status.code(), Some(2));
    assert_eq!(multirel(&["check", "--law", "no-such-law"]).status.code(), Some(2));
    assert_eq!(multirel(&["frobnicate"]).status.code(), Some(2));
    let o = multirel(&["eval", "--expr", "L(mem[12])"]);
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8(o.stderr).unwrap();
    assert_eq!(err.matches("mask cap").count(), 1, "{err}");
}

#[test]
fn laws_lists_the_registry() {
    let o = multirel(&["laws", "--filter", "REG-galois"]);
    assert_eq!(stdout(&o).lines().count(), 4);
    let o = multirel(&["laws", "--json", "--filter", "L2.1-lambda-alpha-inverse"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["claim"], "a(L(R)) == R");
    assert_eq!(v["kind"], "theorem");
}

#[test]
fn check_exit_codes_follow_verdicts() {
    let o = multirel(&["check", "--law", "L2.1-lambda-alpha-inverse", "--sizes", "2,2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!((v["checked"].as_u64(), v["mode"].as_str()), (Some(16), Some("exhaustive")));
    let o = multirel(&["check", "--law", "NEG-peleg-assoc-general"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("counterexample"));
    let o =
        multirel(&["check", "--law", "L2.2-subassociativity", "--sizes", "3", "--random", "200", "--density", "0.5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = multirel(&["check", "--law", "L2.2-subassociativity", "--random", "20", "--density", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_json_is_reproducible() {
    let args = ["check", "--law", "L2.2-subassociativity", "--seed", "9", "--json"];
    assert_eq!(multirel(&args).stdout, multirel(&args).stdout);
    let o = multirel(&["check", "--law", "L2.2-subassociativity", "--json", "--timing"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn find_cex_reports_a_small_witness() {
    let o =
        multirel(&["find-cex", "--lhs", "a(R * S)", "--rhs", "a(R) ; a(S)", "--rel", "==", "--sizes", "2,2", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let cex = &v["counterexamples"][0]["bindings"];
    let rows = |m: &serde_json::Value| {
        m["rows"].as_array().unwrap().iter().flat_map(|r| r.as_array().unwrap().clone()).collect::<Vec<_>>()
    };
    let masks: Vec<_> = rows(&cex["R"]).into_iter().chain(rows(&cex["S"])).collect();
    assert!(masks.len() <= 2, "{cex}");
    assert!(masks.iter().all(|m| m.as_array().unwrap().len() <= 2), "{cex}");

    let o = multirel(&["find-cex", "--lhs", "(R * S) * T", "--rhs", "R * (S * T)", "--rel", "<=", "--sizes", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(multirel(&["find-cex", "--lhs", "R", "--rhs", "R", "--rel", "~"]).status.code(), Some(2));
}

#[test]
fn convert_writes_canonical_json() {
    let input = temp("messy.json", r#"{ "rows": [[[1,0],[0]], []], "dst": 2, "src": 2 }"#);
    let out = temp("clean.json", "");
    let o = multirel(&["convert", "--in", input.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let clean = std::fs::read_to_string(&out).unwrap();
    assert_eq!(clean.trim(), r#"{"src":2,"dst":2,"rows":[[[0],[0,1]],[]]}"#);
    let again = temp("again.json", "");
    multirel(&["convert", "--in", out.to_str().unwrap(), "--out", again.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(again).unwrap(), clean);
    let env = temp("env2.json", ENV);
    let o = multirel(&["convert", "--in", env.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let bad = temp("bad.json", r#"{"src":1}"#);
    assert_eq!(
        multirel(&["convert", "--in", bad.to_str().unwrap(), "--out", out.to_str().unwrap()]).status.code(),
        Some(2)
    );
}
