//! End-to-end runs of the `gtrel` binary.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn gtrel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gtrel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn gtrel_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gtrel"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn verdict<'a>(report: &'a Value, sigma: &str) -> &'a Value {
    report["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .find(|v| v["sigma"] == sigma)
        .unwrap()
}

#[test]
fn analyze_generic_pointed_weight() {
    let report = json(&gtrel(&[
        "analyze",
        "--n",
        "3",
        "--lambda",
        "-1/6,-2/3,5/6",
    ]));
    assert_eq!(report["version"], 1);
    assert!(report["witnesses"]
        .as_array()
        .unwrap()
        .contains(&Value::from("1,2,3")));
    let s2 = verdict(&report, "1,3,2");
    assert_eq!(s2["accepted"], false);
    assert_eq!(s2["reason"], "critical");
}

#[test]
fn analyze_minus_rho() {
    let report = json(&gtrel(&["analyze", "--n", "3", "--lambda", "-1,0,1"]));
    assert_eq!(verdict(&report, "1,2,3")["reason"], "critical");
    assert_eq!(verdict(&report, "1,3,2")["accepted"], true);
    assert_eq!(report["shifted"], serde_json::json!(["-1", "-1", "-1"]));
}

#[test]
fn build_finite_module() {
    let report = json(&gtrel(&[
        "build", "--lambda", "2,1,0", "--sigma", "1,2,3", "--window", "10",
    ]));
    assert_eq!(report["dimension"], 8);
    assert_eq!(report["complete"], true);
    assert_eq!(report["basis"].as_array().unwrap().len(), 8);
}

#[test]
fn witnesses_report_bound() {
    let report = json(&gtrel(&["witnesses", "--lambda", "0,1,2,3"]));
    assert_eq!(report["count"], 0);
    let report = json(&gtrel(&["witnesses", "--lambda", "1/2,1/3,1/5"]));
    assert_eq!(report["count"], 6);
    assert_eq!(report["lower_bound"]["bound"], 6);
}

#[test]
fn emitted_json_reads_back() {
    let report = json(&gtrel(&[
        "build",
        "--lambda",
        "-1/6,-2/3,5/6",
        "--window",
        "1",
    ]));
    let seed = serde_json::to_string(&report["seed"]).unwrap();
    let graph = scratch(
        "generic_graph.json",
        &serde_json::to_string(&report["graph"]).unwrap(),
    );
    let image = json(&gtrel_stdin(
        &[
            "act",
            "--tableau",
            "-",
            "--graph",
            graph.to_str().unwrap(),
            "--op",
            "E 2 1",
        ],
        &seed,
    ));
    let terms = image["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0]["coefficient"], "1");

    // every basis tableau is accepted back and rendered with a graph
    for t in report["basis"].as_array().unwrap() {
        let rendered = json(&gtrel_stdin(
            &["render", "--tableau", "-", "--format", "json"],
            &t.to_string(),
        ));
        assert_eq!(&rendered["tableau"], t);
    }
    let rendered = json(&gtrel_stdin(
        &["render", "--tableau", "-", "--format", "json"],
        &seed,
    ));
    assert_eq!(rendered["graph"], report["graph"]);
}

#[test]
fn twisted_action_matches_swapped_operator() {
    let seed = r#"{"n":3,"rows":[["2","0","-2"],["1","0"],["1"]]}"#;
    let twisted = gtrel_stdin(
        &["act", "--tableau", "-", "--op", "E 2 3", "--sigma", "1,3,2"],
        seed,
    );
    let plain = gtrel_stdin(&["act", "--tableau", "-", "--op", "E 3 2"], seed);
    let (twisted, plain) = (json(&twisted), json(&plain));
    assert_eq!(twisted["terms"], plain["terms"]);
    assert!(!plain["terms"].as_array().unwrap().is_empty());
}

#[test]
fn localize_reports_simplicity() {
    let simple = json(&gtrel(&[
        "localize",
        "--lambda",
        "-1/6,-2/3,5/6",
        "--z",
        "1/3",
    ]));
    assert_eq!(simple["simple"], true);
    assert_eq!(simple["relation_graph"], true);
    let integral = json(&gtrel(&[
        "localize",
        "--lambda",
        "-1/6,-2/3,5/6",
        "--z",
        "1",
    ]));
    assert_eq!(integral["simple"], false);
    let functor = json(&gtrel(&[
        "localize",
        "--lambda",
        "-1/6,-2/3,5/6",
        "--functor",
    ]));
    assert_eq!(functor["operation"], "twisting_functor");
    let dot = gtrel(&["localize", "--lambda", "-1/6,-2/3,5/6", "--format", "dot"]);
    assert!(String::from_utf8(dot.stdout)
        .unwrap()
        .contains("// simple: "));
}

#[test]
fn brackets_pass_on_finite_module() {
    let report = json(&gtrel(&[
        "brackets", "--lambda", "2,1,0", "--sigma", "2,3,1", "--window", "10",
    ]));
    assert_eq!(report["passed"], true);
    assert_eq!(report["vectors_checked"], 8);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["analyze", "--lambda", "-1/2,1/3,0,2"][..],
        &["build", "--lambda", "-1/6,-2/3,5/6", "--window", "2"][..],
        &["witnesses", "--lambda", "1,0,1/2,3", "--jobs", "2"][..],
        &["render", "--lambda", "-1,0,1", "--sigma", "1,3,2"][..],
    ] {
        let (a, b) = (gtrel(args), gtrel(args));
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| gtrel(args).status.code();
    assert_eq!(code(&["build", "--lambda", "-1,0,1"]), Some(1));
    assert_eq!(code(&["localize", "--lambda", "2,1,0"]), Some(1));
    assert_eq!(code(&["analyze", "--lambda", "1/x,0"]), Some(2));
    assert_eq!(code(&["analyze", "--n", "4", "--lambda", "1,0,0"]), Some(2));
    assert_eq!(
        code(&["build", "--lambda", "2,1,0", "--sigma", "1,1,2"]),
        Some(2)
    );
    assert_eq!(
        code(&["build", "--lambda", "2,1,0", "--window", "1000"]),
        Some(2)
    );
    assert_eq!(code(&["analyze", "--lambda", "0,0,0,0,0,0,0,0"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
    let bad_op = gtrel_stdin(
        &["act", "--tableau", "-", "--op", "E 1 9"],
        r#"{"n":2,"rows":[["1","0"],["0"]]}"#,
    );
    assert_eq!(bad_op.status.code(), Some(2));
    let not_json = gtrel_stdin(&["act", "--tableau", "-", "--op", "E 1 2"], "rows");
    assert_eq!(not_json.status.code(), Some(2));
}
