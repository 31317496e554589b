use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_logcert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

const TRINOMIAL_FROM_4: &str =
    r#"{"kind":"three_term","a":["1","1"],"b":["1","2"],"c":["0","3"],"start":4,"initial":["19","51"]}"#;

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn trinomial_root_increasing() {
    let out = run(&[
        "check", "--family", "trinomial", "--property", "root-inc", "--from", "1", "--to", "60", "--strict",
    ]);
    assert_eq!(code(&out), 0);
    let r = report(&out);
    assert_eq!(r["result"]["status"], "holds");
    assert_eq!(r["result"]["verdict"]["holds"], true);
}

#[test]
fn fibonacci_is_not_log_convex() {
    let out = run(&["check", "--family", "fibonacci", "--property", "log-convex", "--from", "2", "--to", "50"]);
    assert_eq!(code(&out), 1);
    let v = &report(&out)["result"]["verdict"]["first_violation"];
    assert_eq!(v["index"], 3);
    assert_eq!(v["difference"], "-1/1");
}

#[test]
fn domb_csv() {
    let out = run(&["gen", "--family", "domb", "--from", "0", "--to", "5", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "1,4,28,256,2716,31504");
}

#[test]
fn json_values_are_fraction_strings() {
    let out = run(&["gen", "--family", "bernoulli", "--to", "2"]);
    let r = report(&out);
    let values: Vec<&str> = r["result"]["values"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(values, ["1/1", "-1/2", "1/6"]);
}

#[test]
fn csv_writes_non_integers_as_fractions() {
    let out = run(&["gen", "--family", "bernoulli", "--to", "4", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "1,-1/2,1/6,0,-1/30");
}

#[test]
fn certify_then_replay() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["certify", "--family", "bell", "--theorem", "t21", "--N", "1", "--horizon", "60"]);
    assert_eq!(code(&out), 0);
    let report_path = write(dir.path(), "report.json", &String::from_utf8(out.stdout.clone()).unwrap());
    let replayed = run(&["replay", "--certificate", &report_path]);
    assert_eq!(code(&replayed), 0);
    assert_eq!(report(&replayed)["result"]["replay"]["replayed"], true);

    // a bare certificate works too
    let cert = report(&out)["result"]["certificate"].to_string();
    let bare = write(dir.path(), "cert.json", &cert);
    assert_eq!(code(&run(&["replay", "--certificate", &bare])), 0);
}

#[test]
fn tampered_certificate_fails_replay() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["certify", "--family", "bell", "--theorem", "t21", "--N", "1", "--horizon", "60"]);
    let mut cert = report(&out)["result"]["certificate"].clone();
    cert["claim"]["scope"]["to"] = Value::from(500);
    let path = write(dir.path(), "cert.json", &cert.to_string());
    let replayed = run(&["replay", "--certificate", &path]);
    assert_eq!(code(&replayed), 1);
    assert_eq!(report(&replayed)["result"]["status"], "fails");
}

#[test]
fn recurrence_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "trinomial.json", TRINOMIAL_FROM_4);
    let explicit = run(&["certify", "--spec", &spec, "--nu", "(12n+3)/(4n+3)"]);
    assert_eq!(code(&explicit), 0);
    assert_eq!(report(&explicit)["result"]["certificate"]["theorem"], "P23");

    let searched = run(&["certify", "--spec", &spec, "--auto-nu"]);
    assert_eq!(code(&searched), 0);

    let out = run(&[
        "certify", "--family", "trinomial", "--theorem", "t21", "--N", "4", "--horizon", "60", "--direct-from", "1",
        "--tail-spec", &spec, "--tail-nu", "(12n+3)/(4n+3)",
    ]);
    assert_eq!(code(&out), 0);
    let cert = &report(&out)["result"]["certificate"];
    assert_eq!(cert["claim"]["scope"]["kind"], "ray");
    let path = write(dir.path(), "tail.json", &cert.to_string());
    assert_eq!(code(&run(&["replay", "--certificate", &path])), 0);
}

#[test]
fn failed_hypothesis_is_reported() {
    let out = run(&["certify", "--family", "fibonacci", "--theorem", "t21", "--N", "2", "--horizon", "60"]);
    assert_eq!(code(&out), 1);
    let failure = &report(&out)["result"]["failure"];
    assert_eq!(failure["counterexample"], 3);
    assert!(failure["label"].as_str().unwrap().contains("log-convex"));
}

#[test]
fn convolution_with_certificate() {
    let out = run(&["convolve", "--x", "central_binomial", "--y", "ones", "--kind", "squared", "--to", "6", "--certify"]);
    assert_eq!(code(&out), 0);
    let r = report(&out);
    assert_eq!(r["result"]["certificate"]["theorem"], "P29");
    let csv = run(&["convolve", "--x", "ones", "--y", "ones", "--to", "5", "--format", "csv"]);
    assert_eq!(String::from_utf8(csv.stdout).unwrap().trim(), "1,2,4,8,16,32");
}

#[test]
fn reports_are_deterministic() {
    let args = ["certify", "--family", "motzkin", "--theorem", "t21", "--N", "0", "--horizon", "60"];
    let mut a = report(&run(&args));
    let mut b = report(&run(&args));
    a["timing_ms"] = Value::Null;
    b["timing_ms"] = Value::Null;
    assert_eq!(a.to_string(), b.to_string());
}

#[test]
fn parse_errors_name_the_token() {
    let out = run(&["certify", "--spec", "x.json", "--nu", "(12n+3)/(4q+3)"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8(out.stderr).unwrap().contains("q+3)"));

    let out = run(&["check", "--family", "bel", "--property", "log-convex", "--to", "9"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8(out.stderr).unwrap().contains("`bel`"));

    let out = run(&["check", "--family", "bell", "--property", "log-convexx", "--to", "9"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8(out.stderr).unwrap().contains("log-convexx"));
}

#[test]
fn schema_errors_name_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "bad.json", r#"{"kind":"three_term","a":["1"],"b":["1"],"cc":["1"]}"#);
    let out = run(&["gen", "--spec", &spec, "--to", "3"]);
    assert_eq!(code(&out), 2);
    assert!(report(&out)["result"]["error"].as_str().unwrap().contains("`cc`"));
}

#[test]
fn unknown_flags_are_rejected() {
    let out = run(&["gen", "--family", "bell", "--to", "3", "--colour"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn budget_exit_code() {
    let out = run(&[
        "check", "--family", "bell", "--property", "root-ratio-inc", "--from", "1", "--to", "30", "--digit-budget", "5",
    ]);
    assert_eq!(code(&out), 3);
    assert_eq!(report(&out)["result"]["status"], "budget_exceeded");
}
