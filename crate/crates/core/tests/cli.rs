use std::fs;
use std::path::Path;

use ccl::cli::run;

fn ccl(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["ccl"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn program(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn manifest(rel: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join(rel).to_string_lossy().into_owned()
}

#[test]
fn eval_prints_the_value() {
    let dir = tempfile::tempdir().unwrap();
    let f = program(dir.path(), "a.ccl", "-- a comment\nS1elim (c. bool) (loop 0) true (x. true)\n");
    assert_eq!(ccl(&["eval", &f]), (0, "true\n".into(), String::new()));
    let f = program(dir.path(), "b.ccl", "*");
    assert_eq!(ccl(&["eval", &f]).1, "*\n");
}

#[test]
fn stuck_and_exhausted_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let f = program(dir.path(), "stuck.ccl", "fst true");
    let (code, _, err) = ccl(&["eval", &f]);
    assert_eq!(code, 1);
    assert!(err.starts_with("stuck:"), "{err}");
    let f = program(dir.path(), "omega.ccl", "app (lam a. app a a) (lam a. app a a)");
    let (code, _, err) = ccl(&["eval", &f, "--fuel", "50"]);
    assert_eq!(code, 1);
    assert!(err.contains("fuel exhausted after 50 steps"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let f = program(dir.path(), "bad.ccl", "lam a.");
    assert_eq!(ccl(&["eval", &f]).0, 2);
    assert_eq!(ccl(&["eval", "/nonexistent/file.ccl"]).0, 2);
    assert_eq!(ccl(&["frobnicate"]).0, 2);
    assert_eq!(ccl(&["proptest", "no-such-suite", "--n", "1"]).0, 2);
    assert_eq!(ccl(&["--help"]).0, 0);
}

#[test]
fn trace_lists_steps() {
    let dir = tempfile::tempdir().unwrap();
    let f = program(dir.path(), "t.ccl", "if (b. bool) (fst (pair false true)) true false");
    let (code, out, _) = ccl(&["trace", &f]);
    assert_eq!(code, 0);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines.len(), 3, "{out}");
    assert!(lines[0].contains("sigma/fst-beta") && lines[0].contains("stable"));
    assert!(lines[1].contains("bool/if-false"));
    assert_eq!(lines[2], "value (stable, 2 steps): false");

    let (code, out, _) = ccl(&["trace", &f, "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["steps"].as_array().unwrap().len(), 2);
}

#[test]
fn check_reports_ok_and_errors() {
    let good = manifest("corpus/derivations/if-false.json");
    assert_eq!(ccl(&["check", &good]), (0, "ok\n".into(), String::new()));
    let (code, out, _) = ccl(&["check", &good, "--json"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"{"ok":true}"#);

    let dir = tempfile::tempdir().unwrap();
    let text = fs::read_to_string(&good).unwrap().replace("\"false\"", "\"true\"");
    let bad = program(dir.path(), "bad.json", &text);
    let (code, out, _) = ccl(&["check", &bad, "--json"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["ok"], false);
    assert!(v["reason"].as_str().unwrap().contains("steps stably"));

    let junk = program(dir.path(), "junk.json", "{ not json");
    assert_eq!(ccl(&["check", &junk]).0, 2);
}

#[test]
fn canonicity_runs_a_directory() {
    let (code, out, _) = ccl(&["canonicity", &manifest("corpus/canonicity")]);
    assert_eq!(code, 0, "{out}");
    assert!(out.trim_end().ends_with("22/22 programs canonical"), "{out}");

    let dir = tempfile::tempdir().unwrap();
    program(dir.path(), "ok.ccl", "-- expect: true\n-- tags: bool\nif (b. bool) false false true\n");
    program(dir.path(), "wrong.ccl", "-- expect: false\n-- tags: bool\ntrue\n");
    let (code, out, _) = ccl(&["canonicity", &dir.path().to_string_lossy()]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL (expected false)"), "{out}");
    assert!(out.trim_end().ends_with("1/2 programs canonical"));

    let empty = tempfile::tempdir().unwrap();
    assert_eq!(ccl(&["canonicity", &empty.path().to_string_lossy()]).0, 2);
}

#[test]
fn proptest_runs_a_suite() {
    let (code, out, _) = ccl(&["proptest", "roundtrip", "--n", "200", "--seed", "4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("roundtrip: pass (200 cases"), "{out}");
}
