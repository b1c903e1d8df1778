use std::fs;

use ccl::cli::{run, FUEL_VAR};

fn eval(path: &str, extra: &[&str]) -> (i32, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["ccl", "eval", path];
    argv.extend_from_slice(extra);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(err).unwrap())
}

#[test]
fn fuel_comes_from_flag_then_environment() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("omega.ccl");
    fs::write(&p, "app (lam a. app a a) (lam a. app a a)").unwrap();
    let p = p.to_string_lossy().into_owned();

    std::env::set_var(FUEL_VAR, "7");
    let (code, err) = eval(&p, &[]);
    assert_eq!(code, 1);
    assert!(err.contains("after 7 steps"), "{err}");

    let (_, err) = eval(&p, &["--fuel", "3"]);
    assert!(err.contains("after 3 steps"), "{err}");

    std::env::set_var(FUEL_VAR, "lots");
    assert_eq!(eval(&p, &[]).0, 2);
    std::env::remove_var(FUEL_VAR);
}
