use std::fs;
use std::path::{Path, PathBuf};

use ccl::checker::fuzz::{fuzz, Summary};
use ccl::checker::{check_derivation, Derivation, Report};
use serde_json::Value;

fn corpus() -> Vec<(PathBuf, Derivation)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus/derivations");
    let mut paths: Vec<_> = fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let v: Value = serde_json::from_str(&fs::read_to_string(&p).unwrap()).unwrap();
            let d = Derivation::from_json(&v).unwrap_or_else(|r| panic!("{}: {r}", p.display()));
            (p, d)
        })
        .collect()
}

fn rules(d: &Derivation, out: &mut Vec<String>) {
    out.push(d.rule.clone());
    for c in &d.children {
        rules(c, out);
    }
}

#[test]
fn corpus_is_accepted() {
    let c = corpus();
    assert!(c.len() >= 20);
    for (p, d) in &c {
        assert_eq!(check_derivation(d), Report::Ok, "{}", p.display());
    }
}

#[test]
fn corpus_spans_every_paragraph() {
    let mut used = Vec::new();
    for (_, d) in corpus() {
        rules(&d, &mut used);
    }
    for para in ["struct", "restrict", "comp", "kan", "fun", "sigma", "path", "eq", "void", "nat", "bool", "wbool", "circle", "ua", "univ"] {
        assert!(used.iter().any(|r| r.starts_with(&format!("{para}/"))), "no {para} rule used");
    }
}

#[test]
fn mutations_are_rejected() {
    let mut total = Summary::default();
    for (p, d) in corpus() {
        let s = fuzz(&d).unwrap();
        assert!(s.false_acceptances.is_empty(), "{}: {:?}", p.display(), s.false_acceptances);
        total.merge(s);
    }
    assert!(total.total >= 200, "only {} mutants", total.total);
    assert_eq!(total.total, total.rejected + total.neutral + total.vacuous);
}

#[test]
fn vacuous_nodes_accept_any_rule() {
    let (_, d) = corpus().into_iter().find(|(p, _)| p.ends_with("hcom-eq.json")).unwrap();
    let s = fuzz(&d).unwrap();
    assert_eq!(s.vacuous, 2);
}

#[test]
fn wrong_conclusion_is_located() {
    let (_, d) = corpus().into_iter().find(|(p, _)| p.ends_with("if-false.json")).unwrap();
    let mut v = d.to_json();
    *v.pointer_mut("/children/0/conclusion/form/lhs").unwrap() = Value::String("true".into());
    *v.pointer_mut("/children/0/conclusion/form/rhs").unwrap() = Value::String("true".into());
    let bad = Derivation::from_json(&v).unwrap();
    match check_derivation(&bad) {
        Report::Err { path, .. } => assert_eq!(path, vec![0]),
        Report::Ok => panic!("accepted a wrong child"),
    }
}
