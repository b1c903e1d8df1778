mod common;

use ccl::opsem::RULES;

#[test]
fn every_rule_is_transcribed() {
    let t = common::transcription();
    for f in &t.failures {
        eprintln!("{f}\n");
    }
    assert!(t.failures.is_empty(), "{} failures", t.failures.len());
    let missing: Vec<_> = RULES.iter().map(|r| r.id).filter(|id| !common::cases().iter().any(|c| c.rule == *id)).collect();
    assert!(missing.is_empty(), "no case for {missing:?}");
    assert_eq!(t.covered, t.total);
}

#[test]
fn one_case_per_rule() {
    let cases = common::cases();
    assert_eq!(cases.len(), RULES.len());
}
