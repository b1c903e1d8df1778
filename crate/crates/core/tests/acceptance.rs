//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use ccl::checker::fuzz::{fuzz, Summary};
use ccl::checker::{check_derivation, Derivation, Report};
use ccl::corpus::{builtin, coherence_entry, run_entry};
use ccl::opsem::{trace, DEFAULT_FUEL};
use ccl::props::{run_suite, Suite};

const CASES: u64 = 10_000;
const SEED: u64 = 0x5eed;

struct Line {
    name: &'static str,
    ok: bool,
    detail: String,
}

fn suite(name: &'static str, s: Suite) -> Line {
    let start = Instant::now();
    let r = run_suite(s, CASES, SEED);
    Line { name, ok: r.passed() && r.cases == CASES, detail: format!("{r} in {:.2?}", start.elapsed()) }
}

fn transcription() -> Line {
    let t = common::transcription();
    let ok = t.covered == t.total && t.failures.is_empty() && t.elapsed < Duration::from_secs(5);
    let mut detail = format!("{}/{} rules, {} failures, {:.2?}", t.covered, t.total, t.failures.len(), t.elapsed);
    if let Some(f) = t.failures.first() {
        detail.push_str(&format!("; first: {f}"));
    }
    Line { name: "rule transcription", ok, detail }
}

fn determinacy() -> Line {
    suite("determinacy and exclusivity", Suite::Exclusivity)
}

fn dim_preservation() -> Line {
    suite("dimension preservation", Suite::DimPreservation)
}

fn stability() -> Line {
    suite("cubical stability", Suite::Stability)
}

const REQUIRED: &[&str] = &[
    "bool/hcom",
    "wbool/hcom",
    "wbool/if-fcom",
    "kan/com",
    "circle/elim-loop",
    "circle/elim-fcom",
    "ua/coe-0",
    "ua/coe-1",
    "ua/coe-name",
    "univ/cap-box",
];

fn canonicity() -> Line {
    let entries = builtin();
    let start = Instant::now();
    let results: Vec<_> = entries.iter().map(|e| run_entry(e, DEFAULT_FUEL)).collect();
    let elapsed = start.elapsed();
    let bools = entries.iter().filter(|e| e.ty() == Some("bool")).count();
    let nats = entries.iter().filter(|e| e.ty() == Some("nat")).count();
    let failed: Vec<&str> = results.iter().filter(|r| !r.ok).map(|r| r.name.as_str()).collect();
    let expected = entries.iter().all(|e| e.expected.is_some());

    let mut fired = BTreeSet::new();
    for e in &entries {
        for s in trace(&e.term().unwrap(), DEFAULT_FUEL).steps {
            fired.insert(s.rule);
        }
    }
    let missing: Vec<&str> = REQUIRED.iter().copied().filter(|r| !fired.contains(r)).collect();

    let ok = bools >= 12
        && nats >= 4
        && expected
        && failed.is_empty()
        && missing.is_empty()
        && elapsed < Duration::from_secs(10);
    let mut detail = format!("{bools} bool, {nats} nat, {} failed, {elapsed:.2?}", failed.len());
    if !failed.is_empty() {
        detail.push_str(&format!("; failed: {}", failed.join(" ")));
    }
    if !missing.is_empty() {
        detail.push_str(&format!("; never fired: {}", missing.join(" ")));
    }
    if !expected {
        detail.push_str("; some entry has no expected value");
    }
    Line { name: "canonicity corpus", ok, detail }
}

fn coherence() -> Line {
    let start = Instant::now();
    let bools: Vec<_> = builtin().into_iter().filter(|e| e.ty() == Some("bool")).collect();
    let errs: Vec<String> = bools
        .iter()
        .enumerate()
        .filter_map(|(i, e)| coherence_entry(e, 100, SEED + i as u64, DEFAULT_FUEL).err())
        .collect();
    let mut detail = format!("{} programs x 100 pairs, {} failures, {:.2?}", bools.len(), errs.len(), start.elapsed());
    if let Some(e) = errs.first() {
        detail.push_str(&format!("; first: {e}"));
    }
    Line { name: "coherence at bool", ok: !bools.is_empty() && errs.is_empty(), detail }
}

fn derivations() -> Line {
    let start = Instant::now();
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus/derivations");
    let mut paths: Vec<_> = fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    paths.sort();
    let mut rejected = Vec::new();
    let mut total = Summary::default();
    for p in &paths {
        let name = p.file_stem().unwrap().to_string_lossy().into_owned();
        let d = fs::read_to_string(p)
            .map_err(|e| e.to_string())
            .and_then(|s| serde_json::from_str(&s).map_err(|e| e.to_string()))
            .and_then(|v| Derivation::from_json(&v).map_err(|r| r.to_string()));
        let d = match d {
            Ok(d) => d,
            Err(_) => {
                rejected.push(name);
                continue;
            }
        };
        if check_derivation(&d) != Report::Ok {
            rejected.push(name);
            continue;
        }
        match fuzz(&d) {
            Ok(s) => total.merge(s),
            Err(_) => rejected.push(name),
        }
    }
    let accepted = paths.len() - rejected.len();
    let false_acc = total.false_acceptances.len();
    let ok = accepted >= 20 && rejected.is_empty() && total.total >= 200 && false_acc == 0;
    let mut detail = format!(
        "{accepted}/{} accepted, {} mutants: {} rejected, {} neutral, {} vacuous, {false_acc} false acceptances, {:.2?}",
        paths.len(),
        total.total,
        total.rejected,
        total.neutral,
        total.vacuous,
        start.elapsed()
    );
    if !rejected.is_empty() {
        detail.push_str(&format!("; not accepted: {}", rejected.join(" ")));
    }
    Line { name: "derivation corpus", ok, detail }
}

fn functoriality_and_roundtrip() -> Line {
    let a = suite("", Suite::SubstFunctoriality);
    let b = suite("", Suite::Roundtrip);
    Line { name: "substitution functoriality and round-trip", ok: a.ok && b.ok, detail: format!("{}; {}", a.detail, b.detail) }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let checks: [fn() -> Line; 8] = [
        transcription,
        determinacy,
        dim_preservation,
        stability,
        canonicity,
        coherence,
        derivations,
        functoriality_and_roundtrip,
    ];
    let mut lines: Vec<Line> = checks.iter().map(|f| f()).collect();
    let elapsed = start.elapsed();
    lines.push(Line {
        name: "battery under 60 s",
        ok: elapsed < Duration::from_secs(60),
        detail: format!("acceptance run took {elapsed:.2?}"),
    });

    let mut all = true;
    for l in &lines {
        println!("{} {}: {}", if l.ok { "PASS" } else { "FAIL" }, l.name, l.detail);
        all &= l.ok;
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
