//! Randomized property suites over generated terms.
//!
//! Cases are independent and run in parallel; the report is ordered by case
//! index, and the first failing case is shrunk before it is reported.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::Value;

use crate::cube::{DimCtx, DimSubst};
use crate::corpus::builtin;
use crate::gen::{shrink, Case, Gen, GenConfig};
use crate::opsem::fires::fires;
use crate::opsem::{eval, step, StepOutcome, DEFAULT_FUEL};
use crate::syntax::{alpha_eq, apply_subst, parse, print, term_from_json, term_to_json, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    DimPreservation,
    Stability,
    SubstFunctoriality,
    Exclusivity,
    Roundtrip,
    CoherenceBool,
}

pub const SUITES: &[Suite] = &[
    Suite::DimPreservation,
    Suite::Stability,
    Suite::SubstFunctoriality,
    Suite::Exclusivity,
    Suite::Roundtrip,
    Suite::CoherenceBool,
];

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::DimPreservation => "dim-preservation",
            Suite::Stability => "stability",
            Suite::SubstFunctoriality => "subst-functoriality",
            Suite::Exclusivity => "exclusivity",
            Suite::Roundtrip => "roundtrip",
            Suite::CoherenceBool => "coherence-bool",
        }
    }

    fn check(self, m: &Term, psi: &DimCtx, subs: &[DimSubst]) -> Outcome {
        match self {
            Suite::DimPreservation => dim_preservation(m),
            Suite::Stability => stability(m, &subs[0]),
            Suite::SubstFunctoriality => functoriality(m, psi, &subs[0], &subs[1]),
            Suite::Exclusivity => exclusivity(m),
            Suite::Roundtrip => roundtrip(m),
            Suite::CoherenceBool => coherence(m, &subs[0], &subs[1], DEFAULT_FUEL, true),
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Suite, String> {
        SUITES.iter().copied().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<_> = SUITES.iter().map(|x| x.name()).collect();
            format!("unknown suite `{s}`; expected one of {}", names.join(", "))
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The property's premise did not hold for this case.
    Vacuous,
    Fail(String),
}

#[derive(Clone, Debug)]
pub struct Counterexample {
    pub index: u64,
    pub psi: DimCtx,
    pub original: Term,
    pub shrunk: Term,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: u64,
    /// Cases where the property's premise held.
    pub exercised: u64,
    pub failure: Option<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "{}: pass ({} cases, {} exercised)", self.suite, self.cases, self.exercised),
            Some(c) => {
                writeln!(f, "{}: FAIL at case {} in [{}]", self.suite, c.index, c.psi)?;
                writeln!(f, "  term:   {}", print(&c.original))?;
                writeln!(f, "  shrunk: {}", print(&c.shrunk))?;
                write!(f, "  reason: {}", c.reason)
            }
        }
    }
}

/// Coherence only holds for well-typed programs, so its cases cycle through
/// the boolean corpus programs instead of generated terms.
fn coherence_program(index: u64) -> (DimCtx, Term) {
    let progs: Vec<Term> = builtin().into_iter().filter(|e| e.ty() == Some("bool")).map(|e| e.term().expect("shipped corpus parses")).collect();
    let m = progs[(index % progs.len() as u64) as usize].clone();
    (DimCtx::from_names(m.fd()).expect("a set of names"), m)
}

fn case_input(suite: Suite, cfg: &GenConfig, index: u64) -> (DimCtx, Term, Vec<DimSubst>) {
    let mut g = Gen::for_case(cfg, index);
    let c = if suite == Suite::CoherenceBool {
        let (psi, term) = coherence_program(index);
        Case { psi, term }
    } else {
        g.case()
    };
    let s1 = g.subst(&c.psi);
    let s2 = g.subst(s1.target());
    (c.psi, c.term, vec![s1, s2])
}

pub fn run_suite(suite: Suite, n: u64, seed: u64) -> SuiteReport {
    let cfg = GenConfig { seed, ..GenConfig::default() };
    let results: Vec<Outcome> = (0..n)
        .into_par_iter()
        .map(|i| {
            let (psi, m, subs) = case_input(suite, &cfg, i);
            suite.check(&m, &psi, &subs)
        })
        .collect();
    let exercised = results.iter().filter(|o| **o == Outcome::Pass).count() as u64;
    let failure = results.iter().position(|o| matches!(o, Outcome::Fail(_))).map(|i| {
        let (psi, m, subs) = case_input(suite, &cfg, i as u64);
        let fails = |t: &Term| matches!(suite.check(t, &psi, &subs), Outcome::Fail(_));
        let shrunk = shrink(&m, &psi, fails);
        let Outcome::Fail(reason) = suite.check(&shrunk, &psi, &subs) else { unreachable!("shrinking keeps failures") };
        Counterexample { index: i as u64, psi, original: m, shrunk, reason }
    });
    SuiteReport { suite, cases: n, exercised, failure }
}

/// Free dimension names read off the JSON form, independently of the
/// term traversal used by the evaluator.
pub fn json_free_dims(v: &Value) -> BTreeSet<String> {
    fn go(v: &Value, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        let Some(o) = v.as_object() else { return };
        if let Some(ds) = o.get("dims").and_then(Value::as_array) {
            for d in ds.iter().filter_map(Value::as_str) {
                if d != "0" && d != "1" && !bound.iter().any(|b| b == d) {
                    out.insert(d.to_string());
                }
            }
        }
        for a in o.get("args").and_then(Value::as_array).into_iter().flatten() {
            match (a.get("bind").and_then(Value::as_array), a.get("body")) {
                (Some(names), Some(body)) => {
                    let k = bound.len();
                    bound.extend(names.iter().filter_map(Value::as_str).map(String::from));
                    go(body, bound, out);
                    bound.truncate(k);
                }
                _ => go(a, bound, out),
            }
        }
    }
    let mut out = BTreeSet::new();
    go(v, &mut Vec::new(), &mut out);
    out
}

fn dim_preservation(m: &Term) -> Outcome {
    let StepOutcome::StepsTo { next, rule, .. } = step(m) else { return Outcome::Vacuous };
    let before = json_free_dims(&term_to_json(m));
    let after = json_free_dims(&term_to_json(&next));
    match after.difference(&before).next() {
        None => Outcome::Pass,
        Some(x) => Outcome::Fail(format!("{rule} introduced {x}: {}", print(&next))),
    }
}

fn stability(m: &Term, s: &DimSubst) -> Outcome {
    let ms = match apply_subst(m, s) {
        Ok(t) => t,
        Err(e) => return Outcome::Fail(format!("substitution failed: {e}")),
    };
    match step(m) {
        StepOutcome::StepsTo { next, stable: true, rule, .. } => {
            let want = match apply_subst(&next, s) {
                Ok(t) => t,
                Err(e) => return Outcome::Fail(format!("{rule}: step-then-substitute failed: {e}")),
            };
            match step(&ms) {
                StepOutcome::StepsTo { next: got, .. } if alpha_eq(&got, &want) => Outcome::Pass,
                StepOutcome::StepsTo { next: got, rule: r2, .. } => Outcome::Fail(format!(
                    "{rule} under {s}: substitute-then-step gives {} by {r2}, step-then-substitute gives {}",
                    print(&got),
                    print(&want)
                )),
                other => Outcome::Fail(format!("{rule} under {s}: substituted term does not step ({other:?})")),
            }
        }
        StepOutcome::Value { stable: true, rule } => match step(&ms) {
            StepOutcome::Value { .. } => Outcome::Pass,
            other => Outcome::Fail(format!("value by {rule} is not a value under {s}: {other:?}")),
        },
        _ => Outcome::Vacuous,
    }
}

fn functoriality(m: &Term, psi: &DimCtx, s1: &DimSubst, s2: &DimSubst) -> Outcome {
    let run = || -> Result<Outcome, String> {
        let id = apply_subst(m, &DimSubst::identity(psi)).map_err(|e| e.to_string())?;
        if !alpha_eq(&id, m) {
            return Ok(Outcome::Fail(format!("identity substitution changed the term to {}", print(&id))));
        }
        let stepwise = apply_subst(&apply_subst(m, s1).map_err(|e| e.to_string())?, s2).map_err(|e| e.to_string())?;
        let composed = apply_subst(m, &s1.compose(s2).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        Ok(if alpha_eq(&stepwise, &composed) {
            Outcome::Pass
        } else {
            Outcome::Fail(format!("{s1} then {s2}: {} vs {}", print(&stepwise), print(&composed)))
        })
    };
    run().unwrap_or_else(Outcome::Fail)
}

fn exclusivity(m: &Term) -> Outcome {
    let fired = fires(m);
    let out = step(m);
    let want: Vec<&str> = match &out {
        StepOutcome::Stuck { .. } => vec![],
        o => vec![o.root_rule().expect("value or step has a rule")],
    };
    if fired == want {
        Outcome::Pass
    } else {
        Outcome::Fail(format!("rules {fired:?} apply, the stepper used {want:?}"))
    }
}

fn roundtrip(m: &Term) -> Outcome {
    let text = print(m);
    match parse(&text) {
        Ok(back) if back == *m => {}
        Ok(back) => return Outcome::Fail(format!("printed as `{text}`, parsed back as `{}`", print(&back))),
        Err(e) => return Outcome::Fail(format!("printed as `{text}`, which does not parse: {e}")),
    }
    match term_from_json(&term_to_json(m)) {
        Ok(back) if back == *m => Outcome::Pass,
        Ok(back) => Outcome::Fail(format!("JSON round trip gave `{}`", print(&back))),
        Err(e) => Outcome::Fail(format!("JSON round trip failed: {e}")),
    }
}

fn is_bool(v: &Term) -> bool {
    matches!(v, Term::True | Term::False)
}

/// Evaluate-then-substitute-then-evaluate against substitute-then-evaluate,
/// observed at booleans. With `strict`, every evaluation must succeed.
pub fn coherence(m: &Term, s1: &DimSubst, s2: &DimSubst, fuel: u64, strict: bool) -> Outcome {
    let skip = |why: String| if strict { Outcome::Fail(why) } else { Outcome::Vacuous };
    let (m1, m12) = match (apply_subst(m, s1), apply_subst(m, &s1.compose(s2).expect("chained"))) {
        (Ok(a), Ok(b)) => (a, b),
        _ => return Outcome::Fail(format!("substitution {s1} then {s2} out of scope")),
    };
    let v1 = match eval(&m1, fuel) {
        Ok(e) if is_bool(&e.value) => e.value,
        Ok(e) => return skip(format!("under {s1} the value is {}", print(&e.value))),
        Err(e) => return skip(format!("under {s1}: {e}")),
    };
    let w1 = match apply_subst(&v1, s2).map(|v| eval(&v, fuel)) {
        Ok(Ok(e)) => e.value,
        _ => return Outcome::Fail(format!("value {} does not re-evaluate under {s2}", print(&v1))),
    };
    match eval(&m12, fuel) {
        Ok(e) if alpha_eq(&e.value, &w1) => Outcome::Pass,
        Ok(e) => Outcome::Fail(format!(
            "under {s1} then {s2}: evaluating first gives {}, substituting first gives {}",
            print(&w1),
            print(&e.value)
        )),
        Err(e) => Outcome::Fail(format!("under {s1} then {s2}, {} fails: {e}", print(&m12))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_parse() {
        for s in SUITES {
            assert_eq!(s.name().parse::<Suite>().unwrap(), *s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn json_free_dims_respects_binders() {
        let m = parse("dlam y. hcom bool 0 ~> x true [y=0 z. loop z] [w=1 z. true]").unwrap();
        let fd = json_free_dims(&term_to_json(&m));
        assert_eq!(fd.into_iter().collect::<Vec<_>>(), vec!["w".to_string(), "x".to_string()]);
    }

    #[test]
    fn small_runs_pass() {
        for s in SUITES {
            let r = run_suite(*s, 300, 3);
            assert!(r.passed(), "{r}");
            assert!(r.exercised > 0, "{s} exercised nothing");
        }
    }
}
