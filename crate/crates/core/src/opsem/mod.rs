//! Deterministic weak-head evaluation with cubical-stability tagging.

pub mod fires;
mod kan;
pub mod rules;

use serde_json::{json, Value as Json};
use thiserror::Error;

use crate::cube::Dim;
use crate::syntax::build::*;
use crate::syntax::{dsubst, print, term_to_json, tsubst, Kind, Term, Tube};
use kan::{dn, Comp, FcomType, VLine, VParts};
pub use rules::{catalog_table, rule_info, RuleInfo, RuleKind, RULES};

pub type RuleId = &'static str;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepOutcome {
    Value {
        stable: bool,
        rule: RuleId,
    },
    StepsTo {
        next: Term,
        stable: bool,
        /// The rule that contracted the redex.
        rule: RuleId,
        /// Congruence rules from the root down to the redex.
        congruence: Vec<RuleId>,
    },
    Stuck {
        reason: String,
        /// Head constructors from the root down to the offending subterm.
        path: Vec<&'static str>,
        redex: Term,
    },
}

impl StepOutcome {
    pub fn is_value(&self) -> bool {
        matches!(self, StepOutcome::Value { .. })
    }

    pub fn next(&self) -> Option<&Term> {
        match self {
            StepOutcome::StepsTo { next, .. } => Some(next),
            _ => None,
        }
    }

    /// The outermost rule responsible for this outcome.
    pub fn root_rule(&self) -> Option<RuleId> {
        match self {
            StepOutcome::Value { rule, .. } => Some(rule),
            StepOutcome::StepsTo { rule, congruence, .. } => Some(congruence.first().copied().unwrap_or(rule)),
            StepOutcome::Stuck { .. } => None,
        }
    }
}

/// `Some(stable)` when `m` is a value.
pub fn is_val(m: &Term) -> Option<bool> {
    value_rule(m).map(rules::stable)
}

fn no_equation_holds(tubes: impl IntoIterator<Item = bool>) -> bool {
    tubes.into_iter().all(|h| !h)
}

pub(crate) fn value_rule(m: &Term) -> Option<RuleId> {
    Some(match m {
        Term::Pi { .. } => "types/val-pi",
        Term::Sigma { .. } => "types/val-sigma",
        Term::Path { .. } => "types/val-path",
        Term::Eq { .. } => "types/val-eq",
        Term::Void => "types/val-void",
        Term::Nat => "types/val-nat",
        Term::Bool => "types/val-bool",
        Term::WBool => "types/val-wbool",
        Term::Circle => "types/val-S1",
        Term::Univ { kind: Kind::Pre, .. } => "types/val-Upre",
        Term::Univ { kind: Kind::Kan, .. } => "types/val-Ukan",
        Term::V { dim: Dim::Name(_), .. } => "types/val-V",
        Term::Lam { .. } => "fun/val-lam",
        Term::Pair(..) => "sigma/val-pair",
        Term::DLam { .. } => "path/val-dlam",
        Term::Star => "eq/val-star",
        Term::Zero => "nat/val-zero",
        Term::Suc(_) => "nat/val-suc",
        Term::True => "bool/val-true",
        Term::False => "bool/val-false",
        Term::Base => "circle/val-base",
        Term::Loop(Dim::Name(_)) => "circle/val-loop",
        Term::VIn { dim: Dim::Name(_), .. } => "ua/val-uain",
        Term::Fcom { from, to, tubes, .. }
            if from != to && no_equation_holds(tubes.iter().map(|t| t.eq.holds())) =>
        {
            "kan/fcom-val"
        }
        Term::Boxed { from, to, tubes, .. }
            if from != to && no_equation_holds(tubes.iter().map(|t| t.eq.holds())) =>
        {
            "univ/box-val"
        }
        _ => return None,
    })
}

fn least_true<'a>(eqs: impl IntoIterator<Item = &'a crate::cube::Equation>) -> Option<usize> {
    eqs.into_iter().position(|e| e.holds())
}

fn step_to(next: Term, rule: RuleId) -> StepOutcome {
    StepOutcome::StepsTo { next, stable: rules::stable(rule), rule, congruence: Vec::new() }
}

fn stuck(m: &Term, tag: &'static str, reason: impl Into<String>) -> StepOutcome {
    StepOutcome::Stuck { reason: reason.into(), path: vec![tag], redex: m.clone() }
}

/// Steps a principal argument and rebuilds around it, or reports why the
/// argument blocks evaluation.
fn cong(
    id: RuleId,
    tag: &'static str,
    whole: &Term,
    inner: &Term,
    expected: &str,
    rebuild: impl FnOnce(Term) -> Term,
) -> StepOutcome {
    lift(id, tag, whole, inner, step(inner), expected, rebuild)
}

fn lift(
    id: RuleId,
    tag: &'static str,
    whole: &Term,
    inner: &Term,
    out: StepOutcome,
    expected: &str,
    rebuild: impl FnOnce(Term) -> Term,
) -> StepOutcome {
    match out {
        StepOutcome::StepsTo { next, stable, rule, mut congruence } => {
            congruence.insert(0, id);
            StepOutcome::StepsTo { next: rebuild(next), stable: stable && rules::stable(id), rule, congruence }
        }
        StepOutcome::Value { .. } => {
            stuck(whole, tag, format!("`{tag}` expects {expected}, found the value `{}`", print(inner)))
        }
        StepOutcome::Stuck { reason, mut path, redex } => {
            path.insert(0, tag);
            StepOutcome::Stuck { reason, path, redex }
        }
    }
}

/// One step of weak-head evaluation.
pub fn step(m: &Term) -> StepOutcome {
    if let Some(rule) = value_rule(m) {
        return StepOutcome::Value { stable: rules::stable(rule), rule };
    }
    match m {
        Term::Var(a) => stuck(m, "var", format!("free variable `{a}`")),
        Term::V { dim: Dim::Zero, a, .. } => step_to((**a).clone(), "types/V-0"),
        Term::V { dim: Dim::One, b, .. } => step_to((**b).clone(), "types/V-1"),
        Term::App(f, n) => match &**f {
            Term::Lam { var, body } => step_to(tsubst(body, n, var), "fun/beta"),
            _ => cong("fun/app-cong", "app", m, f, "a function", |f2| app(f2, (**n).clone())),
        },
        Term::Fst(p) => match &**p {
            Term::Pair(a, _) => step_to((**a).clone(), "sigma/fst-beta"),
            _ => cong("sigma/fst-cong", "fst", m, p, "a pair", fst),
        },
        Term::Snd(p) => match &**p {
            Term::Pair(_, b) => step_to((**b).clone(), "sigma/snd-beta"),
            _ => cong("sigma/snd-cong", "snd", m, p, "a pair", snd),
        },
        Term::DApp(p, r) => match &**p {
            Term::DLam { var, body } => step_to(dsubst(body, r, var), "path/beta"),
            _ => cong("path/dapp-cong", "dapp", m, p, "a path abstraction", |p2| dapp(p2, r.clone())),
        },
        Term::NatRec { scrut, zero, pred, ih, succ } => match &**scrut {
            Term::Zero => step_to((**zero).clone(), "nat/natrec-zero"),
            Term::Suc(k) => {
                let rec = Term::NatRec {
                    scrut: k.clone(),
                    zero: zero.clone(),
                    pred: pred.clone(),
                    ih: ih.clone(),
                    succ: succ.clone(),
                };
                let mut terms = std::collections::BTreeMap::new();
                terms.insert(pred.clone(), (**k).clone());
                terms.insert(ih.clone(), rec);
                let next = if pred == ih {
                    // `n a. S` with n = a: the inner binder shadows.
                    tsubst(succ, &terms[ih], ih)
                } else {
                    crate::syntax::subst_many(succ, &Default::default(), &terms)
                };
                step_to(next, "nat/natrec-suc")
            }
            _ => cong("nat/natrec-cong", "natrec", m, scrut, "a natural number", |s2| Term::NatRec {
                scrut: Box::new(s2),
                zero: zero.clone(),
                pred: pred.clone(),
                ih: ih.clone(),
                succ: succ.clone(),
            }),
        },
        Term::If { var, motive, scrut, tt, ff } => match &**scrut {
            Term::True => step_to((**tt).clone(), "bool/if-true"),
            Term::False => step_to((**ff).clone(), "bool/if-false"),
            Term::Fcom { from, to, cap, tubes } if value_rule(scrut).is_some() => {
                let mut f = m.fresh_supply();
                let elim = |n: Term| iff(var, (**motive).clone(), n, (**tt).clone(), (**ff).clone());
                step_to(kan::elim_fcom(var, motive, (from, to, cap, tubes), elim, &mut f), "wbool/if-fcom")
            }
            _ => cong("bool/if-cong", "if", m, scrut, "a boolean", |s2| {
                iff(var, (**motive).clone(), s2, (**tt).clone(), (**ff).clone())
            }),
        },
        Term::Loop(_) => step_to(Term::Base, "circle/loop-eps"),
        Term::CircElim { var, motive, scrut, base, dvar, lp } => match &**scrut {
            Term::Base => step_to((**base).clone(), "circle/elim-base"),
            Term::Loop(w @ Dim::Name(_)) => step_to(dsubst(lp, w, dvar), "circle/elim-loop"),
            Term::Fcom { from, to, cap, tubes } if value_rule(scrut).is_some() => {
                let mut f = m.fresh_supply();
                let elim = |n: Term| circ_elim(var, (**motive).clone(), n, (**base).clone(), dvar, (**lp).clone());
                step_to(kan::elim_fcom(var, motive, (from, to, cap, tubes), elim, &mut f), "circle/elim-fcom")
            }
            _ => cong("circle/elim-cong", "S1elim", m, scrut, "a circle element", |s2| {
                circ_elim(var, (**motive).clone(), s2, (**base).clone(), dvar, (**lp).clone())
            }),
        },
        Term::VIn { dim: Dim::Zero, m: a, .. } => step_to((**a).clone(), "ua/uain-0"),
        Term::VIn { dim: Dim::One, n, .. } => step_to((**n).clone(), "ua/uain-1"),
        Term::VProj { dim, m: a, f } => match dim {
            Dim::Zero => step_to(app((**f).clone(), (**a).clone()), "ua/uaproj-0"),
            Dim::One => step_to((**a).clone(), "ua/uaproj-1"),
            Dim::Name(_) => match &**a {
                Term::VIn { dim: d2, n, .. } if d2 == dim => step_to((**n).clone(), "ua/uaproj-uain"),
                _ => cong("ua/uaproj-cong", "Vproj", m, a, "a glued element", |a2| vproj(dim.clone(), a2, (**f).clone())),
            },
        },
        Term::Fcom { from, to, cap, tubes } => {
            if from == to {
                return step_to((**cap).clone(), "kan/fcom-eq");
            }
            let j = least_true(tubes.iter().map(|t| &t.eq)).expect("fcom that is not a value has a true equation");
            step_to(tubes[j].at(to), "kan/fcom-tube")
        }
        Term::Boxed { from, to, cap, tubes } => {
            if from == to {
                return step_to((**cap).clone(), "univ/box-eq");
            }
            let j = least_true(tubes.iter().map(|t| &t.eq)).expect("box that is not a value has a true equation");
            step_to(tubes[j].body.clone(), "univ/box-tube")
        }
        Term::Cap { from, to, arg, tubes } => step_cap(m, from, to, arg, tubes),
        Term::Com { var, ty, from, to, cap, tubes } => {
            let mut f = m.fresh_supply();
            step_to(kan::com_expand(var, ty, Comp { r: from, r2: to, cap, tubes }, &mut f), "kan/com")
        }
        Term::Gcom { var, ty, from, to, cap, tubes } => {
            let mut f = m.fresh_supply();
            step_to(kan::gcom_(var, ty, Comp { r: from, r2: to, cap, tubes }, &mut f), "kan/gcom")
        }
        Term::Ghcom { ty, from, to, cap, tubes } => {
            if tubes.is_empty() {
                return step_to((**cap).clone(), "kan/ghcom-empty");
            }
            let mut f = m.fresh_supply();
            step_to(kan::ghcom_(ty, Comp { r: from, r2: to, cap, tubes }, &mut f), "kan/ghcom")
        }
        Term::Hcom { ty, from, to, cap, tubes } => match step(ty) {
            StepOutcome::Value { .. } => step_hcom(m, ty, Comp { r: from, r2: to, cap, tubes }),
            out => lift("kan/hcom-cong", "hcom", m, ty, out, "a type", |t2| {
                hcom(t2, from.clone(), to.clone(), (**cap).clone(), tubes.clone())
            }),
        },
        Term::Coe { var, ty, from, to, arg } => match step(ty) {
            StepOutcome::Value { .. } => step_coe(m, var, ty, from, to, arg),
            out => lift("kan/coe-cong", "coe", m, ty, out, "a type", |t2| {
                coe(var, t2, from.clone(), to.clone(), (**arg).clone())
            }),
        },
        // Values, handled above.
        _ => unreachable!("value_rule covers `{}`", print(m)),
    }
}

fn step_cap(m: &Term, from: &Dim, to: &Dim, arg: &Term, tubes: &[Tube]) -> StepOutcome {
    if from == to {
        return step_to(arg.clone(), "univ/cap-eq");
    }
    if let Some(j) = least_true(tubes.iter().map(|t| &t.eq)) {
        let t = &tubes[j];
        return step_to(coe(&t.var, t.body.clone(), to.clone(), from.clone(), arg.clone()), "univ/cap-tube");
    }
    if let Term::Boxed { from: bf, to: bt, cap, tubes: bts } = arg {
        let same_eqs = bts.len() == tubes.len() && bts.iter().zip(tubes).all(|(b, t)| b.eq == t.eq);
        if bf == from && bt == to && same_eqs {
            return step_to((**cap).clone(), "univ/cap-box");
        }
        return stuck(m, "cap", format!("`cap` of a `box` with a different shape: `{}`", print(m)));
    }
    cong("univ/cap-cong", "cap", m, arg, "a box", |a2| cap(from.clone(), to.clone(), a2, tubes.to_vec()))
}

fn step_hcom(m: &Term, ty: &Term, c: Comp) -> StepOutcome {
    let mut f = m.fresh_supply();
    let fc = |c: &Comp| fcom(c.r.clone(), c.r2.clone(), c.cap.clone(), c.tubes.to_vec());
    match ty {
        Term::Pi { var, cod, .. } => step_to(kan::fun_hcom(var, cod, c, &mut f), "fun/hcom"),
        Term::Sigma { var, dom, cod } => step_to(kan::sigma_hcom(var, dom, cod, c, &mut f), "sigma/hcom"),
        Term::Path { var, ty, lhs, rhs } => step_to(kan::path_hcom(var, ty, lhs, rhs, c, &mut f), "path/hcom"),
        Term::Eq { .. } => step_to(Term::Star, "eq/hcom"),
        Term::Nat => step_to(c.cap.clone(), "nat/hcom"),
        Term::Bool => step_to(c.cap.clone(), "bool/hcom"),
        Term::WBool => step_to(fc(&c), "wbool/hcom"),
        Term::Circle => step_to(fc(&c), "circle/hcom"),
        Term::Univ { kind: Kind::Kan, .. } => step_to(fc(&c), "univ/hcom"),
        Term::V { dim, a, b, equiv } => {
            step_to(kan::ua_hcom(dim, VParts { a, b, e: equiv }, c, &mut f), "ua/hcom")
        }
        Term::Fcom { from, to, cap, tubes } => {
            let t = FcomType::open(from, to, cap, tubes, &mut f);
            step_to(kan::hcom_fcom(&t, c, &mut f), "univ/hcom-fcom")
        }
        _ => stuck(m, "hcom", format!("no homogeneous composition at the type `{}`", print(ty))),
    }
}

fn step_coe(m: &Term, x: &crate::name::Name, ty: &Term, r: &Dim, r2: &Dim, arg: &Term) -> StepOutcome {
    let mut f = m.fresh_supply();
    match ty {
        Term::Pi { var, dom, cod } => step_to(kan::fun_coe(x, var, dom, cod, r, r2, arg, &mut f), "fun/coe"),
        Term::Sigma { var, dom, cod } => step_to(kan::sigma_coe(x, var, dom, cod, r, r2, arg, &mut f), "sigma/coe"),
        Term::Path { var, ty, lhs, rhs } => {
            step_to(kan::path_coe(x, var, ty, lhs, rhs, r, r2, arg, &mut f), "path/coe")
        }
        Term::Nat => step_to(arg.clone(), "nat/coe"),
        Term::Bool => step_to(arg.clone(), "bool/coe"),
        Term::WBool => step_to(arg.clone(), "wbool/coe"),
        Term::Circle => step_to(arg.clone(), "circle/coe"),
        Term::Univ { .. } => step_to(arg.clone(), "univ/coe"),
        Term::V { dim: Dim::Name(d), a, b, equiv } if d == x => {
            let line = VLine::open(x, a, b, equiv, &mut f);
            match r {
                Dim::Zero => step_to(kan::ua_coe_0(&line, r2, arg), "ua/coe-0"),
                Dim::One => step_to(kan::ua_coe_1(&line, r2, arg, &mut f), "ua/coe-1"),
                Dim::Name(y) => step_to(kan::ua_coe_name(&line, y, r2, arg, &mut f), "ua/coe-name"),
            }
        }
        Term::V { dim, a, b, equiv } => {
            step_to(kan::ua_coe_other(x, dim, VParts { a, b, e: equiv }, r, r2, arg, &mut f), "ua/coe-other")
        }
        Term::Fcom { from, to, cap, tubes } => {
            let xf = f.name(x.stem());
            let o = |t: &Term| dsubst(t, &dn(&xf), x);
            let od = |d: &Dim| if d.as_name() == Some(x) { dn(&xf) } else { d.clone() };
            let tubes: Vec<Tube> = tubes
                .iter()
                .map(|t| {
                    let eq = crate::cube::Equation::new(od(&t.eq.lhs), od(&t.eq.rhs));
                    // Rebind before renaming so the tube binder cannot capture `xf`.
                    let y = f.name("z");
                    Tube::new(eq, y.clone(), o(&t.at(&dn(&y))))
                })
                .collect();
            let t = FcomType::open(&od(from), &od(to), &o(cap), &tubes, &mut f);
            step_to(kan::coe_fcom(&xf, &t, r, r2, arg, &mut f), "univ/coe-fcom")
        }
        _ => stuck(m, "coe", format!("no coercion along the type `{}`", print(ty))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("fuel exhausted after {fuel} steps")]
    FuelExhausted { fuel: u64, last: Term },
    #[error("stuck at `{}`: {reason}", print(.redex))]
    Stuck { reason: String, path: Vec<&'static str>, redex: Term },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluated {
    pub value: Term,
    /// Every step and the final value were cubically stable.
    pub stable: bool,
    pub steps: u64,
}

pub const DEFAULT_FUEL: u64 = 1_000_000;

/// `m ⇓ v` within `fuel` steps.
pub fn eval(m: &Term, fuel: u64) -> Result<Evaluated, EvalError> {
    let mut cur = m.clone();
    let mut all_stable = true;
    let mut used = 0;
    loop {
        match step(&cur) {
            StepOutcome::Value { stable, .. } => {
                return Ok(Evaluated { value: cur, stable: all_stable && stable, steps: used });
            }
            StepOutcome::StepsTo { next, stable, .. } => {
                if used == fuel {
                    return Err(EvalError::FuelExhausted { fuel, last: cur });
                }
                used += 1;
                all_stable &= stable;
                cur = next;
            }
            StepOutcome::Stuck { reason, path, redex } => return Err(EvalError::Stuck { reason, path, redex }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub term: Term,
    pub rule: RuleId,
    pub congruence: Vec<RuleId>,
    pub stable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub steps: Vec<TraceStep>,
    pub outcome: Result<Evaluated, EvalError>,
    pub fuel_used: u64,
}

pub fn trace(m: &Term, fuel: u64) -> Trace {
    let mut cur = m.clone();
    let mut steps = Vec::new();
    let mut all_stable = true;
    loop {
        let used = steps.len() as u64;
        let outcome = match step(&cur) {
            StepOutcome::Value { stable, .. } => Ok(Evaluated { value: cur, stable: all_stable && stable, steps: used }),
            StepOutcome::StepsTo { next, stable, rule, congruence } => {
                if used == fuel {
                    Err(EvalError::FuelExhausted { fuel, last: cur })
                } else {
                    all_stable &= stable;
                    steps.push(TraceStep { term: std::mem::replace(&mut cur, next), rule, congruence, stable });
                    continue;
                }
            }
            StepOutcome::Stuck { reason, path, redex } => Err(EvalError::Stuck { reason, path, redex }),
        };
        return Trace { steps, outcome, fuel_used: used };
    }
}

impl Trace {
    pub fn to_json(&self) -> Json {
        let steps: Vec<Json> = self
            .steps
            .iter()
            .map(|s| json!({"term": term_to_json(&s.term), "rule": s.rule, "stable": s.stable}))
            .collect();
        let fin = match &self.outcome {
            Ok(e) => json!({"value": term_to_json(&e.value), "stable": e.stable}),
            Err(EvalError::FuelExhausted { .. }) => json!({"fuel_exhausted": true}),
            Err(EvalError::Stuck { reason, path, redex }) => {
                json!({"stuck": {"reason": reason, "path": path, "redex": term_to_json(redex)}})
            }
        };
        json!({"steps": steps, "final": fin, "fuel_used": self.fuel_used})
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{alpha_eq, parse};

    fn p(s: &str) -> Term {
        parse(s).unwrap()
    }

    fn steps_to(m: &str, n: &str, rule: &str, stable: bool) {
        match step(&p(m)) {
            StepOutcome::StepsTo { next, stable: s, rule: r, .. } => {
                assert!(alpha_eq(&next, &p(n)), "{m} stepped to {}", print(&next));
                assert_eq!(r, rule);
                assert_eq!(s, stable, "{m}");
            }
            o => panic!("{m}: {o:?}"),
        }
    }

    #[test]
    fn values() {
        assert_eq!(is_val(&p("lam a. a")), Some(true));
        assert_eq!(is_val(&p("loop x")), Some(false));
        assert_eq!(is_val(&p("fcom 0 ~> 1 true [x=0 y. true] [x=1 y. true]")), Some(false));
        assert_eq!(is_val(&p("V x A B E")), Some(false));
        assert_eq!(is_val(&p("app a b")), None);
        assert_eq!(is_val(&p("loop 0")), None);
    }

    #[test]
    fn simple_steps() {
        steps_to("app (lam a. a) zero", "zero", "fun/beta", true);
        steps_to("fcom x ~> x M [y=0 z. N]", "M", "kan/fcom-eq", true);
        steps_to("loop 0", "base", "circle/loop-eps", true);
        steps_to("V 0 A B E", "A", "types/V-0", true);
        steps_to("hcom nat x ~> y M [z=0 w. N]", "M", "nat/hcom", true);
        steps_to("cap 0 ~> x (box 0 ~> x M [x=1 N]) [x=1 y. B]", "M", "univ/cap-box", false);
        steps_to("ghcom A x ~> y M", "M", "kan/ghcom-empty", true);
        steps_to(
            "com (y. A) x ~> z M [w=0 y. N]",
            "hcom A x ~> z (coe (y. A) x ~> z M) [w=0 y. coe (y. A) y ~> z N]",
            "kan/com",
            true,
        );
    }

    #[test]
    fn congruence_stability() {
        // A stable congruence around an unstable step is unstable.
        match step(&p("app (cap 0 ~> x (box 0 ~> x M [x=1 N]) [x=1 y. B]) zero")) {
            StepOutcome::StepsTo { stable, rule, congruence, .. } => {
                assert!(!stable);
                assert_eq!(rule, "univ/cap-box");
                assert_eq!(congruence, vec!["fun/app-cong"]);
            }
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn stuck_reports_path() {
        match step(&p("app (fst true) zero")) {
            StepOutcome::Stuck { path, redex, .. } => {
                assert_eq!(path, vec!["app", "fst"]);
                assert_eq!(redex, p("fst true"));
            }
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn eval_examples() {
        assert_eq!(eval(&p("if (b. bool) true false true"), 100).unwrap().value, Term::False);
        // weak head: the argument of suc is left alone
        assert_eq!(
            eval(&p("natrec (suc zero) zero (n a. suc (suc a))"), 100).unwrap().value,
            p("suc (suc (natrec zero zero (n a. suc (suc a))))")
        );
        let omega = p("app (lam a. app a a) (lam a. app a a)");
        assert!(matches!(eval(&omega, 10), Err(EvalError::FuelExhausted { .. })));
    }

    #[test]
    fn trace_examples() {
        let t = trace(&p("loop 0"), 10);
        assert_eq!(t.steps.len(), 1);
        assert_eq!(t.outcome.unwrap().value, Term::Base);
        let t = trace(&p("*"), 10);
        assert!(t.steps.is_empty());
        assert_eq!(t.fuel_used, 0);
    }
}
