use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::*;
use crate::cube::{Dim, DimCtx, DimSubst, Equation, EquationList};
use crate::name::Name;
use crate::opsem::{step, StepOutcome};
use crate::syntax::{alpha_eq, parse};

fn t(s: &str) -> Term {
    parse(s).unwrap()
}

fn inst(pairs: &[(&str, MetaValue)]) -> Inst {
    pairs.iter().fold(Inst::default(), |i, (k, v)| i.set(k, v.clone()))
}

fn term(s: &str) -> MetaValue {
    MetaValue::Term(t(s))
}

fn psi(names: &[&str]) -> DimCtx {
    DimCtx::from_names(names.iter().map(Name::new)).unwrap()
}

fn empty() -> Ctx {
    Ctx::new(DimCtx::new())
}

#[test]
fn bool_formation_schema() {
    let s = schema("bool/form-kan").unwrap();
    assert!(s.metas.is_empty());
    let i = instantiate_rule("bool/form-kan", &Inst::default(), &empty()).unwrap();
    assert!(i.premises.is_empty());
    assert_eq!(i.conclusion.form, Form::EqType(Kind::Kan, Term::Bool, Term::Bool));
}

#[test]
fn hcom_schema_lists_its_premises() {
    let s = schema("kan/hcom").unwrap();
    for part in ["wfshape", "(∀i,j)", "(∀i)"] {
        assert!(s.premises.contains(part), "{part}");
    }
}

#[test]
fn cumulativity_compares_levels() {
    let ctx = empty();
    let mk = |i, j| {
        inst(&[
            ("k", MetaValue::Kind(Kind::Kan)),
            ("i", MetaValue::Nat(i)),
            ("j", MetaValue::Nat(j)),
            ("A", term("bool")),
            ("A'", term("bool")),
        ])
    };
    let ok = instantiate_rule("univ/cumulativity", &mk(0, 2), &ctx).unwrap();
    assert!(ok.side.iter().all(|s| s.discharge().is_ok()));
    assert!(ok.side.contains(&Side::Le(0, 2)));
    let bad = instantiate_rule("univ/cumulativity", &mk(3, 1), &ctx).unwrap();
    assert!(bad.side.iter().any(|s| s.discharge().is_err()));
}

#[test]
fn fun_intro_instance() {
    let i = inst(&[("a", MetaValue::Name(Name::new("a"))), ("A", term("bool")), ("B", term("nat")), ("M", term("zero")), ("M'", term("zero"))]);
    let r = instantiate_rule("fun/intro", &i, &empty()).unwrap();
    let want = Form::EqTm(t("lam a. zero"), t("lam a. zero"), t("pi (a : bool) nat"));
    assert!(same_judgment(&r.conclusion, &empty().judge(want)).unwrap());
    assert_eq!(r.premises.len(), 1);
    let p = &r.premises[0];
    assert_eq!(p.ctx.gamma, vec![(Name::new("a"), Term::Bool)]);
    assert_eq!(p.form, Form::EqTm(Term::Zero, Term::Zero, Term::Nat));
}

fn hcom_inst(tubes: usize) -> Inst {
    let eqs: Vec<Equation> = ["x=0", "x=1"].iter().take(tubes).map(|e| e.parse().unwrap()).collect();
    let ns = MetaValue::Terms(vec![Term::True; tubes]);
    inst(&[
        ("A", term("bool")),
        ("A'", term("bool")),
        ("r", MetaValue::Dim(Dim::Zero)),
        ("r'", MetaValue::Dim(Dim::One)),
        ("M", term("true")),
        ("M'", term("true")),
        ("eqs", MetaValue::Eqs(EquationList(eqs))),
        ("y", MetaValue::Name(Name::new("y"))),
        ("N", ns.clone()),
        ("N'", ns),
    ])
}

#[test]
fn hcom_expands_adjacency() {
    let ctx = Ctx::new(psi(&["x"]));
    let r = instantiate_rule("kan/hcom", &hcom_inst(2), &ctx).unwrap();
    // wfshape, type, cap, 2*2 adjacency, 2 cap-tube
    assert_eq!(r.premises.len(), 3 + 4 + 2);
    let adjacent: Vec<_> = r.premises[3..7].iter().map(|p| p.ctx.xi.0.len()).collect();
    assert_eq!(adjacent, vec![2, 2, 2, 2]);
    assert!(r.premises[3..7].iter().all(|p| p.ctx.psi.contains(&Name::new("y"))));
    let wrong = hcom_inst(2).set("N", MetaValue::Terms(vec![Term::True]));
    assert!(instantiate_rule("kan/hcom", &wrong, &ctx).is_err());
}

#[test]
fn eps_neq_has_no_premises() {
    let j = empty().judge(Form::EqTm(Term::True, Term::False, Term::Bool));
    for e in [Dim::Zero, Dim::One] {
        let i = inst(&[("J", MetaValue::Judgment(Box::new(j.clone()))), ("e", MetaValue::Dim(e.clone()))]);
        let r = instantiate_rule("restrict/eps-neq", &i, &empty()).unwrap();
        assert!(r.premises.is_empty());
        assert_eq!(r.conclusion.ctx.xi.0, vec![Equation::new(e.clone(), e.flip())]);
    }
}

#[test]
fn instantiation_errors() {
    let i = inst(&[("A", term("bool"))]);
    assert!(instantiate_rule("fun/intro", &i, &empty()).unwrap_err().contains("missing"));
    let i = inst(&[("a", term("bool")), ("A", term("bool")), ("B", term("nat")), ("M", term("zero")), ("M'", term("zero"))]);
    assert!(instantiate_rule("fun/intro", &i, &empty()).unwrap_err().contains("sort"));
    assert!(instantiate_rule("no/such", &Inst::default(), &empty()).is_err());
}

fn if_derivation(rhs: &str) -> Derivation {
    let ctx = empty();
    let leaf = Derivation::by("bool/false", &ctx, Inst::default(), vec![]).unwrap();
    let i = inst(&[("M", term("if (b. bool) true false true")), ("M'", term("false")), ("N", term("false")), ("A", term("bool"))]);
    let mut d = Derivation::by("comp/tm", &ctx, i, vec![leaf]).unwrap();
    d.conclusion = ctx.eq_tm(t("if (b. bool) true false true"), t(rhs), Term::Bool);
    d
}

#[test]
fn spec_derivations() {
    let d = Derivation::by("bool/form-kan", &empty(), Inst::default(), vec![]).unwrap();
    assert_eq!(check_derivation(&d), Report::Ok);
    assert_eq!(check_derivation(&if_derivation("false")), Report::Ok);
    match check_derivation(&if_derivation("true")) {
        Report::Err { path, reason } => {
            assert!(path.is_empty());
            assert!(reason.contains("conclusion"), "{reason}");
        }
        Report::Ok => panic!("accepted a false computation"),
    }
}

#[test]
fn false_side_condition_is_named() {
    let ctx = empty();
    let leaf = Derivation::by("bool/true", &ctx, Inst::default(), vec![]).unwrap();
    let i = inst(&[("M", term("if (b. bool) true false true")), ("M'", term("true")), ("N", term("true")), ("A", term("bool"))]);
    let d = Derivation::by("comp/tm", &ctx, i, vec![leaf]).unwrap();
    let Report::Err { reason, .. } = check_derivation(&d) else { panic!() };
    assert!(reason.contains("steps stably"), "{reason}");
}

#[test]
fn json_roundtrip_and_determinism() {
    let d = if_derivation("false");
    let back = Derivation::from_json(&d.to_json()).unwrap();
    assert_eq!(back, d);
    let bad = if_derivation("true");
    assert_eq!(check_derivation(&bad), check_derivation(&bad.clone()));
    let v = json!({"rule": "bool/true", "conclusion": {"kind": "oftype"}});
    assert!(matches!(Derivation::from_json(&v), Err(Report::Err { .. })));
}

#[test]
fn assumptions_only_in_oracle_mode() {
    let j = empty().eq_tm(Term::True, Term::True, Term::Bool);
    let d = Derivation::assume(j);
    assert!(!check_derivation(&d).is_ok());
    assert!(check_with(&d, CheckOptions { assumptions: true }).is_ok());
}

#[test]
fn hypothesis_and_weakening() {
    let ctx = empty().hyp(&Name::new("a"), Term::Bool);
    let i = inst(&[("k", MetaValue::Kind(Kind::Kan)), ("a", MetaValue::Name(Name::new("a"))), ("A", term("bool"))]);
    let wf = Derivation::by("bool/form-kan", &empty(), Inst::default(), vec![]).unwrap();
    let d = Derivation::by("struct/hyp", &ctx, i, vec![wf.clone()]).unwrap();
    assert_eq!(d.conclusion, ctx.of(t("a"), Term::Bool));
    assert_eq!(check_derivation(&d), Report::Ok);

    // insert b : nat in front of a : bool
    let wfn = Derivation::by("nat/form-kan", &empty(), Inst::default(), vec![]).unwrap();
    let i = inst(&[
        ("J", MetaValue::Judgment(Box::new(d.conclusion.clone()))),
        ("k", MetaValue::Kind(Kind::Kan)),
        ("a", MetaValue::Name(Name::new("b"))),
        ("A", term("nat")),
        ("pos", MetaValue::Nat(0)),
    ]);
    let w = Derivation::by("struct/weaken", &ctx, i, vec![d, wfn]).unwrap();
    assert_eq!(w.conclusion.ctx.gamma[0].0, Name::new("b"));
    assert_eq!(check_derivation(&w), Report::Ok);
}

// Leaf-oracle soundness: random well-sorted instantiations of every rule,
// with each premise closed by an assumption, are accepted.

const TERMS: &[&str] = &[
    "true", "false", "zero", "suc zero", "bool", "nat", "S1", "base", "loop x", "lam a. a", "pair true zero",
    "U kan 0", "dlam z. loop z", "*", "wbool",
];
const REDEXES: &[&str] = &[
    "app (lam a. a) true",
    "if (b. bool) true false true",
    "fst (pair zero true)",
    "snd (pair zero true)",
    "dapp (dlam z. loop z) 0",
    "natrec zero zero (n a. suc a)",
    "coe (y. bool) 0 ~> 1 true",
];
const EQS: &[&str] = &["x=0", "x=1", "0=0", "1=1", "x=x", "0=1"];

struct Gen {
    rng: ChaCha8Rng,
}

impl Gen {
    fn pick<'a>(&mut self, xs: &[&'a str]) -> &'a str {
        xs.choose(&mut self.rng).unwrap()
    }

    fn ctx(&mut self) -> Ctx {
        let mut c = Ctx::new(psi(&["x"]));
        if self.rng.gen_bool(0.3) {
            c = c.hyp(&Name::new("c"), Term::Bool);
        }
        c
    }

    fn eqs(&mut self) -> EquationList {
        let n = self.rng.gen_range(0..3);
        EquationList((0..n).map(|_| self.pick(EQS).parse().unwrap()).collect())
    }

    fn judgment(&mut self, ctx: &Ctx) -> Judgment {
        let mut c = ctx.clone();
        if self.rng.gen_bool(0.3) {
            c.xi = self.eqs();
        }
        let (m, a) = (t(self.pick(TERMS)), t(self.pick(TERMS)));
        match self.rng.gen_range(0..3) {
            0 => c.eq_tm(m.clone(), m, a),
            1 => c.eq_ty(Kind::Pre, a.clone(), a),
            _ => c.eq_tm(m, t(self.pick(TERMS)), a),
        }
    }

    fn value(&mut self, sort: Sort, ctx: &Ctx) -> MetaValue {
        match sort {
            Sort::Term => term(self.pick(TERMS)),
            Sort::Terms => {
                let n = self.rng.gen_range(0..3);
                MetaValue::Terms((0..n).map(|_| t(self.pick(TERMS))).collect())
            }
            Sort::Dim => MetaValue::Dim(match self.rng.gen_range(0..3) {
                0 => Dim::Zero,
                1 => Dim::One,
                _ => Dim::name("x"),
            }),
            Sort::DimName => MetaValue::Name(Name::new(self.pick(&["y", "z", "x"]))),
            Sort::Var => MetaValue::Name(Name::new(self.pick(&["a", "b", "c"]))),
            Sort::Kappa => MetaValue::Kind(if self.rng.gen() { Kind::Pre } else { Kind::Kan }),
            Sort::Level | Sort::Index => MetaValue::Nat(self.rng.gen_range(0..3)),
            Sort::Eqs => MetaValue::Eqs(self.eqs()),
            Sort::Judgment => MetaValue::Judgment(Box::new(self.judgment(ctx))),
            Sort::Subst => {
                let (tgt, to) = match self.rng.gen_range(0..3) {
                    0 => (vec![], Dim::Zero),
                    1 => (vec!["x"], Dim::One),
                    _ => (vec!["z"], Dim::name("z")),
                };
                let map = [(Name::new("x"), to)].into_iter().collect();
                MetaValue::Subst(DimSubst::new(psi(&["x"]), psi(&tgt), map).unwrap())
            }
        }
    }

    fn inst(&mut self, s: &Schema, ctx: &Ctx) -> Inst {
        let mut i = Inst::default();
        for (m, sort) in s.metas {
            i = i.set(m, self.value(*sort, ctx));
        }
        if s.id.starts_with("comp/") {
            let (from, to) = if s.id == "comp/type" { ("A", "A'") } else { ("M", "M'") };
            let r = t(self.pick(REDEXES));
            if let StepOutcome::StepsTo { next, .. } = step(&r) {
                i = i.set(from, MetaValue::Term(r)).set(to, MetaValue::Term(next));
            }
        }
        i
    }
}

/// The one-node-per-premise tree for an instance, or None when the random
/// instantiation is not a valid instance of the rule.
fn oracle_tree(id: &str, i: &Inst, ctx: &Ctx) -> Option<Derivation> {
    let r = instantiate_rule(id, i, ctx).ok()?;
    if r.side.iter().any(|s| s.discharge().is_err()) {
        return None;
    }
    if r.conclusion.well_scoped().is_err() || r.premises.iter().any(|p| p.well_scoped().is_err()) {
        return None;
    }
    let leaves = r.premises.into_iter().map(Derivation::assume).collect();
    Some(Derivation::new(id, r.conclusion, i.to_json(), leaves))
}

#[test]
fn leaf_oracle_soundness() {
    let mut g = Gen { rng: ChaCha8Rng::seed_from_u64(5) };
    let opts = CheckOptions { assumptions: true };
    let mut starved = Vec::new();
    for s in rule_catalog() {
        let mut accepted = 0;
        for _ in 0..4000 {
            let ctx = g.ctx();
            let i = g.inst(s, &ctx);
            let Some(d) = oracle_tree(s.id, &i, &ctx) else { continue };
            let d = Derivation::from_json(&d.to_json()).unwrap();
            assert_eq!(check_with(&d, opts), Report::Ok, "{} rejected its own instance {}", s.id, d.to_json());
            accepted += 1;
            if accepted == 10 {
                break;
            }
        }
        if accepted == 0 {
            starved.push(s.id);
        }
    }
    assert!(starved.is_empty(), "no valid instance generated for {starved:?}");
}

#[test]
fn every_schema_describes_itself() {
    let table = catalog_table();
    for s in rule_catalog() {
        assert!(table.contains(s.id));
        assert!(!s.conclusion.is_empty());
    }
    assert!(alpha_eq(&t("lam a. a"), &t("lam b. b")));
}
