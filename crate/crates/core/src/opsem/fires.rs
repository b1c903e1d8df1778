//! Independent rule-applicability check.
//!
//! Each rule's left-hand side and premises are tested on their own, with no
//! shared dispatch order, so that overlapping rules show up as more than one
//! match. Used to test determinacy of [`super::step`].

use super::rules::{rule_info, RuleKind};
use super::RuleId;
use crate::cube::{Dim, Equation};
use crate::syntax::{Kind, Term, Tube};

fn none_hold<'a>(eqs: impl IntoIterator<Item = &'a Equation>) -> bool {
    eqs.into_iter().all(|e| e.lhs != e.rhs)
}

fn some_hold<'a>(eqs: impl IntoIterator<Item = &'a Equation>) -> bool {
    !none_hold(eqs)
}

fn tube_eqs(ts: &[Tube]) -> impl Iterator<Item = &Equation> {
    ts.iter().map(|t| &t.eq)
}

/// `fcom r ~> r' M [..]` with `r != r'` and no true equation.
fn fcom_value(m: &Term) -> bool {
    matches!(m, Term::Fcom { from, to, tubes, .. } if from != to && none_hold(tube_eqs(tubes)))
}

/// Whether some transition rule applies.
pub fn reducible(m: &Term) -> bool {
    fires(m).iter().any(|id| rule_info(id).map(|r| r.kind) != Some(RuleKind::Value))
}

fn hcom_ty(m: &Term) -> Option<&Term> {
    match m {
        Term::Hcom { ty, .. } => Some(ty),
        _ => None,
    }
}

/// Coercion line: binder, body, source.
fn coe_line(m: &Term) -> Option<(&crate::name::Name, &Term, &Dim)> {
    match m {
        Term::Coe { var, ty, from, .. } => Some((var, ty, from)),
        _ => None,
    }
}

type Pred = fn(&Term) -> bool;

const PREDICATES: &[(RuleId, Pred)] = &[
    ("types/val-pi", |m| matches!(m, Term::Pi { .. })),
    ("types/val-sigma", |m| matches!(m, Term::Sigma { .. })),
    ("types/val-path", |m| matches!(m, Term::Path { .. })),
    ("types/val-eq", |m| matches!(m, Term::Eq { .. })),
    ("types/val-void", |m| matches!(m, Term::Void)),
    ("types/val-nat", |m| matches!(m, Term::Nat)),
    ("types/val-bool", |m| matches!(m, Term::Bool)),
    ("types/val-wbool", |m| matches!(m, Term::WBool)),
    ("types/val-S1", |m| matches!(m, Term::Circle)),
    ("types/val-Upre", |m| matches!(m, Term::Univ { kind: Kind::Pre, .. })),
    ("types/val-Ukan", |m| matches!(m, Term::Univ { kind: Kind::Kan, .. })),
    ("types/val-V", |m| matches!(m, Term::V { dim: Dim::Name(_), .. })),
    ("types/V-0", |m| matches!(m, Term::V { dim: Dim::Zero, .. })),
    ("types/V-1", |m| matches!(m, Term::V { dim: Dim::One, .. })),
    ("kan/hcom-cong", |m| hcom_ty(m).is_some_and(reducible)),
    ("kan/coe-cong", |m| coe_line(m).is_some_and(|(_, ty, _)| reducible(ty))),
    ("kan/com", |m| matches!(m, Term::Com { .. })),
    ("kan/fcom-eq", |m| matches!(m, Term::Fcom { from, to, .. } if from == to)),
    ("kan/fcom-tube", |m| matches!(m, Term::Fcom { from, to, tubes, .. } if from != to && some_hold(tube_eqs(tubes)))),
    ("kan/fcom-val", fcom_value),
    ("kan/ghcom-empty", |m| matches!(m, Term::Ghcom { tubes, .. } if tubes.is_empty())),
    ("kan/ghcom", |m| matches!(m, Term::Ghcom { tubes, .. } if !tubes.is_empty())),
    ("kan/gcom", |m| matches!(m, Term::Gcom { .. })),
    ("fun/app-cong", |m| matches!(m, Term::App(f, _) if reducible(f))),
    ("fun/beta", |m| matches!(m, Term::App(f, _) if matches!(**f, Term::Lam { .. }))),
    ("fun/val-lam", |m| matches!(m, Term::Lam { .. })),
    ("fun/hcom", |m| matches!(hcom_ty(m), Some(Term::Pi { .. }))),
    ("fun/coe", |m| matches!(coe_line(m), Some((_, Term::Pi { .. }, _)))),
    ("sigma/fst-cong", |m| matches!(m, Term::Fst(p) if reducible(p))),
    ("sigma/snd-cong", |m| matches!(m, Term::Snd(p) if reducible(p))),
    ("sigma/val-pair", |m| matches!(m, Term::Pair(..))),
    ("sigma/fst-beta", |m| matches!(m, Term::Fst(p) if matches!(**p, Term::Pair(..)))),
    ("sigma/snd-beta", |m| matches!(m, Term::Snd(p) if matches!(**p, Term::Pair(..)))),
    ("sigma/hcom", |m| matches!(hcom_ty(m), Some(Term::Sigma { .. }))),
    ("sigma/coe", |m| matches!(coe_line(m), Some((_, Term::Sigma { .. }, _)))),
    ("path/dapp-cong", |m| matches!(m, Term::DApp(p, _) if reducible(p))),
    ("path/beta", |m| matches!(m, Term::DApp(p, _) if matches!(**p, Term::DLam { .. }))),
    ("path/val-dlam", |m| matches!(m, Term::DLam { .. })),
    ("path/hcom", |m| matches!(hcom_ty(m), Some(Term::Path { .. }))),
    ("path/coe", |m| matches!(coe_line(m), Some((_, Term::Path { .. }, _)))),
    ("eq/val-star", |m| matches!(m, Term::Star)),
    ("eq/hcom", |m| matches!(hcom_ty(m), Some(Term::Eq { .. }))),
    ("nat/val-zero", |m| matches!(m, Term::Zero)),
    ("nat/val-suc", |m| matches!(m, Term::Suc(_))),
    ("nat/natrec-cong", |m| matches!(m, Term::NatRec { scrut, .. } if reducible(scrut))),
    ("nat/natrec-zero", |m| matches!(m, Term::NatRec { scrut, .. } if matches!(**scrut, Term::Zero))),
    ("nat/natrec-suc", |m| matches!(m, Term::NatRec { scrut, .. } if matches!(**scrut, Term::Suc(_)))),
    ("nat/hcom", |m| matches!(hcom_ty(m), Some(Term::Nat))),
    ("nat/coe", |m| matches!(coe_line(m), Some((_, Term::Nat, _)))),
    ("bool/val-true", |m| matches!(m, Term::True)),
    ("bool/val-false", |m| matches!(m, Term::False)),
    ("bool/if-cong", |m| matches!(m, Term::If { scrut, .. } if reducible(scrut))),
    ("bool/if-true", |m| matches!(m, Term::If { scrut, .. } if matches!(**scrut, Term::True))),
    ("bool/if-false", |m| matches!(m, Term::If { scrut, .. } if matches!(**scrut, Term::False))),
    ("bool/hcom", |m| matches!(hcom_ty(m), Some(Term::Bool))),
    ("bool/coe", |m| matches!(coe_line(m), Some((_, Term::Bool, _)))),
    ("wbool/hcom", |m| matches!(hcom_ty(m), Some(Term::WBool))),
    ("wbool/if-fcom", |m| matches!(m, Term::If { scrut, .. } if fcom_value(scrut))),
    ("wbool/coe", |m| matches!(coe_line(m), Some((_, Term::WBool, _)))),
    ("circle/hcom", |m| matches!(hcom_ty(m), Some(Term::Circle))),
    ("circle/loop-eps", |m| matches!(m, Term::Loop(d) if d.is_const())),
    ("circle/val-base", |m| matches!(m, Term::Base)),
    ("circle/val-loop", |m| matches!(m, Term::Loop(Dim::Name(_)))),
    ("circle/elim-cong", |m| matches!(m, Term::CircElim { scrut, .. } if reducible(scrut))),
    ("circle/elim-base", |m| matches!(m, Term::CircElim { scrut, .. } if matches!(**scrut, Term::Base))),
    ("circle/elim-loop", |m| matches!(m, Term::CircElim { scrut, .. } if matches!(**scrut, Term::Loop(Dim::Name(_))))),
    ("circle/elim-fcom", |m| matches!(m, Term::CircElim { scrut, .. } if fcom_value(scrut))),
    ("circle/coe", |m| matches!(coe_line(m), Some((_, Term::Circle, _)))),
    ("ua/val-uain", |m| matches!(m, Term::VIn { dim: Dim::Name(_), .. })),
    ("ua/uain-0", |m| matches!(m, Term::VIn { dim: Dim::Zero, .. })),
    ("ua/uain-1", |m| matches!(m, Term::VIn { dim: Dim::One, .. })),
    ("ua/uaproj-0", |m| matches!(m, Term::VProj { dim: Dim::Zero, .. })),
    ("ua/uaproj-1", |m| matches!(m, Term::VProj { dim: Dim::One, .. })),
    ("ua/uaproj-cong", |m| matches!(m, Term::VProj { dim: Dim::Name(_), m, .. } if reducible(m))),
    ("ua/uaproj-uain", |m| {
        matches!(m, Term::VProj { dim: x @ Dim::Name(_), m, .. } if matches!(&**m, Term::VIn { dim, .. } if dim == x))
    }),
    ("ua/hcom", |m| matches!(hcom_ty(m), Some(Term::V { dim: Dim::Name(_), .. }))),
    ("ua/coe-0", |m| {
        matches!(coe_line(m), Some((x, Term::V { dim: Dim::Name(d), .. }, Dim::Zero)) if d == x)
    }),
    ("ua/coe-1", |m| matches!(coe_line(m), Some((x, Term::V { dim: Dim::Name(d), .. }, Dim::One)) if d == x)),
    ("ua/coe-name", |m| {
        matches!(coe_line(m), Some((x, Term::V { dim: Dim::Name(d), .. }, Dim::Name(_))) if d == x)
    }),
    ("ua/coe-other", |m| matches!(coe_line(m), Some((y, Term::V { dim: Dim::Name(x), .. }, _)) if x != y)),
    ("univ/hcom", |m| matches!(hcom_ty(m), Some(Term::Univ { kind: Kind::Kan, .. }))),
    ("univ/coe", |m| matches!(coe_line(m), Some((_, Term::Univ { .. }, _)))),
    ("univ/box-eq", |m| matches!(m, Term::Boxed { from, to, .. } if from == to)),
    ("univ/box-tube", |m| {
        matches!(m, Term::Boxed { from, to, tubes, .. } if from != to && some_hold(tubes.iter().map(|t| &t.eq)))
    }),
    ("univ/box-val", |m| {
        matches!(m, Term::Boxed { from, to, tubes, .. } if from != to && none_hold(tubes.iter().map(|t| &t.eq)))
    }),
    ("univ/cap-eq", |m| matches!(m, Term::Cap { from, to, .. } if from == to)),
    ("univ/cap-tube", |m| matches!(m, Term::Cap { from, to, tubes, .. } if from != to && some_hold(tube_eqs(tubes)))),
    ("univ/cap-cong", |m| {
        matches!(m, Term::Cap { from, to, tubes, arg } if from != to && none_hold(tube_eqs(tubes)) && reducible(arg))
    }),
    ("univ/cap-box", |m| match m {
        Term::Cap { from, to, tubes, arg } if from != to && none_hold(tube_eqs(tubes)) => match &**arg {
            Term::Boxed { from: f2, to: t2, tubes: bts, .. } => {
                f2 == from
                    && t2 == to
                    && bts.iter().map(|b| &b.eq).eq(tubes.iter().map(|t| &t.eq))
            }
            _ => false,
        },
        _ => false,
    }),
    ("univ/hcom-fcom", |m| hcom_ty(m).is_some_and(fcom_value)),
    ("univ/coe-fcom", |m| coe_line(m).is_some_and(|(_, ty, _)| fcom_value(ty))),
];

/// Every rule whose left-hand side and premises match `m`.
pub fn fires(m: &Term) -> Vec<RuleId> {
    PREDICATES.iter().filter(|(_, p)| p(m)).map(|(id, _)| *id).collect()
}

pub fn covered_rules() -> impl Iterator<Item = RuleId> {
    PREDICATES.iter().map(|(id, _)| *id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opsem::RULES;
    use crate::syntax::parse;

    #[test]
    fn every_rule_has_a_predicate() {
        let ids: Vec<_> = covered_rules().collect();
        assert_eq!(ids.len(), RULES.len());
        for r in RULES {
            assert!(ids.contains(&r.id), "{}", r.id);
        }
    }

    #[test]
    fn single_matches() {
        assert_eq!(fires(&parse("app (lam a. a) zero").unwrap()), vec!["fun/beta"]);
        assert_eq!(fires(&parse("app (app (lam a. a) zero) zero").unwrap()), vec!["fun/app-cong"]);
        assert_eq!(fires(&parse("fst true").unwrap()), Vec::<RuleId>::new());
        assert_eq!(fires(&parse("hcom (V 0 A B E) 0 ~> 1 M").unwrap()), vec!["kan/hcom-cong"]);
    }
}
