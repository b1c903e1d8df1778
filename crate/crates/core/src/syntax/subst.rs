//! Capture-avoiding simultaneous substitution of dimensions and terms.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use super::node::{Binder, Scope, View};
use super::Term;
use crate::cube::{Dim, DimSubst};
use crate::name::{fresh_name, Name};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubstError {
    #[error("dimension name `{0}` is free in the term but not in the substitution's source")]
    IllScoped(Name),
}

#[derive(Clone)]
struct Ctx {
    dims: BTreeMap<Name, Dim>,
    terms: BTreeMap<Name, Term>,
    /// Dimension names that may appear in substituted material.
    range_dims: BTreeSet<Name>,
    /// Term variables that may appear in substituted material.
    range_vars: BTreeSet<Name>,
}

impl Ctx {
    fn new(dims: BTreeMap<Name, Dim>, terms: BTreeMap<Name, Term>) -> Ctx {
        let mut range_dims: BTreeSet<Name> = dims.values().filter_map(|d| d.as_name().cloned()).collect();
        let mut range_vars = BTreeSet::new();
        for t in terms.values() {
            range_dims.extend(t.fd());
            range_vars.extend(t.fv());
        }
        Ctx { dims, terms, range_dims, range_vars }
    }

    fn is_empty(&self) -> bool {
        self.dims.is_empty() && self.terms.is_empty()
    }

    fn enter(&self, binders: &[Binder], body: &Term) -> (Ctx, Vec<Binder>) {
        let mut ctx = self.clone();
        for b in binders {
            match b {
                Binder::Dim(x) => {
                    ctx.dims.remove(x);
                }
                Binder::Term(a) => {
                    ctx.terms.remove(a);
                }
            }
        }
        if ctx.is_empty() {
            return (ctx, binders.to_vec());
        }
        let mut avoid: Option<BTreeSet<Name>> = None;
        let mut out = Vec::with_capacity(binders.len());
        for b in binders {
            let clash = match b {
                Binder::Dim(x) => ctx.range_dims.contains(x),
                Binder::Term(a) => ctx.range_vars.contains(a),
            };
            if !clash {
                out.push(b.clone());
                continue;
            }
            let avoid = avoid.get_or_insert_with(|| {
                let mut s = body.all_names();
                s.extend(ctx.range_dims.iter().cloned());
                s.extend(ctx.range_vars.iter().cloned());
                s.extend(ctx.dims.keys().cloned());
                s.extend(ctx.terms.keys().cloned());
                s.extend(binders.iter().map(|b| b.name().clone()));
                s
            });
            let fresh = fresh_name(b.name(), avoid);
            avoid.insert(fresh.clone());
            match b {
                Binder::Dim(x) => {
                    ctx.dims.insert(x.clone(), Dim::Name(fresh.clone()));
                    ctx.range_dims.insert(fresh.clone());
                    out.push(Binder::Dim(fresh));
                }
                Binder::Term(a) => {
                    ctx.terms.insert(a.clone(), Term::Var(fresh.clone()));
                    ctx.range_vars.insert(fresh.clone());
                    out.push(Binder::Term(fresh));
                }
            }
        }
        (ctx, out)
    }
}

fn go(m: &Term, ctx: &Ctx) -> Term {
    if ctx.is_empty() {
        return m.clone();
    }
    if let Term::Var(n) = m {
        return ctx.terms.get(n).cloned().unwrap_or_else(|| m.clone());
    }
    let View { op, dims, args } = m.view();
    let dims = dims.into_iter().map(|d| d.subst(&ctx.dims)).collect();
    let args = args
        .into_iter()
        .map(|(binders, body)| {
            if binders.is_empty() {
                Scope { binders, body: go(body, ctx) }
            } else {
                let (inner, binders) = ctx.enter(&binders, body);
                Scope { binders, body: go(body, &inner) }
            }
        })
        .collect();
    super::Node { op, dims, args }.build_unchecked()
}

/// Simultaneous substitution of dimensions and term variables.
pub fn subst_many(m: &Term, dims: &BTreeMap<Name, Dim>, terms: &BTreeMap<Name, Term>) -> Term {
    let dims: BTreeMap<Name, Dim> = dims
        .iter()
        .filter(|(k, v)| v.as_name() != Some(*k))
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();
    let terms: BTreeMap<Name, Term> = terms
        .iter()
        .filter(|(k, v)| !matches!(v, Term::Var(n) if n == *k))
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();
    go(m, &Ctx::new(dims, terms))
}

/// `m⟨r/x⟩`
pub fn dsubst(m: &Term, r: &Dim, x: &Name) -> Term {
    let mut dims = BTreeMap::new();
    dims.insert(x.clone(), r.clone());
    subst_many(m, &dims, &BTreeMap::new())
}

/// `m[n/a]`
pub fn tsubst(m: &Term, n: &Term, a: &Name) -> Term {
    let mut terms = BTreeMap::new();
    terms.insert(a.clone(), n.clone());
    subst_many(m, &BTreeMap::new(), &terms)
}

/// `m psi`, defined when every free dimension of `m` is in the source of
/// `psi`.
pub fn apply_subst(m: &Term, psi: &DimSubst) -> Result<Term, SubstError> {
    if let Some(n) = m.fd().into_iter().find(|n| !psi.source().contains(n)) {
        return Err(SubstError::IllScoped(n));
    }
    Ok(subst_many(m, psi.map(), &BTreeMap::new()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{alpha_eq, parse, print};

    fn p(s: &str) -> Term {
        parse(s).unwrap()
    }

    #[test]
    fn dsubst_examples() {
        assert_eq!(dsubst(&p("loop x"), &Dim::Zero, &Name::new("x")), p("loop 0"));
        let out = dsubst(&p("dlam y. dapp p x"), &Dim::name("y"), &Name::new("x"));
        assert!(alpha_eq(&out, &p("dlam y1. dapp p y")), "{}", print(&out));
        match &out {
            Term::DLam { var, .. } => assert_ne!(var.as_str(), "y"),
            _ => panic!(),
        }
        let out = dsubst(&p("V x A B E"), &Dim::Zero, &Name::new("x"));
        assert_eq!(out, p("V 0 A B E"));
    }

    #[test]
    fn tsubst_examples() {
        assert_eq!(tsubst(&p("a"), &p("z"), &Name::new("a")), p("z"));
        assert_eq!(tsubst(&p("lam a. a"), &p("z"), &Name::new("a")), p("lam a. a"));
        assert_eq!(tsubst(&p("suc a"), &p("z"), &Name::new("a")), p("suc z"));
        let out = tsubst(&p("lam b. app a b"), &p("b"), &Name::new("a"));
        assert!(alpha_eq(&out, &p("lam c. app b c")));
    }

    #[test]
    fn tsubst_avoids_dimension_capture() {
        let out = tsubst(&p("dlam y. a"), &p("loop y"), &Name::new("a"));
        assert!(alpha_eq(&out, &p("dlam w. loop y")), "{}", print(&out));
    }

    #[test]
    fn apply_subst_examples() {
        let psi = DimSubst::from_pairs([("x", Dim::Zero)]).unwrap();
        assert_eq!(apply_subst(&p("loop x"), &psi).unwrap(), p("loop 0"));
        let psi = DimSubst::from_pairs([("x", Dim::name("y"))]).unwrap();
        assert_eq!(apply_subst(&p("dapp M x"), &psi).unwrap(), p("dapp M y"));
        let id = DimSubst::identity(&p("loop x").fd().into_iter().collect());
        assert_eq!(apply_subst(&p("loop x"), &id).unwrap(), p("loop x"));
        let psi = DimSubst::from_pairs([("y", Dim::Zero)]).unwrap();
        assert_eq!(apply_subst(&p("loop x"), &psi), Err(SubstError::IllScoped(Name::new("x"))));
    }

    #[test]
    fn simultaneous_swap() {
        let mut dims = BTreeMap::new();
        dims.insert(Name::new("x"), Dim::name("y"));
        dims.insert(Name::new("y"), Dim::name("x"));
        let out = subst_many(&p("pair (loop x) (loop y)"), &dims, &BTreeMap::new());
        assert_eq!(out, p("pair (loop y) (loop x)"));
    }

    #[test]
    fn tube_binders_are_renamed() {
        let m = p("hcom bool x ~> 1 true [x=0 y. loop z]");
        let out = dsubst(&m, &Dim::name("y"), &Name::new("z"));
        assert!(alpha_eq(&out, &p("hcom bool x ~> 1 true [x=0 w. loop y]")), "{}", print(&out));
    }
}
