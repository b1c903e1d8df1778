//! Uniform operator/arguments view of terms.
//!
//! Every constructor is presented as an operator, a list of dimension
//! arguments, and a list of scoped term arguments. Generic traversals
//! (free names, substitution, alpha equivalence, JSON) go through this view so
//! binding structure is described in exactly one place.

use std::collections::BTreeSet;

use super::{BoxTube, Kind, Term, Tube};
use crate::cube::{Dim, Equation};
use crate::name::Name;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Binder {
    Dim(Name),
    Term(Name),
}

impl Binder {
    pub fn name(&self) -> &Name {
        match self {
            Binder::Dim(n) | Binder::Term(n) => n,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Scope {
    pub binders: Vec<Binder>,
    pub body: Term,
}

impl Scope {
    pub fn closed(body: Term) -> Scope {
        Scope { binders: Vec::new(), body }
    }
}

/// Operators. Composite operators carry their tube count.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Op {
    Var(Name),
    Pi,
    Sigma,
    Path,
    Eq,
    Void,
    Nat,
    Bool,
    WBool,
    Circle,
    Univ(Kind, u32),
    V,
    VIn,
    VProj,
    Lam,
    App,
    Pair,
    Fst,
    Snd,
    DLam,
    DApp,
    Star,
    Zero,
    Suc,
    NatRec,
    True,
    False,
    If,
    Base,
    Loop,
    CircElim,
    Coe,
    Hcom(usize),
    Com(usize),
    Fcom(usize),
    Ghcom(usize),
    Gcom(usize),
    Box(usize),
    Cap(usize),
}

impl Op {
    pub fn tag(&self) -> &'static str {
        match self {
            Op::Var(_) => "var",
            Op::Pi => "pi",
            Op::Sigma => "sg",
            Op::Path => "path",
            Op::Eq => "eq",
            Op::Void => "void",
            Op::Nat => "nat",
            Op::Bool => "bool",
            Op::WBool => "wbool",
            Op::Circle => "S1",
            Op::Univ(..) => "U",
            Op::V => "V",
            Op::VIn => "Vin",
            Op::VProj => "Vproj",
            Op::Lam => "lam",
            Op::App => "app",
            Op::Pair => "pair",
            Op::Fst => "fst",
            Op::Snd => "snd",
            Op::DLam => "dlam",
            Op::DApp => "dapp",
            Op::Star => "*",
            Op::Zero => "zero",
            Op::Suc => "suc",
            Op::NatRec => "natrec",
            Op::True => "true",
            Op::False => "false",
            Op::If => "if",
            Op::Base => "base",
            Op::Loop => "loop",
            Op::CircElim => "S1elim",
            Op::Coe => "coe",
            Op::Hcom(_) => "hcom",
            Op::Com(_) => "com",
            Op::Fcom(_) => "fcom",
            Op::Ghcom(_) => "ghcom",
            Op::Gcom(_) => "gcom",
            Op::Box(_) => "box",
            Op::Cap(_) => "cap",
        }
    }

    /// Binder sorts of each argument, given the tube count.
    pub fn arity(&self) -> (usize, Vec<Vec<BSort>>) {
        use BSort::{D, T};
        let tubes = |n: usize, dims: usize, mut args: Vec<Vec<BSort>>, tube: Vec<BSort>| {
            args.extend(std::iter::repeat(tube).take(n));
            (dims + 2 * n, args)
        };
        match *self {
            Op::Var(_) | Op::Void | Op::Nat | Op::Bool | Op::WBool | Op::Circle | Op::Univ(..) => (0, vec![]),
            Op::Star | Op::Zero | Op::True | Op::False | Op::Base => (0, vec![]),
            Op::Pi | Op::Sigma => (0, vec![vec![], vec![T]]),
            Op::Path => (0, vec![vec![D], vec![], vec![]]),
            Op::Eq => (0, vec![vec![], vec![], vec![]]),
            Op::V => (1, vec![vec![], vec![], vec![]]),
            Op::VIn | Op::VProj => (1, vec![vec![], vec![]]),
            Op::Lam => (0, vec![vec![T]]),
            Op::App | Op::Pair => (0, vec![vec![], vec![]]),
            Op::Fst | Op::Snd | Op::Suc => (0, vec![vec![]]),
            Op::DLam => (0, vec![vec![D]]),
            Op::DApp => (1, vec![vec![]]),
            Op::NatRec => (0, vec![vec![], vec![], vec![T, T]]),
            Op::If => (0, vec![vec![T], vec![], vec![], vec![]]),
            Op::Loop => (1, vec![]),
            Op::CircElim => (0, vec![vec![T], vec![], vec![], vec![D]]),
            Op::Coe => (2, vec![vec![D], vec![]]),
            Op::Hcom(n) | Op::Ghcom(n) => tubes(n, 2, vec![vec![], vec![]], vec![D]),
            Op::Com(n) | Op::Gcom(n) => tubes(n, 2, vec![vec![D], vec![]], vec![D]),
            Op::Fcom(n) => tubes(n, 2, vec![vec![]], vec![D]),
            Op::Box(n) => tubes(n, 2, vec![vec![]], vec![]),
            Op::Cap(n) => tubes(n, 2, vec![vec![]], vec![D]),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BSort {
    D,
    T,
}

/// An owned operator view.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Node {
    pub op: Op,
    pub dims: Vec<Dim>,
    pub args: Vec<Scope>,
}

/// A borrowed operator view.
pub(crate) struct View<'a> {
    pub op: Op,
    pub dims: Vec<&'a Dim>,
    pub args: Vec<(Vec<Binder>, &'a Term)>,
}

fn tube_dims<'a>(dims: &mut Vec<&'a Dim>, eqs: impl Iterator<Item = &'a Equation>) {
    for e in eqs {
        dims.push(&e.lhs);
        dims.push(&e.rhs);
    }
}

fn bt(n: &Name) -> Vec<Binder> {
    vec![Binder::Term(n.clone())]
}

fn bd(n: &Name) -> Vec<Binder> {
    vec![Binder::Dim(n.clone())]
}

impl Term {
    pub(crate) fn view(&self) -> View<'_> {
        let none = Vec::new;
        let (op, dims, args): (Op, Vec<&Dim>, Vec<(Vec<Binder>, &Term)>) = match self {
            Term::Var(n) => (Op::Var(n.clone()), vec![], vec![]),
            Term::Pi { var, dom, cod } => (Op::Pi, vec![], vec![(none(), &**dom), (bt(var), &**cod)]),
            Term::Sigma { var, dom, cod } => (Op::Sigma, vec![], vec![(none(), &**dom), (bt(var), &**cod)]),
            Term::Path { var, ty, lhs, rhs } => {
                (Op::Path, vec![], vec![(bd(var), &**ty), (none(), &**lhs), (none(), &**rhs)])
            }
            Term::Eq { ty, lhs, rhs } => (Op::Eq, vec![], vec![(none(), &**ty), (none(), &**lhs), (none(), &**rhs)]),
            Term::Void => (Op::Void, vec![], vec![]),
            Term::Nat => (Op::Nat, vec![], vec![]),
            Term::Bool => (Op::Bool, vec![], vec![]),
            Term::WBool => (Op::WBool, vec![], vec![]),
            Term::Circle => (Op::Circle, vec![], vec![]),
            Term::Univ { kind, level } => (Op::Univ(*kind, *level), vec![], vec![]),
            Term::V { dim, a, b, equiv } => {
                (Op::V, vec![dim], vec![(none(), &**a), (none(), &**b), (none(), &**equiv)])
            }
            Term::VIn { dim, m, n } => (Op::VIn, vec![dim], vec![(none(), &**m), (none(), &**n)]),
            Term::VProj { dim, m, f } => (Op::VProj, vec![dim], vec![(none(), &**m), (none(), &**f)]),
            Term::Lam { var, body } => (Op::Lam, vec![], vec![(bt(var), &**body)]),
            Term::App(m, n) => (Op::App, vec![], vec![(none(), &**m), (none(), &**n)]),
            Term::Pair(m, n) => (Op::Pair, vec![], vec![(none(), &**m), (none(), &**n)]),
            Term::Fst(m) => (Op::Fst, vec![], vec![(none(), &**m)]),
            Term::Snd(m) => (Op::Snd, vec![], vec![(none(), &**m)]),
            Term::DLam { var, body } => (Op::DLam, vec![], vec![(bd(var), &**body)]),
            Term::DApp(m, r) => (Op::DApp, vec![r], vec![(none(), &**m)]),
            Term::Star => (Op::Star, vec![], vec![]),
            Term::Zero => (Op::Zero, vec![], vec![]),
            Term::Suc(m) => (Op::Suc, vec![], vec![(none(), &**m)]),
            Term::NatRec { scrut, zero, pred, ih, succ } => (
                Op::NatRec,
                vec![],
                vec![
                    (none(), &**scrut),
                    (none(), &**zero),
                    (vec![Binder::Term(pred.clone()), Binder::Term(ih.clone())], &**succ),
                ],
            ),
            Term::True => (Op::True, vec![], vec![]),
            Term::False => (Op::False, vec![], vec![]),
            Term::If { var, motive, scrut, tt, ff } => (
                Op::If,
                vec![],
                vec![(bt(var), &**motive), (none(), &**scrut), (none(), &**tt), (none(), &**ff)],
            ),
            Term::Base => (Op::Base, vec![], vec![]),
            Term::Loop(r) => (Op::Loop, vec![r], vec![]),
            Term::CircElim { var, motive, scrut, base, dvar, lp } => (
                Op::CircElim,
                vec![],
                vec![(bt(var), &**motive), (none(), &**scrut), (none(), &**base), (bd(dvar), &**lp)],
            ),
            Term::Coe { var, ty, from, to, arg } => {
                (Op::Coe, vec![from, to], vec![(bd(var), &**ty), (none(), &**arg)])
            }
            Term::Hcom { ty, from, to, cap, tubes } => {
                comp(Op::Hcom(tubes.len()), from, to, vec![(none(), &**ty), (none(), &**cap)], tubes)
            }
            Term::Ghcom { ty, from, to, cap, tubes } => {
                comp(Op::Ghcom(tubes.len()), from, to, vec![(none(), &**ty), (none(), &**cap)], tubes)
            }
            Term::Com { var, ty, from, to, cap, tubes } => {
                comp(Op::Com(tubes.len()), from, to, vec![(bd(var), &**ty), (none(), &**cap)], tubes)
            }
            Term::Gcom { var, ty, from, to, cap, tubes } => {
                comp(Op::Gcom(tubes.len()), from, to, vec![(bd(var), &**ty), (none(), &**cap)], tubes)
            }
            Term::Fcom { from, to, cap, tubes } => comp(Op::Fcom(tubes.len()), from, to, vec![(none(), &**cap)], tubes),
            Term::Cap { from, to, arg, tubes } => comp(Op::Cap(tubes.len()), from, to, vec![(none(), &**arg)], tubes),
            Term::Boxed { from, to, cap, tubes } => {
                let mut dims = vec![from, to];
                tube_dims(&mut dims, tubes.iter().map(|t| &t.eq));
                let mut args = vec![(none(), &**cap)];
                args.extend(tubes.iter().map(|t| (none(), &t.body)));
                (Op::Box(tubes.len()), dims, args)
            }
        };
        View { op, dims, args }
    }

    pub fn to_node(&self) -> Node {
        let v = self.view();
        Node {
            op: v.op,
            dims: v.dims.into_iter().cloned().collect(),
            args: v.args.into_iter().map(|(binders, body)| Scope { binders, body: body.clone() }).collect(),
        }
    }
}

type CompParts<'a> = (Op, Vec<&'a Dim>, Vec<(Vec<Binder>, &'a Term)>);

fn comp<'a>(
    op: Op,
    from: &'a Dim,
    to: &'a Dim,
    mut args: Vec<(Vec<Binder>, &'a Term)>,
    tubes: &'a [Tube],
) -> CompParts<'a> {
    let mut dims = vec![from, to];
    tube_dims(&mut dims, tubes.iter().map(|t| &t.eq));
    args.extend(tubes.iter().map(|t| (bd(&t.var), &t.body)));
    (op, dims, args)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeError(pub String);

impl Node {
    /// Rebuilds a term, checking the argument shape against the operator.
    pub fn build(self) -> Result<Term, ShapeError> {
        let (ndims, sorts) = self.op.arity();
        if self.dims.len() != ndims || self.args.len() != sorts.len() {
            return Err(ShapeError(format!(
                "`{}` expects {} dimensions and {} arguments, got {} and {}",
                self.op.tag(),
                ndims,
                sorts.len(),
                self.dims.len(),
                self.args.len()
            )));
        }
        for (scope, sorts) in self.args.iter().zip(&sorts) {
            let ok = scope.binders.len() == sorts.len()
                && scope.binders.iter().zip(sorts).all(|(b, s)| {
                    matches!((b, s), (Binder::Dim(_), BSort::D) | (Binder::Term(_), BSort::T))
                });
            if !ok {
                return Err(ShapeError(format!("binder mismatch under `{}`", self.op.tag())));
            }
        }
        Ok(self.build_unchecked())
    }

    pub(crate) fn build_unchecked(self) -> Term {
        let Node { op, dims, args } = self;
        let mut dims = dims.into_iter();
        let mut args = args.into_iter();
        let mut d = || dims.next().expect("dimension argument");
        let mut a = || args.next().expect("term argument");
        fn body(s: Scope) -> Box<Term> {
            Box::new(s.body)
        }
        fn tname(s: &Scope, i: usize) -> Name {
            s.binders[i].name().clone()
        }
        macro_rules! plain {
            () => {
                body(a())
            };
        }
        match op {
            Op::Var(n) => Term::Var(n),
            Op::Pi | Op::Sigma => {
                let dom = plain!();
                let s = a();
                let var = tname(&s, 0);
                if op == Op::Pi {
                    Term::Pi { var, dom, cod: body(s) }
                } else {
                    Term::Sigma { var, dom, cod: body(s) }
                }
            }
            Op::Path => {
                let s = a();
                Term::Path { var: tname(&s, 0), ty: body(s), lhs: plain!(), rhs: plain!() }
            }
            Op::Eq => Term::Eq { ty: plain!(), lhs: plain!(), rhs: plain!() },
            Op::Void => Term::Void,
            Op::Nat => Term::Nat,
            Op::Bool => Term::Bool,
            Op::WBool => Term::WBool,
            Op::Circle => Term::Circle,
            Op::Univ(kind, level) => Term::Univ { kind, level },
            Op::V => Term::V { dim: d(), a: plain!(), b: plain!(), equiv: plain!() },
            Op::VIn => Term::VIn { dim: d(), m: plain!(), n: plain!() },
            Op::VProj => Term::VProj { dim: d(), m: plain!(), f: plain!() },
            Op::Lam => {
                let s = a();
                Term::Lam { var: tname(&s, 0), body: body(s) }
            }
            Op::App => Term::App(plain!(), plain!()),
            Op::Pair => Term::Pair(plain!(), plain!()),
            Op::Fst => Term::Fst(plain!()),
            Op::Snd => Term::Snd(plain!()),
            Op::DLam => {
                let s = a();
                Term::DLam { var: tname(&s, 0), body: body(s) }
            }
            Op::DApp => {
                let r = d();
                Term::DApp(plain!(), r)
            }
            Op::Star => Term::Star,
            Op::Zero => Term::Zero,
            Op::Suc => Term::Suc(plain!()),
            Op::NatRec => {
                let scrut = plain!();
                let zero = plain!();
                let s = a();
                Term::NatRec { scrut, zero, pred: tname(&s, 0), ih: tname(&s, 1), succ: body(s) }
            }
            Op::True => Term::True,
            Op::False => Term::False,
            Op::If => {
                let s = a();
                let var = tname(&s, 0);
                Term::If { var, motive: body(s), scrut: plain!(), tt: plain!(), ff: plain!() }
            }
            Op::Base => Term::Base,
            Op::Loop => Term::Loop(d()),
            Op::CircElim => {
                let s = a();
                let var = tname(&s, 0);
                let motive = body(s);
                let scrut = plain!();
                let base = plain!();
                let l = a();
                Term::CircElim { var, motive, scrut, base, dvar: tname(&l, 0), lp: body(l) }
            }
            Op::Coe => {
                let from = d();
                let to = d();
                let s = a();
                Term::Coe { var: tname(&s, 0), ty: body(s), from, to, arg: plain!() }
            }
            Op::Hcom(n) | Op::Ghcom(n) | Op::Com(n) | Op::Gcom(n) | Op::Fcom(n) | Op::Cap(n) => {
                let from = d();
                let to = d();
                let eqs: Vec<Equation> = (0..n).map(|_| Equation::new(d(), d())).collect();
                let head: Vec<Scope> = match op {
                    Op::Fcom(_) | Op::Cap(_) => vec![a()],
                    _ => vec![a(), a()],
                };
                let tubes: Vec<Tube> = eqs
                    .into_iter()
                    .map(|eq| {
                        let s = a();
                        Tube { eq, var: tname(&s, 0), body: s.body }
                    })
                    .collect();
                let mut head = head.into_iter();
                match op {
                    Op::Hcom(_) => {
                        Term::Hcom { ty: body(head.next().unwrap()), from, to, cap: body(head.next().unwrap()), tubes }
                    }
                    Op::Ghcom(_) => {
                        Term::Ghcom { ty: body(head.next().unwrap()), from, to, cap: body(head.next().unwrap()), tubes }
                    }
                    Op::Com(_) | Op::Gcom(_) => {
                        let s = head.next().unwrap();
                        let var = tname(&s, 0);
                        let ty = body(s);
                        let cap = body(head.next().unwrap());
                        if matches!(op, Op::Com(_)) {
                            Term::Com { var, ty, from, to, cap, tubes }
                        } else {
                            Term::Gcom { var, ty, from, to, cap, tubes }
                        }
                    }
                    Op::Fcom(_) => Term::Fcom { from, to, cap: body(head.next().unwrap()), tubes },
                    _ => Term::Cap { from, to, arg: body(head.next().unwrap()), tubes },
                }
            }
            Op::Box(n) => {
                let from = d();
                let to = d();
                let eqs: Vec<Equation> = (0..n).map(|_| Equation::new(d(), d())).collect();
                let cap = plain!();
                let tubes = eqs.into_iter().map(|eq| BoxTube { eq, body: a().body }).collect();
                Term::Boxed { from, to, cap, tubes }
            }
        }
    }
}

pub(crate) fn free_dims(m: &Term, bound: &mut Vec<Name>, out: &mut BTreeSet<Name>) {
    let v = m.view();
    for d in v.dims {
        if let Dim::Name(n) = d {
            if !bound.contains(n) {
                out.insert(n.clone());
            }
        }
    }
    for (binders, body) in v.args {
        let before = bound.len();
        bound.extend(binders.iter().filter_map(|b| match b {
            Binder::Dim(n) => Some(n.clone()),
            Binder::Term(_) => None,
        }));
        free_dims(body, bound, out);
        bound.truncate(before);
    }
}

pub(crate) fn free_vars(m: &Term, bound: &mut Vec<Name>, out: &mut BTreeSet<Name>) {
    if let Term::Var(n) = m {
        if !bound.contains(n) {
            out.insert(n.clone());
        }
        return;
    }
    for (binders, body) in m.view().args {
        let before = bound.len();
        bound.extend(binders.iter().filter_map(|b| match b {
            Binder::Term(n) => Some(n.clone()),
            Binder::Dim(_) => None,
        }));
        free_vars(body, bound, out);
        bound.truncate(before);
    }
}

pub(crate) fn all_names(m: &Term, out: &mut BTreeSet<Name>) {
    let v = m.view();
    if let Op::Var(n) = &v.op {
        out.insert(n.clone());
    }
    for d in v.dims {
        if let Dim::Name(n) = d {
            out.insert(n.clone());
        }
    }
    for (binders, body) in v.args {
        out.extend(binders.iter().map(|b| b.name().clone()));
        all_names(body, out);
    }
}
