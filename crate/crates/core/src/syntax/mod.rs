//! The term language: abstract syntax, binders, substitution, alpha
//! equivalence, and the concrete and JSON surface forms.

mod alpha;
mod json;
mod node;
mod parse;
mod print;
mod subst;

use std::collections::BTreeSet;

pub use alpha::alpha_eq;
pub use json::{term_from_json, term_to_json};
pub use node::{Binder, Node, Op, Scope};
pub use parse::{parse, parse_dim, ParseError};
pub use print::print;
pub use subst::{apply_subst, dsubst, subst_many, tsubst, SubstError};

use crate::cube::{Dim, Equation, EquationList};
use crate::name::{Fresh, Name};

/// Universe kind: pretypes or Kan types.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Kind {
    Pre,
    Kan,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Pre => "pre",
            Kind::Kan => "kan",
        }
    }
}

/// One side of a composition problem: `eq ↪ var. body`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tube {
    pub eq: Equation,
    pub var: Name,
    pub body: Term,
}

impl Tube {
    pub fn new(eq: Equation, var: Name, body: Term) -> Tube {
        Tube { eq, var, body }
    }

    /// The body with its bound dimension replaced by `r`.
    pub fn at(&self, r: &Dim) -> Term {
        dsubst(&self.body, r, &self.var)
    }
}

/// A side of a `box`, which binds no dimension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoxTube {
    pub eq: Equation,
    pub body: Term,
}

impl BoxTube {
    pub fn new(eq: Equation, body: Term) -> BoxTube {
        BoxTube { eq, body }
    }
}

type T = Box<Term>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Term {
    Var(Name),
    Pi { var: Name, dom: T, cod: T },
    Sigma { var: Name, dom: T, cod: T },
    Path { var: Name, ty: T, lhs: T, rhs: T },
    Eq { ty: T, lhs: T, rhs: T },
    Void,
    Nat,
    Bool,
    WBool,
    Circle,
    Univ { kind: Kind, level: u32 },
    /// `ua_r(A, B, E)`
    V { dim: Dim, a: T, b: T, equiv: T },
    /// `uain_r(M, N)`
    VIn { dim: Dim, m: T, n: T },
    /// `uaproj_r(M, F)`
    VProj { dim: Dim, m: T, f: T },
    Lam { var: Name, body: T },
    App(T, T),
    Pair(T, T),
    Fst(T),
    Snd(T),
    DLam { var: Name, body: T },
    DApp(T, Dim),
    Star,
    Zero,
    Suc(T),
    NatRec { scrut: T, zero: T, pred: Name, ih: Name, succ: T },
    True,
    False,
    If { var: Name, motive: T, scrut: T, tt: T, ff: T },
    Base,
    Loop(Dim),
    CircElim { var: Name, motive: T, scrut: T, base: T, dvar: Name, lp: T },
    Coe { var: Name, ty: T, from: Dim, to: Dim, arg: T },
    Hcom { ty: T, from: Dim, to: Dim, cap: T, tubes: Vec<Tube> },
    Com { var: Name, ty: T, from: Dim, to: Dim, cap: T, tubes: Vec<Tube> },
    Fcom { from: Dim, to: Dim, cap: T, tubes: Vec<Tube> },
    Ghcom { ty: T, from: Dim, to: Dim, cap: T, tubes: Vec<Tube> },
    Gcom { var: Name, ty: T, from: Dim, to: Dim, cap: T, tubes: Vec<Tube> },
    Boxed { from: Dim, to: Dim, cap: T, tubes: Vec<BoxTube> },
    Cap { from: Dim, to: Dim, arg: T, tubes: Vec<Tube> },
}

/// Equations of a tube list, in order.
pub fn equations(tubes: &[Tube]) -> EquationList {
    tubes.iter().map(|t| t.eq.clone()).collect()
}

pub fn box_equations(tubes: &[BoxTube]) -> EquationList {
    tubes.iter().map(|t| t.eq.clone()).collect()
}

/// Short constructors used by the evaluator and tests.
pub mod build {
    use super::*;

    pub fn var(s: &str) -> Term {
        Term::Var(Name::new(s))
    }
    pub fn lam(a: &Name, body: Term) -> Term {
        Term::Lam { var: a.clone(), body: Box::new(body) }
    }
    pub fn app(m: Term, n: Term) -> Term {
        Term::App(Box::new(m), Box::new(n))
    }
    pub fn pair(m: Term, n: Term) -> Term {
        Term::Pair(Box::new(m), Box::new(n))
    }
    pub fn fst(m: Term) -> Term {
        Term::Fst(Box::new(m))
    }
    pub fn snd(m: Term) -> Term {
        Term::Snd(Box::new(m))
    }
    pub fn dlam(x: &Name, body: Term) -> Term {
        Term::DLam { var: x.clone(), body: Box::new(body) }
    }
    pub fn dapp(m: Term, r: Dim) -> Term {
        Term::DApp(Box::new(m), r)
    }
    pub fn suc(m: Term) -> Term {
        Term::Suc(Box::new(m))
    }
    pub fn vin(r: Dim, m: Term, n: Term) -> Term {
        Term::VIn { dim: r, m: Box::new(m), n: Box::new(n) }
    }
    pub fn vproj(r: Dim, m: Term, f: Term) -> Term {
        Term::VProj { dim: r, m: Box::new(m), f: Box::new(f) }
    }
    pub fn coe(x: &Name, ty: Term, from: Dim, to: Dim, arg: Term) -> Term {
        Term::Coe { var: x.clone(), ty: Box::new(ty), from, to, arg: Box::new(arg) }
    }
    pub fn hcom(ty: Term, from: Dim, to: Dim, cap: Term, tubes: Vec<Tube>) -> Term {
        Term::Hcom { ty: Box::new(ty), from, to, cap: Box::new(cap), tubes }
    }
    pub fn com(y: &Name, ty: Term, from: Dim, to: Dim, cap: Term, tubes: Vec<Tube>) -> Term {
        Term::Com { var: y.clone(), ty: Box::new(ty), from, to, cap: Box::new(cap), tubes }
    }
    pub fn fcom(from: Dim, to: Dim, cap: Term, tubes: Vec<Tube>) -> Term {
        Term::Fcom { from, to, cap: Box::new(cap), tubes }
    }
    pub fn ghcom(ty: Term, from: Dim, to: Dim, cap: Term, tubes: Vec<Tube>) -> Term {
        Term::Ghcom { ty: Box::new(ty), from, to, cap: Box::new(cap), tubes }
    }
    pub fn gcom(y: &Name, ty: Term, from: Dim, to: Dim, cap: Term, tubes: Vec<Tube>) -> Term {
        Term::Gcom { var: y.clone(), ty: Box::new(ty), from, to, cap: Box::new(cap), tubes }
    }
    pub fn boxed(from: Dim, to: Dim, cap: Term, tubes: Vec<BoxTube>) -> Term {
        Term::Boxed { from, to, cap: Box::new(cap), tubes }
    }
    pub fn cap(from: Dim, to: Dim, arg: Term, tubes: Vec<Tube>) -> Term {
        Term::Cap { from, to, arg: Box::new(arg), tubes }
    }
    pub fn tube(lhs: Dim, rhs: Dim, y: &Name, body: Term) -> Tube {
        Tube::new(Equation::new(lhs, rhs), y.clone(), body)
    }
    pub fn iff(b: &Name, motive: Term, scrut: Term, tt: Term, ff: Term) -> Term {
        Term::If { var: b.clone(), motive: Box::new(motive), scrut: Box::new(scrut), tt: Box::new(tt), ff: Box::new(ff) }
    }
    pub fn circ_elim(c: &Name, motive: Term, scrut: Term, base: Term, x: &Name, lp: Term) -> Term {
        Term::CircElim {
            var: c.clone(),
            motive: Box::new(motive),
            scrut: Box::new(scrut),
            base: Box::new(base),
            dvar: x.clone(),
            lp: Box::new(lp),
        }
    }
}

impl Term {
    /// Free dimension names.
    pub fn fd(&self) -> BTreeSet<Name> {
        let mut out = BTreeSet::new();
        node::free_dims(self, &mut Vec::new(), &mut out);
        out
    }

    /// Free term variables.
    pub fn fv(&self) -> BTreeSet<Name> {
        let mut out = BTreeSet::new();
        node::free_vars(self, &mut Vec::new(), &mut out);
        out
    }

    /// Every name occurring anywhere, bound or free, of either sort.
    pub fn all_names(&self) -> BTreeSet<Name> {
        let mut out = BTreeSet::new();
        node::all_names(self, &mut out);
        out
    }

    pub fn is_closed(&self) -> bool {
        self.fv().is_empty()
    }

    /// A fresh-name supply avoiding every name in `self`.
    pub fn fresh_supply(&self) -> Fresh {
        Fresh::new(self.all_names())
    }

    /// Number of constructors.
    pub fn size(&self) -> usize {
        let node = self.to_node();
        1 + node.args.iter().map(|s| s.body.size()).sum::<usize>()
    }
}

/// Free dimension names of `m`.
pub fn fd(m: &Term) -> BTreeSet<Name> {
    m.fd()
}
