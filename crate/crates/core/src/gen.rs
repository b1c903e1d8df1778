//! Seeded random terms for the property suites.
//!
//! Terms are built from per-type templates, so most subterms are well typed,
//! but nothing is checked: a `junk` weight deliberately generates at the wrong
//! type. Generated terms are closed and their free dimensions lie in the
//! declared context.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cube::{Dim, DimCtx, DimSubst, Equation};
use crate::name::Name;
use crate::syntax::build::*;
use crate::syntax::{BoxTube, Kind, Scope, Term, Tube};

#[derive(Clone, Copy, Debug)]
pub struct Weights {
    pub canonical: u32,
    pub var: u32,
    pub elim: u32,
    pub kan: u32,
    pub ua: u32,
    pub junk: u32,
}

impl Default for Weights {
    fn default() -> Weights {
        Weights { canonical: 4, var: 3, elim: 4, kan: 5, ua: 2, junk: 1 }
    }
}

#[derive(Clone, Debug)]
pub struct GenConfig {
    pub max_depth: u32,
    /// Dimension names available free: `x`, `y`, `z`, `w`, then `x4`, ...
    pub dim_pool: usize,
    pub weights: Weights,
    pub seed: u64,
}

impl Default for GenConfig {
    fn default() -> GenConfig {
        GenConfig { max_depth: 4, dim_pool: 3, weights: Weights::default(), seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Ty {
    Bool,
    Nat,
    WBool,
    S1,
    Fun(Box<Ty>, Box<Ty>),
    Prod(Box<Ty>, Box<Ty>),
    Path(Box<Ty>),
    Univ,
}

/// A generated term and the dimension context it lives in.
#[derive(Clone, Debug)]
pub struct Case {
    pub psi: DimCtx,
    pub term: Term,
}

pub fn pool_name(i: usize) -> Name {
    match i {
        0 => Name::new("x"),
        1 => Name::new("y"),
        2 => Name::new("z"),
        3 => Name::new("w"),
        _ => Name::new(format!("x{i}")),
    }
}

pub struct Gen {
    cfg: GenConfig,
    rng: ChaCha8Rng,
    dims: Vec<Name>,
    vars: Vec<(Name, Ty)>,
    counter: usize,
}

enum Pick {
    Canonical,
    Var,
    Elim,
    Kan,
    Ua,
    Junk,
}

impl Gen {
    pub fn new(cfg: GenConfig) -> Gen {
        let rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        Gen { cfg, rng, dims: Vec::new(), vars: Vec::new(), counter: 0 }
    }

    /// The generator for case `index` of a run, independent of other cases.
    pub fn for_case(cfg: &GenConfig, index: u64) -> Gen {
        let mut cfg = cfg.clone();
        cfg.seed = cfg.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(index);
        Gen::new(cfg)
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn case(&mut self) -> Case {
        let n = self.rng.gen_range(0..=self.cfg.dim_pool);
        let psi: Vec<Name> = (0..n).map(pool_name).collect();
        self.dims = psi.clone();
        self.vars.clear();
        let ty = self.ty(2);
        let term = self.tm(&ty, self.cfg.max_depth);
        Case { psi: DimCtx::from_names(psi).expect("distinct pool names"), term }
    }

    /// A random total substitution out of `psi`.
    pub fn subst(&mut self, psi: &DimCtx) -> DimSubst {
        let k = self.rng.gen_range(0..=self.cfg.dim_pool.max(1));
        let target: Vec<Name> = (0..k).map(pool_name).collect();
        let mut map = BTreeMap::new();
        for x in psi.names() {
            let r = match self.rng.gen_range(0..3) {
                0 => Dim::Zero,
                1 => Dim::One,
                _ => target.choose(&mut self.rng).map_or(Dim::Zero, |n| Dim::Name(n.clone())),
            };
            map.insert(x.clone(), r);
        }
        let target = DimCtx::from_names(target).expect("distinct pool names");
        DimSubst::new(psi.clone(), target, map).expect("total by construction")
    }

    fn fresh(&mut self, stem: &str) -> Name {
        self.counter += 1;
        Name::new(format!("{stem}{}", self.counter))
    }

    fn ty(&mut self, depth: u32) -> Ty {
        let simple = [Ty::Bool, Ty::Bool, Ty::Nat, Ty::WBool, Ty::S1];
        if depth == 0 || self.rng.gen_bool(0.6) {
            return simple.choose(&mut self.rng).unwrap().clone();
        }
        match self.rng.gen_range(0..4) {
            0 => Ty::Fun(Box::new(self.ty(depth - 1)), Box::new(self.ty(depth - 1))),
            1 => Ty::Prod(Box::new(self.ty(depth - 1)), Box::new(self.ty(depth - 1))),
            2 => Ty::Path(Box::new(self.ty(depth - 1))),
            _ => Ty::Univ,
        }
    }

    fn dim(&mut self) -> Dim {
        let k = self.dims.len();
        match self.rng.gen_range(0..k + 2) {
            0 => Dim::Zero,
            1 => Dim::One,
            i => Dim::Name(self.dims[i - 2].clone()),
        }
    }

    fn eq(&mut self) -> Equation {
        let lhs = self.dim();
        let rhs = if self.rng.gen_bool(0.75) { Dim::constant(self.rng.gen()) } else { self.dim() };
        Equation::new(lhs, rhs)
    }

    fn under_dim<T>(&mut self, f: impl FnOnce(&mut Gen, &Name) -> T) -> (Name, T) {
        let y = self.fresh("i");
        self.dims.push(y.clone());
        let out = f(self, &y);
        self.dims.pop();
        (y, out)
    }

    fn under_var<T>(&mut self, ty: &Ty, f: impl FnOnce(&mut Gen, &Name) -> T) -> (Name, T) {
        let a = self.fresh("a");
        self.vars.push((a.clone(), ty.clone()));
        let out = f(self, &a);
        self.vars.pop();
        (a, out)
    }

    /// A term denoting `ty`.
    fn ty_tm(&mut self, ty: &Ty, depth: u32) -> Term {
        let d = depth.saturating_sub(1);
        match ty {
            Ty::Bool => Term::Bool,
            Ty::Nat => Term::Nat,
            Ty::WBool => Term::WBool,
            Ty::S1 => Term::Circle,
            Ty::Univ => Term::Univ { kind: Kind::Kan, level: 0 },
            Ty::Fun(a, b) | Ty::Prod(a, b) => {
                let dom = self.ty_tm(a, d);
                let (v, cod) = self.under_var(a, |g, _| g.ty_tm(b, d));
                let (dom, cod) = (Box::new(dom), Box::new(cod));
                if matches!(ty, Ty::Fun(..)) {
                    Term::Pi { var: v, dom, cod }
                } else {
                    Term::Sigma { var: v, dom, cod }
                }
            }
            Ty::Path(a) => {
                let (x, line) = self.under_dim(|g, _| g.ty_tm(a, d));
                let (l, r) = (self.tm(a, d), self.tm(a, d));
                Term::Path { var: x, ty: Box::new(line), lhs: Box::new(l), rhs: Box::new(r) }
            }
        }
    }

    /// A type line in the bound dimension `x`, sometimes a ua-type.
    fn line(&mut self, ty: &Ty, x: &Name, depth: u32) -> Term {
        if matches!(ty, Ty::Bool) && self.rng.gen_bool(0.4) {
            let e = self.equiv_bool();
            return Term::V { dim: Dim::Name(x.clone()), a: Box::new(Term::Bool), b: Box::new(Term::Bool), equiv: Box::new(e) };
        }
        self.ty_tm(ty, depth)
    }

    /// `(f, *)` for f identity or negation on bool; only `fst` is ever used.
    fn equiv_bool(&mut self) -> Term {
        let a = self.fresh("a");
        let body = if self.rng.gen() {
            Term::Var(a.clone())
        } else {
            let b = self.fresh("b");
            iff(&b, Term::Bool, Term::Var(a.clone()), Term::False, Term::True)
        };
        pair(lam(&a, body), Term::Star)
    }

    fn tubes(&mut self, ty: &Ty, depth: u32) -> Vec<Tube> {
        let n = self.rng.gen_range(0..=2);
        (0..n)
            .map(|_| {
                let eq = self.eq();
                let (y, body) = self.under_dim(|g, _| g.tm(ty, depth));
                Tube { eq, var: y, body }
            })
            .collect()
    }

    fn pick(&mut self, depth: u32) -> Pick {
        let w = self.cfg.weights;
        let leaf = depth == 0;
        let table = [
            (Pick::Canonical, w.canonical),
            (Pick::Var, if self.vars.is_empty() { 0 } else { w.var }),
            (Pick::Elim, if leaf { 0 } else { w.elim }),
            (Pick::Kan, if leaf { 0 } else { w.kan }),
            (Pick::Ua, if leaf { 0 } else { w.ua }),
            (Pick::Junk, if leaf { 0 } else { w.junk }),
        ];
        let total: u32 = table.iter().map(|(_, w)| w).sum();
        let mut k = self.rng.gen_range(0..total.max(1));
        for (p, w) in table {
            if k < w {
                return p;
            }
            k -= w;
        }
        Pick::Canonical
    }

    /// A term meant to have type `ty`.
    fn tm(&mut self, ty: &Ty, depth: u32) -> Term {
        match self.pick(depth) {
            Pick::Canonical => self.canonical(ty, depth),
            Pick::Var => {
                let fit: Vec<Name> = self.vars.iter().filter(|(_, t)| t == ty).map(|(n, _)| n.clone()).collect();
                match fit.choose(&mut self.rng) {
                    Some(n) => Term::Var(n.clone()),
                    None => self.canonical(ty, depth),
                }
            }
            Pick::Elim => self.elim(ty, depth),
            Pick::Kan => self.kan(ty, depth),
            Pick::Ua => self.ua(ty, depth),
            Pick::Junk => {
                let other = self.ty(1);
                self.tm(&other, depth - 1)
            }
        }
    }

    fn canonical(&mut self, ty: &Ty, depth: u32) -> Term {
        let d = depth.saturating_sub(1);
        match ty {
            Ty::Bool | Ty::WBool => {
                if matches!(ty, Ty::WBool) && depth > 0 && self.rng.gen_bool(0.3) {
                    let (r, r2) = (self.dim(), self.dim());
                    let cap = self.tm(ty, d);
                    let ts = self.tubes(ty, d);
                    return fcom(r, r2, cap, ts);
                }
                if self.rng.gen() {
                    Term::True
                } else {
                    Term::False
                }
            }
            Ty::Nat => {
                if depth > 0 && self.rng.gen() {
                    suc(self.tm(ty, d))
                } else {
                    Term::Zero
                }
            }
            Ty::S1 => match self.rng.gen_range(0..4) {
                0 | 1 => Term::Base,
                2 => Term::Loop(self.dim()),
                _ if depth > 0 => {
                    let (r, r2) = (self.dim(), self.dim());
                    let cap = self.tm(ty, d);
                    let ts = self.tubes(ty, d);
                    fcom(r, r2, cap, ts)
                }
                _ => Term::Base,
            },
            Ty::Fun(a, b) => {
                let (v, body) = self.under_var(a, |g, _| g.tm(b, d));
                lam(&v, body)
            }
            Ty::Prod(a, b) => pair(self.tm(a, d), self.tm(b, d)),
            Ty::Path(a) => {
                let (x, body) = self.under_dim(|g, _| g.tm(a, d));
                dlam(&x, body)
            }
            Ty::Univ => {
                let t = self.ty(1);
                self.ty_tm(&t, d)
            }
        }
    }

    fn elim(&mut self, ty: &Ty, depth: u32) -> Term {
        let d = depth - 1;
        match self.rng.gen_range(0..6) {
            0 => {
                let a = self.ty(1);
                let f = self.tm(&Ty::Fun(Box::new(a.clone()), Box::new(ty.clone())), d);
                app(f, self.tm(&a, d))
            }
            1 => {
                let b = self.ty(1);
                if self.rng.gen() {
                    fst(self.tm(&Ty::Prod(Box::new(ty.clone()), Box::new(b)), d))
                } else {
                    snd(self.tm(&Ty::Prod(Box::new(b), Box::new(ty.clone())), d))
                }
            }
            2 => {
                let (bv, motive) = self.under_var(&Ty::Bool, |g, _| g.ty_tm(ty, d));
                let s = self.tm(&Ty::Bool, d);
                iff(&bv, motive, s, self.tm(ty, d), self.tm(ty, d))
            }
            3 => {
                let scrut = self.tm(&Ty::Nat, d);
                let zero = self.tm(ty, d);
                let (n, (a, succ)) = self.under_var(&Ty::Nat, |g, _| g.under_var(ty, |g, _| g.tm(ty, d)));
                Term::NatRec { scrut: Box::new(scrut), zero: Box::new(zero), pred: n, ih: a, succ: Box::new(succ) }
            }
            4 => {
                let (c, motive) = self.under_var(&Ty::S1, |g, _| g.ty_tm(ty, d));
                let s = self.tm(&Ty::S1, d);
                let base = self.tm(ty, d);
                let (x, lp) = self.under_dim(|g, _| g.tm(ty, d));
                circ_elim(&c, motive, s, base, &x, lp)
            }
            _ => {
                let p = self.tm(&Ty::Path(Box::new(ty.clone())), d);
                let r = self.dim();
                dapp(p, r)
            }
        }
    }

    fn kan(&mut self, ty: &Ty, depth: u32) -> Term {
        let d = depth - 1;
        let (r, r2) = (self.dim(), self.dim());
        match self.rng.gen_range(0..6) {
            0 => {
                let (x, line) = self.under_dim(|g, x| g.line(ty, x, d));
                coe(&x, line, r, r2, self.tm(ty, d))
            }
            1 => {
                let a = self.ty_tm(ty, d);
                let cap = self.tm(ty, d);
                hcom(a, r, r2, cap, self.tubes(ty, d))
            }
            2 => {
                let (y, line) = self.under_dim(|g, x| g.line(ty, x, d));
                let cap = self.tm(ty, d);
                com(&y, line, r, r2, cap, self.tubes(ty, d))
            }
            3 => {
                let a = self.ty_tm(ty, d);
                let cap = self.tm(ty, d);
                ghcom(a, r, r2, cap, self.tubes(ty, d))
            }
            4 => {
                let (y, line) = self.under_dim(|g, x| g.line(ty, x, d));
                let cap = self.tm(ty, d);
                gcom(&y, line, r, r2, cap, self.tubes(ty, d))
            }
            _ => {
                // cap of a box, over a composite type with the same shape
                let a = self.tm(ty, d);
                let eqs: Vec<Equation> = (0..self.rng.gen_range(0..=2)).map(|_| self.eq()).collect();
                let sides = eqs.iter().map(|e| BoxTube::new(e.clone(), self.tm(ty, d))).collect();
                let lines = eqs
                    .iter()
                    .map(|e| {
                        let (y, b) = self.under_dim(|g, _| g.ty_tm(ty, d));
                        Tube::new(e.clone(), y, b)
                    })
                    .collect();
                cap(r.clone(), r2.clone(), boxed(r, r2, a, sides), lines)
            }
        }
    }

    fn ua(&mut self, ty: &Ty, depth: u32) -> Term {
        let d = depth - 1;
        if !matches!(ty, Ty::Bool) {
            return self.kan(ty, depth);
        }
        let r = self.dim();
        let e = self.equiv_bool();
        let f = fst(e.clone());
        match self.rng.gen_range(0..3) {
            0 => {
                let (m, n) = (self.tm(ty, d), self.tm(ty, d));
                vproj(r.clone(), vin(r, m, n), f)
            }
            1 => vproj(r, self.tm(ty, d), f),
            _ => {
                let (x, line) = self.under_dim(|g, x| g.line(ty, x, d));
                let (s, s2) = (self.dim(), self.dim());
                coe(&x, line, s, s2, self.tm(ty, d))
            }
        }
    }
}

/// Immediate subterms that make sense on their own in `psi`.
fn standalone_children(m: &Term, psi: &DimCtx) -> Vec<Term> {
    m.to_node()
        .args
        .into_iter()
        .map(|s: Scope| s.body)
        .filter(|b| b.is_closed() && b.fd().iter().all(|x| psi.contains(x)))
        .collect()
}

fn candidates(m: &Term, psi: &DimCtx) -> Vec<Term> {
    let mut out = standalone_children(m, psi);
    let node = m.to_node();
    for (k, s) in node.args.iter().enumerate() {
        for smaller in standalone_children(&s.body, psi) {
            let mut n = node.clone();
            n.args[k].body = smaller;
            if let Ok(t) = n.build() {
                out.push(t);
            }
        }
    }
    out
}

/// Greedy structural shrinking: repeatedly replace the term by the first
/// smaller candidate (children first) that still fails.
pub fn shrink(m: &Term, psi: &DimCtx, fails: impl Fn(&Term) -> bool) -> Term {
    let mut cur = m.clone();
    'outer: loop {
        for c in candidates(&cur, psi) {
            if c.size() < cur.size() && fails(&c) {
                cur = c;
                continue 'outer;
            }
        }
        return cur;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_terms() {
        let cfg = GenConfig { seed: 11, ..GenConfig::default() };
        let a: Vec<_> = (0..50).map(|i| Gen::for_case(&cfg, i).case().term).collect();
        let b: Vec<_> = (0..50).map(|i| Gen::for_case(&cfg, i).case().term).collect();
        assert_eq!(a, b);
        let other = GenConfig { seed: 12, ..cfg };
        let c: Vec<_> = (0..50).map(|i| Gen::for_case(&other, i).case().term).collect();
        assert_ne!(a, c);
    }

    #[test]
    fn generated_terms_are_closed_and_scoped() {
        let cfg = GenConfig::default();
        for i in 0..2000 {
            let mut g = Gen::for_case(&cfg, i);
            let c = g.case();
            assert!(c.term.is_closed(), "{:?}", c.term);
            assert!(c.term.fd().iter().all(|x| c.psi.contains(x)));
            let s = g.subst(&c.psi);
            assert_eq!(s.source(), &c.psi);
        }
    }

    #[test]
    fn shrinking_finds_a_small_witness() {
        let m = crate::syntax::parse("pair (suc (if (b. nat) true zero (suc zero))) false").unwrap();
        let has_if = |t: &Term| crate::syntax::print(t).contains("if");
        let s = shrink(&m, &DimCtx::new(), has_if);
        assert_eq!(crate::syntax::print(&s), "if (b. nat) true zero zero");
    }
}
