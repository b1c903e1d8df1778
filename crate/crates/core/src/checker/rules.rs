//! The rule catalog. Rules are stated in local form: the ambient `Ψ | Ξ | Γ`
//! is taken from the conclusion being checked and threaded through every
//! premise.

use super::judgment::{Ctx, Judgment};
use super::{Cx, Instance, Side, Sort};
use crate::cube::{Dim, Equation, EquationList};
use crate::name::{Fresh, Name};
use crate::syntax::build::*;
use crate::syntax::{dsubst, tsubst, BoxTube, Kind, Term, Tube};


pub struct Schema {
    pub id: &'static str,
    pub metas: &'static [(&'static str, Sort)],
    pub premises: &'static str,
    pub conclusion: &'static str,
    pub(super) build: fn(&Cx) -> Result<Instance, String>,
}

macro_rules! catalog {
    ($($id:literal [$($m:literal : $s:ident),*] $prem:literal => $concl:literal, $build:expr;)*) => {
        pub static CATALOG: &[Schema] = &[$(Schema {
            id: $id,
            metas: &[$(($m, Sort::$s)),*],
            premises: $prem,
            conclusion: $concl,
            build: $build,
        }),*];
    };
}

fn pi(a: &Name, dom: Term, cod: Term) -> Term {
    Term::Pi { var: a.clone(), dom: Box::new(dom), cod: Box::new(cod) }
}

fn sigma(a: &Name, dom: Term, cod: Term) -> Term {
    Term::Sigma { var: a.clone(), dom: Box::new(dom), cod: Box::new(cod) }
}

fn path(x: &Name, ty: Term, p0: Term, p1: Term) -> Term {
    Term::Path { var: x.clone(), ty: Box::new(ty), lhs: Box::new(p0), rhs: Box::new(p1) }
}

fn eq_ty(a: Term, m: Term, n: Term) -> Term {
    Term::Eq { ty: Box::new(a), lhs: Box::new(m), rhs: Box::new(n) }
}

fn ua(r: Dim, a: Term, b: Term, e: Term) -> Term {
    Term::V { dim: r, a: Box::new(a), b: Box::new(b), equiv: Box::new(e) }
}

fn univ(kind: Kind, level: u64) -> Term {
    Term::Univ { kind, level: level as u32 }
}

fn natrec(m: Term, z: Term, n: &Name, a: &Name, s: Term) -> Term {
    Term::NatRec { scrut: Box::new(m), zero: Box::new(z), pred: n.clone(), ih: a.clone(), succ: Box::new(s) }
}

fn lp(r: Dim) -> Term {
    Term::Loop(r)
}

fn supply(ts: &[&Term]) -> Fresh {
    let mut f = Fresh::new(Default::default());
    for t in ts {
        f.avoid(t.all_names());
    }
    f
}

/// `A -> B`
pub fn arr(a: Term, b: Term) -> Term {
    let w = supply(&[&a, &b]).name("w");
    pi(&w, a, b)
}

/// `isContr(C) := C × (Π c c' : C. Path(_.C, c, c'))`
fn is_contr(c: Term, f: &mut Fresh) -> Term {
    let (u, v, w, z) = (f.name("c"), f.name("c"), f.name("w"), f.name("w"));
    let all = pi(&u, c.clone(), pi(&v, c.clone(), path(&z, c.clone(), Term::Var(u.clone()), Term::Var(v.clone()))));
    sigma(&w, c, all)
}

/// `Equiv(A, B) := Σ f : A -> B. Π b : B. isContr(Σ a : A. Path(_.B, f a, b))`
pub fn equiv(a: Term, b: Term) -> Term {
    let mut fr = supply(&[&a, &b]);
    let (f, bb, aa, z) = (fr.name("f"), fr.name("b"), fr.name("a"), fr.name("w"));
    let fib = sigma(&aa, a.clone(), path(&z, b.clone(), app(Term::Var(f.clone()), Term::Var(aa.clone())), Term::Var(bb.clone())));
    let body = pi(&bb, b.clone(), is_contr(fib, &mut fr));
    sigma(&f, arr(a, b), body)
}

fn nth<T>(xs: &[T], i: u64, what: &str) -> Result<T, String>
where
    T: Clone,
{
    xs.get(i as usize).cloned().ok_or_else(|| format!("index {i} out of range for {what} of length {}", xs.len()))
}

/// A composition problem's shape: equations and the tube binder.
struct Sys {
    eqs: EquationList,
    y: Name,
}

impl Sys {
    fn of(c: &Cx) -> Sys {
        Sys { eqs: c.eqs("eqs"), y: c.n("y") }
    }

    fn n(&self) -> usize {
        self.eqs.len()
    }

    fn check(&self, ns: &[Term], what: &str) -> Result<(), String> {
        if ns.len() != self.n() {
            return Err(format!("{what} has {} entries but there are {} equations", ns.len(), self.n()));
        }
        Ok(())
    }

    fn tubes(&self, ns: &[Term], what: &str) -> Result<Vec<Tube>, String> {
        self.check(ns, what)?;
        Ok(self.eqs.iter().zip(ns).map(|(e, n)| Tube::new(e.clone(), self.y.clone(), n.clone())).collect())
    }

    fn box_tubes(&self, ns: &[Term], what: &str) -> Result<Vec<BoxTube>, String> {
        self.check(ns, what)?;
        Ok(self.eqs.iter().zip(ns).map(|(e, n)| BoxTube::new(e.clone(), n.clone())).collect())
    }

    fn eq(&self, i: usize) -> Equation {
        self.eqs.0[i].clone()
    }

    /// `(∀i,j) f(i, j)` under `r_i = r_i', r_j = r_j'`
    fn pairs(&self, ctx: &Ctx, f: impl Fn(&Ctx, usize, usize) -> Judgment) -> Vec<Judgment> {
        let mut out = Vec::new();
        for i in 0..self.n() {
            for j in 0..self.n() {
                out.push(f(&ctx.under([self.eq(i), self.eq(j)]), i, j));
            }
        }
        out
    }

    /// `(∀i) f(i)` under `r_i = r_i'`
    fn each(&self, ctx: &Ctx, f: impl Fn(&Ctx, usize) -> Judgment) -> Vec<Judgment> {
        (0..self.n()).map(|i| f(&ctx.under([self.eq(i)]), i)).collect()
    }

    fn fresh(&self, c: &Cx) -> Side {
        Side::FreshDim(self.y.clone(), c.ctx.psi.clone())
    }

    fn holds(&self, i: u64) -> Result<Side, String> {
        let e = nth(&self.eqs.0, i, "the equation list")?;
        Ok(Side::DimEq(e.lhs, e.rhs))
    }
}

fn ok(conclusion: Judgment, premises: Vec<Judgment>, side: Vec<Side>) -> Result<Instance, String> {
    Ok(Instance { conclusion, premises, side })
}

fn eps(c: &Cx, k: &str) -> Result<Dim, String> {
    let e = c.d(k);
    if e.is_const() {
        Ok(e)
    } else {
        Err(format!("{k} must be 0 or 1, got {e}"))
    }
}

fn zero_eq(r: &Dim) -> [Equation; 1] {
    [Equation::new(r.clone(), Dim::Zero)]
}

/// Premises shared by the two hcom rules with a cap `M` in `A`.
fn hcom_tubes(c: &Cx, s: &Sys, ns: &[Term], ns2: &[Term], a: &Term, r: &Dim, m: &Term) -> Vec<Judgment> {
    let y = &s.y;
    let mut ps = s.pairs(&c.ctx.dim(y), |cx, i, j| cx.eq_tm(ns[i].clone(), ns2[j].clone(), a.clone()));
    ps.extend(s.each(&c.ctx, |cx, i| cx.eq_tm(dsubst(&ns[i], r, y), m.clone(), a.clone())));
    ps
}

fn com_tubes(c: &Cx, s: &Sys, ns: &[Term], ns2: &[Term], a: &Term, r: &Dim, m: &Term) -> Vec<Judgment> {
    let y = &s.y;
    let ar = dsubst(a, r, y);
    let mut ps = s.pairs(&c.ctx.dim(y), |cx, i, j| cx.eq_tm(ns[i].clone(), ns2[j].clone(), a.clone()));
    ps.extend(s.each(&c.ctx, |cx, i| cx.eq_tm(dsubst(&ns[i], r, y), m.clone(), ar.clone())));
    ps
}

/// Type-line premises of the universe's box and cap rules.
fn box_lines(c: &Cx, s: &Sys, bs: &[Term], bs2: &[Term], a: &Term, r: &Dim) -> Vec<Judgment> {
    let y = &s.y;
    let mut ps = s.pairs(&c.ctx.dim(y), |cx, i, j| cx.eq_ty(Kind::Kan, bs[i].clone(), bs2[j].clone()));
    ps.extend(s.each(&c.ctx, |cx, i| cx.eq_ty(Kind::Kan, dsubst(&bs[i], r, y), a.clone())));
    ps
}

/// Premises of the box introduction rule, in display order.
fn box_premises(c: &Cx, s: &Sys, bs: &[Term], ns: &[Term], ns2: &[Term], m2: Term, shape: bool) -> Vec<Judgment> {
    let (a, m, r, r2) = (c.t("A"), c.t("M"), c.d("r"), c.d("r'"));
    let y = &s.y;
    let mut ps = Vec::new();
    if shape {
        ps.push(c.ctx.shape(s.eqs.clone()));
    }
    ps.push(c.ctx.wf(Kind::Kan, a.clone()));
    ps.push(c.ctx.eq_tm(m.clone(), m2, a.clone()));
    ps.extend(s.pairs(&c.ctx.dim(y), |cx, i, j| cx.eq_ty(Kind::Kan, bs[i].clone(), bs[j].clone())));
    ps.extend(s.pairs(&c.ctx, |cx, i, j| cx.eq_tm(ns[i].clone(), ns2[j].clone(), dsubst(&bs[i], &r2, y))));
    ps.extend(s.each(&c.ctx, |cx, i| cx.eq_ty(Kind::Kan, dsubst(&bs[i], &r, y), a.clone())));
    ps.extend(s.each(&c.ctx, |cx, i| {
        cx.eq_tm(coe(y, bs[i].clone(), r2.clone(), r.clone(), ns[i].clone()), m.clone(), a.clone())
    }));
    ps
}

fn fcom_ty(c: &Cx, s: &Sys, bs: &[Term]) -> Result<Term, String> {
    Ok(hcom(univ(Kind::Kan, c.nat("j")), c.d("r"), c.d("r'"), c.t("A"), s.tubes(bs, "B")?))
}

catalog! {
    // Structural rules
    "struct/hyp" ["k": Kappa, "a": Var, "A": Term]
        "A type k" => "Γ, a : A |- a in A",
        |c| {
            let mut g = c.ctx.clone();
            g.gamma.pop();
            let (a, ty) = (c.n("a"), c.t("A"));
            ok(g.hyp(&a, ty.clone()).of(Term::Var(a.clone()), ty.clone()), vec![g.wf(c.k(), ty)], vec![Side::FreshVar(a, g.vars())])
        };
    "struct/weaken" ["J": Judgment, "k": Kappa, "a": Var, "A": Term, "pos": Index]
        "J; A type k (under the hypotheses before pos)" => "J with a : A inserted at pos",
        |c| {
            let j = c.j("J");
            let pos = c.nat("pos") as usize;
            if pos > j.ctx.gamma.len() {
                return Err(format!("position {pos} is past the end of the context"));
            }
            let (a, ty) = (c.n("a"), c.t("A"));
            let mut before = j.ctx.clone();
            before.gamma.truncate(pos);
            let mut concl = j.clone();
            concl.ctx.gamma.insert(pos, (a.clone(), ty.clone()));
            ok(concl, vec![j.clone(), before.wf(c.k(), ty)], vec![Side::FreshVar(a, j.ctx.vars())])
        };
    "struct/dsubst" ["J": Judgment, "s": Subst]
        "J" => "J ψ (under Ψ' for ψ : Ψ' -> Ψ)",
        |c| {
            let j = c.j("J");
            ok(j.apply(&c.subst("s"))?, vec![j], vec![])
        };
    "struct/kan-pre" ["A": Term, "A'": Term]
        "A = A' type kan" => "A = A' type pre",
        |c| ok(c.ctx.eq_ty(Kind::Pre, c.t("A"), c.t("A'")), vec![c.ctx.eq_ty(Kind::Kan, c.t("A"), c.t("A'"))], vec![]);
    "struct/type-sym" ["k": Kappa, "A": Term, "A'": Term]
        "A = A' type k" => "A' = A type k",
        |c| ok(c.ctx.eq_ty(c.k(), c.t("A'"), c.t("A")), vec![c.ctx.eq_ty(c.k(), c.t("A"), c.t("A'"))], vec![]);
    "struct/type-trans" ["k": Kappa, "A": Term, "A'": Term, "A''": Term]
        "A = A' type k; A' = A'' type k" => "A = A'' type k",
        |c| ok(
            c.ctx.eq_ty(c.k(), c.t("A"), c.t("A''")),
            vec![c.ctx.eq_ty(c.k(), c.t("A"), c.t("A'")), c.ctx.eq_ty(c.k(), c.t("A'"), c.t("A''"))],
            vec![],
        );
    "struct/tm-sym" ["M": Term, "M'": Term, "A": Term]
        "M' = M in A" => "M = M' in A",
        |c| ok(c.ctx.eq_tm(c.t("M"), c.t("M'"), c.t("A")), vec![c.ctx.eq_tm(c.t("M'"), c.t("M"), c.t("A"))], vec![]);
    "struct/tm-trans" ["M": Term, "M'": Term, "M''": Term, "A": Term]
        "M = M' in A; M' = M'' in A" => "M = M'' in A",
        |c| ok(
            c.ctx.eq_tm(c.t("M"), c.t("M''"), c.t("A")),
            vec![c.ctx.eq_tm(c.t("M"), c.t("M'"), c.t("A")), c.ctx.eq_tm(c.t("M'"), c.t("M''"), c.t("A"))],
            vec![],
        );
    "struct/conv" ["k": Kappa, "M": Term, "M'": Term, "A": Term, "A'": Term]
        "M = M' in A; A = A' type k" => "M = M' in A'",
        |c| ok(
            c.ctx.eq_tm(c.t("M"), c.t("M'"), c.t("A'")),
            vec![c.ctx.eq_tm(c.t("M"), c.t("M'"), c.t("A")), c.ctx.eq_ty(c.k(), c.t("A"), c.t("A'"))],
            vec![],
        );
    "struct/subst-type" ["k": Kappa, "a": Var, "A": Term, "B": Term, "B'": Term, "N": Term, "N'": Term]
        "a : A |- B = B' type k; N = N' in A" => "B[N/a] = B'[N'/a] type k",
        |c| {
            let (a, n, n2) = (c.n("a"), c.t("N"), c.t("N'"));
            ok(
                c.ctx.eq_ty(c.k(), tsubst(&c.t("B"), &n, &a), tsubst(&c.t("B'"), &n2, &a)),
                vec![c.ctx.hyp(&a, c.t("A")).eq_ty(c.k(), c.t("B"), c.t("B'")), c.ctx.eq_tm(n, n2, c.t("A"))],
                vec![Side::FreshVar(a, c.ctx.vars())],
            )
        };
    "struct/subst-tm" ["a": Var, "A": Term, "B": Term, "M": Term, "M'": Term, "N": Term, "N'": Term]
        "a : A |- M = M' in B; N = N' in A" => "M[N/a] = M'[N'/a] in B[N/a]",
        |c| {
            let (a, n, n2) = (c.n("a"), c.t("N"), c.t("N'"));
            ok(
                c.ctx.eq_tm(tsubst(&c.t("M"), &n, &a), tsubst(&c.t("M'"), &n2, &a), tsubst(&c.t("B"), &n, &a)),
                vec![c.ctx.hyp(&a, c.t("A")).eq_tm(c.t("M"), c.t("M'"), c.t("B")), c.ctx.eq_tm(n, n2, c.t("A"))],
                vec![Side::FreshVar(a, c.ctx.vars())],
            )
        };

    // Restriction rules
    "restrict/empty" ["J": Judgment]
        "J" => "J under the empty restriction",
        |c| {
            let j = c.j("J");
            ok(j.clone(), vec![j.clone()], vec![Side::Unrestricted(j.ctx.xi)])
        };
    "restrict/eps-eq" ["J": Judgment, "e": Dim]
        "J under Ξ" => "J under Ξ, e=e",
        |c| {
            let (j, e) = (c.j("J"), eps(c, "e")?);
            let concl = Judgment { ctx: j.ctx.under([Equation::new(e.clone(), e)]), form: j.form.clone() };
            ok(concl, vec![j], vec![])
        };
    "restrict/eps-neq" ["J": Judgment, "e": Dim]
        "" => "J under Ξ, e=ē",
        |c| {
            let (j, e) = (c.j("J"), eps(c, "e")?);
            let concl = Judgment { ctx: j.ctx.under([Equation::new(e.clone(), e.flip())]), form: j.form };
            ok(concl, vec![], vec![])
        };
    "restrict/var" ["J": Judgment, "x": DimName, "r": Dim]
        "J<r/x> under Ξ<r/x> (without x)" => "J under Ξ, x=r (with x)",
        |c| {
            let (j, x, r) = (c.j("J"), c.n("x"), c.d("r"));
            let mut prem = j.dsubst(&r, &x);
            prem.ctx.psi = j.ctx.psi.without(&x);
            let concl = Judgment { ctx: j.ctx.under([Equation::new(Dim::Name(x.clone()), r.clone())]), form: j.form.clone() };
            let side = vec![Side::InDims(Dim::Name(x.clone()), j.ctx.psi.clone()), Side::InDims(r, prem.ctx.psi.clone())];
            ok(concl, vec![prem], side)
        };

    // Computation rules
    "comp/type" ["k": Kappa, "A": Term, "A'": Term, "B": Term]
        "A' = B type k; A steps stably to A'" => "A = B type k",
        |c| ok(
            c.ctx.eq_ty(c.k(), c.t("A"), c.t("B")),
            vec![c.ctx.eq_ty(c.k(), c.t("A'"), c.t("B"))],
            vec![Side::StableStep(c.t("A"), c.t("A'"))],
        );
    "comp/tm" ["M": Term, "M'": Term, "N": Term, "A": Term]
        "M' = N in A; M steps stably to M'" => "M = N in A",
        |c| ok(
            c.ctx.eq_tm(c.t("M"), c.t("N"), c.t("A")),
            vec![c.ctx.eq_tm(c.t("M'"), c.t("N"), c.t("A"))],
            vec![Side::StableStep(c.t("M"), c.t("M'"))],
        );

    // Kan conditions
    "kan/wfshape-opp" ["eqs": Eqs, "i": Index, "j": Index]
        "r_i = r_j; r_i' = 0; r_j' = 1" => "wfshape(eqs)",
        |c| {
            let eqs = c.eqs("eqs");
            let ei = nth(&eqs.0, c.nat("i"), "the equation list")?;
            let ej = nth(&eqs.0, c.nat("j"), "the equation list")?;
            let side = vec![
                Side::DimEq(ei.lhs, ej.lhs),
                Side::DimEq(ei.rhs, Dim::Zero),
                Side::DimEq(ej.rhs, Dim::One),
                Side::Valid(eqs.clone()),
            ];
            ok(c.ctx.shape(eqs), vec![], side)
        };
    "kan/wfshape-eq" ["eqs": Eqs, "i": Index]
        "r_i = r_i'" => "wfshape(eqs)",
        |c| {
            let eqs = c.eqs("eqs");
            let e = nth(&eqs.0, c.nat("i"), "the equation list")?;
            ok(c.ctx.shape(eqs.clone()), vec![], vec![Side::DimEq(e.lhs, e.rhs), Side::Valid(eqs)])
        };
    "kan/hcom" ["A": Term, "A'": Term, "r": Dim, "r'": Dim, "M": Term, "M'": Term, "eqs": Eqs, "y": DimName, "N": Terms, "N'": Terms]
        "wfshape; A = A' type kan; M = M' in A; (∀i,j) Ψ,y <r_i=r_i', r_j=r_j'> N_i = N_j' in A; (∀i) <r_i=r_i'> N_i<r/y> = M in A"
        => "hcom A r ~> r' M [y.N] = hcom A' r ~> r' M' [y.N'] in A",
        |c| {
            let s = Sys::of(c);
            let (a, r, r2, m) = (c.t("A"), c.d("r"), c.d("r'"), c.t("M"));
            let (ns, ns2) = (c.ts("N"), c.ts("N'"));
            let lhs = hcom(a.clone(), r.clone(), r2.clone(), m.clone(), s.tubes(&ns, "N")?);
            let rhs = hcom(c.t("A'"), r.clone(), r2, c.t("M'"), s.tubes(&ns2, "N'")?);
            let mut ps = vec![c.ctx.shape(s.eqs.clone()), c.ctx.eq_ty(Kind::Kan, a.clone(), c.t("A'")), c.ctx.eq_tm(m.clone(), c.t("M'"), a.clone())];
            ps.extend(hcom_tubes(c, &s, &ns, &ns2, &a, &r, &m));
            ok(c.ctx.eq_tm(lhs, rhs, a), ps, vec![s.fresh(c)])
        };
    "kan/hcom-eq" ["A": Term, "r": Dim, "M": Term, "eqs": Eqs, "y": DimName, "N": Terms]
        "wfshape; A type kan; M in A; (∀i,j) N_i = N_j; (∀i) N_i<r/y> = M" => "hcom A r ~> r M [y.N] = M in A",
        |c| {
            let s = Sys::of(c);
            let (a, r, m, ns) = (c.t("A"), c.d("r"), c.t("M"), c.ts("N"));
            let lhs = hcom(a.clone(), r.clone(), r.clone(), m.clone(), s.tubes(&ns, "N")?);
            let mut ps = vec![c.ctx.shape(s.eqs.clone()), c.ctx.wf(Kind::Kan, a.clone()), c.ctx.of(m.clone(), a.clone())];
            ps.extend(hcom_tubes(c, &s, &ns, &ns, &a, &r, &m));
            ok(c.ctx.eq_tm(lhs, m, a), ps, vec![s.fresh(c)])
        };
    "kan/hcom-tube" ["A": Term, "r": Dim, "r'": Dim, "M": Term, "eqs": Eqs, "y": DimName, "N": Terms, "i": Index]
        "r_i = r_i'; A type kan; M in A; (∀i,j) N_i = N_j; (∀i) N_i<r/y> = M" => "hcom A r ~> r' M [y.N] = N_i<r'/y> in A",
        |c| {
            let s = Sys::of(c);
            let (a, r, r2, m, ns) = (c.t("A"), c.d("r"), c.d("r'"), c.t("M"), c.ts("N"));
            let ni = nth(&ns, c.nat("i"), "N")?;
            let lhs = hcom(a.clone(), r.clone(), r2.clone(), m.clone(), s.tubes(&ns, "N")?);
            let mut ps = vec![c.ctx.wf(Kind::Kan, a.clone()), c.ctx.of(m.clone(), a.clone())];
            ps.extend(hcom_tubes(c, &s, &ns, &ns, &a, &r, &m));
            ok(c.ctx.eq_tm(lhs, dsubst(&ni, &r2, &s.y), a), ps, vec![s.holds(c.nat("i"))?, s.fresh(c)])
        };
    "kan/coe" ["x": DimName, "A": Term, "A'": Term, "r": Dim, "r'": Dim, "M": Term, "M'": Term]
        "Ψ,x |- A = A' type kan; M = M' in A<r/x>" => "coe (x.A) r ~> r' M = coe (x.A') r ~> r' M' in A<r'/x>",
        |c| {
            let (x, a, r, r2) = (c.n("x"), c.t("A"), c.d("r"), c.d("r'"));
            ok(
                c.ctx.eq_tm(
                    coe(&x, a.clone(), r.clone(), r2.clone(), c.t("M")),
                    coe(&x, c.t("A'"), r.clone(), r2.clone(), c.t("M'")),
                    dsubst(&a, &r2, &x),
                ),
                vec![c.ctx.dim(&x).eq_ty(Kind::Kan, a.clone(), c.t("A'")), c.ctx.eq_tm(c.t("M"), c.t("M'"), dsubst(&a, &r, &x))],
                vec![Side::FreshDim(x, c.ctx.psi.clone())],
            )
        };
    "kan/coe-eq" ["x": DimName, "A": Term, "r": Dim, "M": Term]
        "Ψ,x |- A type kan; M in A<r/x>" => "coe (x.A) r ~> r M = M in A<r/x>",
        |c| {
            let (x, a, r, m) = (c.n("x"), c.t("A"), c.d("r"), c.t("M"));
            let ar = dsubst(&a, &r, &x);
            ok(
                c.ctx.eq_tm(coe(&x, a.clone(), r.clone(), r, m.clone()), m.clone(), ar.clone()),
                vec![c.ctx.dim(&x).wf(Kind::Kan, a), c.ctx.of(m, ar)],
                vec![Side::FreshDim(x, c.ctx.psi.clone())],
            )
        };
    "kan/com" ["y": DimName, "A": Term, "A'": Term, "r": Dim, "r'": Dim, "M": Term, "M'": Term, "eqs": Eqs, "N": Terms, "N'": Terms]
        "wfshape; Ψ,y |- A = A' type kan; M = M' in A<r/y>; (∀i,j) Ψ,y <..> N_i = N_j' in A; (∀i) <r_i=r_i'> N_i<r/y> = M in A<r/y>"
        => "com (y.A) r ~> r' M [y.N] = com (y.A') r ~> r' M' [y.N'] in A<r'/y>",
        |c| {
            let s = Sys::of(c);
            let y = s.y.clone();
            let (a, r, r2, m) = (c.t("A"), c.d("r"), c.d("r'"), c.t("M"));
            let (ns, ns2) = (c.ts("N"), c.ts("N'"));
            let lhs = com(&y, a.clone(), r.clone(), r2.clone(), m.clone(), s.tubes(&ns, "N")?);
            let rhs = com(&y, c.t("A'"), r.clone(), r2.clone(), c.t("M'"), s.tubes(&ns2, "N'")?);
            let mut ps = vec![
                c.ctx.shape(s.eqs.clone()),
                c.ctx.dim(&y).eq_ty(Kind::Kan, a.clone(), c.t("A'")),
                c.ctx.eq_tm(m.clone(), c.t("M'"), dsubst(&a, &r, &y)),
            ];
            ps.extend(com_tubes(c, &s, &ns, &ns2, &a, &r, &m));
            ok(c.ctx.eq_tm(lhs, rhs, dsubst(&a, &r2, &y)), ps, vec![s.fresh(c)])
        };
    "kan/com-eq" ["y": DimName, "A": Term, "r": Dim, "M": Term, "eqs": Eqs, "N": Terms]
        "wfshape; Ψ,y |- A type kan; M in A<r/y>; (∀i,j) N_i = N_j; (∀i) N_i<r/y> = M" => "com (y.A) r ~> r M [y.N] = M in A<r/y>",
        |c| {
            let s = Sys::of(c);
            let y = s.y.clone();
            let (a, r, m, ns) = (c.t("A"), c.d("r"), c.t("M"), c.ts("N"));
            let ar = dsubst(&a, &r, &y);
            let lhs = com(&y, a.clone(), r.clone(), r.clone(), m.clone(), s.tubes(&ns, "N")?);
            let mut ps = vec![c.ctx.shape(s.eqs.clone()), c.ctx.dim(&y).wf(Kind::Kan, a.clone()), c.ctx.of(m.clone(), ar.clone())];
            ps.extend(com_tubes(c, &s, &ns, &ns, &a, &r, &m));
            ok(c.ctx.eq_tm(lhs, m, ar), ps, vec![s.fresh(c)])
        };
    "kan/com-tube" ["y": DimName, "A": Term, "r": Dim, "r'": Dim, "M": Term, "eqs": Eqs, "N": Terms, "i": Index]
        "r_i = r_i'; Ψ,y |- A type kan; M in A<r/y>; (∀i,j) N_i = N_j; (∀i) N_i<r/y> = M" => "com (y.A) r ~> r' M [y.N] = N_i<r'/y> in A<r'/y>",
        |c| {
            let s = Sys::of(c);
            let y = s.y.clone();
            let (a, r, r2, m, ns) = (c.t("A"), c.d("r"), c.d("r'"), c.t("M"), c.ts("N"));
            let ni = nth(&ns, c.nat("i"), "N")?;
            let lhs = com(&y, a.clone(), r.clone(), r2.clone(), m.clone(), s.tubes(&ns, "N")?);
            let mut ps = vec![c.ctx.dim(&y).wf(Kind::Kan, a.clone()), c.ctx.of(m.clone(), dsubst(&a, &r, &y))];
            ps.extend(com_tubes(c, &s, &ns, &ns, &a, &r, &m));
            ok(c.ctx.eq_tm(lhs, dsubst(&ni, &r2, &y), dsubst(&a, &r2, &y)), ps, vec![s.holds(c.nat("i"))?, s.fresh(c)])
        };

    // Dependent function types
    "fun/form" ["k": Kappa, "a": Var, "A": Term, "A'": Term, "B": Term, "B'": Term]
        "A = A' type k; a : A |- B = B' type k" => "(a : A) -> B = (a : A') -> B' type k",
        |c| {
            let a = c.n("a");
            ok(
                c.ctx.eq_ty(c.k(), pi(&a, c.t("A"), c.t("B")), pi(&a, c.t("A'"), c.t("B'"))),
                vec![c.ctx.eq_ty(c.k(), c.t("A"), c.t("A'")), c.ctx.hyp(&a, c.t("A")).eq_ty(c.k(), c.t("B"), c.t("B'"))],
                vec![Side::FreshVar(a, c.ctx.vars())],
            )
        };
    "fun/intro" ["a": Var, "A": Term, "B": Term, "M": Term, "M'": Term]
        "a : A |- M = M' in B" => "lam a. M = lam a. M' in (a : A) -> B",
        |c| {
            let a = c.n("a");
            ok(
                c.ctx.eq_tm(lam(&a, c.t("M")), lam(&a, c.t("M'")), pi(&a, c.t("A"), c.t("B"))),
                vec![c.ctx.hyp(&a, c.t("A")).eq_tm(c.t("M"), c.t("M'"), c.t("B"))],
                vec![Side::FreshVar(a, c.ctx.vars())],
            )
        };
    "fun/elim" ["a": Var, "A": Term, "B": Term, "M": Term, "M'": Term, "N": Term, "N'": Term]
        "M = M' in (a : A) -> B; N = N' in A" => "M N = M' N' in B[N/a]",
        |c| {
            let (a, n) = (c.n("a"), c.t("N"));
            ok(
                c.ctx.eq_tm(app(c.t("M"), n.clone()), app(c.t("M'"), c.t("N'")), tsubst(&c.t("B"), &n, &a)),
                vec![c.ctx.eq_tm(c.t("M"), c.t("M'"), pi(&a, c.t("A"), c.t("B"))), c.ctx.eq_tm(n, c.t("N'"), c.t("A"))],
                vec![],
            )
        };
    "fun/beta" ["a": Var, "A": Term, "B": Term, "M": Term, "N": Term]
        "a : A |- M in B; N in A" => "(lam a. M) N = M[N/a] in B[N/a]",
        |c| {
            let (a, m, n, b) = (c.n("a"), c.t("M"), c.t("N"), c.t("B"));
            ok(
                c.ctx.eq_tm(app(lam(&a, m.clone()), n.clone()), tsubst(&m, &n, &a), tsubst(&b, &n, &a)),
                vec![c.ctx.hyp(&a, c.t("A")).of(m, b), c.ctx.of(n, c.t("A"))],
                vec![Side::FreshVar(a, c.ctx.vars())],
            )
        };
    "fun/eta" ["a": Var, "A": Term, "B": Term, "M": Term]
        "M in (a : A) -> B" => "M = lam a. M a in (a : A) -> B",
        |c| {
            let (a, m) = (c.n("a"), c.t("M"));
            let ty = pi(&a, c.t("A"), c.t("B"));
            ok(
                c.ctx.eq_tm(m.clone(), lam(&a, app(m.clone(), Term::Var(a.clone()))), ty.clone()),
                vec![c.ctx.of(m.clone(), ty)],
                vec![Side::NotFree(a, m)],
            )
        };

    // Dependent pair types
    "sigma/form" ["k": Kappa, "a": Var, "A": Term, "A'": Term, "B": Term, "B'": Term]
        "A = A' type k; a : A |- B = B' type k" => "(a : A) * B = (a : A') * B' type k",
        |c| {
            let a = c.n("a");
            ok(
                c.ctx.eq_ty(c.k(), sigma(&a, c.t("A"), c.t("B")), sigma(&a, c.t("A'"), c.t("B'"))),
                vec![c.ctx.eq_ty(c.k(), c.t("A"), c.t("A'")), c.ctx.hyp(&a, c.t("A")).eq_ty(c.k(), c.t("B"), c.t("B'"))],
                vec![Side::FreshVar(a, c.ctx.vars())],
            )
        };
    "sigma/intro" ["a": Var, "A": Term, "B": Term, "M": Term, "M'": Term, "N": Term, "N'": Term]
        "M = M' in A; N = N' in B[M/a]" => "pair M N = pair M' N' in (a : A) * B",
        |c| {
            let (a, m) = (c.n("a"), c.t("M"));
            ok(
                c.ctx.eq_tm(pair(m.clone(), c.t("N")), pair(c.t("M'"), c.t("N'")), sigma(&a, c.t("A"), c.t("B"))),
                vec![c.ctx.eq_tm(m.clone(), c.t("M'"), c.t("A")), c.ctx.eq_tm(c.t("N"), c.t("N'"), tsubst(&c.t("B"), &m, &a))],
                vec![],
            )
        };
    "sigma/fst" ["a": Var, "A": Term, "B": Term, "P": Term, "P'": Term]
        "P = P' in (a : A) * B" => "fst P = fst P' in A",
        |c| ok(
            c.ctx.eq_tm(fst(c.t("P")), fst(c.t("P'")), c.t("A")),
            vec![c.ctx.eq_tm(c.t("P"), c.t("P'"), sigma(&c.n("a"), c.t("A"), c.t("B")))],
            vec![],
        );
    "sigma/snd" ["a": Var, "A": Term, "B": Term, "P": Term, "P'": Term]
        "P = P' in (a : A) * B" => "snd P = snd P' in B[fst P/a]",
        |c| {
            let a = c.n("a");
            ok(
                c.ctx.eq_tm(snd(c.t("P")), snd(c.t("P'")), tsubst(&c.t("B"), &fst(c.t("P")), &a)),
                vec![c.ctx.eq_tm(c.t("P"), c.t("P'"), sigma(&a, c.t("A"), c.t("B")))],
                vec![],
            )
        };
    "sigma/fst-beta" ["M": Term, "N": Term, "A": Term]
        "M in A" => "fst (pair M N) = M in A",
        |c| ok(c.ctx.eq_tm(fst(pair(c.t("M"), c.t("N"))), c.t("M"), c.t("A")), vec![c.ctx.of(c.t("M"), c.t("A"))], vec![]);
    "sigma/snd-beta" ["M": Term, "N": Term, "B": Term]
        "N in B" => "snd (pair M N) = N in B",
        |c| ok(c.ctx.eq_tm(snd(pair(c.t("M"), c.t("N"))), c.t("N"), c.t("B")), vec![c.ctx.of(c.t("N"), c.t("B"))], vec![]);
    "sigma/eta" ["a": Var, "A": Term, "B": Term, "P": Term]
        "P in (a : A) * B" => "P = pair (fst P) (snd P) in (a : A) * B",
        |c| {
            let (p, ty) = (c.t("P"), sigma(&c.n("a"), c.t("A"), c.t("B")));
            ok(c.ctx.eq_tm(p.clone(), pair(fst(p.clone()), snd(p.clone())), ty.clone()), vec![c.ctx.of(p, ty)], vec![])
        };

    // Path types
    "path/form" ["k": Kappa, "x": DimName, "A": Term, "A'": Term, "P0": Term, "P0'": Term, "P1": Term, "P1'": Term]
        "Ψ,x |- A = A' type k; (∀ε) P_ε = P_ε' in A<ε/x>" => "path (x.A) P0 P1 = path (x.A') P0' P1' type k",
        |c| {
            let (x, a) = (c.n("x"), c.t("A"));
            ok(
                c.ctx.eq_ty(c.k(), path(&x, a.clone(), c.t("P0"), c.t("P1")), path(&x, c.t("A'"), c.t("P0'"), c.t("P1'"))),
                vec![
                    c.ctx.dim(&x).eq_ty(c.k(), a.clone(), c.t("A'")),
                    c.ctx.eq_tm(c.t("P0"), c.t("P0'"), dsubst(&a, &Dim::Zero, &x)),
                    c.ctx.eq_tm(c.t("P1"), c.t("P1'"), dsubst(&a, &Dim::One, &x)),
                ],
                vec![Side::FreshDim(x, c.ctx.psi.clone())],
            )
        };
    "path/intro" ["x": DimName, "A": Term, "M": Term, "M'": Term, "P0": Term, "P1": Term]
        "Ψ,x |- M = M' in A; (∀ε) M<ε/x> = P_ε in A<ε/x>" => "dlam x. M = dlam x. M' in path (x.A) P0 P1",
        |c| {
            let (x, a, m) = (c.n("x"), c.t("A"), c.t("M"));
            let end = |e: Dim, p: Term| c.ctx.eq_tm(dsubst(&m, &e, &x), p, dsubst(&a, &e, &x));
            ok(
                c.ctx.eq_tm(dlam(&x, m.clone()), dlam(&x, c.t("M'")), path(&x, a.clone(), c.t("P0"), c.t("P1"))),
                vec![c.ctx.dim(&x).eq_tm(m.clone(), c.t("M'"), a.clone()), end(Dim::Zero, c.t("P0")), end(Dim::One, c.t("P1"))],
                vec![Side::FreshDim(x.clone(), c.ctx.psi.clone())],
            )
        };
    "path/elim" ["x": DimName, "A": Term, "P0": Term, "P1": Term, "M": Term, "M'": Term, "r": Dim]
        "M = M' in path (x.A) P0 P1" => "M @ r = M' @ r in A<r/x>",
        |c| {
            let (x, a, r) = (c.n("x"), c.t("A"), c.d("r"));
            ok(
                c.ctx.eq_tm(dapp(c.t("M"), r.clone()), dapp(c.t("M'"), r.clone()), dsubst(&a, &r, &x)),
                vec![c.ctx.eq_tm(c.t("M"), c.t("M'"), path(&x, a.clone(), c.t("P0"), c.t("P1")))],
                vec![],
            )
        };
    "path/boundary" ["x": DimName, "A": Term, "P0": Term, "P1": Term, "M": Term, "e": Dim]
        "M in path (x.A) P0 P1" => "M @ ε = P_ε in A<ε/x>",
        |c| {
            let (x, a, e) = (c.n("x"), c.t("A"), eps(c, "e")?);
            let pe = if e == Dim::Zero { c.t("P0") } else { c.t("P1") };
            ok(
                c.ctx.eq_tm(dapp(c.t("M"), e.clone()), pe, dsubst(&a, &e, &x)),
                vec![c.ctx.of(c.t("M"), path(&x, a.clone(), c.t("P0"), c.t("P1")))],
                vec![],
            )
        };
    "path/beta" ["x": DimName, "A": Term, "M": Term, "r": Dim]
        "Ψ,x |- M in A" => "(dlam x. M) @ r = M<r/x> in A<r/x>",
        |c| {
            let (x, a, m, r) = (c.n("x"), c.t("A"), c.t("M"), c.d("r"));
            ok(
                c.ctx.eq_tm(dapp(dlam(&x, m.clone()), r.clone()), dsubst(&m, &r, &x), dsubst(&a, &r, &x)),
                vec![c.ctx.dim(&x).of(m, a)],
                vec![Side::FreshDim(x, c.ctx.psi.clone())],
            )
        };
    "path/eta" ["x": DimName, "A": Term, "P0": Term, "P1": Term, "M": Term]
        "M in path (x.A) P0 P1" => "M = dlam x. M @ x in path (x.A) P0 P1",
        |c| {
            let (x, m) = (c.n("x"), c.t("M"));
            let ty = path(&x, c.t("A"), c.t("P0"), c.t("P1"));
            ok(
                c.ctx.eq_tm(m.clone(), dlam(&x, dapp(m.clone(), Dim::Name(x.clone()))), ty.clone()),
                vec![c.ctx.of(m, ty)],
                vec![Side::FreshDim(x, c.ctx.psi.clone())],
            )
        };

    // Equality pretypes
    "eq/form-pre" ["A": Term, "A'": Term, "M": Term, "M'": Term, "N": Term, "N'": Term]
        "A = A' type pre; M = M' in A; N = N' in A" => "eq A M N = eq A' M' N' type pre",
        |c| ok(
            c.ctx.eq_ty(Kind::Pre, eq_ty(c.t("A"), c.t("M"), c.t("N")), eq_ty(c.t("A'"), c.t("M'"), c.t("N'"))),
            vec![
                c.ctx.eq_ty(Kind::Pre, c.t("A"), c.t("A'")),
                c.ctx.eq_tm(c.t("M"), c.t("M'"), c.t("A")),
                c.ctx.eq_tm(c.t("N"), c.t("N'"), c.t("A")),
            ],
            vec![],
        );
    "eq/intro" ["A": Term, "M": Term, "N": Term]
        "M = N in A" => "* in eq A M N",
        |c| ok(
            c.ctx.of(Term::Star, eq_ty(c.t("A"), c.t("M"), c.t("N"))),
            vec![c.ctx.eq_tm(c.t("M"), c.t("N"), c.t("A"))],
            vec![],
        );
    "eq/elim" ["A": Term, "M": Term, "N": Term, "E": Term]
        "E in eq A M N" => "M = N in A",
        |c| ok(
            c.ctx.eq_tm(c.t("M"), c.t("N"), c.t("A")),
            vec![c.ctx.of(c.t("E"), eq_ty(c.t("A"), c.t("M"), c.t("N")))],
            vec![],
        );
    "eq/eta" ["A": Term, "M": Term, "N": Term, "E": Term]
        "E in eq A M N" => "E = * in eq A M N",
        |c| {
            let ty = eq_ty(c.t("A"), c.t("M"), c.t("N"));
            ok(c.ctx.eq_tm(c.t("E"), Term::Star, ty.clone()), vec![c.ctx.of(c.t("E"), ty)], vec![])
        };

    // Void
    "void/form-kan" []
        "" => "void type kan",
        |c| ok(c.ctx.wf(Kind::Kan, Term::Void), vec![], vec![]);
    "void/elim" ["M": Term, "J": Judgment]
        "M in void (in the context of J)" => "J",
        |c| {
            let j = c.j("J");
            ok(j.clone(), vec![j.ctx.of(c.t("M"), Term::Void)], vec![])
        };

    // Natural numbers
    "nat/form-kan" []
        "" => "nat type kan",
        |c| ok(c.ctx.wf(Kind::Kan, Term::Nat), vec![], vec![]);
    "nat/zero" []
        "" => "zero in nat",
        |c| ok(c.ctx.of(Term::Zero, Term::Nat), vec![], vec![]);
    "nat/suc" ["M": Term, "M'": Term]
        "M = M' in nat" => "suc M = suc M' in nat",
        |c| ok(
            c.ctx.eq_tm(suc(c.t("M")), suc(c.t("M'")), Term::Nat),
            vec![c.ctx.eq_tm(c.t("M"), c.t("M'"), Term::Nat)],
            vec![],
        );
    "nat/elim" ["k": Kappa, "n": Var, "a": Var, "A": Term, "M": Term, "M'": Term, "Z": Term, "Z'": Term, "S": Term, "S'": Term]
        "n : nat |- A type k; M = M' in nat; Z = Z' in A[zero/n]; n : nat, a : A |- S = S' in A[suc n/n]"
        => "natrec M Z (n a. S) = natrec M' Z' (n a. S') in A[M/n]",
        |c| {
            let (n, a, ty) = (c.n("n"), c.n("a"), c.t("A"));
            let nv = Term::Var(n.clone());
            let mut vars = c.ctx.vars();
            let g = c.ctx.hyp(&n, Term::Nat);
            let side = vec![Side::FreshVar(n.clone(), vars.clone()), {
                vars.push(n.clone());
                Side::FreshVar(a.clone(), vars)
            }];
            ok(
                c.ctx.eq_tm(
                    natrec(c.t("M"), c.t("Z"), &n, &a, c.t("S")),
                    natrec(c.t("M'"), c.t("Z'"), &n, &a, c.t("S'")),
                    tsubst(&ty, &c.t("M"), &n),
                ),
                vec![
                    g.wf(c.k(), ty.clone()),
                    c.ctx.eq_tm(c.t("M"), c.t("M'"), Term::Nat),
                    c.ctx.eq_tm(c.t("Z"), c.t("Z'"), tsubst(&ty, &Term::Zero, &n)),
                    g.hyp(&a, ty.clone()).eq_tm(c.t("S"), c.t("S'"), tsubst(&ty, &suc(nv), &n)),
                ],
                side,
            )
        };
    "nat/beta-zero" ["Z": Term, "A": Term, "n": Var, "a": Var, "S": Term]
        "Z in A" => "natrec zero Z (n a. S) = Z in A",
        |c| ok(
            c.ctx.eq_tm(natrec(Term::Zero, c.t("Z"), &c.n("n"), &c.n("a"), c.t("S")), c.t("Z"), c.t("A")),
            vec![c.ctx.of(c.t("Z"), c.t("A"))],
            vec![],
        );
    "nat/beta-suc" ["k": Kappa, "n": Var, "a": Var, "A": Term, "M": Term, "Z": Term, "S": Term]
        "n : nat |- A type k; M in nat; Z in A[zero/n]; n : nat, a : A |- S in A[suc n/n]"
        => "natrec (suc M) Z (n a. S) = S[M/n][natrec M Z (n a. S)/a] in A[suc M/n]",
        |c| {
            let (n, a, ty, m, z, s) = (c.n("n"), c.n("a"), c.t("A"), c.t("M"), c.t("Z"), c.t("S"));
            let mut vars = c.ctx.vars();
            let g = c.ctx.hyp(&n, Term::Nat);
            let side = vec![Side::FreshVar(n.clone(), vars.clone()), {
                vars.push(n.clone());
                Side::FreshVar(a.clone(), vars)
            }];
            let rec = natrec(m.clone(), z.clone(), &n, &a, s.clone());
            ok(
                c.ctx.eq_tm(
                    natrec(suc(m.clone()), z.clone(), &n, &a, s.clone()),
                    tsubst(&tsubst(&s, &m, &n), &rec, &a),
                    tsubst(&ty, &suc(m.clone()), &n),
                ),
                vec![
                    g.wf(c.k(), ty.clone()),
                    c.ctx.of(m, Term::Nat),
                    c.ctx.of(z, tsubst(&ty, &Term::Zero, &n)),
                    g.hyp(&a, ty.clone()).of(s, tsubst(&ty, &suc(Term::Var(n.clone())), &n)),
                ],
                side,
            )
        };

    // Booleans
    "bool/form-kan" []
        "" => "bool type kan",
        |c| ok(c.ctx.wf(Kind::Kan, Term::Bool), vec![], vec![]);
    "bool/true" []
        "" => "true in bool",
        |c| ok(c.ctx.of(Term::True, Term::Bool), vec![], vec![]);
    "bool/false" []
        "" => "false in bool",
        |c| ok(c.ctx.of(Term::False, Term::Bool), vec![], vec![]);
    "bool/elim" ["b": Var, "A": Term, "A'": Term, "C": Term, "M": Term, "M'": Term, "T": Term, "T'": Term, "F": Term, "F'": Term]
        "b : bool |- C type pre; M = M' in bool; T = T' in C[true/b]; F = F' in C[false/b]"
        => "if (b.A) M T F = if (b.A') M' T' F' in C[M/b]",
        |c| {
            let (b, cc) = (c.n("b"), c.t("C"));
            ok(
                c.ctx.eq_tm(
                    iff(&b, c.t("A"), c.t("M"), c.t("T"), c.t("F")),
                    iff(&b, c.t("A'"), c.t("M'"), c.t("T'"), c.t("F'")),
                    tsubst(&cc, &c.t("M"), &b),
                ),
                vec![
                    c.ctx.hyp(&b, Term::Bool).wf(Kind::Pre, cc.clone()),
                    c.ctx.eq_tm(c.t("M"), c.t("M'"), Term::Bool),
                    c.ctx.eq_tm(c.t("T"), c.t("T'"), tsubst(&cc, &Term::True, &b)),
                    c.ctx.eq_tm(c.t("F"), c.t("F'"), tsubst(&cc, &Term::False, &b)),
                ],
                vec![Side::FreshVar(b, c.ctx.vars())],
            )
        };
    "bool/beta-true" ["b": Var, "A": Term, "T": Term, "F": Term, "B": Term]
        "T in B" => "if (b.A) true T F = T in B",
        |c| ok(
            c.ctx.eq_tm(iff(&c.n("b"), c.t("A"), Term::True, c.t("T"), c.t("F")), c.t("T"), c.t("B")),
            vec![c.ctx.of(c.t("T"), c.t("B"))],
            vec![],
        );
    "bool/beta-false" ["b": Var, "A": Term, "T": Term, "F": Term, "B": Term]
        "F in B" => "if (b.A) false T F = F in B",
        |c| ok(
            c.ctx.eq_tm(iff(&c.n("b"), c.t("A"), Term::False, c.t("T"), c.t("F")), c.t("F"), c.t("B")),
            vec![c.ctx.of(c.t("F"), c.t("B"))],
            vec![],
        );

    // Weak booleans
    "wbool/form-kan" []
        "" => "wbool type kan",
        |c| ok(c.ctx.wf(Kind::Kan, Term::WBool), vec![], vec![]);
    "wbool/incl" ["M": Term, "M'": Term]
        "M = M' in bool" => "M = M' in wbool",
        |c| ok(
            c.ctx.eq_tm(c.t("M"), c.t("M'"), Term::WBool),
            vec![c.ctx.eq_tm(c.t("M"), c.t("M'"), Term::Bool)],
            vec![],
        );
    "wbool/elim" ["b": Var, "A": Term, "A'": Term, "M": Term, "M'": Term, "T": Term, "T'": Term, "F": Term, "F'": Term]
        "b : wbool |- A = A' type kan; M = M' in wbool; T = T' in A[true/b]; F = F' in A[false/b]"
        => "if (b.A) M T F = if (b.A') M' T' F' in A[M/b]",
        |c| {
            let (b, a) = (c.n("b"), c.t("A"));
            ok(
                c.ctx.eq_tm(
                    iff(&b, a.clone(), c.t("M"), c.t("T"), c.t("F")),
                    iff(&b, c.t("A'"), c.t("M'"), c.t("T'"), c.t("F'")),
                    tsubst(&a, &c.t("M"), &b),
                ),
                vec![
                    c.ctx.hyp(&b, Term::WBool).eq_ty(Kind::Kan, a.clone(), c.t("A'")),
                    c.ctx.eq_tm(c.t("M"), c.t("M'"), Term::WBool),
                    c.ctx.eq_tm(c.t("T"), c.t("T'"), tsubst(&a, &Term::True, &b)),
                    c.ctx.eq_tm(c.t("F"), c.t("F'"), tsubst(&a, &Term::False, &b)),
                ],
                vec![Side::FreshVar(b, c.ctx.vars())],
            )
        };

    // Circle
    "circle/form-kan" []
        "" => "S1 type kan",
        |c| ok(c.ctx.wf(Kind::Kan, Term::Circle), vec![], vec![]);
    "circle/base" []
        "" => "base in S1",
        |c| ok(c.ctx.of(Term::Base, Term::Circle), vec![], vec![]);
    "circle/loop" ["r": Dim]
        "" => "loop r in S1",
        |c| ok(c.ctx.of(lp(c.d("r")), Term::Circle), vec![], vec![]);
    "circle/loop-eps" ["e": Dim]
        "" => "loop ε = base in S1",
        |c| ok(c.ctx.eq_tm(lp(eps(c, "e")?), Term::Base, Term::Circle), vec![], vec![]);
    "circle/elim" ["c": Var, "A": Term, "A'": Term, "M": Term, "M'": Term, "P": Term, "P'": Term, "x": DimName, "L": Term, "L'": Term]
        "c : S1 |- A = A' type kan; M = M' in S1; P = P' in A[base/c]; Ψ,x |- L = L' in A[loop x/c]; (∀ε) L<ε/x> = P in A[base/c]"
        => "S1elim (c.A) M P (x.L) = S1elim (c.A') M' P' (x.L') in A[M/c]",
        |c| {
            let (cv, a, x, l) = (c.n("c"), c.t("A"), c.n("x"), c.t("L"));
            let at_base = tsubst(&a, &Term::Base, &cv);
            let end = |e: Dim| c.ctx.eq_tm(dsubst(&l, &e, &x), c.t("P"), at_base.clone());
            ok(
                c.ctx.eq_tm(
                    circ_elim(&cv, a.clone(), c.t("M"), c.t("P"), &x, l.clone()),
                    circ_elim(&cv, c.t("A'"), c.t("M'"), c.t("P'"), &x, c.t("L'")),
                    tsubst(&a, &c.t("M"), &cv),
                ),
                vec![
                    c.ctx.hyp(&cv, Term::Circle).eq_ty(Kind::Kan, a.clone(), c.t("A'")),
                    c.ctx.eq_tm(c.t("M"), c.t("M'"), Term::Circle),
                    c.ctx.eq_tm(c.t("P"), c.t("P'"), at_base.clone()),
                    c.ctx.dim(&x).eq_tm(l.clone(), c.t("L'"), tsubst(&a, &lp(Dim::Name(x.clone())), &cv)),
                    end(Dim::Zero),
                    end(Dim::One),
                ],
                vec![Side::FreshVar(cv, c.ctx.vars()), Side::FreshDim(x.clone(), c.ctx.psi.clone())],
            )
        };
    "circle/beta-base" ["c": Var, "A": Term, "P": Term, "x": DimName, "L": Term, "B": Term]
        "P in B" => "S1elim (c.A) base P (x.L) = P in B",
        |c| ok(
            c.ctx.eq_tm(circ_elim(&c.n("c"), c.t("A"), Term::Base, c.t("P"), &c.n("x"), c.t("L")), c.t("P"), c.t("B")),
            vec![c.ctx.of(c.t("P"), c.t("B"))],
            vec![],
        );
    "circle/beta-loop" ["c": Var, "A": Term, "r": Dim, "P": Term, "x": DimName, "L": Term, "B": Term]
        "Ψ,x |- L in B; (∀ε) L<ε/x> = P in B<ε/x>" => "S1elim (c.A) (loop r) P (x.L) = L<r/x> in B<r/x>",
        |c| {
            let (x, l, b, r) = (c.n("x"), c.t("L"), c.t("B"), c.d("r"));
            let end = |e: Dim| c.ctx.eq_tm(dsubst(&l, &e, &x), c.t("P"), dsubst(&b, &e, &x));
            ok(
                c.ctx.eq_tm(circ_elim(&c.n("c"), c.t("A"), lp(r.clone()), c.t("P"), &x, l.clone()), dsubst(&l, &r, &x), dsubst(&b, &r, &x)),
                vec![c.ctx.dim(&x).of(l.clone(), b.clone()), end(Dim::Zero), end(Dim::One)],
                vec![Side::FreshDim(x.clone(), c.ctx.psi.clone())],
            )
        };

    // Univalence
    "ua/form" ["k": Kappa, "r": Dim, "A": Term, "A'": Term, "B": Term, "B'": Term, "E": Term, "E'": Term]
        "<r=0> A = A' type k; B = B' type k; <r=0> E = E' in Equiv(A, B)" => "V r A B E = V r A' B' E' type k",
        |c| {
            let r = c.d("r");
            let z = c.ctx.under(zero_eq(&r));
            ok(
                c.ctx.eq_ty(c.k(), ua(r.clone(), c.t("A"), c.t("B"), c.t("E")), ua(r.clone(), c.t("A'"), c.t("B'"), c.t("E'"))),
                vec![
                    z.eq_ty(c.k(), c.t("A"), c.t("A'")),
                    c.ctx.eq_ty(c.k(), c.t("B"), c.t("B'")),
                    z.eq_tm(c.t("E"), c.t("E'"), equiv(c.t("A"), c.t("B"))),
                ],
                vec![],
            )
        };
    "ua/zero" ["k": Kappa, "A": Term, "B": Term, "E": Term]
        "A type k" => "V 0 A B E = A type k",
        |c| ok(
            c.ctx.eq_ty(c.k(), ua(Dim::Zero, c.t("A"), c.t("B"), c.t("E")), c.t("A")),
            vec![c.ctx.wf(c.k(), c.t("A"))],
            vec![],
        );
    "ua/one" ["k": Kappa, "A": Term, "B": Term, "E": Term]
        "B type k" => "V 1 A B E = B type k",
        |c| ok(
            c.ctx.eq_ty(c.k(), ua(Dim::One, c.t("A"), c.t("B"), c.t("E")), c.t("B")),
            vec![c.ctx.wf(c.k(), c.t("B"))],
            vec![],
        );
    "ua/intro" ["r": Dim, "A": Term, "B": Term, "E": Term, "M": Term, "M'": Term, "N": Term, "N'": Term]
        "<r=0> M = M' in A; N = N' in B; <r=0> E in Equiv(A, B); <r=0> (fst E) M = N in B"
        => "Vin r M N = Vin r M' N' in V r A B E",
        |c| {
            let r = c.d("r");
            let z = c.ctx.under(zero_eq(&r));
            ok(
                c.ctx.eq_tm(vin(r.clone(), c.t("M"), c.t("N")), vin(r.clone(), c.t("M'"), c.t("N'")), ua(r.clone(), c.t("A"), c.t("B"), c.t("E"))),
                vec![
                    z.eq_tm(c.t("M"), c.t("M'"), c.t("A")),
                    c.ctx.eq_tm(c.t("N"), c.t("N'"), c.t("B")),
                    z.of(c.t("E"), equiv(c.t("A"), c.t("B"))),
                    z.eq_tm(app(fst(c.t("E")), c.t("M")), c.t("N"), c.t("B")),
                ],
                vec![],
            )
        };
    "ua/intro-zero" ["M": Term, "N": Term, "A": Term]
        "M in A" => "Vin 0 M N = M in A",
        |c| ok(c.ctx.eq_tm(vin(Dim::Zero, c.t("M"), c.t("N")), c.t("M"), c.t("A")), vec![c.ctx.of(c.t("M"), c.t("A"))], vec![]);
    "ua/intro-one" ["M": Term, "N": Term, "B": Term]
        "N in B" => "Vin 1 M N = N in B",
        |c| ok(c.ctx.eq_tm(vin(Dim::One, c.t("M"), c.t("N")), c.t("N"), c.t("B")), vec![c.ctx.of(c.t("N"), c.t("B"))], vec![]);
    "ua/elim" ["r": Dim, "A": Term, "B": Term, "E": Term, "M": Term, "M'": Term, "F": Term]
        "M = M' in V r A B E; <r=0> F = fst E in A -> B" => "Vproj r M F = Vproj r M' (fst E) in B",
        |c| {
            let r = c.d("r");
            let fe = fst(c.t("E"));
            ok(
                c.ctx.eq_tm(vproj(r.clone(), c.t("M"), c.t("F")), vproj(r.clone(), c.t("M'"), fe.clone()), c.t("B")),
                vec![
                    c.ctx.eq_tm(c.t("M"), c.t("M'"), ua(r.clone(), c.t("A"), c.t("B"), c.t("E"))),
                    c.ctx.under(zero_eq(&r)).eq_tm(c.t("F"), fe, arr(c.t("A"), c.t("B"))),
                ],
                vec![],
            )
        };
    "ua/elim-zero" ["M": Term, "F": Term, "A": Term, "B": Term]
        "M in A; F in A -> B" => "Vproj 0 M F = F M in B",
        |c| ok(
            c.ctx.eq_tm(vproj(Dim::Zero, c.t("M"), c.t("F")), app(c.t("F"), c.t("M")), c.t("B")),
            vec![c.ctx.of(c.t("M"), c.t("A")), c.ctx.of(c.t("F"), arr(c.t("A"), c.t("B")))],
            vec![],
        );
    "ua/elim-one" ["M": Term, "F": Term, "B": Term]
        "M in B" => "Vproj 1 M F = M in B",
        |c| ok(c.ctx.eq_tm(vproj(Dim::One, c.t("M"), c.t("F")), c.t("M"), c.t("B")), vec![c.ctx.of(c.t("M"), c.t("B"))], vec![]);
    "ua/beta" ["r": Dim, "A": Term, "B": Term, "M": Term, "N": Term, "F": Term]
        "<r=0> M in A; N in B; <r=0> F in A -> B; <r=0> F M = N in B" => "Vproj r (Vin r M N) F = N in B",
        |c| {
            let r = c.d("r");
            let z = c.ctx.under(zero_eq(&r));
            ok(
                c.ctx.eq_tm(vproj(r.clone(), vin(r.clone(), c.t("M"), c.t("N")), c.t("F")), c.t("N"), c.t("B")),
                vec![
                    z.of(c.t("M"), c.t("A")),
                    c.ctx.of(c.t("N"), c.t("B")),
                    z.of(c.t("F"), arr(c.t("A"), c.t("B"))),
                    z.eq_tm(app(c.t("F"), c.t("M")), c.t("N"), c.t("B")),
                ],
                vec![],
            )
        };
    "ua/eta" ["r": Dim, "A": Term, "B": Term, "E": Term, "M": Term, "N": Term]
        "N in V r A B E; <r=0> M = N in A" => "Vin r M (Vproj r N (fst E)) = N in V r A B E",
        |c| {
            let r = c.d("r");
            let ty = ua(r.clone(), c.t("A"), c.t("B"), c.t("E"));
            ok(
                c.ctx.eq_tm(vin(r.clone(), c.t("M"), vproj(r.clone(), c.t("N"), fst(c.t("E")))), c.t("N"), ty.clone()),
                vec![c.ctx.of(c.t("N"), ty), c.ctx.under(zero_eq(&r)).eq_tm(c.t("M"), c.t("N"), c.t("A"))],
                vec![],
            )
        };

    // Universes
    "univ/form-pre" ["i": Level]
        "" => "U pre i type pre",
        |c| ok(c.ctx.wf(Kind::Pre, univ(Kind::Pre, c.nat("i"))), vec![], vec![]);
    "univ/form-kan" ["i": Level]
        "" => "U kan i type kan",
        |c| ok(c.ctx.wf(Kind::Kan, univ(Kind::Kan, c.nat("i"))), vec![], vec![]);
    "univ/el" ["k": Kappa, "i": Level, "A": Term, "A'": Term]
        "A = A' in U k i" => "A = A' type k",
        |c| ok(
            c.ctx.eq_ty(c.k(), c.t("A"), c.t("A'")),
            vec![c.ctx.eq_tm(c.t("A"), c.t("A'"), univ(c.k(), c.nat("i")))],
            vec![],
        );
    "univ/cumulativity" ["k": Kappa, "i": Level, "j": Level, "A": Term, "A'": Term]
        "A = A' in U k i; i <= j" => "A = A' in U k j",
        |c| ok(
            c.ctx.eq_tm(c.t("A"), c.t("A'"), univ(c.k(), c.nat("j"))),
            vec![c.ctx.eq_tm(c.t("A"), c.t("A'"), univ(c.k(), c.nat("i")))],
            vec![Side::Le(c.nat("i"), c.nat("j"))],
        );
    "univ/kan-pre" ["i": Level, "A": Term, "A'": Term]
        "A = A' in U kan i" => "A = A' in U pre i",
        |c| ok(
            c.ctx.eq_tm(c.t("A"), c.t("A'"), univ(Kind::Pre, c.nat("i"))),
            vec![c.ctx.eq_tm(c.t("A"), c.t("A'"), univ(Kind::Kan, c.nat("i")))],
            vec![],
        );
    "univ/pi" ["k": Kappa, "i": Level, "a": Var, "A": Term, "A'": Term, "B": Term, "B'": Term]
        "A = A' in U k i; a : A |- B = B' in U k i" => "(a : A) -> B = (a : A') -> B' in U k i",
        |c| {
            let (a, u) = (c.n("a"), univ(c.k(), c.nat("i")));
            ok(
                c.ctx.eq_tm(pi(&a, c.t("A"), c.t("B")), pi(&a, c.t("A'"), c.t("B'")), u.clone()),
                vec![c.ctx.eq_tm(c.t("A"), c.t("A'"), u.clone()), c.ctx.hyp(&a, c.t("A")).eq_tm(c.t("B"), c.t("B'"), u)],
                vec![Side::FreshVar(a, c.ctx.vars())],
            )
        };
    "univ/sigma" ["k": Kappa, "i": Level, "a": Var, "A": Term, "A'": Term, "B": Term, "B'": Term]
        "A = A' in U k i; a : A |- B = B' in U k i" => "(a : A) * B = (a : A') * B' in U k i",
        |c| {
            let (a, u) = (c.n("a"), univ(c.k(), c.nat("i")));
            ok(
                c.ctx.eq_tm(sigma(&a, c.t("A"), c.t("B")), sigma(&a, c.t("A'"), c.t("B'")), u.clone()),
                vec![c.ctx.eq_tm(c.t("A"), c.t("A'"), u.clone()), c.ctx.hyp(&a, c.t("A")).eq_tm(c.t("B"), c.t("B'"), u)],
                vec![Side::FreshVar(a, c.ctx.vars())],
            )
        };
    "univ/path" ["k": Kappa, "i": Level, "x": DimName, "A": Term, "A'": Term, "P0": Term, "P0'": Term, "P1": Term, "P1'": Term]
        "Ψ,x |- A = A' in U k i; (∀ε) P_ε = P_ε' in A<ε/x>" => "path (x.A) P0 P1 = path (x.A') P0' P1' in U k i",
        |c| {
            let (x, a, u) = (c.n("x"), c.t("A"), univ(c.k(), c.nat("i")));
            ok(
                c.ctx.eq_tm(path(&x, a.clone(), c.t("P0"), c.t("P1")), path(&x, c.t("A'"), c.t("P0'"), c.t("P1'")), u.clone()),
                vec![
                    c.ctx.dim(&x).eq_tm(a.clone(), c.t("A'"), u),
                    c.ctx.eq_tm(c.t("P0"), c.t("P0'"), dsubst(&a, &Dim::Zero, &x)),
                    c.ctx.eq_tm(c.t("P1"), c.t("P1'"), dsubst(&a, &Dim::One, &x)),
                ],
                vec![Side::FreshDim(x, c.ctx.psi.clone())],
            )
        };
    "univ/eq" ["i": Level, "A": Term, "A'": Term, "M": Term, "M'": Term, "N": Term, "N'": Term]
        "A = A' in U pre i; M = M' in A; N = N' in A" => "eq A M N = eq A' M' N' in U pre i",
        |c| {
            let u = univ(Kind::Pre, c.nat("i"));
            ok(
                c.ctx.eq_tm(eq_ty(c.t("A"), c.t("M"), c.t("N")), eq_ty(c.t("A'"), c.t("M'"), c.t("N'")), u.clone()),
                vec![
                    c.ctx.eq_tm(c.t("A"), c.t("A'"), u),
                    c.ctx.eq_tm(c.t("M"), c.t("M'"), c.t("A")),
                    c.ctx.eq_tm(c.t("N"), c.t("N'"), c.t("A")),
                ],
                vec![],
            )
        };
    "univ/void" ["k": Kappa, "i": Level]
        "" => "void in U k i",
        |c| ok(c.ctx.of(Term::Void, univ(c.k(), c.nat("i"))), vec![], vec![]);
    "univ/nat" ["k": Kappa, "i": Level]
        "" => "nat in U k i",
        |c| ok(c.ctx.of(Term::Nat, univ(c.k(), c.nat("i"))), vec![], vec![]);
    "univ/bool" ["k": Kappa, "i": Level]
        "" => "bool in U k i",
        |c| ok(c.ctx.of(Term::Bool, univ(c.k(), c.nat("i"))), vec![], vec![]);
    "univ/wbool" ["k": Kappa, "i": Level]
        "" => "wbool in U k i",
        |c| ok(c.ctx.of(Term::WBool, univ(c.k(), c.nat("i"))), vec![], vec![]);
    "univ/S1" ["k": Kappa, "i": Level]
        "" => "S1 in U k i",
        |c| ok(c.ctx.of(Term::Circle, univ(c.k(), c.nat("i"))), vec![], vec![]);
    "univ/ua" ["k": Kappa, "i": Level, "r": Dim, "A": Term, "A'": Term, "B": Term, "B'": Term, "E": Term, "E'": Term]
        "<r=0> A = A' in U k i; B = B' in U k i; <r=0> E = E' in Equiv(A, B)" => "V r A B E = V r A' B' E' in U k i",
        |c| {
            let (r, u) = (c.d("r"), univ(c.k(), c.nat("i")));
            let z = c.ctx.under(zero_eq(&r));
            ok(
                c.ctx.eq_tm(ua(r.clone(), c.t("A"), c.t("B"), c.t("E")), ua(r.clone(), c.t("A'"), c.t("B'"), c.t("E'")), u.clone()),
                vec![
                    z.eq_tm(c.t("A"), c.t("A'"), u.clone()),
                    c.ctx.eq_tm(c.t("B"), c.t("B'"), u),
                    z.eq_tm(c.t("E"), c.t("E'"), equiv(c.t("A"), c.t("B"))),
                ],
                vec![],
            )
        };
    "univ/in-pre" ["k": Kappa, "i": Level, "j": Level]
        "i < j" => "U k i in U pre j",
        |c| ok(
            c.ctx.of(univ(c.k(), c.nat("i")), univ(Kind::Pre, c.nat("j"))),
            vec![],
            vec![Side::Lt(c.nat("i"), c.nat("j"))],
        );
    "univ/in-kan" ["i": Level, "j": Level]
        "i < j" => "U kan i in U kan j",
        |c| ok(
            c.ctx.of(univ(Kind::Kan, c.nat("i")), univ(Kind::Kan, c.nat("j"))),
            vec![],
            vec![Side::Lt(c.nat("i"), c.nat("j"))],
        );
    "univ/box" ["j": Level, "r": Dim, "r'": Dim, "A": Term, "M": Term, "M'": Term, "eqs": Eqs, "y": DimName, "B": Terms, "N": Terms, "N'": Terms]
        "wfshape; A type kan; M = M' in A; (∀i,j) Ψ,y <..> B_i = B_j type kan; (∀i,j) <..> N_i = N_j' in B_i<r'/y>; (∀i) <r_i=r_i'> B_i<r/y> = A type kan; (∀i) <r_i=r_i'> coe (y.B_i) r' ~> r N_i = M in A"
        => "box r ~> r' M [N] = box r ~> r' M' [N'] in hcom (U kan j) r ~> r' A [y.B]",
        |c| {
            let s = Sys::of(c);
            let (bs, ns, ns2) = (c.ts("B"), c.ts("N"), c.ts("N'"));
            let (r, r2) = (c.d("r"), c.d("r'"));
            let lhs = boxed(r.clone(), r2.clone(), c.t("M"), s.box_tubes(&ns, "N")?);
            let rhs = boxed(r, r2, c.t("M'"), s.box_tubes(&ns2, "N'")?);
            let ty = fcom_ty(c, &s, &bs)?;
            ok(c.ctx.eq_tm(lhs, rhs, ty), box_premises(c, &s, &bs, &ns, &ns2, c.t("M'"), true), vec![s.fresh(c)])
        };
    "univ/box-eq" ["r": Dim, "M": Term, "A": Term, "eqs": Eqs, "N": Terms]
        "M in A" => "box r ~> r M [N] = M in A",
        |c| {
            let eqs = c.eqs("eqs");
            let ns = c.ts("N");
            if ns.len() != eqs.len() {
                return Err(format!("N has {} entries but there are {} equations", ns.len(), eqs.len()));
            }
            let ts = eqs.iter().zip(&ns).map(|(e, n)| BoxTube::new(e.clone(), n.clone())).collect();
            ok(
                c.ctx.eq_tm(boxed(c.d("r"), c.d("r"), c.t("M"), ts), c.t("M"), c.t("A")),
                vec![c.ctx.of(c.t("M"), c.t("A"))],
                vec![],
            )
        };
    "univ/box-tube" ["r": Dim, "r'": Dim, "A": Term, "M": Term, "eqs": Eqs, "y": DimName, "B": Terms, "N": Terms, "i": Index]
        "r_i = r_i'; A type kan; M in A; (∀i,j) B_i = B_j; (∀i,j) N_i = N_j in B_i<r'/y>; (∀i) B_i<r/y> = A; (∀i) coe (y.B_i) r' ~> r N_i = M in A"
        => "box r ~> r' M [N] = N_i in B_i<r'/y>",
        |c| {
            let s = Sys::of(c);
            let (bs, ns) = (c.ts("B"), c.ts("N"));
            s.check(&bs, "B")?;
            let i = c.nat("i");
            let (bi, ni) = (nth(&bs, i, "B")?, nth(&ns, i, "N")?);
            let (r, r2, m) = (c.d("r"), c.d("r'"), c.t("M"));
            let lhs = boxed(r, r2.clone(), m.clone(), s.box_tubes(&ns, "N")?);
            let ps = box_premises(c, &s, &bs, &ns, &ns, m, false);
            ok(c.ctx.eq_tm(lhs, ni, dsubst(&bi, &r2, &s.y)), ps, vec![s.holds(i)?, s.fresh(c)])
        };
    "univ/cap" ["j": Level, "r": Dim, "r'": Dim, "A": Term, "M": Term, "M'": Term, "eqs": Eqs, "y": DimName, "B": Terms, "B'": Terms]
        "wfshape; A type kan; (∀i,j) Ψ,y <..> B_i = B_j' type kan; (∀i) <r_i=r_i'> B_i<r/y> = A type kan; M = M' in hcom (U kan j) r ~> r' A [y.B]"
        => "cap r ~> r' M [y.B] = cap r ~> r' M' [y.B'] in A",
        |c| {
            let s = Sys::of(c);
            let (bs, bs2) = (c.ts("B"), c.ts("B'"));
            let (r, r2, a) = (c.d("r"), c.d("r'"), c.t("A"));
            let lhs = cap(r.clone(), r2.clone(), c.t("M"), s.tubes(&bs, "B")?);
            let rhs = cap(r.clone(), r2, c.t("M'"), s.tubes(&bs2, "B'")?);
            let mut ps = vec![c.ctx.shape(s.eqs.clone()), c.ctx.wf(Kind::Kan, a.clone())];
            ps.extend(box_lines(c, &s, &bs, &bs2, &a, &r));
            ps.push(c.ctx.eq_tm(c.t("M"), c.t("M'"), fcom_ty(c, &s, &bs)?));
            ok(c.ctx.eq_tm(lhs, rhs, a), ps, vec![s.fresh(c)])
        };
    "univ/cap-eq" ["r": Dim, "M": Term, "A": Term, "eqs": Eqs, "y": DimName, "B": Terms]
        "M in A" => "cap r ~> r M [y.B] = M in A",
        |c| {
            let s = Sys::of(c);
            let lhs = cap(c.d("r"), c.d("r"), c.t("M"), s.tubes(&c.ts("B"), "B")?);
            ok(c.ctx.eq_tm(lhs, c.t("M"), c.t("A")), vec![c.ctx.of(c.t("M"), c.t("A"))], vec![])
        };
    "univ/cap-tube" ["j": Level, "r": Dim, "r'": Dim, "A": Term, "M": Term, "M'": Term, "eqs": Eqs, "y": DimName, "B": Terms, "B'": Terms, "i": Index]
        "r_i = r_i'; A type kan; (∀i,j) Ψ,y <..> B_i = B_j' type kan; (∀i) <r_i=r_i'> B_i<r/y> = A type kan; M = M' in hcom (U kan j) r ~> r' A [y.B]"
        => "cap r ~> r' M [y.B] = coe (y.B_i) r' ~> r M in A",
        |c| {
            let s = Sys::of(c);
            let (bs, bs2) = (c.ts("B"), c.ts("B'"));
            let i = c.nat("i");
            let bi = nth(&bs, i, "B")?;
            let (r, r2, a, m) = (c.d("r"), c.d("r'"), c.t("A"), c.t("M"));
            let lhs = cap(r.clone(), r2.clone(), m.clone(), s.tubes(&bs, "B")?);
            s.check(&bs2, "B'")?;
            let mut ps = vec![c.ctx.wf(Kind::Kan, a.clone())];
            ps.extend(box_lines(c, &s, &bs, &bs2, &a, &r));
            ps.push(c.ctx.eq_tm(m.clone(), c.t("M'"), fcom_ty(c, &s, &bs)?));
            ok(c.ctx.eq_tm(lhs, coe(&s.y, bi, r2, r, m), a), ps, vec![s.holds(i)?, s.fresh(c)])
        };
    "univ/cap-box" ["r": Dim, "r'": Dim, "A": Term, "M": Term, "M'": Term, "eqs": Eqs, "y": DimName, "B": Terms, "N": Terms, "N'": Terms]
        "wfshape; A type kan; M = M' in A; (∀i,j) B_i = B_j; (∀i,j) N_i = N_j' in B_i<r'/y>; (∀i) B_i<r/y> = A; (∀i) coe (y.B_i) r' ~> r N_i = M in A"
        => "cap r ~> r' (box r ~> r' M [N]) [y.B] = M in A",
        |c| {
            let s = Sys::of(c);
            let (bs, ns, ns2) = (c.ts("B"), c.ts("N"), c.ts("N'"));
            let (r, r2, m) = (c.d("r"), c.d("r'"), c.t("M"));
            s.check(&ns2, "N'")?;
            let bx = boxed(r.clone(), r2.clone(), m.clone(), s.box_tubes(&ns, "N")?);
            let lhs = cap(r, r2, bx, s.tubes(&bs, "B")?);
            ok(c.ctx.eq_tm(lhs, m, c.t("A")), box_premises(c, &s, &bs, &ns, &ns2, c.t("M'"), true), vec![s.fresh(c)])
        };
    "univ/box-cap" ["j": Level, "r": Dim, "r'": Dim, "A": Term, "M": Term, "eqs": Eqs, "y": DimName, "B": Terms]
        "wfshape; A type kan; (∀i,j) Ψ,y <..> B_i = B_j type kan; (∀i) <r_i=r_i'> B_i<r/y> = A type kan; M in hcom (U kan j) r ~> r' A [y.B]"
        => "box r ~> r' (cap r ~> r' M [y.B]) [M] = M in hcom (U kan j) r ~> r' A [y.B]",
        |c| {
            let s = Sys::of(c);
            let bs = c.ts("B");
            let (r, r2, a, m) = (c.d("r"), c.d("r'"), c.t("A"), c.t("M"));
            let ty = fcom_ty(c, &s, &bs)?;
            let cp = cap(r.clone(), r2.clone(), m.clone(), s.tubes(&bs, "B")?);
            let ms = vec![m.clone(); s.n()];
            let lhs = boxed(r.clone(), r2, cp, s.box_tubes(&ms, "M")?);
            let mut ps = vec![c.ctx.shape(s.eqs.clone()), c.ctx.wf(Kind::Kan, a.clone())];
            ps.extend(box_lines(c, &s, &bs, &bs, &a, &r));
            ps.push(c.ctx.of(m.clone(), ty.clone()));
            ok(c.ctx.eq_tm(lhs, m, ty), ps, vec![s.fresh(c)])
        };
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{alpha_eq, parse};

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = CATALOG.iter().map(|s| s.id).collect();
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn equiv_shape() {
        let e = equiv(Term::Bool, Term::Bool);
        let want = parse(
            "sg (f : pi (w : bool) bool) (pi (b : bool) (sg (w : sg (a : bool) (path (w. bool) (app f a) b)) \
             (pi (c : sg (a : bool) (path (w. bool) (app f a) b)) (pi (c' : sg (a : bool) (path (w. bool) (app f a) b)) \
             (path (w. sg (a : bool) (path (w. bool) (app f a) b)) c c')))))",
        )
        .unwrap();
        assert!(alpha_eq(&e, &want), "{}", crate::syntax::print(&e));
    }

    #[test]
    fn arrow_binder_avoids_capture() {
        let t = arr(Term::Var(Name::new("w")), Term::Var(Name::new("w")));
        match t {
            Term::Pi { var, cod, .. } => assert_ne!(Term::Var(var), *cod),
            _ => unreachable!(),
        }
    }
}
