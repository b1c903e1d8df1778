//! Right-hand sides of the composition and coercion rules.
//!
//! Every binder introduced here is drawn from a [`Fresh`] supply that avoids
//! all names of the redex, and existing tubes are re-bound to a fresh name
//! before foreign material is placed under them.

use crate::cube::{Dim, Equation};
use crate::name::{Fresh, Name};
use crate::syntax::build::*;
use crate::syntax::{dsubst, tsubst, BoxTube, Term, Tube};

pub(crate) fn dn(n: &Name) -> Dim {
    Dim::Name(n.clone())
}

fn eq(l: &Dim, r: &Dim) -> Equation {
    Equation::new(l.clone(), r.clone())
}

/// Rebinds every tube to `y` (fresh) and maps `(y, N_i<y>)` to a new body.
fn retube(ts: &[Tube], f: &mut Fresh, mut g: impl FnMut(&Name, Term) -> Term) -> Vec<Tube> {
    let y = f.name("y");
    ts.iter().map(|t| Tube::new(t.eq.clone(), y.clone(), g(&y, t.at(&dn(&y))))).collect()
}

/// Opens a binder with a fresh name.
fn open(x: &Name, body: &Term, f: &mut Fresh) -> (Name, Term) {
    let n = f.name(x.stem());
    let b = dsubst(body, &dn(&n), x);
    (n, b)
}

fn open_term(a: &Name, body: &Term, f: &mut Fresh) -> (Name, Term) {
    let n = f.name(a.stem());
    let b = tsubst(body, &Term::Var(n.clone()), a);
    (n, b)
}

pub(crate) struct Comp<'a> {
    pub r: &'a Dim,
    pub r2: &'a Dim,
    pub cap: &'a Term,
    pub tubes: &'a [Tube],
}

pub(crate) fn com_expand(y: &Name, ty: &Term, c: Comp, f: &mut Fresh) -> Term {
    let ts = retube(c.tubes, f, |yt, n| coe(y, ty.clone(), dn(yt), c.r2.clone(), n));
    hcom(dsubst(ty, c.r2, y), c.r.clone(), c.r2.clone(), coe(y, ty.clone(), c.r.clone(), c.r2.clone(), c.cap.clone()), ts)
}

pub(crate) fn gcom_(y: &Name, ty: &Term, c: Comp, f: &mut Fresh) -> Term {
    let ts = retube(c.tubes, f, |yt, n| coe(y, ty.clone(), dn(yt), c.r2.clone(), n));
    ghcom(dsubst(ty, c.r2, y), c.r.clone(), c.r2.clone(), coe(y, ty.clone(), c.r.clone(), c.r2.clone(), c.cap.clone()), ts)
}

/// `ghcom` with at least one tube.
pub(crate) fn ghcom_(ty: &Term, c: Comp, f: &mut Fresh) -> Term {
    let (first, rest) = c.tubes.split_first().expect("ghcom with a tube");
    let (s, s2) = (&first.eq.lhs, &first.eq.rhs);
    let z = f.name("z");
    let yg = f.name("y");
    let t = |e: Dim| {
        hcom(
            ty.clone(),
            c.r.clone(),
            dn(&z),
            c.cap.clone(),
            std::iter::once(Tube::new(eq(s2, &e), first.var.clone(), first.body.clone()))
                .chain(std::iter::once(Tube::new(
                    eq(s2, &e.flip()),
                    yg.clone(),
                    ghcom(ty.clone(), c.r.clone(), dn(&yg), c.cap.clone(), rest.to_vec()),
                )))
                .chain(rest.iter().cloned())
                .collect(),
        )
    };
    let mut tubes = vec![
        Tube::new(eq(s, &Dim::Zero), z.clone(), t(Dim::Zero)),
        Tube::new(eq(s, &Dim::One), z.clone(), t(Dim::One)),
        first.clone(),
    ];
    tubes.extend(rest.iter().cloned());
    hcom(ty.clone(), c.r.clone(), c.r2.clone(), c.cap.clone(), tubes)
}

pub(crate) fn fun_hcom(var: &Name, cod: &Term, c: Comp, f: &mut Fresh) -> Term {
    let (a, b) = open_term(var, cod, f);
    let av = Term::Var(a.clone());
    let ts = retube(c.tubes, f, |_, n| app(n, av.clone()));
    lam(&a, hcom(b, c.r.clone(), c.r2.clone(), app(c.cap.clone(), av.clone()), ts))
}

pub(crate) fn fun_coe(x: &Name, var: &Name, dom: &Term, cod: &Term, r: &Dim, r2: &Dim, m: &Term, f: &mut Fresh) -> Term {
    let (xf, dom) = open(x, dom, f);
    let cod = dsubst(cod, &dn(&xf), x);
    let a = f.name(var.stem());
    let av = Term::Var(a.clone());
    let line = tsubst(&cod, &coe(&xf, dom.clone(), r2.clone(), dn(&xf), av.clone()), var);
    lam(&a, coe(&xf, line, r.clone(), r2.clone(), app(m.clone(), coe(&xf, dom, r2.clone(), r.clone(), av))))
}

pub(crate) fn sigma_hcom(var: &Name, dom: &Term, cod: &Term, c: Comp, f: &mut Fresh) -> Term {
    let z = f.name("z");
    let fsts = retube(c.tubes, f, |_, n| fst(n));
    let snds = retube(c.tubes, f, |_, n| snd(n));
    let big_f = hcom(dom.clone(), c.r.clone(), dn(&z), fst(c.cap.clone()), fsts.clone());
    pair(
        hcom(dom.clone(), c.r.clone(), c.r2.clone(), fst(c.cap.clone()), fsts),
        com(&z, tsubst(cod, &big_f, var), c.r.clone(), c.r2.clone(), snd(c.cap.clone()), snds),
    )
}

pub(crate) fn sigma_coe(x: &Name, var: &Name, dom: &Term, cod: &Term, r: &Dim, r2: &Dim, m: &Term, f: &mut Fresh) -> Term {
    let (xf, dom) = open(x, dom, f);
    let cod = dsubst(cod, &dn(&xf), x);
    let line = tsubst(&cod, &coe(&xf, dom.clone(), r.clone(), dn(&xf), fst(m.clone())), var);
    pair(coe(&xf, dom, r.clone(), r2.clone(), fst(m.clone())), coe(&xf, line, r.clone(), r2.clone(), snd(m.clone())))
}

pub(crate) fn path_hcom(x: &Name, ty: &Term, p0: &Term, p1: &Term, c: Comp, f: &mut Fresh) -> Term {
    let (xf, a) = open(x, ty, f);
    let w = f.name("w");
    let mut ts = vec![
        Tube::new(eq(&dn(&xf), &Dim::Zero), w.clone(), p0.clone()),
        Tube::new(eq(&dn(&xf), &Dim::One), w, p1.clone()),
    ];
    ts.extend(retube(c.tubes, f, |_, n| dapp(n, dn(&xf))));
    dlam(&xf, hcom(a, c.r.clone(), c.r2.clone(), dapp(c.cap.clone(), dn(&xf)), ts))
}

#[allow(clippy::too_many_arguments)]
pub(crate) fn path_coe(
    y: &Name,
    x: &Name,
    ty: &Term,
    p0: &Term,
    p1: &Term,
    r: &Dim,
    r2: &Dim,
    m: &Term,
    f: &mut Fresh,
) -> Term {
    let yf = f.name(y.stem());
    let xf = f.name(x.stem());
    let a = dsubst(&dsubst(ty, &dn(&xf), x), &dn(&yf), y);
    let p0 = dsubst(p0, &dn(&yf), y);
    let p1 = dsubst(p1, &dn(&yf), y);
    let ts = vec![
        Tube::new(eq(&dn(&xf), &Dim::Zero), yf.clone(), p0),
        Tube::new(eq(&dn(&xf), &Dim::One), yf.clone(), p1),
    ];
    dlam(&xf, com(&yf, a, r.clone(), r2.clone(), dapp(m.clone(), dn(&xf)), ts))
}

/// `if` and `S1elim` at an `fcom` value: `com (z. A[H/b]) ...` with `H` the
/// fcom running to `z`, and `elim` applied to cap and tubes.
pub(crate) fn elim_fcom(
    var: &Name,
    motive: &Term,
    scrut: (&Dim, &Dim, &Term, &[Tube]),
    elim: impl Fn(Term) -> Term,
    f: &mut Fresh,
) -> Term {
    let (r, r2, cap, tubes) = scrut;
    let z = f.name("z");
    let h = fcom(r.clone(), dn(&z), cap.clone(), tubes.to_vec());
    let ts = retube(tubes, f, |_, n| elim(n));
    com(&z, tsubst(motive, &h, var), r.clone(), r2.clone(), elim(cap.clone()), ts)
}

pub(crate) struct VParts<'a> {
    pub a: &'a Term,
    pub b: &'a Term,
    pub e: &'a Term,
}

pub(crate) fn ua_hcom(x: &Dim, v: VParts, c: Comp, f: &mut Fresh) -> Term {
    let o = |d: Dim| hcom(v.a.clone(), c.r.clone(), d, c.cap.clone(), c.tubes.to_vec());
    let fe = fst(v.e.clone());
    let y = f.name("y");
    let mut ts = retube(c.tubes, f, |_, n| vproj(x.clone(), n, fe.clone()));
    ts.push(Tube::new(eq(x, &Dim::Zero), y.clone(), app(fe.clone(), o(dn(&y)))));
    ts.push(Tube::new(
        eq(x, &Dim::One),
        y.clone(),
        hcom(v.b.clone(), c.r.clone(), dn(&y), c.cap.clone(), c.tubes.to_vec()),
    ));
    vin(x.clone(), o(c.r2.clone()), hcom(v.b.clone(), c.r.clone(), c.r2.clone(), vproj(x.clone(), c.cap.clone(), fe), ts))
}

/// Line `x.V x A B E` opened at a fresh `x`.
pub(crate) struct VLine {
    pub x: Name,
    pub a: Term,
    pub b: Term,
    pub e: Term,
}

impl VLine {
    pub fn open(x: &Name, a: &Term, b: &Term, e: &Term, f: &mut Fresh) -> VLine {
        let xf = f.name(x.stem());
        let d = dn(&xf);
        VLine { a: dsubst(a, &d, x), b: dsubst(b, &d, x), e: dsubst(e, &d, x), x: xf }
    }

    fn at(&self, t: &Term, d: &Dim) -> Term {
        dsubst(t, d, &self.x)
    }

    fn ty(&self) -> Term {
        Term::V { dim: dn(&self.x), a: Box::new(self.a.clone()), b: Box::new(self.b.clone()), equiv: Box::new(self.e.clone()) }
    }
}

pub(crate) fn ua_coe_0(l: &VLine, r2: &Dim, m: &Term) -> Term {
    let fe0 = fst(l.at(&l.e, &Dim::Zero));
    vin(r2.clone(), m.clone(), coe(&l.x, l.b.clone(), Dim::Zero, r2.clone(), app(fe0, m.clone())))
}

pub(crate) fn ua_coe_1(l: &VLine, r2: &Dim, n: &Term, f: &mut Fresh) -> Term {
    let cb = coe(&l.x, l.b.clone(), Dim::One, r2.clone(), n.clone());
    let o = fst(app(snd(l.at(&l.e, r2)), cb.clone()));
    let y = f.name("y");
    let p = hcom(
        l.at(&l.b, r2),
        Dim::One,
        Dim::Zero,
        cb.clone(),
        vec![
            Tube::new(eq(r2, &Dim::Zero), y.clone(), dapp(snd(o.clone()), dn(&y))),
            Tube::new(eq(r2, &Dim::One), y, cb),
        ],
    );
    vin(r2.clone(), fst(o), p)
}

/// Coercion along `x.V x A B E` from a dimension name `y`. The source name
/// `y` is reused as the binder of the lines `Q_e` and of the tubes over
/// them.
pub(crate) fn ua_coe_name(l: &VLine, y: &Name, r2: &Dim, m: &Term, f: &mut Fresh) -> Term {
    let yd = dn(y);
    let line = l.ty();
    let fe_at = |d: &Dim| fst(l.at(&l.e, d));
    let o = |e: Dim, d: Dim| vproj(d.clone(), coe(&l.x, line.clone(), e, d.clone(), m.clone()), fe_at(&d));
    let w = f.name("w");
    let p = |d: Dim| {
        com(
            &l.x,
            l.b.clone(),
            yd.clone(),
            d,
            vproj(yd.clone(), m.clone(), fe_at(&yd)),
            vec![
                Tube::new(eq(&yd, &Dim::Zero), w.clone(), o(Dim::Zero, dn(&w))),
                Tube::new(eq(&yd, &Dim::One), w.clone(), o(Dim::One, dn(&w))),
            ],
        )
    };
    let a0 = l.at(&l.a, &Dim::Zero);
    let b0 = l.at(&l.b, &Dim::Zero);
    let e0 = l.at(&l.e, &Dim::Zero);
    let p0 = p(Dim::Zero);
    let z = f.name("z");
    let q = |e: Dim, a: Term| {
        let ca = coe(y, a0.clone(), e.clone(), yd.clone(), a);
        pair(
            ca.clone(),
            dlam(
                &z,
                com(
                    y,
                    b0.clone(),
                    e.clone(),
                    yd.clone(),
                    dsubst(&p0, &e, y),
                    vec![
                        Tube::new(eq(&dn(&z), &Dim::Zero), y.clone(), app(fst(e0.clone()), ca)),
                        Tube::new(eq(&dn(&z), &Dim::One), y.clone(), p0.clone()),
                    ],
                ),
            ),
        )
    };
    let q0 = q(Dim::Zero, dsubst(m, &Dim::Zero, y));
    let q1 = q(Dim::One, dsubst(&coe(&l.x, line.clone(), Dim::One, Dim::Zero, m.clone()), &Dim::One, y));
    let r = dapp(app(app(snd(app(snd(e0.clone()), p0.clone())), q0), q1), yd.clone());
    let u = f.name("w");
    let ts = vec![
        Tube::new(eq(&yd, &Dim::Zero), u.clone(), o(Dim::Zero, r2.clone())),
        Tube::new(eq(&yd, &Dim::One), u.clone(), o(Dim::One, r2.clone())),
        Tube::new(eq(&yd, r2), u, vproj(r2.clone(), m.clone(), fe_at(r2))),
        Tube::new(eq(r2, &Dim::Zero), z.clone(), dapp(snd(r.clone()), dn(&z))),
    ];
    vin(r2.clone(), fst(r), hcom(l.at(&l.b, r2), Dim::One, Dim::Zero, p(r2.clone()), ts))
}

/// Coercion along `y.V x A B E` with `x` a name other than `y`.
#[allow(clippy::too_many_arguments)]
pub(crate) fn ua_coe_other(y: &Name, x: &Dim, v: VParts, r: &Dim, r2: &Dim, m: &Term, f: &mut Fresh) -> Term {
    let yf = f.name(y.stem());
    let o = |t: &Term| dsubst(t, &dn(&yf), y);
    let (a, b, e) = (o(v.a), o(v.b), o(v.e));
    let ts = vec![
        Tube::new(eq(x, &Dim::Zero), yf.clone(), app(fst(e.clone()), coe(&yf, a.clone(), r.clone(), dn(&yf), m.clone()))),
        Tube::new(eq(x, &Dim::One), yf.clone(), coe(&yf, b.clone(), r.clone(), dn(&yf), m.clone())),
    ];
    vin(
        x.clone(),
        coe(&yf, a, r.clone(), r2.clone(), m.clone()),
        com(&yf, b, r.clone(), r2.clone(), vproj(x.clone(), m.clone(), fst(dsubst(&e, r, &yf))), ts),
    )
}

/// Parts of an `fcom s ~> s' A [sj=sj' z. Bj]` type, with every `Bj` opened
/// at the shared name `z`.
pub(crate) struct FcomType {
    pub s: Dim,
    pub s2: Dim,
    pub a: Term,
    pub eqs: Vec<Equation>,
    pub z: Name,
    pub bs: Vec<Term>,
    pub tubes: Vec<Tube>,
}

impl FcomType {
    pub fn open(s: &Dim, s2: &Dim, a: &Term, tubes: &[Tube], f: &mut Fresh) -> FcomType {
        let z = f.name("z");
        FcomType {
            s: s.clone(),
            s2: s2.clone(),
            a: a.clone(),
            eqs: tubes.iter().map(|t| t.eq.clone()).collect(),
            bs: tubes.iter().map(|t| t.at(&dn(&z))).collect(),
            z,
            tubes: tubes.to_vec(),
        }
    }

    fn b(&self, j: usize, d: &Dim) -> Term {
        dsubst(&self.bs[j], d, &self.z)
    }

    /// `coe (z. Bj) from ~> to arg`
    fn coe_b(&self, j: usize, from: Dim, to: Dim, arg: Term) -> Term {
        coe(&self.z, self.bs[j].clone(), from, to, arg)
    }
}

pub(crate) fn hcom_fcom(t: &FcomType, c: Comp, f: &mut Fresh) -> Term {
    let y = f.name("y");
    let ns: Vec<Term> = c.tubes.iter().map(|tb| tb.at(&dn(&y))).collect();
    let p = |j: usize, d: &Dim| {
        hcom(
            t.b(j, d),
            c.r.clone(),
            c.r2.clone(),
            t.coe_b(j, t.s2.clone(), d.clone(), c.cap.clone()),
            c.tubes
                .iter()
                .zip(&ns)
                .map(|(tb, n)| Tube::new(tb.eq.clone(), y.clone(), t.coe_b(j, t.s2.clone(), d.clone(), n.clone())))
                .collect(),
        )
    };
    let zp = f.name("z");
    let big_f = |cc: &Term, d: &Dim| {
        hcom(
            t.a.clone(),
            t.s2.clone(),
            d.clone(),
            cap(t.s.clone(), t.s2.clone(), cc.clone(), t.tubes.clone()),
            t.eqs
                .iter()
                .enumerate()
                .map(|(j, e)| {
                    Tube::new(
                        e.clone(),
                        zp.clone(),
                        t.coe_b(j, dn(&zp), t.s.clone(), t.coe_b(j, t.s2.clone(), dn(&zp), cc.clone())),
                    )
                })
                .collect(),
        )
    };
    let o = hcom(
        t.a.clone(),
        c.r.clone(),
        c.r2.clone(),
        big_f(c.cap, &t.s),
        c.tubes.iter().zip(&ns).map(|(tb, n)| Tube::new(tb.eq.clone(), y.clone(), big_f(n, &t.s))).collect(),
    );
    let z = f.name("z");
    let zd = dn(&z);
    let mut qt: Vec<Tube> =
        c.tubes.iter().map(|tb| Tube::new(tb.eq.clone(), z.clone(), big_f(&tb.at(c.r2), &zd))).collect();
    qt.extend(
        t.eqs.iter().enumerate().map(|(j, e)| Tube::new(e.clone(), z.clone(), t.coe_b(j, zd.clone(), t.s.clone(), p(j, &zd)))),
    );
    qt.push(Tube::new(eq(c.r, c.r2), z.clone(), big_f(c.cap, &zd)));
    let q = hcom(t.a.clone(), t.s.clone(), t.s2.clone(), o, qt);
    boxed(
        t.s.clone(),
        t.s2.clone(),
        q,
        t.eqs.iter().enumerate().map(|(j, e)| BoxTube::new(e.clone(), p(j, &t.s2))).collect(),
    )
}

/// Coercion along `x.fcom s ~> s' A [si=si' z. Bi]`; `t` is opened at the
/// fresh line variable `x`.
pub(crate) fn coe_fcom(x: &Name, t: &FcomType, r: &Dim, r2: &Dim, m: &Term, f: &mut Fresh) -> Term {
    let xd = dn(x);
    let at_x = |tm: &Term, d: &Dim| dsubst(tm, d, x);
    let dim_at = |d: &Dim, to: &Dim| if d == &xd { to.clone() } else { d.clone() };
    let apart = |e: &Equation| e.lhs != xd && e.rhs != xd;
    let zc = f.name("z");
    // N_i with its free `z` at `d`.
    let n = |i: usize, d: &Dim| {
        coe(
            &zc,
            t.b(i, &dn(&zc)),
            t.s2.clone(),
            d.clone(),
            coe(x, t.b(i, &t.s2), r.clone(), xd.clone(), m.clone()),
        )
    };
    let zt = f.name("z");
    let ztd = dn(&zt);
    let o = |d: &Dim| {
        at_x(
            &hcom(
                t.a.clone(),
                t.s2.clone(),
                d.clone(),
                cap(t.s.clone(), t.s2.clone(), m.clone(), t.tubes.clone()),
                t.eqs
                    .iter()
                    .enumerate()
                    .map(|(i, e)| Tube::new(e.clone(), zt.clone(), t.coe_b(i, ztd.clone(), t.s.clone(), n(i, &ztd))))
                    .collect(),
            ),
            r,
        )
    };
    let s_at_r = dim_at(&t.s, r);
    let s_at_r2 = dim_at(&t.s, r2);
    let mut pt: Vec<Tube> = t
        .eqs
        .iter()
        .enumerate()
        .filter(|(_, e)| apart(e))
        .map(|(i, e)| Tube::new(e.clone(), x.clone(), n(i, &t.s)))
        .collect();
    let ss = eq(&t.s, &t.s2);
    if apart(&ss) {
        pt.push(Tube::new(ss, x.clone(), coe(x, t.a.clone(), r.clone(), xd.clone(), m.clone())));
    }
    let p = gcom(x, t.a.clone(), r.clone(), r2.clone(), o(&s_at_r), pt);
    let q = |k: usize, d: &Dim| {
        let mut ts: Vec<Tube> = t
            .eqs
            .iter()
            .enumerate()
            .filter(|(_, e)| apart(e))
            .map(|(i, e)| Tube::new(e.clone(), zt.clone(), at_x(&n(i, &ztd), r2)))
            .collect();
        ts.push(Tube::new(eq(r, r2), zt.clone(), at_x(&n(k, &ztd), r2)));
        gcom(&zc, at_x(&t.b(k, &dn(&zc)), r2), s_at_r2.clone(), d.clone(), p.clone(), ts)
    };
    let mut ht: Vec<Tube> = t
        .eqs
        .iter()
        .enumerate()
        .map(|(i, e)| Tube::new(e.clone(), zt.clone(), t.coe_b(i, ztd.clone(), t.s.clone(), q(i, &ztd))))
        .collect();
    ht.push(Tube::new(eq(r, r2), zt.clone(), o(&ztd)));
    let body = boxed(
        t.s.clone(),
        t.s2.clone(),
        hcom(t.a.clone(), t.s.clone(), t.s2.clone(), p.clone(), ht),
        t.eqs.iter().enumerate().map(|(i, e)| BoxTube::new(e.clone(), q(i, &t.s2))).collect(),
    );
    at_x(&body, r2)
}
