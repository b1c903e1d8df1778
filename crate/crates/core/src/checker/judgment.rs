use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde_json::{json, Value};

use crate::cube::{Dim, DimCtx, DimSubst, Equation, EquationList};
use crate::name::Name;
use crate::syntax::{alpha_eq, apply_subst, dsubst, print, term_from_json, term_to_json, Kind, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Form {
    /// `A = B type κ`; the single-sided form is the diagonal.
    EqType(Kind, Term, Term),
    /// `M = N in A`
    EqTm(Term, Term, Term),
    WfShape(EquationList),
}

/// `Ψ | Ξ | Γ`
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Ctx {
    pub psi: DimCtx,
    pub xi: EquationList,
    pub gamma: Vec<(Name, Term)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Judgment {
    pub ctx: Ctx,
    pub form: Form,
}

impl Ctx {
    pub fn new(psi: DimCtx) -> Ctx {
        Ctx { psi, xi: EquationList::default(), gamma: Vec::new() }
    }

    pub fn judge(&self, form: Form) -> Judgment {
        Judgment { ctx: self.clone(), form }
    }

    pub fn eq_tm(&self, m: Term, n: Term, a: Term) -> Judgment {
        self.judge(Form::EqTm(m, n, a))
    }

    pub fn of(&self, m: Term, a: Term) -> Judgment {
        self.eq_tm(m.clone(), m, a)
    }

    pub fn eq_ty(&self, k: Kind, a: Term, b: Term) -> Judgment {
        self.judge(Form::EqType(k, a, b))
    }

    pub fn wf(&self, k: Kind, a: Term) -> Judgment {
        self.eq_ty(k, a.clone(), a)
    }

    pub fn shape(&self, eqs: EquationList) -> Judgment {
        self.judge(Form::WfShape(eqs))
    }

    /// `Ψ, y`
    pub fn dim(&self, y: &Name) -> Ctx {
        Ctx { psi: self.psi.with(y.clone()), ..self.clone() }
    }

    /// `Ξ, eqs`
    pub fn under(&self, eqs: impl IntoIterator<Item = Equation>) -> Ctx {
        let mut xi = self.xi.0.clone();
        xi.extend(eqs);
        Ctx { xi: EquationList(xi), ..self.clone() }
    }

    /// `Γ, a : A`
    pub fn hyp(&self, a: &Name, ty: Term) -> Ctx {
        let mut gamma = self.gamma.clone();
        gamma.push((a.clone(), ty));
        Ctx { gamma, ..self.clone() }
    }

    pub fn vars(&self) -> Vec<Name> {
        self.gamma.iter().map(|(a, _)| a.clone()).collect()
    }
}

impl Form {
    fn map(&self, f: impl Fn(&Term) -> Term, g: impl Fn(&Equation) -> Equation) -> Form {
        match self {
            Form::EqType(k, a, b) => Form::EqType(*k, f(a), f(b)),
            Form::EqTm(m, n, a) => Form::EqTm(f(m), f(n), f(a)),
            Form::WfShape(eqs) => Form::WfShape(eqs.iter().map(g).collect()),
        }
    }

    fn terms(&self) -> Vec<&Term> {
        match self {
            Form::EqType(_, a, b) => vec![a, b],
            Form::EqTm(m, n, a) => vec![m, n, a],
            Form::WfShape(_) => vec![],
        }
    }

    fn alpha_eq(&self, other: &Form) -> bool {
        match (self, other) {
            (Form::EqType(k, a, b), Form::EqType(k2, a2, b2)) => k == k2 && alpha_eq(a, a2) && alpha_eq(b, b2),
            (Form::EqTm(m, n, a), Form::EqTm(m2, n2, a2)) => alpha_eq(m, m2) && alpha_eq(n, n2) && alpha_eq(a, a2),
            (Form::WfShape(e), Form::WfShape(e2)) => e == e2,
            _ => false,
        }
    }
}

impl Judgment {
    /// `J<r/x>` on every component except `Ψ`.
    pub fn dsubst(&self, r: &Dim, x: &Name) -> Judgment {
        let map = BTreeMap::from([(x.clone(), r.clone())]);
        let f = |m: &Term| dsubst(m, r, x);
        let g = |e: &Equation| e.subst(&map);
        Judgment {
            ctx: Ctx {
                psi: self.ctx.psi.clone(),
                xi: self.ctx.xi.iter().map(g).collect(),
                gamma: self.ctx.gamma.iter().map(|(a, t)| (a.clone(), f(t))).collect(),
            },
            form: self.form.map(f, g),
        }
    }

    /// `J ψ` for a total substitution out of `Ψ`.
    pub fn apply(&self, s: &DimSubst) -> Result<Judgment, String> {
        if s.source() != &self.ctx.psi {
            return Err(format!("substitution source {} is not the context {}", s.source(), self.ctx.psi));
        }
        let f = |m: &Term| apply_subst(m, s).expect("scoped");
        let g = |e: &Equation| e.subst(s.map());
        Ok(Judgment {
            ctx: Ctx {
                psi: s.target().clone(),
                xi: self.ctx.xi.iter().map(g).collect(),
                gamma: self.ctx.gamma.iter().map(|(a, t)| (a.clone(), f(t))).collect(),
            },
            form: self.form.map(f, g),
        })
    }

    pub fn well_scoped(&self) -> Result<(), String> {
        let psi = &self.ctx.psi;
        let dims = |m: &Term| -> Result<(), String> {
            match m.fd().into_iter().find(|x| !psi.contains(x)) {
                Some(x) => Err(format!("dimension {x} not in context")),
                None => Ok(()),
            }
        };
        for e in self.ctx.xi.iter() {
            if let Some(x) = e.names().find(|x| !psi.contains(x)) {
                return Err(format!("dimension {x} not in context"));
            }
        }
        let mut seen = BTreeSet::new();
        for (a, ty) in &self.ctx.gamma {
            dims(ty)?;
            if let Some(b) = ty.fv().into_iter().find(|b| !seen.contains(b)) {
                return Err(format!("variable {b} not in scope"));
            }
            if !seen.insert(a.clone()) {
                return Err(format!("hypothesis {a} declared twice"));
            }
        }
        for m in self.form.terms() {
            dims(m)?;
            if let Some(b) = m.fv().into_iter().find(|b| !seen.contains(b)) {
                return Err(format!("variable {b} not in scope"));
            }
        }
        if let Form::WfShape(eqs) = &self.form {
            if let Some(x) = eqs.names().into_iter().find(|x| !psi.contains(x)) {
                return Err(format!("dimension {x} not in context"));
            }
        }
        Ok(())
    }

    /// Componentwise: `Ψ` and `Ξ` as sets, `Γ` in order, terms up to renaming
    /// of bound names.
    fn alpha_eq(&self, other: &Judgment) -> bool {
        self.ctx.psi == other.ctx.psi
            && self.ctx.xi.as_set() == other.ctx.xi.as_set()
            && self.ctx.gamma.len() == other.ctx.gamma.len()
            && self.ctx.gamma.iter().zip(&other.ctx.gamma).all(|((a, t), (b, u))| a == b && alpha_eq(t, u))
            && self.form.alpha_eq(&other.form)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expansion {
    /// No substitution satisfies the restriction.
    Vacuous,
    Plain(Vec<Judgment>),
}

/// Left-to-right or right-to-left processing of the restriction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Forward,
    Backward,
}

/// Removes the restriction of a judgment.
///
/// `ε=ε` is dropped, `ε=ε̄` makes the judgment vacuous, and `x=r` substitutes
/// `r` for `x` in the rest and removes `x` from `Ψ`. For `x=y` the larger name
/// is eliminated, so every order of processing reaches the same judgment.
pub fn expand_restriction(j: &Judgment) -> Result<Expansion, String> {
    expand_in_order(j, Order::Forward)
}

pub fn expand_in_order(j: &Judgment, order: Order) -> Result<Expansion, String> {
    if let Some(x) = j.ctx.xi.names().into_iter().find(|x| !j.ctx.psi.contains(x)) {
        return Err(format!("restriction mentions {x}, which is not in context"));
    }
    let mut cur = j.clone();
    loop {
        let pick = match order {
            Order::Forward => cur.ctx.xi.0.first().cloned(),
            Order::Backward => cur.ctx.xi.0.last().cloned(),
        };
        let Some(eq) = pick else { return Ok(Expansion::Plain(vec![cur])) };
        match order {
            Order::Forward => cur.ctx.xi.0.remove(0),
            Order::Backward => cur.ctx.xi.0.pop().unwrap(),
        };
        let (x, r) = match (&eq.lhs, &eq.rhs) {
            (l, r) if l == r => continue,
            (Dim::Name(x), Dim::Name(y)) => {
                if x > y {
                    (x.clone(), eq.rhs.clone())
                } else {
                    (y.clone(), eq.lhs.clone())
                }
            }
            (Dim::Name(x), r) | (r, Dim::Name(x)) => (x.clone(), r.clone()),
            _ => return Ok(Expansion::Vacuous),
        };
        cur = cur.dsubst(&r, &x);
        cur.ctx.psi = cur.ctx.psi.without(&x);
    }
}

/// Equality of judgments after both restrictions are removed.
pub fn same_judgment(a: &Judgment, b: &Judgment) -> Result<bool, String> {
    Ok(match (expand_restriction(a)?, expand_restriction(b)?) {
        (Expansion::Vacuous, Expansion::Vacuous) => true,
        (Expansion::Plain(x), Expansion::Plain(y)) => {
            x.len() == y.len() && x.iter().zip(&y).all(|(p, q)| p.alpha_eq(q))
        }
        _ => false,
    })
}

fn kind_str(k: Kind) -> &'static str {
    k.as_str()
}

pub fn parse_kind(v: &Value) -> Result<Kind, String> {
    match v.as_str() {
        Some("pre") => Ok(Kind::Pre),
        Some("kan") | Some("Kan") => Ok(Kind::Kan),
        _ => Err(format!("expected \"pre\" or \"kan\", got {v}")),
    }
}

pub fn eqs_to_json(eqs: &EquationList) -> Value {
    Value::Array(eqs.iter().map(|e| Value::String(e.to_string())).collect())
}

pub fn eqs_from_json(v: &Value) -> Result<EquationList, String> {
    let arr = v.as_array().ok_or("equation list must be an array")?;
    arr.iter()
        .map(|e| {
            let s = e.as_str().ok_or("equation must be a string like \"x=0\"")?;
            s.parse::<Equation>().map_err(|e| e.to_string())
        })
        .collect()
}

pub fn ctx_from_json(v: &Value) -> Result<Ctx, String> {
    let psi = match v.get("psi") {
        None => DimCtx::new(),
        Some(p) => {
            let arr = p.as_array().ok_or("psi must be an array of names")?;
            let names = arr
                .iter()
                .map(|n| n.as_str().map(Name::new).ok_or_else(|| format!("bad dimension name {n}")))
                .collect::<Result<Vec<_>, _>>()?;
            DimCtx::from_names(names).map_err(|e| e.to_string())?
        }
    };
    let xi = match v.get("xi") {
        None => EquationList::default(),
        Some(x) => eqs_from_json(x)?,
    };
    let mut gamma = Vec::new();
    if let Some(g) = v.get("gamma") {
        for h in g.as_array().ok_or("gamma must be an array")? {
            let a = h.get("var").and_then(Value::as_str).ok_or("hypothesis needs \"var\"")?;
            let ty = term_from_json(h.get("type").ok_or("hypothesis needs \"type\"")?)?;
            gamma.push((Name::new(a), ty));
        }
    }
    Ok(Ctx { psi, xi, gamma })
}

pub fn ctx_to_json(c: &Ctx) -> serde_json::Map<String, Value> {
    let mut o = serde_json::Map::new();
    o.insert("psi".into(), json!(c.psi.names().map(|n| n.as_str()).collect::<Vec<_>>()));
    o.insert("xi".into(), eqs_to_json(&c.xi));
    o.insert(
        "gamma".into(),
        Value::Array(c.gamma.iter().map(|(a, t)| json!({"var": a.as_str(), "type": term_to_json(t)})).collect()),
    );
    o
}

impl Judgment {
    pub fn to_json(&self) -> Value {
        let mut o = ctx_to_json(&self.ctx);
        let form = match &self.form {
            Form::EqType(k, a, b) => json!({"kind": "eqtype", "kappa": kind_str(*k), "lhs": term_to_json(a), "rhs": term_to_json(b)}),
            Form::EqTm(m, n, a) => json!({"kind": "eqtm", "lhs": term_to_json(m), "rhs": term_to_json(n), "type": term_to_json(a)}),
            Form::WfShape(eqs) => json!({"kind": "wfshape", "eqs": eqs_to_json(eqs)}),
        };
        o.insert("form".into(), form);
        Value::Object(o)
    }

    pub fn from_json(v: &Value) -> Result<Judgment, String> {
        if !v.is_object() {
            return Err("judgment must be an object".into());
        }
        let ctx = ctx_from_json(v)?;
        let f = v.get("form").ok_or("judgment needs \"form\"")?;
        let term = |k: &str| term_from_json(f.get(k).ok_or_else(|| format!("form needs \"{k}\""))?);
        let form = match f.get("kind").and_then(Value::as_str) {
            Some("eqtype") => Form::EqType(parse_kind(f.get("kappa").unwrap_or(&Value::Null))?, term("lhs")?, term("rhs")?),
            Some("wftype") => {
                let a = term("type")?;
                Form::EqType(parse_kind(f.get("kappa").unwrap_or(&Value::Null))?, a.clone(), a)
            }
            Some("eqtm") => Form::EqTm(term("lhs")?, term("rhs")?, term("type")?),
            Some("oftype") => {
                let m = term("term")?;
                Form::EqTm(m.clone(), m, term("type")?)
            }
            Some("wfshape") => Form::WfShape(eqs_from_json(f.get("eqs").ok_or("wfshape needs \"eqs\"")?)?),
            k => return Err(format!("unknown judgment form {k:?}")),
        };
        Ok(Judgment { ctx, form })
    }
}

impl fmt::Display for Judgment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ctx.psi)?;
        if !self.ctx.xi.is_empty() {
            write!(f, " <{}>", self.ctx.xi)?;
        }
        write!(f, " |")?;
        for (i, (a, t)) in self.ctx.gamma.iter().enumerate() {
            write!(f, "{} {a} : {}", if i > 0 { "," } else { "" }, print(t))?;
        }
        match &self.form {
            Form::EqType(k, a, b) => write!(f, " - {} = {} type {}", print(a), print(b), k.as_str()),
            Form::EqTm(m, n, a) => write!(f, " - {} = {} in {}", print(m), print(n), print(a)),
            Form::WfShape(eqs) => write!(f, " - wfshape [{eqs}]"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn j(psi: &[&str], xi: &[&str], m: &str, a: &str) -> Judgment {
        let ctx = Ctx {
            psi: DimCtx::from_names(psi.iter().map(|s| Name::new(s))).unwrap(),
            xi: xi.iter().map(|e| e.parse().unwrap()).collect(),
            gamma: vec![],
        };
        ctx.of(parse(m).unwrap(), parse(a).unwrap())
    }

    #[test]
    fn expansion_cases() {
        assert_eq!(expand_restriction(&j(&[], &["0=1"], "true", "bool")).unwrap(), Expansion::Vacuous);
        let plain = j(&["x"], &[], "loop x", "S1");
        assert_eq!(expand_restriction(&plain).unwrap(), Expansion::Plain(vec![plain.clone()]));
        assert_eq!(
            expand_restriction(&j(&["x"], &["x=0"], "loop x", "S1")).unwrap(),
            Expansion::Plain(vec![j(&[], &[], "loop 0", "S1")])
        );
        assert_eq!(
            expand_restriction(&j(&["x"], &["1=1", "x=x"], "loop x", "S1")).unwrap(),
            Expansion::Plain(vec![j(&["x"], &[], "loop x", "S1")])
        );
        assert_eq!(expand_restriction(&j(&["x"], &["x=0", "x=1"], "loop x", "S1")).unwrap(), Expansion::Vacuous);
        assert!(expand_restriction(&j(&[], &["x=0"], "base", "S1")).is_err());
    }

    #[test]
    fn orders_agree() {
        let a = j(&["x", "y", "z"], &["y=x", "z=y", "x=z"], "pair (loop x) (pair (loop y) (loop z))", "S1");
        let f = expand_in_order(&a, Order::Forward).unwrap();
        let b = expand_in_order(&a, Order::Backward).unwrap();
        assert_eq!(f, b);
        assert_eq!(f, Expansion::Plain(vec![j(&["x"], &[], "pair (loop x) (pair (loop x) (loop x))", "S1")]));
    }

    #[test]
    fn json_roundtrip_and_scope() {
        let a = j(&["x"], &["x=1"], "loop x", "S1");
        assert_eq!(Judgment::from_json(&a.to_json()).unwrap(), a);
        assert!(a.well_scoped().is_ok());
        assert!(j(&[], &[], "loop x", "S1").well_scoped().is_err());
        assert!(j(&[], &[], "a", "bool").well_scoped().is_err());
        let v = json!({"psi": [], "form": {"kind": "oftype", "term": "true", "type": "bool"}});
        assert_eq!(Judgment::from_json(&v).unwrap(), j(&[], &[], "true", "bool"));
    }
}
