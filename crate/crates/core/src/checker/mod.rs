//! Derivation checking for the rule compendium.
//!
//! A derivation is an explicit tree: every node names a rule, gives the
//! conclusion it claims and an instantiation of the rule's metavariables.
//! The checker never searches or unifies.

pub mod fuzz;
mod judgment;
mod rules;

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::cube::{valid, Dim, DimCtx, DimSubst, EquationList};
use crate::name::Name;
use crate::opsem::{step, StepOutcome};
use crate::syntax::{alpha_eq, print, term_from_json, term_to_json, Kind, Term};

pub use judgment::{
    ctx_from_json, ctx_to_json, expand_in_order, expand_restriction, same_judgment, Ctx, Expansion, Form, Judgment, Order,
};
pub use rules::{arr, equiv, Schema, CATALOG};

/// Sorts of schema metavariables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sort {
    Term,
    Terms,
    Dim,
    DimName,
    Var,
    Kappa,
    Level,
    Index,
    Eqs,
    Judgment,
    Subst,
}

#[derive(Clone, Debug, PartialEq)]
pub enum MetaValue {
    Term(Term),
    Terms(Vec<Term>),
    Dim(Dim),
    Name(Name),
    Kind(Kind),
    Nat(u64),
    Eqs(EquationList),
    Judgment(Box<Judgment>),
    Subst(DimSubst),
}

/// A rule instantiation: one value per metavariable.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Inst(pub BTreeMap<String, MetaValue>);

/// Side conditions are decided directly, not derived.
#[derive(Clone, Debug, PartialEq)]
pub enum Side {
    /// Syntactic equality of dimensions.
    DimEq(Dim, Dim),
    Valid(EquationList),
    Le(u64, u64),
    Lt(u64, u64),
    /// `M` steps to `M'` by a cubically-stable step.
    StableStep(Term, Term),
    FreshDim(Name, DimCtx),
    FreshVar(Name, Vec<Name>),
    NotFree(Name, Term),
    InDims(Dim, DimCtx),
    Unrestricted(EquationList),
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub conclusion: Judgment,
    pub premises: Vec<Judgment>,
    pub side: Vec<Side>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Derivation {
    pub rule: String,
    pub conclusion: Judgment,
    pub inst: Value,
    pub children: Vec<Derivation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Report {
    Ok,
    Err { path: Vec<usize>, reason: String },
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CheckOptions {
    /// Accept nodes with rule `assume` as leaves.
    pub assumptions: bool,
}

/// Accessors used by the rule builders. The instantiation has already been
/// sort-checked against the schema, so lookups cannot fail.
pub(crate) struct Cx<'a> {
    inst: &'a Inst,
    pub ctx: Ctx,
}

impl Cx<'_> {
    fn get(&self, k: &str) -> &MetaValue {
        self.inst.0.get(k).unwrap_or_else(|| panic!("metavariable {k} not declared"))
    }

    pub fn t(&self, k: &str) -> Term {
        match self.get(k) {
            MetaValue::Term(t) => t.clone(),
            v => panic!("{k} is {v:?}"),
        }
    }

    pub fn ts(&self, k: &str) -> Vec<Term> {
        match self.get(k) {
            MetaValue::Terms(t) => t.clone(),
            v => panic!("{k} is {v:?}"),
        }
    }

    pub fn d(&self, k: &str) -> Dim {
        match self.get(k) {
            MetaValue::Dim(d) => d.clone(),
            v => panic!("{k} is {v:?}"),
        }
    }

    pub fn n(&self, k: &str) -> Name {
        match self.get(k) {
            MetaValue::Name(n) => n.clone(),
            v => panic!("{k} is {v:?}"),
        }
    }

    pub fn k(&self) -> Kind {
        match self.get("k") {
            MetaValue::Kind(k) => *k,
            v => panic!("k is {v:?}"),
        }
    }

    pub fn nat(&self, k: &str) -> u64 {
        match self.get(k) {
            MetaValue::Nat(n) => *n,
            v => panic!("{k} is {v:?}"),
        }
    }

    pub fn eqs(&self, k: &str) -> EquationList {
        match self.get(k) {
            MetaValue::Eqs(e) => e.clone(),
            v => panic!("{k} is {v:?}"),
        }
    }

    pub fn j(&self, k: &str) -> Judgment {
        match self.get(k) {
            MetaValue::Judgment(j) => (**j).clone(),
            v => panic!("{k} is {v:?}"),
        }
    }

    pub fn subst(&self, k: &str) -> DimSubst {
        match self.get(k) {
            MetaValue::Subst(s) => s.clone(),
            v => panic!("{k} is {v:?}"),
        }
    }
}

pub fn rule_catalog() -> &'static [Schema] {
    CATALOG
}

pub fn schema(id: &str) -> Option<&'static Schema> {
    CATALOG.iter().find(|s| s.id == id)
}

fn name_of(v: &Value, what: &str) -> Result<Name, String> {
    match v.as_str() {
        Some(s) if crate::cube::is_ident(s) => Ok(Name::new(s)),
        _ => Err(format!("{what} must be an identifier, got {v}")),
    }
}

fn dim_of(v: &Value) -> Result<Dim, String> {
    match v {
        Value::Number(n) if n.as_u64() == Some(0) => Ok(Dim::Zero),
        Value::Number(n) if n.as_u64() == Some(1) => Ok(Dim::One),
        Value::String(s) => s.parse().map_err(|e: crate::cube::CubeError| e.to_string()),
        _ => Err(format!("expected a dimension, got {v}")),
    }
}

fn nat_of(v: &Value) -> Result<u64, String> {
    v.as_u64().ok_or_else(|| format!("expected a natural number, got {v}"))
}

fn subst_of(v: &Value) -> Result<DimSubst, String> {
    let names = |k: &str| -> Result<DimCtx, String> {
        let arr = v.get(k).and_then(Value::as_array).ok_or_else(|| format!("substitution needs \"{k}\""))?;
        let ns = arr.iter().map(|n| name_of(n, "dimension")).collect::<Result<Vec<_>, _>>()?;
        DimCtx::from_names(ns).map_err(|e| e.to_string())
    };
    let mut map = BTreeMap::new();
    if let Some(m) = v.get("map") {
        for (k, d) in m.as_object().ok_or("substitution map must be an object")? {
            map.insert(Name::new(k), dim_of(d)?);
        }
    }
    DimSubst::new(names("source")?, names("target")?, map).map_err(|e| e.to_string())
}

impl MetaValue {
    pub fn parse(sort: Sort, v: &Value) -> Result<MetaValue, String> {
        Ok(match sort {
            Sort::Term => MetaValue::Term(term_from_json(v)?),
            Sort::Terms => MetaValue::Terms(
                v.as_array().ok_or("expected a list of terms")?.iter().map(term_from_json).collect::<Result<_, _>>()?,
            ),
            Sort::Dim => MetaValue::Dim(dim_of(v)?),
            Sort::DimName => MetaValue::Name(name_of(v, "dimension name")?),
            Sort::Var => MetaValue::Name(name_of(v, "variable")?),
            Sort::Kappa => MetaValue::Kind(judgment::parse_kind(v)?),
            Sort::Level | Sort::Index => MetaValue::Nat(nat_of(v)?),
            Sort::Eqs => MetaValue::Eqs(judgment::eqs_from_json(v)?),
            Sort::Judgment => MetaValue::Judgment(Box::new(Judgment::from_json(v)?)),
            Sort::Subst => MetaValue::Subst(subst_of(v)?),
        })
    }

    pub fn to_json(&self) -> Value {
        match self {
            MetaValue::Term(t) => term_to_json(t),
            MetaValue::Terms(ts) => Value::Array(ts.iter().map(term_to_json).collect()),
            MetaValue::Dim(d) => Value::String(d.to_string()),
            MetaValue::Name(n) => Value::String(n.to_string()),
            MetaValue::Kind(k) => Value::String(k.as_str().into()),
            MetaValue::Nat(n) => json!(n),
            MetaValue::Eqs(e) => judgment::eqs_to_json(e),
            MetaValue::Judgment(j) => j.to_json(),
            MetaValue::Subst(s) => json!({
                "source": s.source().names().map(|n| n.as_str()).collect::<Vec<_>>(),
                "target": s.target().names().map(|n| n.as_str()).collect::<Vec<_>>(),
                "map": s.map().iter().map(|(k, d)| (k.to_string(), Value::String(d.to_string()))).collect::<serde_json::Map<_, _>>(),
            }),
        }
    }
}

impl Inst {
    /// Reads an instantiation, checking it against the schema's metavariables.
    pub fn from_json(schema: &Schema, v: &Value) -> Result<Inst, String> {
        let empty = serde_json::Map::new();
        let obj = match v {
            Value::Null => &empty,
            Value::Object(o) => o,
            _ => return Err("instantiation must be an object".into()),
        };
        if let Some(k) = obj.keys().find(|k| !schema.metas.iter().any(|(m, _)| m == k)) {
            return Err(format!("unknown metavariable {k} for {}", schema.id));
        }
        let mut out = BTreeMap::new();
        for (m, sort) in schema.metas {
            let v = obj.get(*m).ok_or_else(|| format!("missing metavariable {m}"))?;
            let val = MetaValue::parse(*sort, v).map_err(|e| format!("metavariable {m}: {e}"))?;
            out.insert(m.to_string(), val);
        }
        Ok(Inst(out))
    }

    pub fn to_json(&self) -> Value {
        Value::Object(self.0.iter().map(|(k, v)| (k.clone(), v.to_json())).collect())
    }

    pub fn set(mut self, k: &str, v: MetaValue) -> Inst {
        self.0.insert(k.to_string(), v);
        self
    }
}

fn sort_matches(sort: Sort, v: &MetaValue) -> bool {
    matches!(
        (sort, v),
        (Sort::Term, MetaValue::Term(_))
            | (Sort::Terms, MetaValue::Terms(_))
            | (Sort::Dim, MetaValue::Dim(_))
            | (Sort::DimName | Sort::Var, MetaValue::Name(_))
            | (Sort::Kappa, MetaValue::Kind(_))
            | (Sort::Level | Sort::Index, MetaValue::Nat(_))
            | (Sort::Eqs, MetaValue::Eqs(_))
            | (Sort::Judgment, MetaValue::Judgment(_))
            | (Sort::Subst, MetaValue::Subst(_))
    )
}

/// Instantiates a rule in the ambient context `ctx`.
pub fn instantiate_rule(id: &str, inst: &Inst, ctx: &Ctx) -> Result<Instance, String> {
    let schema = schema(id).ok_or_else(|| format!("unknown rule {id}"))?;
    for (m, sort) in schema.metas {
        match inst.0.get(*m) {
            None => return Err(format!("missing metavariable {m}")),
            Some(v) if !sort_matches(*sort, v) => return Err(format!("metavariable {m} should have sort {sort:?}")),
            _ => {}
        }
    }
    if let Some(k) = inst.0.keys().find(|k| !schema.metas.iter().any(|(m, _)| m == k)) {
        return Err(format!("unknown metavariable {k} for {id}"));
    }
    (schema.build)(&Cx { inst, ctx: ctx.clone() })
}

impl Side {
    pub fn discharge(&self) -> Result<(), String> {
        let holds = match self {
            Side::DimEq(a, b) => a == b,
            Side::Valid(eqs) => valid(eqs),
            Side::Le(i, j) => i <= j,
            Side::Lt(i, j) => i < j,
            Side::StableStep(m, m2) => {
                matches!(step(m), StepOutcome::StepsTo { next, stable: true, .. } if alpha_eq(&next, m2))
            }
            Side::FreshDim(x, psi) => !psi.contains(x),
            Side::FreshVar(a, vars) => !vars.contains(a),
            Side::NotFree(a, m) => !m.fv().contains(a),
            Side::InDims(r, psi) => psi.scopes(r),
            Side::Unrestricted(xi) => xi.is_empty(),
        };
        if holds {
            Ok(())
        } else {
            Err(format!("side condition fails: {self}"))
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::DimEq(a, b) => write!(f, "{a} = {b}"),
            Side::Valid(eqs) => write!(f, "[{eqs}] is valid"),
            Side::Le(i, j) => write!(f, "{i} <= {j}"),
            Side::Lt(i, j) => write!(f, "{i} < {j}"),
            Side::StableStep(m, m2) => write!(f, "{} steps stably to {}", print(m), print(m2)),
            Side::FreshDim(x, psi) => write!(f, "{x} fresh for {psi}"),
            Side::FreshVar(a, vars) => {
                let vs: Vec<_> = vars.iter().map(|v| v.as_str()).collect();
                write!(f, "{a} fresh for [{}]", vs.join(", "))
            }
            Side::NotFree(a, m) => write!(f, "{a} not free in {}", print(m)),
            Side::InDims(r, psi) => write!(f, "{r} in {psi}"),
            Side::Unrestricted(xi) => write!(f, "restriction [{xi}] is empty"),
        }
    }
}

impl Derivation {
    pub fn new(rule: &str, conclusion: Judgment, inst: Value, children: Vec<Derivation>) -> Derivation {
        Derivation { rule: rule.to_string(), conclusion, inst, children }
    }

    /// A node whose conclusion is computed from the rule.
    pub fn by(rule: &str, ctx: &Ctx, inst: Inst, children: Vec<Derivation>) -> Result<Derivation, String> {
        let i = instantiate_rule(rule, &inst, ctx)?;
        Ok(Derivation::new(rule, i.conclusion, inst.to_json(), children))
    }

    pub fn assume(j: Judgment) -> Derivation {
        Derivation::new("assume", j, Value::Null, vec![])
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(Derivation::size).sum::<usize>()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rule": self.rule,
            "conclusion": self.conclusion.to_json(),
            "inst": self.inst,
            "children": self.children.iter().map(Derivation::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Derivation, Report> {
        fn go(v: &Value, path: &mut Vec<usize>) -> Result<Derivation, Report> {
            let err = |path: &Vec<usize>, reason: String| Report::Err { path: path.clone(), reason };
            let rule = v.get("rule").and_then(Value::as_str).ok_or_else(|| err(path, "node needs a \"rule\" string".into()))?;
            let conclusion = Judgment::from_json(v.get("conclusion").unwrap_or(&Value::Null))
                .map_err(|e| err(path, format!("conclusion: {e}")))?;
            let inst = v.get("inst").cloned().unwrap_or(Value::Null);
            let mut children = Vec::new();
            if let Some(cs) = v.get("children") {
                let cs = cs.as_array().ok_or_else(|| err(path, "\"children\" must be an array".into()))?;
                for (k, c) in cs.iter().enumerate() {
                    path.push(k);
                    children.push(go(c, path)?);
                    path.pop();
                }
            }
            Ok(Derivation { rule: rule.to_string(), conclusion, inst, children })
        }
        go(v, &mut Vec::new())
    }
}

impl Report {
    pub fn is_ok(&self) -> bool {
        matches!(self, Report::Ok)
    }

    pub fn to_json(&self) -> Value {
        match self {
            Report::Ok => json!({"ok": true}),
            Report::Err { path, reason } => json!({"ok": false, "path": path, "reason": reason}),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Report::Ok => write!(f, "ok"),
            Report::Err { path, reason } => write!(f, "error at {path:?}: {reason}"),
        }
    }
}

pub fn check_derivation(d: &Derivation) -> Report {
    check_with(d, CheckOptions::default())
}

pub fn check_with(d: &Derivation, opts: CheckOptions) -> Report {
    let mut path = Vec::new();
    match check_node(d, opts, &mut path) {
        Ok(()) => Report::Ok,
        Err(reason) => Report::Err { path, reason },
    }
}

/// On error `path` is left pointing at the offending node.
fn check_node(d: &Derivation, opts: CheckOptions, path: &mut Vec<usize>) -> Result<(), String> {
    d.conclusion.well_scoped().map_err(|e| format!("ill-scoped conclusion: {e}"))?;
    if d.rule == "assume" {
        return if opts.assumptions && d.children.is_empty() {
            Ok(())
        } else {
            Err("assumptions are only accepted in leaf-oracle mode".into())
        };
    }
    let schema = schema(&d.rule).ok_or_else(|| format!("unknown rule {}", d.rule))?;
    let inst = Inst::from_json(schema, &d.inst)?;
    let inst = instantiate_rule(schema.id, &inst, &d.conclusion.ctx)?;
    if !same_judgment(&d.conclusion, &inst.conclusion)? {
        return Err(format!("conclusion does not match {}: expected {}", d.rule, inst.conclusion));
    }
    if d.children.len() != inst.premises.len() {
        return Err(format!("{} expects {} premises, found {}", d.rule, inst.premises.len(), d.children.len()));
    }
    for s in &inst.side {
        s.discharge()?;
    }
    for (k, (child, premise)) in d.children.iter().zip(&inst.premises).enumerate() {
        path.push(k);
        if !same_judgment(&child.conclusion, premise)? {
            return Err(format!("conclusion does not match premise {k} of {}: expected {premise}", d.rule));
        }
        check_node(child, opts, path)?;
        path.pop();
    }
    Ok(())
}

/// The catalog as a Markdown table.
pub fn catalog_table() -> String {
    let mut out = String::from("| rule | metavariables | premises | conclusion |\n|---|---|---|---|\n");
    for s in CATALOG {
        let metas: Vec<_> = s.metas.iter().map(|(m, sort)| format!("{m}: {sort:?}")).collect();
        out.push_str(&format!("| `{}` | {} | {} | {} |\n", s.id, metas.join(", "), s.premises, s.conclusion));
    }
    out
}

#[cfg(test)]
mod tests;
