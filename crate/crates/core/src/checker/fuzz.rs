//! Single-site mutations of derivations.
//!
//! A derivation is first put in canonical JSON form (terms as trees), then
//! every dimension constant, variable occurrence and rule id is mutated in
//! turn. An accepted mutant is neutral when every node still has the same
//! rule and, after removing restrictions, the same conclusion as the
//! original. A judgment under an unsatisfiable restriction holds whatever rule
//! is cited for it, so an accepted mutant that differs only inside such nodes
//! is counted as vacuous. Any other accepted mutant is a false acceptance.

use std::collections::BTreeSet;

use serde_json::Value;

use super::{check_derivation, expand_restriction, same_judgment, schema, Derivation, Expansion, Inst, Report, CATALOG};
use crate::cube::{is_ident, Equation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MutationKind {
    Dim,
    Var,
    Rule,
}

#[derive(Clone, Debug)]
pub struct Mutant {
    pub kind: MutationKind,
    /// JSON pointer to the mutated value.
    pub site: String,
    pub tree: Value,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Rejected,
    Neutral,
    Vacuous,
    FalseAcceptance,
}

#[derive(Clone, Debug, Default)]
pub struct Summary {
    pub total: usize,
    pub rejected: usize,
    pub neutral: usize,
    pub vacuous: usize,
    pub false_acceptances: Vec<String>,
}

impl Summary {
    pub fn merge(&mut self, o: Summary) {
        self.total += o.total;
        self.rejected += o.rejected;
        self.neutral += o.neutral;
        self.vacuous += o.vacuous;
        self.false_acceptances.extend(o.false_acceptances);
    }
}

/// Rewrites every instantiation into tree form.
pub fn canonical(d: &Derivation) -> Result<Derivation, String> {
    let inst = match schema(&d.rule) {
        Some(s) => Inst::from_json(s, &d.inst)?.to_json(),
        None => d.inst.clone(),
    };
    Ok(Derivation {
        rule: d.rule.clone(),
        conclusion: d.conclusion.clone(),
        inst,
        children: d.children.iter().map(canonical).collect::<Result<_, _>>()?,
    })
}

const SKIP: &[&str] = &["kind", "kappa", "tag", "level"];

fn names(v: &Value, out: &mut BTreeSet<String>) {
    match v {
        Value::String(s) if is_ident(s) => {
            out.insert(s.clone());
        }
        Value::Array(a) => a.iter().for_each(|x| names(x, out)),
        Value::Object(o) => {
            for (k, x) in o {
                if !SKIP.contains(&k.as_str()) && k != "rule" {
                    names(x, out);
                }
            }
        }
        _ => {}
    }
}

fn rename(n: &str, pool: &[String]) -> String {
    let others: Vec<_> = pool.iter().filter(|p| p.as_str() != n).collect();
    match others.iter().find(|p| p.as_str() > n).or(others.first()) {
        Some(p) => p.to_string(),
        None => format!("{n}'"),
    }
}

fn sibling(rule: &str) -> String {
    let ids: Vec<_> = CATALOG.iter().map(|s| s.id).collect();
    let para = rule.split('/').next().unwrap_or("");
    let same: Vec<_> = ids.iter().filter(|id| id.starts_with(&format!("{para}/")) && **id != rule).collect();
    let pick = same.first().map(|s| s.to_string());
    pick.unwrap_or_else(|| ids.iter().find(|id| **id != rule).unwrap().to_string())
}

fn flip(s: &str) -> Option<&'static str> {
    match s {
        "0" => Some("1"),
        "1" => Some("0"),
        _ => None,
    }
}

/// Alternatives for one string site.
fn string_mutants(s: &str, pool: &[String]) -> Vec<(MutationKind, String)> {
    if let Some(f) = flip(s) {
        return vec![(MutationKind::Dim, f.to_string())];
    }
    if is_ident(s) {
        return vec![(MutationKind::Var, rename(s, pool))];
    }
    if let Ok(e) = s.parse::<Equation>() {
        let (l, r) = (e.lhs.to_string(), e.rhs.to_string());
        let side = |x: &str| match flip(x) {
            Some(f) => (MutationKind::Dim, f.to_string()),
            None => (MutationKind::Var, rename(x, pool)),
        };
        let (kl, l2) = side(&l);
        let (kr, r2) = side(&r);
        return vec![(kl, format!("{l2}={r}")), (kr, format!("{l}={r2}"))];
    }
    vec![]
}

fn walk(v: &Value, key: Option<&str>, in_dims: bool, ptr: &str, pool: &[String], out: &mut Vec<(MutationKind, String, Value)>) {
    match v {
        Value::String(s) if key == Some("rule") => out.push((MutationKind::Rule, ptr.to_string(), Value::String(sibling(s)))),
        Value::String(s) => {
            for (k, m) in string_mutants(s, pool) {
                out.push((k, ptr.to_string(), Value::String(m)));
            }
        }
        Value::Number(n) if in_dims && n.as_u64().is_some_and(|x| x <= 1) => {
            let f = 1 - n.as_u64().unwrap();
            out.push((MutationKind::Dim, ptr.to_string(), Value::from(f)));
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                walk(x, None, key == Some("dims") || in_dims, &format!("{ptr}/{i}"), pool, out);
            }
        }
        Value::Object(o) => {
            for (k, x) in o {
                if SKIP.contains(&k.as_str()) {
                    continue;
                }
                let esc = k.replace('~', "~0").replace('/', "~1");
                walk(x, Some(k), false, &format!("{ptr}/{esc}"), pool, out);
            }
        }
        _ => {}
    }
}

/// All single-site mutants of a canonical derivation.
pub fn mutants(d: &Derivation) -> Vec<Mutant> {
    let tree = d.to_json();
    let mut pool = BTreeSet::new();
    names(&tree, &mut pool);
    let pool: Vec<_> = pool.into_iter().collect();
    let mut sites = Vec::new();
    walk(&tree, None, false, "", &pool, &mut sites);
    sites
        .into_iter()
        .map(|(kind, site, new)| {
            let mut t = tree.clone();
            *t.pointer_mut(&site).expect("site exists") = new;
            Mutant { kind, site, tree: t }
        })
        .collect()
}

fn equivalent(a: &Derivation, b: &Derivation, modulo_vacuous: bool) -> bool {
    let same = same_judgment(&a.conclusion, &b.conclusion).unwrap_or(false);
    if modulo_vacuous && matches!(expand_restriction(&a.conclusion), Ok(Expansion::Vacuous)) {
        return same;
    }
    a.rule == b.rule
        && same
        && a.children.len() == b.children.len()
        && a.children.iter().zip(&b.children).all(|(x, y)| equivalent(x, y, modulo_vacuous))
}

pub fn classify(original: &Derivation, m: &Mutant) -> Verdict {
    let Ok(d) = Derivation::from_json(&m.tree) else { return Verdict::Rejected };
    match check_derivation(&d) {
        Report::Err { .. } => Verdict::Rejected,
        Report::Ok if equivalent(original, &d, false) => Verdict::Neutral,
        Report::Ok if equivalent(original, &d, true) => Verdict::Vacuous,
        Report::Ok => Verdict::FalseAcceptance,
    }
}

/// Mutates an accepted derivation at every site and classifies the results.
pub fn fuzz(d: &Derivation) -> Result<Summary, String> {
    let d = canonical(d)?;
    let mut s = Summary::default();
    for m in mutants(&d) {
        s.total += 1;
        match classify(&d, &m) {
            Verdict::Rejected => s.rejected += 1,
            Verdict::Neutral => s.neutral += 1,
            Verdict::Vacuous => s.vacuous += 1,
            Verdict::FalseAcceptance => s.false_acceptances.push(format!("{:?} at {}", m.kind, m.site)),
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renaming_and_flipping() {
        let pool = vec!["a".to_string(), "b".to_string()];
        assert_eq!(rename("a", &pool), "b");
        assert_eq!(rename("b", &pool), "a");
        assert_eq!(rename("c", &[]), "c'");
        assert_eq!(string_mutants("x=0", &["x".into(), "y".into()]).len(), 2);
        assert_eq!(string_mutants("0", &[])[0].1, "1");
        assert_ne!(sibling("bool/beta-true"), "bool/beta-true");
        assert!(sibling("bool/beta-true").starts_with("bool/"));
    }
}
