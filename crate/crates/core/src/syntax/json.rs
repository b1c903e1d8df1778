//! JSON AST: `{"tag", "dims", "args"}` where each argument is either a term
//! or `{"bind": [names], "body": term}`. Variables are `{"tag": "var",
//! "name"}` and universes `{"tag": "U", "kind", "level"}`. Decoding also
//! accepts a string holding concrete syntax in place of any term.

use serde_json::{json, Map, Value};

use super::node::{BSort, Binder, Node, Op, Scope};
use super::{parse, Kind, Term};
use crate::cube::Dim;
use crate::name::Name;

pub fn term_to_json(m: &Term) -> Value {
    let node = m.to_node();
    match &node.op {
        Op::Var(n) => json!({"tag": "var", "name": n.as_str()}),
        Op::Univ(kind, level) => json!({"tag": "U", "kind": kind.as_str(), "level": level}),
        op => {
            let mut obj = Map::new();
            obj.insert("tag".into(), json!(op.tag()));
            if !node.dims.is_empty() {
                obj.insert("dims".into(), json!(node.dims.iter().map(|d| d.to_string()).collect::<Vec<_>>()));
            }
            if !node.args.is_empty() {
                let args = node
                    .args
                    .iter()
                    .map(|s| {
                        if s.binders.is_empty() {
                            term_to_json(&s.body)
                        } else {
                            let names: Vec<&str> = s.binders.iter().map(|b| b.name().as_str()).collect();
                            json!({"bind": names, "body": term_to_json(&s.body)})
                        }
                    })
                    .collect();
                obj.insert("args".into(), Value::Array(args));
            }
            Value::Object(obj)
        }
    }
}

fn fixed_op(tag: &str) -> Option<Op> {
    Some(match tag {
        "pi" => Op::Pi,
        "sg" => Op::Sigma,
        "path" => Op::Path,
        "eq" => Op::Eq,
        "void" => Op::Void,
        "nat" => Op::Nat,
        "bool" => Op::Bool,
        "wbool" => Op::WBool,
        "S1" => Op::Circle,
        "V" => Op::V,
        "Vin" => Op::VIn,
        "Vproj" => Op::VProj,
        "lam" => Op::Lam,
        "app" => Op::App,
        "pair" => Op::Pair,
        "fst" => Op::Fst,
        "snd" => Op::Snd,
        "dlam" => Op::DLam,
        "dapp" => Op::DApp,
        "*" => Op::Star,
        "zero" => Op::Zero,
        "suc" => Op::Suc,
        "natrec" => Op::NatRec,
        "true" => Op::True,
        "false" => Op::False,
        "if" => Op::If,
        "base" => Op::Base,
        "loop" => Op::Loop,
        "S1elim" => Op::CircElim,
        "coe" => Op::Coe,
        _ => return None,
    })
}

/// Operators with a variable number of tubes; `head` counts the leading
/// non-tube arguments.
fn comp_op(tag: &str, nargs: usize) -> Option<Result<Op, String>> {
    let (head, mk): (usize, fn(usize) -> Op) = match tag {
        "hcom" => (2, Op::Hcom),
        "com" => (2, Op::Com),
        "ghcom" => (2, Op::Ghcom),
        "gcom" => (2, Op::Gcom),
        "fcom" => (1, Op::Fcom),
        "box" => (1, Op::Box),
        "cap" => (1, Op::Cap),
        _ => return None,
    };
    Some(if nargs < head {
        Err(format!("`{tag}` needs at least {head} arguments"))
    } else {
        Ok(mk(nargs - head))
    })
}

pub fn term_from_json(v: &Value) -> Result<Term, String> {
    if let Value::String(s) = v {
        return parse(s).map_err(|e| format!("in `{s}`: {e}"));
    }
    let obj = v.as_object().ok_or_else(|| format!("expected a term, found {v}"))?;
    let tag = obj.get("tag").and_then(Value::as_str).ok_or("term object without a string `tag`")?;
    match tag {
        "var" => {
            let name = obj.get("name").and_then(Value::as_str).ok_or("`var` without a string `name`")?;
            return Ok(Term::Var(Name::new(name)));
        }
        "U" => {
            let kind = match obj.get("kind").and_then(Value::as_str) {
                Some("pre") => Kind::Pre,
                Some("kan") => Kind::Kan,
                _ => return Err("`U` needs `kind` of \"pre\" or \"kan\"".into()),
            };
            let level = obj.get("level").and_then(Value::as_u64).ok_or("`U` needs a numeric `level`")?;
            let level = u32::try_from(level).map_err(|_| "universe level too large".to_string())?;
            return Ok(Term::Univ { kind, level });
        }
        _ => {}
    }
    let empty = Vec::new();
    let raw_args = match obj.get("args") {
        None => &empty,
        Some(Value::Array(a)) => a,
        Some(_) => return Err(format!("`{tag}`: `args` must be an array")),
    };
    let op = match fixed_op(tag) {
        Some(op) => op,
        None => comp_op(tag, raw_args.len()).ok_or_else(|| format!("unknown tag `{tag}`"))??,
    };
    let dims = match obj.get("dims") {
        None => Vec::new(),
        Some(Value::Array(ds)) => ds
            .iter()
            .map(|d| match d {
                Value::String(s) => s.parse::<Dim>().map_err(|e| e.to_string()),
                Value::Number(n) if n.as_u64() == Some(0) => Ok(Dim::Zero),
                Value::Number(n) if n.as_u64() == Some(1) => Ok(Dim::One),
                _ => Err(format!("`{tag}`: bad dimension {d}")),
            })
            .collect::<Result<_, _>>()?,
        Some(_) => return Err(format!("`{tag}`: `dims` must be an array")),
    };
    let (_, sorts) = op.arity();
    if sorts.len() != raw_args.len() {
        return Err(format!("`{tag}` expects {} arguments, got {}", sorts.len(), raw_args.len()));
    }
    let mut args = Vec::with_capacity(raw_args.len());
    for (a, sorts) in raw_args.iter().zip(&sorts) {
        let scope = match a.as_object().and_then(|o| o.get("bind").map(|b| (b, o.get("body")))) {
            Some((bind, body)) => {
                let names = bind.as_array().ok_or_else(|| format!("`{tag}`: `bind` must be an array"))?;
                if names.len() != sorts.len() {
                    return Err(format!("`{tag}`: expected {} binders, got {}", sorts.len(), names.len()));
                }
                let binders = names
                    .iter()
                    .zip(sorts)
                    .map(|(n, s)| {
                        let n = Name::new(n.as_str().ok_or_else(|| format!("`{tag}`: binder names are strings"))?);
                        Ok(match s {
                            BSort::D => Binder::Dim(n),
                            BSort::T => Binder::Term(n),
                        })
                    })
                    .collect::<Result<_, String>>()?;
                let body = body.ok_or_else(|| format!("`{tag}`: binder without `body`"))?;
                Scope { binders, body: term_from_json(body)? }
            }
            None => Scope::closed(term_from_json(a)?),
        };
        args.push(scope);
    }
    Node { op, dims, args }.build().map_err(|e| e.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        for s in [
            "lam a. a",
            "U kan 3",
            "hcom bool 0 ~> x true [x=0 y. loop y] [x=1 z. base]",
            "natrec zero zero (n a. pair n a)",
            "box 0 ~> x true [x=1 false]",
            "coe (x. V x A B E) 0 ~> 1 M",
        ] {
            let m = parse(s).unwrap();
            assert_eq!(term_from_json(&term_to_json(&m)).unwrap(), m, "{s}");
        }
    }

    #[test]
    fn shape() {
        let v = term_to_json(&parse("dapp (dlam x. loop x) 0").unwrap());
        assert_eq!(
            v,
            json!({"tag": "dapp", "dims": ["0"], "args": [
                {"tag": "dlam", "args": [{"bind": ["x"], "body": {"tag": "loop", "dims": ["x"]}}]}
            ]})
        );
    }

    #[test]
    fn strings_and_errors() {
        let v = json!({"tag": "app", "args": ["lam a. a", {"tag": "zero"}]});
        assert_eq!(term_from_json(&v).unwrap(), parse("app (lam a. a) zero").unwrap());
        assert!(term_from_json(&json!({"tag": "app", "args": ["zero"]})).is_err());
        assert!(term_from_json(&json!({"tag": "lam", "args": [{"bind": ["a", "b"], "body": "a"}]})).is_err());
        assert!(term_from_json(&json!({"tag": "nope"})).is_err());
    }
}
