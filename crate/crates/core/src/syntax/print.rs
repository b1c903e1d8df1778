use std::fmt::{self, Write};

use super::{BoxTube, Term, Tube};
use crate::cube::Dim;

/// Renders a term in the concrete syntax accepted by [`super::parse`].
pub fn print(m: &Term) -> String {
    let mut out = String::new();
    term(m, &mut out).expect("writing to a String");
    out
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print(self))
    }
}

fn is_atom(m: &Term) -> bool {
    matches!(
        m,
        Term::Var(_)
            | Term::Void
            | Term::Nat
            | Term::Bool
            | Term::WBool
            | Term::Circle
            | Term::Star
            | Term::Zero
            | Term::True
            | Term::False
            | Term::Base
    )
}

fn arg(m: &Term, out: &mut String) -> fmt::Result {
    if is_atom(m) {
        return term(m, out);
    }
    out.push('(');
    term(m, out)?;
    out.push(')');
    Ok(())
}

fn args(ms: &[&Term], out: &mut String) -> fmt::Result {
    for m in ms {
        out.push(' ');
        arg(m, out)?;
    }
    Ok(())
}

fn span(r: &Dim, s: &Dim, out: &mut String) -> fmt::Result {
    write!(out, " {r} ~> {s}")
}

fn tubes(ts: &[Tube], out: &mut String) -> fmt::Result {
    for t in ts {
        write!(out, " [{} {}. ", t.eq, t.var)?;
        term(&t.body, out)?;
        out.push(']');
    }
    Ok(())
}

fn box_tubes(ts: &[BoxTube], out: &mut String) -> fmt::Result {
    for t in ts {
        write!(out, " [{} ", t.eq)?;
        term(&t.body, out)?;
        out.push(']');
    }
    Ok(())
}

fn scoped(x: &str, body: &Term, out: &mut String) -> fmt::Result {
    write!(out, " ({x}. ")?;
    term(body, out)?;
    out.push(')');
    Ok(())
}

fn term(m: &Term, out: &mut String) -> fmt::Result {
    match m {
        Term::Var(n) => write!(out, "{n}"),
        Term::Void => write!(out, "void"),
        Term::Nat => write!(out, "nat"),
        Term::Bool => write!(out, "bool"),
        Term::WBool => write!(out, "wbool"),
        Term::Circle => write!(out, "S1"),
        Term::Star => write!(out, "*"),
        Term::Zero => write!(out, "zero"),
        Term::True => write!(out, "true"),
        Term::False => write!(out, "false"),
        Term::Base => write!(out, "base"),
        Term::Univ { kind, level } => write!(out, "U {} {level}", kind.as_str()),
        Term::Pi { var, dom, cod } | Term::Sigma { var, dom, cod } => {
            let kw = if matches!(m, Term::Pi { .. }) { "pi" } else { "sg" };
            write!(out, "{kw} ({var} : ")?;
            term(dom, out)?;
            out.push(')');
            args(&[cod], out)
        }
        Term::Path { var, ty, lhs, rhs } => {
            out.push_str("path");
            scoped(var.as_str(), ty, out)?;
            args(&[lhs, rhs], out)
        }
        Term::Eq { ty, lhs, rhs } => {
            out.push_str("eq");
            args(&[ty, lhs, rhs], out)
        }
        Term::V { dim, a, b, equiv } => {
            write!(out, "V {dim}")?;
            args(&[a, b, equiv], out)
        }
        Term::VIn { dim, m, n } => {
            write!(out, "Vin {dim}")?;
            args(&[m, n], out)
        }
        Term::VProj { dim, m, f } => {
            write!(out, "Vproj {dim}")?;
            args(&[m, f], out)
        }
        Term::Lam { var, body } => {
            write!(out, "lam {var}. ")?;
            term(body, out)
        }
        Term::DLam { var, body } => {
            write!(out, "dlam {var}. ")?;
            term(body, out)
        }
        Term::App(f, a) => {
            out.push_str("app");
            args(&[f, a], out)
        }
        Term::Pair(a, b) => {
            out.push_str("pair");
            args(&[a, b], out)
        }
        Term::Fst(a) => {
            out.push_str("fst");
            args(&[a], out)
        }
        Term::Snd(a) => {
            out.push_str("snd");
            args(&[a], out)
        }
        Term::DApp(a, r) => {
            out.push_str("dapp");
            args(&[a], out)?;
            write!(out, " {r}")
        }
        Term::Suc(a) => {
            out.push_str("suc");
            args(&[a], out)
        }
        Term::NatRec { scrut, zero, pred, ih, succ } => {
            out.push_str("natrec");
            args(&[scrut, zero], out)?;
            write!(out, " ({pred} {ih}. ")?;
            term(succ, out)?;
            out.push(')');
            Ok(())
        }
        Term::If { var, motive, scrut, tt, ff } => {
            out.push_str("if");
            scoped(var.as_str(), motive, out)?;
            args(&[scrut, tt, ff], out)
        }
        Term::Loop(r) => write!(out, "loop {r}"),
        Term::CircElim { var, motive, scrut, base, dvar, lp } => {
            out.push_str("S1elim");
            scoped(var.as_str(), motive, out)?;
            args(&[scrut, base], out)?;
            scoped(dvar.as_str(), lp, out)
        }
        Term::Coe { var, ty, from, to, arg: a } => {
            out.push_str("coe");
            scoped(var.as_str(), ty, out)?;
            span(from, to, out)?;
            args(&[a], out)
        }
        Term::Hcom { ty, from, to, cap, tubes: ts } | Term::Ghcom { ty, from, to, cap, tubes: ts } => {
            out.push_str(if matches!(m, Term::Hcom { .. }) { "hcom" } else { "ghcom" });
            args(&[ty], out)?;
            span(from, to, out)?;
            args(&[cap], out)?;
            tubes(ts, out)
        }
        Term::Com { var, ty, from, to, cap, tubes: ts } | Term::Gcom { var, ty, from, to, cap, tubes: ts } => {
            out.push_str(if matches!(m, Term::Com { .. }) { "com" } else { "gcom" });
            scoped(var.as_str(), ty, out)?;
            span(from, to, out)?;
            args(&[cap], out)?;
            tubes(ts, out)
        }
        Term::Fcom { from, to, cap, tubes: ts } => {
            out.push_str("fcom");
            span(from, to, out)?;
            args(&[cap], out)?;
            tubes(ts, out)
        }
        Term::Boxed { from, to, cap, tubes: ts } => {
            out.push_str("box");
            span(from, to, out)?;
            args(&[cap], out)?;
            box_tubes(ts, out)
        }
        Term::Cap { from, to, arg: a, tubes: ts } => {
            out.push_str("cap");
            span(from, to, out)?;
            args(&[a], out)?;
            tubes(ts, out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    #[test]
    fn canonical_forms() {
        for s in [
            "lam a. a",
            "loop 0",
            "*",
            "app (lam a. a) zero",
            "U kan 2",
            "pi (a : nat) (path (x. bool) true a)",
            "natrec (suc zero) zero (n a. suc a)",
            "coe (x. V x bool bool e) 0 ~> 1 true",
            "hcom bool 0 ~> 1 true [x=0 y. true] [x=1 y. false]",
            "box 0 ~> x true [x=1 false]",
            "S1elim (c. S1) (loop x) base (w. loop w)",
            "if (b. bool) true false true",
            "dapp (dlam x. loop x) y",
        ] {
            assert_eq!(print(&parse(s).unwrap()), s);
        }
    }
}
