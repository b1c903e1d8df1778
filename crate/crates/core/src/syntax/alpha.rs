use super::node::{Binder, Op};
use super::Term;
use crate::cube::Dim;
use crate::name::Name;

#[derive(Default)]
struct Env {
    dims: Vec<Name>,
    vars: Vec<Name>,
}

#[derive(PartialEq, Eq)]
enum Resolved<'a> {
    Bound(usize),
    Free(&'a Name),
}

fn resolve<'a>(stack: &[Name], n: &'a Name) -> Resolved<'a> {
    match stack.iter().rposition(|m| m == n) {
        Some(i) => Resolved::Bound(i),
        None => Resolved::Free(n),
    }
}

fn dim_eq(a: &Dim, ea: &Env, b: &Dim, eb: &Env) -> bool {
    match (a, b) {
        (Dim::Name(x), Dim::Name(y)) => resolve(&ea.dims, x) == resolve(&eb.dims, y),
        _ => a == b,
    }
}

fn go(a: &Term, ea: &mut Env, b: &Term, eb: &mut Env) -> bool {
    if let (Term::Var(x), Term::Var(y)) = (a, b) {
        return resolve(&ea.vars, x) == resolve(&eb.vars, y);
    }
    let va = a.view();
    let vb = b.view();
    if matches!(va.op, Op::Var(_)) || va.op != vb.op {
        return false;
    }
    if !va.dims.iter().zip(&vb.dims).all(|(x, y)| dim_eq(x, ea, y, eb)) {
        return false;
    }
    for ((ba, ta), (bb, tb)) in va.args.iter().zip(&vb.args) {
        let (da, va_) = (ea.dims.len(), ea.vars.len());
        let (db, vb_) = (eb.dims.len(), eb.vars.len());
        for (x, y) in ba.iter().zip(bb) {
            match (x, y) {
                (Binder::Dim(x), Binder::Dim(y)) => {
                    ea.dims.push(x.clone());
                    eb.dims.push(y.clone());
                }
                (Binder::Term(x), Binder::Term(y)) => {
                    ea.vars.push(x.clone());
                    eb.vars.push(y.clone());
                }
                _ => return false,
            }
        }
        let ok = go(ta, ea, tb, eb);
        ea.dims.truncate(da);
        ea.vars.truncate(va_);
        eb.dims.truncate(db);
        eb.vars.truncate(vb_);
        if !ok {
            return false;
        }
    }
    true
}

/// Equality up to consistent renaming of bound term and dimension variables.
pub fn alpha_eq(a: &Term, b: &Term) -> bool {
    a == b || go(a, &mut Env::default(), b, &mut Env::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn eq(a: &str, b: &str) -> bool {
        alpha_eq(&parse(a).unwrap(), &parse(b).unwrap())
    }

    #[test]
    fn examples() {
        assert!(eq("lam a. a", "lam b. b"));
        assert!(eq("dlam x. loop x", "dlam y. loop y"));
        assert!(!eq("loop x", "loop y"));
        assert!(!eq("lam a. b", "lam b. b"));
        assert!(eq("natrec zero zero (n a. pair n a)", "natrec zero zero (m b. pair m b)"));
        assert!(!eq("natrec zero zero (n a. pair n a)", "natrec zero zero (m b. pair b m)"));
        assert!(eq(
            "hcom bool x ~> 1 true [x=0 y. loop y]",
            "hcom bool x ~> 1 true [x=0 z. loop z]"
        ));
        assert!(!eq("dlam x. dlam y. loop x", "dlam x. dlam y. loop y"));
    }

    #[test]
    fn dimension_and_term_binders_are_separate_sorts() {
        // `x` bound as a term variable does not bind the dimension `x`.
        assert!(!eq("lam x. loop x", "lam y. loop y"));
        assert!(eq("lam x. loop x", "lam y. loop x"));
    }
}
