//! Recursive-descent parser for the keyword-prefix concrete syntax.

use std::fmt;

use thiserror::Error;

use super::{build, BoxTube, Kind, Term, Tube};
use crate::cube::{Dim, Equation};
use crate::name::Name;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{line}:{col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(u64),
    LParen,
    RParen,
    LBrack,
    RBrack,
    Dot,
    Colon,
    Equals,
    Arrow,
    Star,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Num(n) => write!(f, "`{n}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::LBrack => f.write_str("`[`"),
            Tok::RBrack => f.write_str("`]`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::Colon => f.write_str("`:`"),
            Tok::Equals => f.write_str("`=`"),
            Tok::Arrow => f.write_str("`~>`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

const KEYWORDS: &[&str] = &[
    "lam", "app", "pair", "fst", "snd", "dlam", "dapp", "pi", "sg", "path", "eq", "void", "nat", "bool", "wbool",
    "S1", "zero", "suc", "natrec", "true", "false", "if", "base", "loop", "S1elim", "U", "V", "Vin", "Vproj",
    "coe", "hcom", "com", "fcom", "ghcom", "gcom", "box", "cap", "pre", "kan",
];

pub(crate) fn is_keyword(s: &str) -> bool {
    KEYWORDS.contains(&s)
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

fn line_col(src: &str, pos: usize) -> (usize, usize) {
    let before = &src[..pos.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, col)
}

impl<'a> Lexer<'a> {
    fn tokens(mut self) -> Result<Vec<(Tok, usize)>, ParseError> {
        let mut out = Vec::new();
        loop {
            let bytes = self.src.as_bytes();
            while self.pos < bytes.len() {
                let c = bytes[self.pos];
                if c.is_ascii_whitespace() {
                    self.pos += 1;
                } else if c == b'-' && bytes.get(self.pos + 1) == Some(&b'-') {
                    while self.pos < bytes.len() && bytes[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                } else {
                    break;
                }
            }
            let start = self.pos;
            let Some(&c) = bytes.get(self.pos) else {
                out.push((Tok::Eof, start));
                return Ok(out);
            };
            let tok = match c {
                b'(' => Tok::LParen,
                b')' => Tok::RParen,
                b'[' => Tok::LBrack,
                b']' => Tok::RBrack,
                b'.' => Tok::Dot,
                b':' => Tok::Colon,
                b'=' => Tok::Equals,
                b'*' => Tok::Star,
                b'~' if bytes.get(self.pos + 1) == Some(&b'>') => {
                    self.pos += 1;
                    Tok::Arrow
                }
                b'0'..=b'9' => {
                    let mut end = self.pos;
                    while end < bytes.len() && bytes[end].is_ascii_digit() {
                        end += 1;
                    }
                    let text = &self.src[self.pos..end];
                    self.pos = end;
                    let n = text.parse().map_err(|_| self.error(start, "numeric literal too large"))?;
                    out.push((Tok::Num(n), start));
                    continue;
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    let mut end = self.pos;
                    while end < bytes.len() && (bytes[end].is_ascii_alphanumeric() || bytes[end] == b'_' || bytes[end] == b'\'') {
                        end += 1;
                    }
                    let text = self.src[self.pos..end].to_string();
                    self.pos = end;
                    out.push((Tok::Ident(text), start));
                    continue;
                }
                _ => {
                    let ch = self.src[self.pos..].chars().next().unwrap();
                    return Err(self.error(start, &format!("unexpected character `{ch}`")));
                }
            };
            self.pos += 1;
            out.push((tok, start));
        }
    }

    fn error(&self, pos: usize, msg: &str) -> ParseError {
        let (line, col) = line_col(self.src, pos);
        ParseError { line, col, msg: msg.to_string() }
    }
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize)>,
    i: usize,
}

type PResult<T> = Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.i].0.clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> PResult<T> {
        let (line, col) = line_col(self.src, self.toks[self.i].1);
        Err(ParseError { line, col, msg: msg.into() })
    }

    fn expect(&mut self, t: Tok) -> PResult<()> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            self.err(format!("expected {t}, found {}", self.peek()))
        }
    }

    fn binder(&mut self) -> PResult<Name> {
        match self.peek().clone() {
            Tok::Ident(s) if !is_keyword(&s) => {
                self.bump();
                Ok(Name::new(s))
            }
            t => self.err(format!("expected a binder name, found {t}")),
        }
    }

    fn dim(&mut self) -> PResult<Dim> {
        match self.peek().clone() {
            Tok::Num(0) => {
                self.bump();
                Ok(Dim::Zero)
            }
            Tok::Num(1) => {
                self.bump();
                Ok(Dim::One)
            }
            Tok::Ident(s) if !is_keyword(&s) && s != "_" => {
                self.bump();
                Ok(Dim::Name(Name::new(s)))
            }
            t => self.err(format!("expected a dimension, found {t}")),
        }
    }

    fn boxed(&mut self) -> PResult<Box<Term>> {
        Ok(Box::new(self.term()?))
    }

    /// `(x. A)`, or `x. A` without parentheses.
    fn scoped(&mut self) -> PResult<(Name, Term)> {
        let parens = *self.peek() == Tok::LParen;
        if parens {
            self.bump();
        }
        let x = self.binder()?;
        self.expect(Tok::Dot)?;
        let body = self.term()?;
        if parens {
            self.expect(Tok::RParen)?;
        }
        Ok((x, body))
    }

    fn span(&mut self) -> PResult<(Dim, Dim)> {
        let r = self.dim()?;
        self.expect(Tok::Arrow)?;
        let s = self.dim()?;
        Ok((r, s))
    }

    fn equation(&mut self) -> PResult<Equation> {
        let l = self.dim()?;
        self.expect(Tok::Equals)?;
        let r = self.dim()?;
        Ok(Equation::new(l, r))
    }

    fn tubes(&mut self) -> PResult<Vec<Tube>> {
        let mut out = Vec::new();
        while *self.peek() == Tok::LBrack {
            self.bump();
            let eq = self.equation()?;
            let y = self.binder()?;
            self.expect(Tok::Dot)?;
            let body = self.term()?;
            self.expect(Tok::RBrack)?;
            out.push(Tube::new(eq, y, body));
        }
        Ok(out)
    }

    fn box_tubes(&mut self) -> PResult<Vec<BoxTube>> {
        let mut out = Vec::new();
        while *self.peek() == Tok::LBrack {
            self.bump();
            let eq = self.equation()?;
            let body = self.term()?;
            self.expect(Tok::RBrack)?;
            out.push(BoxTube::new(eq, body));
        }
        Ok(out)
    }

    fn term(&mut self) -> PResult<Term> {
        let tok = self.peek().clone();
        let kw = match tok {
            Tok::LParen => {
                self.bump();
                let t = self.term()?;
                self.expect(Tok::RParen)?;
                return Ok(t);
            }
            Tok::Star => {
                self.bump();
                return Ok(Term::Star);
            }
            Tok::Ident(s) => s,
            t => return self.err(format!("expected a term, found {t}")),
        };
        if !is_keyword(&kw) {
            if kw == "_" {
                return self.err("`_` cannot be used as a variable");
            }
            self.bump();
            return Ok(Term::Var(Name::new(kw)));
        }
        self.bump();
        let t = match kw.as_str() {
            "lam" | "dlam" => {
                let a = self.binder()?;
                self.expect(Tok::Dot)?;
                let body = self.boxed()?;
                if kw == "lam" {
                    Term::Lam { var: a, body }
                } else {
                    Term::DLam { var: a, body }
                }
            }
            "app" => Term::App(self.boxed()?, self.boxed()?),
            "pair" => Term::Pair(self.boxed()?, self.boxed()?),
            "fst" => Term::Fst(self.boxed()?),
            "snd" => Term::Snd(self.boxed()?),
            "dapp" => {
                let m = self.boxed()?;
                Term::DApp(m, self.dim()?)
            }
            "pi" | "sg" => {
                self.expect(Tok::LParen)?;
                let a = self.binder()?;
                self.expect(Tok::Colon)?;
                let dom = self.boxed()?;
                self.expect(Tok::RParen)?;
                let cod = self.boxed()?;
                if kw == "pi" {
                    Term::Pi { var: a, dom, cod }
                } else {
                    Term::Sigma { var: a, dom, cod }
                }
            }
            "path" => {
                let (x, ty) = self.scoped()?;
                Term::Path { var: x, ty: Box::new(ty), lhs: self.boxed()?, rhs: self.boxed()? }
            }
            "eq" => Term::Eq { ty: self.boxed()?, lhs: self.boxed()?, rhs: self.boxed()? },
            "void" => Term::Void,
            "nat" => Term::Nat,
            "bool" => Term::Bool,
            "wbool" => Term::WBool,
            "S1" => Term::Circle,
            "zero" => Term::Zero,
            "true" => Term::True,
            "false" => Term::False,
            "base" => Term::Base,
            "suc" => Term::Suc(self.boxed()?),
            "natrec" => {
                let scrut = self.boxed()?;
                let zero = self.boxed()?;
                self.expect(Tok::LParen)?;
                let pred = self.binder()?;
                let ih = self.binder()?;
                self.expect(Tok::Dot)?;
                let succ = self.boxed()?;
                self.expect(Tok::RParen)?;
                Term::NatRec { scrut, zero, pred, ih, succ }
            }
            "if" => {
                let (b, motive) = self.scoped()?;
                build::iff(&b, motive, self.term()?, self.term()?, self.term()?)
            }
            "loop" => Term::Loop(self.dim()?),
            "S1elim" => {
                let (c, motive) = self.scoped()?;
                let scrut = self.term()?;
                let base = self.term()?;
                let (x, lp) = self.scoped()?;
                build::circ_elim(&c, motive, scrut, base, &x, lp)
            }
            "U" => {
                let kind = match self.bump() {
                    Tok::Ident(s) if s == "pre" => Kind::Pre,
                    Tok::Ident(s) if s == "kan" => Kind::Kan,
                    t => return self.err(format!("expected `pre` or `kan`, found {t}")),
                };
                let level = match self.bump() {
                    Tok::Num(n) => u32::try_from(n).or_else(|_| self.err("universe level too large"))?,
                    t => return self.err(format!("expected a universe level, found {t}")),
                };
                Term::Univ { kind, level }
            }
            "V" => {
                let dim = self.dim()?;
                Term::V { dim, a: self.boxed()?, b: self.boxed()?, equiv: self.boxed()? }
            }
            "Vin" => {
                let dim = self.dim()?;
                Term::VIn { dim, m: self.boxed()?, n: self.boxed()? }
            }
            "Vproj" => {
                let dim = self.dim()?;
                Term::VProj { dim, m: self.boxed()?, f: self.boxed()? }
            }
            "coe" => {
                let (x, ty) = self.scoped()?;
                let (from, to) = self.span()?;
                build::coe(&x, ty, from, to, self.term()?)
            }
            "hcom" | "ghcom" => {
                let ty = self.term()?;
                let (from, to) = self.span()?;
                let cap = self.term()?;
                let tubes = self.tubes()?;
                if kw == "hcom" {
                    build::hcom(ty, from, to, cap, tubes)
                } else {
                    build::ghcom(ty, from, to, cap, tubes)
                }
            }
            "com" | "gcom" => {
                let (y, ty) = self.scoped()?;
                let (from, to) = self.span()?;
                let cap = self.term()?;
                let tubes = self.tubes()?;
                if kw == "com" {
                    build::com(&y, ty, from, to, cap, tubes)
                } else {
                    build::gcom(&y, ty, from, to, cap, tubes)
                }
            }
            "fcom" => {
                let (from, to) = self.span()?;
                let cap = self.term()?;
                build::fcom(from, to, cap, self.tubes()?)
            }
            "box" => {
                let (from, to) = self.span()?;
                let cap = self.term()?;
                build::boxed(from, to, cap, self.box_tubes()?)
            }
            "cap" => {
                let (from, to) = self.span()?;
                let arg = self.term()?;
                build::cap(from, to, arg, self.tubes()?)
            }
            other => return self.err(format!("`{other}` cannot start a term")),
        };
        Ok(t)
    }
}

/// Parses a complete term.
pub fn parse(text: &str) -> Result<Term, ParseError> {
    let toks = Lexer { src: text, pos: 0 }.tokens()?;
    let mut p = Parser { src: text, toks, i: 0 };
    let t = p.term()?;
    if *p.peek() != Tok::Eof {
        return p.err(format!("unexpected {} after term", p.peek()));
    }
    Ok(t)
}

/// Parses a single dimension.
pub fn parse_dim(text: &str) -> Result<Dim, ParseError> {
    let toks = Lexer { src: text, pos: 0 }.tokens()?;
    let mut p = Parser { src: text, toks, i: 0 };
    let d = p.dim()?;
    if *p.peek() != Tok::Eof {
        return p.err(format!("unexpected {} after dimension", p.peek()));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::build::*;

    #[test]
    fn lam() {
        let a = Name::new("a");
        assert_eq!(parse("lam a. a").unwrap(), build::lam(&a, Term::Var(a.clone())));
    }

    #[test]
    fn hcom_with_tubes() {
        let t = parse("hcom bool 0~>1 true [x=0 y. true] [x=1 y. true]").unwrap();
        let y = Name::new("y");
        let expected = hcom(
            Term::Bool,
            Dim::Zero,
            Dim::One,
            Term::True,
            vec![tube(Dim::name("x"), Dim::Zero, &y, Term::True), tube(Dim::name("x"), Dim::One, &y, Term::True)],
        );
        assert_eq!(t, expected);
    }

    #[test]
    fn coe() {
        let t = parse("coe (x. bool) 0 ~> 1 true").unwrap();
        assert_eq!(t, build::coe(&Name::new("x"), Term::Bool, Dim::Zero, Dim::One, Term::True));
        assert_eq!(parse("coe x.bool 0~>1 true").unwrap(), t);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse("lam a.\n  (app a").unwrap_err();
        assert_eq!((e.line, e.col), (2, 9));
        let e = parse("loop 2").unwrap_err();
        assert_eq!((e.line, e.col), (1, 6));
        assert!(parse("true false").is_err());
        assert!(parse("U pre").is_err());
        assert!(parse("lam lam. a").is_err());
    }

    #[test]
    fn comments_and_primes() {
        let t = parse("-- a comment\nloop r'").unwrap();
        assert_eq!(t, Term::Loop(Dim::name("r'")));
    }

    #[test]
    fn box_and_cap() {
        let t = parse("cap 0 ~> x (box 0 ~> x true [x=1 false]) [x=1 y. bool]").unwrap();
        match t {
            Term::Cap { arg, tubes, .. } => {
                assert!(matches!(*arg, Term::Boxed { .. }));
                assert_eq!(tubes.len(), 1);
            }
            _ => panic!(),
        }
    }
}
