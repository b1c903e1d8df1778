//! Canonicity programs: closed terms of type `bool` or `nat` with their
//! expected canonical values.
//!
//! A corpus file is concrete syntax preceded by header comments:
//!
//! ```text
//! -- expect: suc (suc zero)
//! -- tags: nat hcom
//! -- derivation: natrec.json
//! hcom nat 0 ~> 1 (suc (suc zero)) [x=0 y. suc (suc zero)]
//! ```

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use crate::cube::DimCtx;
use crate::gen::{Gen, GenConfig};
use crate::opsem::{eval, EvalError};
use crate::props::{coherence, Outcome};
use crate::syntax::{alpha_eq, parse, print, Term};

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub source: String,
    pub expected: Option<Term>,
    pub derivation: Option<PathBuf>,
    pub tags: Vec<String>,
}

impl CorpusEntry {
    pub fn parse(name: &str, source: &str) -> Result<CorpusEntry, String> {
        let mut e = CorpusEntry { name: name.to_string(), source: source.to_string(), expected: None, derivation: None, tags: vec![] };
        for line in source.lines() {
            let Some(rest) = line.trim().strip_prefix("--") else { continue };
            let Some((key, val)) = rest.split_once(':') else { continue };
            let val = val.trim();
            match key.trim() {
                "expect" => e.expected = Some(parse(val).map_err(|err| format!("{name}: expected value: {err}"))?),
                "tags" => e.tags = val.split_whitespace().map(String::from).collect(),
                "derivation" => e.derivation = Some(PathBuf::from(val)),
                _ => {}
            }
        }
        Ok(e)
    }

    pub fn term(&self) -> Result<Term, String> {
        parse(&self.source).map_err(|e| format!("{}: {e}", self.name))
    }

    pub fn has_tag(&self, t: &str) -> bool {
        self.tags.iter().any(|x| x == t)
    }

    /// `bool` or `nat`, whichever tag is present.
    pub fn ty(&self) -> Option<&'static str> {
        ["bool", "nat"].into_iter().find(|t| self.has_tag(t))
    }
}

macro_rules! builtin {
    ($($n:literal),* $(,)?) => {
        &[$(($n, include_str!(concat!("../corpus/canonicity/", $n, ".ccl")))),*]
    };
}

/// The shipped corpus, compiled in.
pub const BUILTIN: &[(&str, &str)] = builtin![
    "box-cap",
    "coe-pi",
    "coe-sigma",
    "com-bool",
    "fcom-degenerate",
    "fcom-tube",
    "ghcom-one",
    "ghcom-two",
    "hcom-bool",
    "hcom-nat",
    "hcom-path",
    "hcom-wbool-if",
    "natrec",
    "plus",
    "s1elim-fcom",
    "s1elim-loop-const",
    "s1elim-loop",
    "s1elim-nat",
    "ua-coe-backward",
    "ua-coe-degenerate",
    "ua-coe-forward",
    "ua-coe-name",
];

pub fn builtin() -> Vec<CorpusEntry> {
    BUILTIN.iter().map(|(n, s)| CorpusEntry::parse(n, s).expect("shipped corpus parses")).collect()
}

/// Loads every `*.ccl` file of a directory, sorted by entry name.
pub fn load_dir(dir: &Path) -> Result<Vec<CorpusEntry>, String> {
    let paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| format!("{}: {e}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "ccl"))
        .collect();
    let mut out = paths
        .iter()
        .map(|p| {
            let text = fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            let name = p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            CorpusEntry::parse(&name, &text)
        })
        .collect::<Result<Vec<_>, _>>()?;
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}

/// Evaluates a natural number all the way down, since evaluation stops at
/// `suc M`.
pub fn eval_numeral(m: &Term, fuel: u64) -> Result<(Term, u64), EvalError> {
    let mut spent = 0;
    let mut depth = 0;
    let mut cur = m.clone();
    loop {
        let v = eval(&cur, fuel - spent)?;
        spent += v.steps;
        match v.value {
            Term::Suc(n) => {
                depth += 1;
                cur = *n;
            }
            other => {
                let mut out = other;
                for _ in 0..depth {
                    out = Term::Suc(Box::new(out));
                }
                return Ok((out, spent));
            }
        }
    }
}

pub fn is_canonical(v: &Term, ty: &str) -> bool {
    match (ty, v) {
        ("bool", Term::True | Term::False) => true,
        ("nat", Term::Zero) => true,
        ("nat", Term::Suc(n)) => is_canonical(n, "nat"),
        _ => false,
    }
}

#[derive(Clone, Debug)]
pub struct CanonResult {
    pub name: String,
    pub value: Result<Term, String>,
    pub steps: u64,
    pub time: Duration,
    pub ok: bool,
}

pub fn run_entry(e: &CorpusEntry, fuel: u64) -> CanonResult {
    let start = Instant::now();
    let mut steps = 0;
    let value = (|| {
        let m = e.term()?;
        let ty = e.ty().ok_or("entry is tagged neither bool nor nat")?;
        let (v, n) = if ty == "nat" {
            eval_numeral(&m, fuel).map_err(|e| e.to_string())?
        } else {
            let v = eval(&m, fuel).map_err(|e| e.to_string())?;
            (v.value, v.steps)
        };
        steps = n;
        if !is_canonical(&v, ty) {
            return Err(format!("{} is not a canonical {ty}", print(&v)));
        }
        Ok(v)
    })();
    let ok = match (&value, &e.expected) {
        (Ok(v), Some(want)) => alpha_eq(v, want),
        (Ok(_), None) => true,
        (Err(_), _) => false,
    };
    CanonResult { name: e.name.clone(), value, steps, time: start.elapsed(), ok }
}

/// Coherence at bool for one program over `pairs` random substitution pairs
/// out of its free dimensions. Returns the first failure.
pub fn coherence_entry(e: &CorpusEntry, pairs: usize, seed: u64, fuel: u64) -> Result<(), String> {
    let m = e.term()?;
    let psi = DimCtx::from_names(m.fd()).map_err(|e| e.to_string())?;
    let mut g = Gen::new(GenConfig { seed, dim_pool: psi.len().max(2), ..GenConfig::default() });
    for k in 0..pairs {
        let s1 = g.subst(&psi);
        let s2 = g.subst(s1.target());
        if let Outcome::Fail(why) = coherence(&m, &s1, &s2, fuel, true) {
            return Err(format!("{} pair {k}: {why}", e.name));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opsem::DEFAULT_FUEL;

    #[test]
    fn header_parsing() {
        let e = CorpusEntry::parse("t", "-- expect: true\n-- tags: bool hcom\n-- derivation: d.json\nif (b. bool) true true false\n").unwrap();
        assert_eq!(e.expected, Some(Term::True));
        assert_eq!(e.ty(), Some("bool"));
        assert_eq!(e.derivation, Some(PathBuf::from("d.json")));
        assert_eq!(e.term().unwrap(), parse("if (b. bool) true true false").unwrap());
    }

    #[test]
    fn numerals_are_evaluated_under_suc() {
        let m = parse("natrec (suc zero) (suc zero) (n a. suc a)").unwrap();
        let (v, _) = eval_numeral(&m, 100).unwrap();
        assert_eq!(v, parse("suc (suc zero)").unwrap());
        assert!(is_canonical(&v, "nat"));
        assert!(!is_canonical(&parse("suc base").unwrap(), "nat"));
    }

    #[test]
    fn shipped_corpus_matches_directory() {
        let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus/canonicity");
        let on_disk: Vec<String> = load_dir(&dir).unwrap().into_iter().map(|e| e.name).collect();
        let mut built: Vec<String> = builtin().into_iter().map(|e| e.name).collect();
        built.sort();
        assert_eq!(on_disk, built);
    }

    #[test]
    fn shipped_corpus_is_canonical() {
        for e in builtin() {
            let r = run_entry(&e, DEFAULT_FUEL);
            assert!(r.ok, "{}: {:?}", e.name, r.value.map(|v| print(&v)));
        }
    }
}
