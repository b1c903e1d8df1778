//! Dimensions, dimension contexts, total dimension substitutions and
//! equation lists.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::name::Name;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CubeError {
    #[error("dimension name `{0}` is not in the source context")]
    NotInSource(Name),
    #[error("dimension name `{0}` is not in the target context")]
    NotInTarget(Name),
    #[error("substitution does not map `{0}`")]
    Unmapped(Name),
    #[error("duplicate dimension name `{0}`")]
    Duplicate(Name),
    #[error("cannot compose: target {0} does not match source {1}")]
    ContextMismatch(DimCtx, DimCtx),
    #[error("malformed dimension `{0}`")]
    Malformed(String),
}

/// A dimension: one of the two endpoints or a dimension name.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Dim {
    Zero,
    One,
    Name(Name),
}

impl Dim {
    pub fn name(s: &str) -> Dim {
        Dim::Name(Name::new(s))
    }

    pub fn constant(b: bool) -> Dim {
        if b {
            Dim::One
        } else {
            Dim::Zero
        }
    }

    pub fn is_const(&self) -> bool {
        !matches!(self, Dim::Name(_))
    }

    pub fn as_name(&self) -> Option<&Name> {
        match self {
            Dim::Name(n) => Some(n),
            _ => None,
        }
    }

    /// The opposite endpoint; names are returned unchanged.
    pub fn flip(&self) -> Dim {
        match self {
            Dim::Zero => Dim::One,
            Dim::One => Dim::Zero,
            n => n.clone(),
        }
    }

    /// `self` with every name looked up in `map`; unmapped names are kept.
    pub fn subst(&self, map: &BTreeMap<Name, Dim>) -> Dim {
        match self {
            Dim::Name(n) => map.get(n).cloned().unwrap_or_else(|| self.clone()),
            c => c.clone(),
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Zero => f.write_str("0"),
            Dim::One => f.write_str("1"),
            Dim::Name(n) => write!(f, "{n}"),
        }
    }
}

impl FromStr for Dim {
    type Err = CubeError;

    fn from_str(s: &str) -> Result<Dim, CubeError> {
        let s = s.trim();
        match s {
            "0" => Ok(Dim::Zero),
            "1" => Ok(Dim::One),
            _ if is_ident(s) => Ok(Dim::name(s)),
            _ => Err(CubeError::Malformed(s.to_string())),
        }
    }
}

pub(crate) fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

impl Serialize for Dim {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Dim {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Dim, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A finite set of dimension names.
#[derive(Clone, PartialEq, Eq, Default, Debug, Hash)]
pub struct DimCtx(BTreeSet<Name>);

impl DimCtx {
    pub fn new() -> DimCtx {
        DimCtx(BTreeSet::new())
    }

    /// Builds a context, rejecting duplicates.
    pub fn from_names(names: impl IntoIterator<Item = Name>) -> Result<DimCtx, CubeError> {
        let mut set = BTreeSet::new();
        for n in names {
            if !set.insert(n.clone()) {
                return Err(CubeError::Duplicate(n));
            }
        }
        Ok(DimCtx(set))
    }

    pub fn contains(&self, n: &Name) -> bool {
        self.0.contains(n)
    }

    /// Whether `r` is a constant or a name of this context.
    pub fn scopes(&self, r: &Dim) -> bool {
        match r {
            Dim::Name(n) => self.contains(n),
            _ => true,
        }
    }

    pub fn with(&self, n: Name) -> DimCtx {
        let mut s = self.0.clone();
        s.insert(n);
        DimCtx(s)
    }

    pub fn without(&self, n: &Name) -> DimCtx {
        let mut s = self.0.clone();
        s.remove(n);
        DimCtx(s)
    }

    pub fn names(&self) -> impl Iterator<Item = &Name> {
        self.0.iter()
    }

    pub fn set(&self) -> &BTreeSet<Name> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for DimCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{n}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<Name> for DimCtx {
    fn from_iter<I: IntoIterator<Item = Name>>(iter: I) -> DimCtx {
        DimCtx(iter.into_iter().collect())
    }
}

impl Serialize for DimCtx {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter())
    }
}

impl<'de> Deserialize<'de> for DimCtx {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<DimCtx, D::Error> {
        let names = Vec::<Name>::deserialize(d)?;
        DimCtx::from_names(names).map_err(serde::de::Error::custom)
    }
}

/// A total substitution `psi : target -> source`, assigning every name of
/// `source` a dimension over `target`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DimSubst {
    source: DimCtx,
    target: DimCtx,
    map: BTreeMap<Name, Dim>,
}

impl DimSubst {
    pub fn new(source: DimCtx, target: DimCtx, map: BTreeMap<Name, Dim>) -> Result<DimSubst, CubeError> {
        for n in map.keys() {
            if !source.contains(n) {
                return Err(CubeError::NotInSource(n.clone()));
            }
        }
        for n in source.names() {
            match map.get(n) {
                None => return Err(CubeError::Unmapped(n.clone())),
                Some(Dim::Name(m)) if !target.contains(m) => return Err(CubeError::NotInTarget(m.clone())),
                Some(_) => {}
            }
        }
        Ok(DimSubst { source, target, map })
    }

    /// Builds a substitution from pairs, taking the target to be exactly the
    /// names in the image.
    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, Dim)>) -> Result<DimSubst, CubeError> {
        let map: BTreeMap<Name, Dim> = pairs.into_iter().map(|(k, v)| (Name::new(k), v)).collect();
        let source = map.keys().cloned().collect();
        let target = map.values().filter_map(|d| d.as_name().cloned()).collect();
        DimSubst::new(source, target, map)
    }

    pub fn identity(ctx: &DimCtx) -> DimSubst {
        let map = ctx.names().map(|n| (n.clone(), Dim::Name(n.clone()))).collect();
        DimSubst { source: ctx.clone(), target: ctx.clone(), map }
    }

    pub fn source(&self) -> &DimCtx {
        &self.source
    }

    pub fn target(&self) -> &DimCtx {
        &self.target
    }

    pub fn map(&self) -> &BTreeMap<Name, Dim> {
        &self.map
    }

    pub fn apply(&self, r: &Dim) -> Result<Dim, CubeError> {
        match r {
            Dim::Name(n) => self.map.get(n).cloned().ok_or_else(|| CubeError::NotInSource(n.clone())),
            c => Ok(c.clone()),
        }
    }

    /// `self` followed by `then`.
    pub fn compose(&self, then: &DimSubst) -> Result<DimSubst, CubeError> {
        if then.source != self.target {
            return Err(CubeError::ContextMismatch(self.target.clone(), then.source.clone()));
        }
        let map = self
            .map
            .iter()
            .map(|(k, v)| Ok((k.clone(), then.apply(v)?)))
            .collect::<Result<_, CubeError>>()?;
        Ok(DimSubst { source: self.source.clone(), target: then.target.clone(), map })
    }
}

impl fmt::Display for DimSubst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (k, v)) in self.map.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}->{v}")?;
        }
        f.write_str("}")
    }
}

pub fn apply_dim(psi: &DimSubst, r: &Dim) -> Result<Dim, CubeError> {
    psi.apply(r)
}

pub fn compose_subst(first: &DimSubst, then: &DimSubst) -> Result<DimSubst, CubeError> {
    first.compose(then)
}

/// An equation between dimensions, `lhs = rhs`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Equation {
    pub lhs: Dim,
    pub rhs: Dim,
}

impl Equation {
    pub fn new(lhs: Dim, rhs: Dim) -> Equation {
        Equation { lhs, rhs }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn subst(&self, map: &BTreeMap<Name, Dim>) -> Equation {
        Equation::new(self.lhs.subst(map), self.rhs.subst(map))
    }

    pub fn names(&self) -> impl Iterator<Item = &Name> {
        self.lhs.as_name().into_iter().chain(self.rhs.as_name())
    }

    /// Orientation-insensitive key.
    pub fn unoriented(&self) -> (Dim, Dim) {
        if self.lhs <= self.rhs {
            (self.lhs.clone(), self.rhs.clone())
        } else {
            (self.rhs.clone(), self.lhs.clone())
        }
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={}", self.lhs, self.rhs)
    }
}

impl FromStr for Equation {
    type Err = CubeError;

    fn from_str(s: &str) -> Result<Equation, CubeError> {
        let (l, r) = s.split_once('=').ok_or_else(|| CubeError::Malformed(s.to_string()))?;
        Ok(Equation::new(l.parse()?, r.parse()?))
    }
}

impl Serialize for Equation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Equation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Equation, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An ordered list of equations.
#[derive(Clone, PartialEq, Eq, Default, Debug, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EquationList(pub Vec<Equation>);

impl EquationList {
    pub fn new(eqs: Vec<Equation>) -> EquationList {
        EquationList(eqs)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Equation> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> BTreeSet<Name> {
        self.0.iter().flat_map(|e| e.names().cloned()).collect()
    }

    /// Least index whose equation holds syntactically.
    pub fn first_true(&self) -> Option<usize> {
        self.0.iter().position(Equation::holds)
    }

    /// The equations as an orientation- and order-insensitive set.
    pub fn as_set(&self) -> BTreeSet<(Dim, Dim)> {
        self.0.iter().map(Equation::unoriented).collect()
    }
}

impl fmt::Display for EquationList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromIterator<Equation> for EquationList {
    fn from_iter<I: IntoIterator<Item = Equation>>(iter: I) -> EquationList {
        EquationList(iter.into_iter().collect())
    }
}

/// Whether `psi` identifies the two sides of every equation.
pub fn satisfies(psi: &DimSubst, xi: &EquationList) -> Result<bool, CubeError> {
    for eq in xi.iter() {
        if psi.apply(&eq.lhs)? != psi.apply(&eq.rhs)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A list is valid when some equation is reflexive, or two equations share a
/// left side with right sides `0` and `1`.
pub fn valid(eqs: &EquationList) -> bool {
    if eqs.iter().any(Equation::holds) {
        return true;
    }
    eqs.iter().any(|ei| {
        ei.rhs == Dim::Zero && eqs.iter().any(|ej| ej.rhs == Dim::One && ej.lhs == ei.lhs)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eqs(s: &[(&str, &str)]) -> EquationList {
        s.iter().map(|(l, r)| Equation::new(l.parse().unwrap(), r.parse().unwrap())).collect()
    }

    #[test]
    fn apply_dim_examples() {
        let psi = DimSubst::from_pairs([("x", Dim::Zero)]).unwrap();
        assert_eq!(apply_dim(&psi, &Dim::name("x")).unwrap(), Dim::Zero);
        let psi = DimSubst::from_pairs([("x", Dim::name("y"))]).unwrap();
        assert_eq!(apply_dim(&psi, &Dim::One).unwrap(), Dim::One);
        let psi = DimSubst::from_pairs([("x", Dim::name("z")), ("y", Dim::name("z"))]).unwrap();
        assert_eq!(apply_dim(&psi, &Dim::name("y")).unwrap(), Dim::name("z"));
        assert_eq!(apply_dim(&psi, &Dim::name("w")), Err(CubeError::NotInSource(Name::new("w"))));
    }

    #[test]
    fn compose_examples() {
        let p1 = DimSubst::from_pairs([("x", Dim::name("y"))]).unwrap();
        let p2 = DimSubst::from_pairs([("y", Dim::Zero)]).unwrap();
        let c = compose_subst(&p1, &p2).unwrap();
        assert_eq!(c.map().get(&Name::new("x")), Some(&Dim::Zero));

        let id = DimSubst::identity(&DimCtx::from_iter([Name::new("x")]));
        let psi = DimSubst::from_pairs([("x", Dim::One)]).unwrap();
        assert_eq!(compose_subst(&id, &psi).unwrap(), psi);

        let p1 = DimSubst::new(
            DimCtx::from_iter([Name::new("x")]),
            DimCtx::from_iter([Name::new("z")]),
            [(Name::new("x"), Dim::One)].into_iter().collect(),
        )
        .unwrap();
        let p2 = DimSubst::identity(&DimCtx::from_iter([Name::new("z")]));
        assert_eq!(compose_subst(&p1, &p2).unwrap().map(), p1.map());

        assert!(matches!(compose_subst(&p2, &p2.compose(&p2).unwrap()), Ok(_)));
        assert!(matches!(compose_subst(&psi, &psi), Err(CubeError::ContextMismatch(..))));
    }

    #[test]
    fn satisfies_examples() {
        let psi = DimSubst::from_pairs([("x", Dim::Zero)]).unwrap();
        assert!(satisfies(&psi, &eqs(&[("x", "0")])).unwrap());
        let id = DimSubst::identity(&DimCtx::from_iter([Name::new("x"), Name::new("y")]));
        assert!(!satisfies(&id, &eqs(&[("x", "y")])).unwrap());
        let merge = DimSubst::from_pairs([("x", Dim::name("z")), ("y", Dim::name("z"))]).unwrap();
        assert!(satisfies(&merge, &eqs(&[("x", "y")])).unwrap());
        assert!(satisfies(&merge, &eqs(&[("q", "y")])).is_err());
    }

    #[test]
    fn valid_examples() {
        assert!(valid(&eqs(&[("x", "0"), ("x", "1")])));
        assert!(valid(&eqs(&[("0", "0")])));
        assert!(!valid(&eqs(&[("x", "y")])));
        assert!(!valid(&eqs(&[])));
        assert!(!valid(&eqs(&[("x", "0"), ("y", "1")])));
        assert!(valid(&eqs(&[("y", "1"), ("z", "w"), ("y", "0")])));
    }

    #[test]
    fn subst_rejects_bad_target() {
        let r = DimSubst::new(
            DimCtx::from_iter([Name::new("x")]),
            DimCtx::new(),
            [(Name::new("x"), Dim::name("y"))].into_iter().collect(),
        );
        assert_eq!(r, Err(CubeError::NotInTarget(Name::new("y"))));
        let r = DimSubst::new(DimCtx::from_iter([Name::new("x")]), DimCtx::new(), BTreeMap::new());
        assert_eq!(r, Err(CubeError::Unmapped(Name::new("x"))));
    }

    #[test]
    fn display_equations() {
        assert_eq!(eqs(&[("x", "0"), ("y", "z")]).to_string(), "x=0, y=z");
    }
}
