//! Interned identifiers shared by dimension names and term variables.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An identifier. Cheap to clone, totally ordered.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Name(Arc<str>);

impl Name {
    pub fn new(s: impl AsRef<str>) -> Name {
        Name(Arc::from(s.as_ref()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The name with any trailing digits removed.
    pub fn stem(&self) -> &str {
        let s = self.as_str();
        let trimmed = s.trim_end_matches(|c: char| c.is_ascii_digit());
        if trimmed.is_empty() {
            s
        } else {
            trimmed
        }
    }
}

impl fmt::Debug for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Name {
    fn from(s: &str) -> Name {
        Name::new(s)
    }
}

impl Serialize for Name {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Name {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Name, D::Error> {
        let s = String::deserialize(d)?;
        Ok(Name::new(s))
    }
}

/// Returns a name with the same stem as `base` that is not in `avoid`.
///
/// The suffix is one past the largest numeric suffix already used with that
/// stem, so the choice depends only on the set of names in scope.
pub fn fresh_name(base: &Name, avoid: &BTreeSet<Name>) -> Name {
    let stem = match base.stem() {
        "_" => "w",
        s => s,
    };
    if !avoid.contains(base) && base.as_str() != "_" {
        return base.clone();
    }
    let max = avoid
        .iter()
        .filter_map(|n| {
            let s = n.as_str();
            s.strip_prefix(stem)
                .filter(|rest| !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()))
                .and_then(|rest| rest.parse::<u64>().ok())
        })
        .max()
        .unwrap_or(0);
    let mut k = max + 1;
    loop {
        let candidate = Name::new(format!("{stem}{k}"));
        if !avoid.contains(&candidate) {
            return candidate;
        }
        k += 1;
    }
}

/// A supply of fresh names that remembers everything it has handed out.
#[derive(Clone, Debug, Default)]
pub struct Fresh {
    used: BTreeSet<Name>,
}

impl Fresh {
    pub fn new(used: BTreeSet<Name>) -> Fresh {
        Fresh { used }
    }

    pub fn avoid(&mut self, names: impl IntoIterator<Item = Name>) {
        self.used.extend(names);
    }

    pub fn name(&mut self, base: &str) -> Name {
        let n = fresh_name(&Name::new(base), &self.used);
        self.used.insert(n.clone());
        n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fresh_skips_past_max_suffix() {
        let avoid: BTreeSet<Name> = ["y", "y1", "y7", "z"].iter().map(|s| Name::new(s)).collect();
        assert_eq!(fresh_name(&Name::new("y"), &avoid).as_str(), "y8");
        assert_eq!(fresh_name(&Name::new("w"), &avoid).as_str(), "w");
        assert_eq!(fresh_name(&Name::new("y3"), &avoid).as_str(), "y3");
    }

    #[test]
    fn fresh_supply_is_deterministic() {
        let mut a = Fresh::default();
        let mut b = Fresh::default();
        let xs: Vec<_> = (0..4).map(|_| a.name("x")).collect();
        let ys: Vec<_> = (0..4).map(|_| b.name("x")).collect();
        assert_eq!(xs, ys);
        assert_eq!(xs[0].as_str(), "x");
        assert_eq!(xs[1].as_str(), "x1");
    }
}
