//! Ground sets: ordered finite sets of unique labels that index the
//! coordinates of every vector and configuration in the crate.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An ordered set of unique labels.  The label order is the canonical
/// coordinate order for vectors and for all serialized output.
#[derive(Clone, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::Usage("ground set must be nonempty".into()));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::Usage(format!("duplicate ground label `{l}`")));
            }
        }
        Ok(Arc::new(GroundSet { labels, index }))
    }

    /// Ground set `1..=n` with decimal labels, for tests and generators.
    pub fn numbered(n: usize) -> Arc<Self> {
        Self::new((1..=n).map(|i| i.to_string())).expect("nonempty")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::Usage(format!("unknown ground label `{label}`")))
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(|s| s.as_str())
    }

    /// Disjoint union, used by the two-sided configurations.
    pub fn union(a: &GroundSet, b: &GroundSet) -> Result<Arc<Self>> {
        for l in b.iter() {
            if a.contains(l) {
                return Err(Error::Usage(format!(
                    "ground sets must be disjoint; `{l}` occurs in both"
                )));
            }
        }
        Self::new(a.iter().chain(b.iter()).map(str::to_owned))
    }

    /// Two disjoint copies `x@l`, `x@r` of this ground set, left copy first.
    pub fn doubled(&self) -> (Arc<Self>, Arc<Self>, Arc<Self>) {
        let left: Vec<String> = self.iter().map(|l| format!("{l}@l")).collect();
        let right: Vec<String> = self.iter().map(|l| format!("{l}@r")).collect();
        let l = Self::new(left.clone()).expect("copy of nonempty set");
        let r = Self::new(right.clone()).expect("copy of nonempty set");
        let both = Self::new(left.into_iter().chain(right)).expect("disjoint copies");
        (l, r, both)
    }

    /// The ground set of all nonempty subsets of this set, ordered by
    /// (cardinality, lexicographic position).  Labels look like `{a,b}`.
    pub fn nonempty_subsets(&self) -> Arc<Self> {
        let n = self.len();
        let mut masks: Vec<u64> = (1..(1u64 << n)).collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        Self::new(masks.iter().map(|&m| self.subset_label(m))).expect("nonempty powerset")
    }

    /// Canonical label of a subset given as a bitmask over this ground set.
    pub fn subset_label(&self, mask: u64) -> String {
        let mut parts = Vec::new();
        for i in 0..self.len() {
            if mask & (1 << i) != 0 {
                parts.push(self.labels[i].clone());
            }
        }
        format!("{{{}}}", parts.join(","))
    }

    /// Parse a subset label like `{a,b}` back into a bitmask.
    pub fn parse_subset_label(&self, label: &str) -> Result<u64> {
        let inner = label
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("subset label `{label}` must be braced")))?;
        let mut mask = 0u64;
        if inner.trim().is_empty() {
            return Ok(0);
        }
        for part in inner.split(',') {
            let i = self.require(part.trim())?;
            mask |= 1 << i;
        }
        Ok(mask)
    }
}

impl std::hash::Hash for GroundSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.labels.hash(state);
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroundSet{:?}", self.labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_indexing() {
        let g = GroundSet::new(["a", "b", "c"]).unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(g.index_of("b"), Some(1));
        assert!(GroundSet::new(["a", "a"]).is_err());
        assert!(GroundSet::new(Vec::<String>::new()).is_err());
    }

    #[test]
    fn powerset_ground() {
        let g = GroundSet::numbered(2);
        let p = g.nonempty_subsets();
        assert_eq!(p.labels(), &["{1}", "{2}", "{1,2}"]);
        assert_eq!(p.len(), 3);
        let y3 = GroundSet::numbered(3);
        assert_eq!(y3.nonempty_subsets().len(), 7);
    }

    #[test]
    fn doubled_copies() {
        let g = GroundSet::numbered(2);
        let (l, r, both) = g.doubled();
        assert_eq!(l.labels(), &["1@l", "2@l"]);
        assert_eq!(r.labels(), &["1@r", "2@r"]);
        assert_eq!(both.len(), 4);
    }
}
