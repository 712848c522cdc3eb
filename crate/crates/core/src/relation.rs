//! Dependence relations.
//!
//! Both relations store dense node ids. Labeled views sort by label so
//! output is stable regardless of node numbering.

use std::collections::BTreeSet;

use crate::cfg::{Cfg, NodeId};

/// Pairs `(p, n)`: node `n` is non-termination sensitive control dependent
/// on predicate `p`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NtscdRelation {
    pairs: BTreeSet<(NodeId, NodeId)>,
}

impl NtscdRelation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, p: NodeId, n: NodeId) -> bool {
        self.pairs.insert((p, n))
    }

    pub fn contains(&self, p: NodeId, n: NodeId) -> bool {
        self.pairs.contains(&(p, n))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn extend(&mut self, other: &NtscdRelation) {
        self.pairs.extend(other.pairs.iter().copied());
    }

    /// `[p, n]` label pairs in lexicographic order.
    pub fn to_labels(&self, g: &Cfg) -> Vec<[String; 2]> {
        let mut v: Vec<_> = self
            .iter()
            .map(|(p, n)| [g.label(p).to_owned(), g.label(n).to_owned()])
            .collect();
        v.sort();
        v
    }

    /// Panics on unknown labels. Intended for tests and fixtures.
    pub fn from_labels(g: &Cfg, pairs: &[(&str, &str)]) -> Self {
        let mut r = Self::new();
        for (p, n) in pairs {
            r.insert(
                g.node(p).expect("known label"),
                g.node(n).expect("known label"),
            );
        }
        r
    }
}

impl FromIterator<(NodeId, NodeId)> for NtscdRelation {
    fn from_iter<I: IntoIterator<Item = (NodeId, NodeId)>>(iter: I) -> Self {
        NtscdRelation {
            pairs: iter.into_iter().collect(),
        }
    }
}

/// Triples `(p, {a, b})`: the unordered pair `a, b` is decisive order
/// dependent on predicate `p`.
///
/// Stored with `a < b` by dense id; [`DodRelation::to_labels`] renormalizes
/// by label.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DodRelation {
    triples: BTreeSet<(NodeId, NodeId, NodeId)>,
}

impl DodRelation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, p: NodeId, a: NodeId, b: NodeId) -> bool {
        debug_assert!(
            p != a && p != b && a != b,
            "DOD triple needs three distinct nodes"
        );
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        self.triples.insert((p, a, b))
    }

    /// Order of `a`, `b` does not matter.
    pub fn contains(&self, p: NodeId, a: NodeId, b: NodeId) -> bool {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        self.triples.contains(&(p, a, b))
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (NodeId, NodeId, NodeId)> + '_ {
        self.triples.iter().copied()
    }

    pub fn extend(&mut self, other: &DodRelation) {
        self.triples.extend(other.triples.iter().copied());
    }

    pub fn is_superset(&self, other: &DodRelation) -> bool {
        self.triples.is_superset(&other.triples)
    }

    /// `[p, a, b]` with `a < b` by label, sorted lexicographically.
    pub fn to_labels(&self, g: &Cfg) -> Vec<[String; 3]> {
        let mut v: Vec<_> = self
            .iter()
            .map(|(p, a, b)| {
                let (a, b) = (g.label(a), g.label(b));
                let (a, b) = if a <= b { (a, b) } else { (b, a) };
                [g.label(p).to_owned(), a.to_owned(), b.to_owned()]
            })
            .collect();
        v.sort();
        v
    }

    /// Panics on unknown labels. Intended for tests and fixtures.
    pub fn from_labels(g: &Cfg, triples: &[(&str, &str, &str)]) -> Self {
        let mut r = Self::new();
        for (p, a, b) in triples {
            let n = |l: &str| g.node(l).expect("known label");
            r.insert(n(p), n(a), n(b));
        }
        r
    }
}
