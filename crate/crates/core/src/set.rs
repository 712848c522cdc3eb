//! Fixed-capacity node sets over dense indices.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::cfg::{Cfg, NodeId};

/// A set of nodes of one graph, stored as a bit set over dense indices.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NodeSet(FixedBitSet);

impl NodeSet {
    pub fn new(capacity: usize) -> Self {
        NodeSet(FixedBitSet::with_capacity(capacity))
    }

    pub fn full(capacity: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(capacity);
        bits.insert_range(..);
        NodeSet(bits)
    }

    pub fn from_nodes(capacity: usize, nodes: impl IntoIterator<Item = NodeId>) -> Self {
        let mut set = NodeSet::new(capacity);
        for n in nodes {
            set.insert(n);
        }
        set
    }

    pub fn capacity(&self) -> usize {
        self.0.len()
    }

    /// Inserts `n`, returning `true` if it was not present.
    #[inline]
    pub fn insert(&mut self, n: NodeId) -> bool {
        !self.0.put(n.index())
    }

    #[inline]
    pub fn remove(&mut self, n: NodeId) {
        self.0.set(n.index(), false);
    }

    #[inline]
    pub fn contains(&self, n: NodeId) -> bool {
        self.0.contains(n.index())
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn clear(&mut self) {
        self.0.clear();
    }

    pub fn iter(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.0.ones().map(NodeId::new)
    }

    pub fn is_subset(&self, other: &NodeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &NodeSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union_with(&mut self, other: &NodeSet) {
        self.0.union_with(&other.0);
    }

    pub fn intersect_with(&mut self, other: &NodeSet) {
        self.0.intersect_with(&other.0);
    }

    /// Nodes in `self` but not in `other`.
    pub fn difference<'a>(&'a self, other: &'a NodeSet) -> impl Iterator<Item = NodeId> + 'a {
        self.0.difference(&other.0).map(NodeId::new)
    }

    /// Members sorted by label.
    pub fn sorted(&self, g: &Cfg) -> Vec<NodeId> {
        let mut v: Vec<_> = self.iter().collect();
        g.sort_by_label(&mut v);
        v
    }

    /// Member labels, sorted.
    pub fn labels<'g>(&self, g: &'g Cfg) -> Vec<&'g str> {
        let mut v: Vec<_> = self.iter().map(|n| g.label(n)).collect();
        v.sort_unstable();
        v
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.ones()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_reports_novelty() {
        let mut s = NodeSet::new(4);
        assert!(s.insert(NodeId::new(2)));
        assert!(!s.insert(NodeId::new(2)));
        assert_eq!(s.len(), 1);
        assert!(s.contains(NodeId::new(2)));
        s.remove(NodeId::new(2));
        assert!(s.is_empty());
    }

    #[test]
    fn full_and_difference() {
        let all = NodeSet::full(3);
        let one = NodeSet::from_nodes(3, [NodeId::new(1)]);
        let rest: Vec<_> = all.difference(&one).map(NodeId::index).collect();
        assert_eq!(rest, [0, 2]);
        assert!(one.is_subset(&all));
    }
}
