//! Control flow graphs.
//!
//! A [`Cfg`] is a finite directed graph in which every node has at most two
//! outgoing edges. There is no distinguished start or exit node. Out-edges
//! are kept in insertion order because the worklist algorithm of
//! [`crate::ranganath`] is sensitive to successor order.
//!
//! Nodes carry string labels externally and dense [`NodeId`] indices
//! internally. Every analysis in this crate works on indices; labels only
//! matter for I/O and for deterministic output ordering.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::CfgError;
use crate::set::NodeSet;

/// Dense index of a node, in `0..g.node_count()`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(u32);

impl NodeId {
    pub fn new(index: usize) -> Self {
        NodeId(u32::try_from(index).expect("node index overflows u32"))
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Maximum number of out-edges of a CFG node.
pub const MAX_OUT_DEGREE: usize = 2;

/// An immutable control flow graph.
#[derive(Clone)]
pub struct Cfg {
    labels: Vec<String>,
    lookup: HashMap<String, NodeId>,
    /// Out-edges in insertion order, possibly with a repeated target.
    edges: Vec<Vec<NodeId>>,
    /// Distinct successors, first-occurrence order.
    succs: Vec<Vec<NodeId>>,
    /// Distinct predecessors.
    preds: Vec<Vec<NodeId>>,
    edge_count: usize,
}

impl Cfg {
    /// Builds a graph from label lists. Mostly useful in tests.
    pub fn from_edges<S: AsRef<str>>(nodes: &[S], edges: &[(S, S)]) -> Result<Cfg, CfgError> {
        let mut b = CfgBuilder::new();
        for n in nodes {
            b.add_node(n.as_ref())?;
        }
        for (src, dst) in edges {
            b.add_edge_by_label(src.as_ref(), dst.as_ref())?;
        }
        Ok(b.build())
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn nodes(&self) -> impl DoubleEndedIterator<Item = NodeId> + ExactSizeIterator + '_ {
        (0..self.labels.len()).map(NodeId::new)
    }

    pub fn label(&self, n: NodeId) -> &str {
        &self.labels[n.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn node(&self, label: &str) -> Option<NodeId> {
        self.lookup.get(label).copied()
    }

    /// Looks up a node by label, failing with [`CfgError::UndeclaredNode`].
    pub fn require(&self, label: &str) -> Result<NodeId, CfgError> {
        self.node(label)
            .ok_or_else(|| CfgError::UndeclaredNode(label.to_owned()))
    }

    /// Out-edges of `n` exactly as given, in order.
    pub fn out_edges(&self, n: NodeId) -> &[NodeId] {
        &self.edges[n.index()]
    }

    /// Distinct successors of `n` in edge order.
    pub fn successors(&self, n: NodeId) -> &[NodeId] {
        &self.succs[n.index()]
    }

    /// Distinct predecessors of `n`.
    pub fn predecessors(&self, n: NodeId) -> &[NodeId] {
        &self.preds[n.index()]
    }

    /// A predicate has two out-edges with distinct targets.
    pub fn is_predicate(&self, n: NodeId) -> bool {
        self.succs[n.index()].len() == 2
    }

    /// The two successors of a predicate, in edge order.
    pub fn branch_targets(&self, p: NodeId) -> Option<(NodeId, NodeId)> {
        match self.successors(p) {
            &[s1, s2] => Some((s1, s2)),
            _ => None,
        }
    }

    /// All predicates in node order.
    pub fn predicates(&self) -> Vec<NodeId> {
        self.nodes().filter(|&n| self.is_predicate(n)).collect()
    }

    /// Iterates over all edges `(src, dst)` in node order, then edge order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.nodes()
            .flat_map(move |n| self.out_edges(n).iter().map(move |&m| (n, m)))
    }

    pub fn empty_set(&self) -> NodeSet {
        NodeSet::new(self.node_count())
    }

    pub fn set_of(&self, nodes: impl IntoIterator<Item = NodeId>) -> NodeSet {
        NodeSet::from_nodes(self.node_count(), nodes)
    }

    /// Resolves a list of labels into a node set.
    pub fn set_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<NodeSet, CfgError> {
        let mut set = self.empty_set();
        for l in labels {
            set.insert(self.require(l.as_ref())?);
        }
        Ok(set)
    }

    /// All nodes reachable from `n` by a finite path, `n` included.
    pub fn reachable_set(&self, n: NodeId) -> NodeSet {
        self.reachable_from(std::iter::once(n))
    }

    /// All nodes reachable from any node in `from`, the sources included.
    pub fn reachable_from(&self, from: impl IntoIterator<Item = NodeId>) -> NodeSet {
        let mut seen = self.empty_set();
        let mut queue = VecDeque::new();
        for n in from {
            if seen.insert(n) {
                queue.push_back(n);
            }
        }
        while let Some(n) = queue.pop_front() {
            for &m in self.successors(n) {
                if seen.insert(m) {
                    queue.push_back(m);
                }
            }
        }
        seen
    }

    /// Sorts nodes by label, the canonical order of all emitted output.
    pub fn sort_by_label(&self, nodes: &mut [NodeId]) {
        nodes.sort_by(|&a, &b| self.label(a).cmp(self.label(b)));
    }
}

impl PartialEq for Cfg {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.edges == other.edges
    }
}

impl Eq for Cfg {}

impl fmt::Debug for Cfg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self
            .edges()
            .map(|(a, b)| (self.label(a), self.label(b)))
            .collect();
        f.debug_struct("Cfg")
            .field("nodes", &self.labels)
            .field("edges", &edges)
            .finish()
    }
}

/// Checks that a label survives both textual formats.
pub fn validate_label(label: &str) -> Result<(), CfgError> {
    let bad = label.is_empty()
        || label
            .chars()
            .any(|c| c.is_whitespace() || c == ',' || c == '#');
    if bad {
        Err(CfgError::InvalidLabel(label.to_owned()))
    } else {
        Ok(())
    }
}

/// Incremental construction of a [`Cfg`].
#[derive(Default, Debug)]
pub struct CfgBuilder {
    labels: Vec<String>,
    lookup: HashMap<String, NodeId>,
    edges: Vec<Vec<NodeId>>,
}

impl CfgBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(nodes: usize) -> Self {
        CfgBuilder {
            labels: Vec::with_capacity(nodes),
            lookup: HashMap::with_capacity(nodes),
            edges: Vec::with_capacity(nodes),
        }
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn out_degree(&self, n: NodeId) -> usize {
        self.edges[n.index()].len()
    }

    /// Declares a new node. Labels must be unique.
    pub fn add_node(&mut self, label: impl Into<String>) -> Result<NodeId, CfgError> {
        let label = label.into();
        validate_label(&label)?;
        if self.lookup.contains_key(&label) {
            return Err(CfgError::DuplicateNode(label));
        }
        let id = NodeId::new(self.labels.len());
        self.lookup.insert(label.clone(), id);
        self.labels.push(label);
        self.edges.push(Vec::new());
        Ok(id)
    }

    /// Returns the node with this label, declaring it first if needed.
    pub fn node_or_insert(&mut self, label: &str) -> Result<NodeId, CfgError> {
        match self.lookup.get(label) {
            Some(&id) => Ok(id),
            None => self.add_node(label),
        }
    }

    pub fn add_edge(&mut self, src: NodeId, dst: NodeId) -> Result<(), CfgError> {
        assert!(dst.index() < self.labels.len(), "edge target out of range");
        let out = &mut self.edges[src.index()];
        if out.len() >= MAX_OUT_DEGREE {
            return Err(CfgError::OutDegreeExceeded(
                self.labels[src.index()].clone(),
            ));
        }
        out.push(dst);
        Ok(())
    }

    pub fn add_edge_by_label(&mut self, src: &str, dst: &str) -> Result<(), CfgError> {
        let s = *self
            .lookup
            .get(src)
            .ok_or_else(|| CfgError::UndeclaredNode(src.to_owned()))?;
        let d = *self
            .lookup
            .get(dst)
            .ok_or_else(|| CfgError::UndeclaredNode(dst.to_owned()))?;
        self.add_edge(s, d)
    }

    pub fn build(self) -> Cfg {
        let n = self.labels.len();
        let mut succs = Vec::with_capacity(n);
        let mut preds: Vec<Vec<NodeId>> = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (i, out) in self.edges.iter().enumerate() {
            edge_count += out.len();
            let mut distinct: Vec<NodeId> = Vec::with_capacity(out.len());
            for &m in out {
                if !distinct.contains(&m) {
                    distinct.push(m);
                    preds[m.index()].push(NodeId::new(i));
                }
            }
            succs.push(distinct);
        }
        Cfg {
            labels: self.labels,
            lookup: self.lookup,
            edges: self.edges,
            succs,
            preds,
            edge_count,
        }
    }
}
