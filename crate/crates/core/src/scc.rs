//! Strongly connected components.

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use crate::cfg::{Cfg, NodeId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Members in ascending index order.
    pub nodes: Vec<NodeId>,
    /// A singleton inducing no edge (no self-loop).
    pub trivial: bool,
    /// No edge leaves the component.
    pub terminal: bool,
}

/// A partition of the nodes into SCCs.
#[derive(Clone, Debug)]
pub struct SccPartition {
    component_of: Vec<usize>,
    components: Vec<Component>,
}

impl SccPartition {
    /// Partition of an arbitrary digraph given as adjacency lists over
    /// `0..adj.len()`.
    pub fn from_adjacency(adj: &[Vec<usize>]) -> SccPartition {
        let mut pg: DiGraph<(), ()> = DiGraph::with_capacity(adj.len(), 0);
        for _ in 0..adj.len() {
            pg.add_node(());
        }
        for (i, out) in adj.iter().enumerate() {
            for &j in out {
                pg.add_edge(NodeIndex::new(i), NodeIndex::new(j), ());
            }
        }
        let mut component_of = vec![usize::MAX; adj.len()];
        let mut members: Vec<Vec<NodeId>> = tarjan_scc(&pg)
            .into_iter()
            .map(|c| {
                let mut v: Vec<_> = c.into_iter().map(|ix| NodeId::new(ix.index())).collect();
                v.sort_unstable();
                v
            })
            .collect();
        // Number components by their smallest member for stable ids.
        members.sort_unstable_by_key(|c| c[0]);
        for (cid, c) in members.iter().enumerate() {
            for n in c {
                component_of[n.index()] = cid;
            }
        }
        let components = members
            .into_iter()
            .enumerate()
            .map(|(cid, nodes)| {
                let mut internal_edge = false;
                let mut leaves = false;
                for n in &nodes {
                    for &m in &adj[n.index()] {
                        if component_of[m] == cid {
                            internal_edge = true;
                        } else {
                            leaves = true;
                        }
                    }
                }
                Component {
                    trivial: !internal_edge,
                    terminal: !leaves,
                    nodes,
                }
            })
            .collect();
        SccPartition {
            component_of,
            components,
        }
    }

    pub fn component_of(&self, n: NodeId) -> usize {
        self.component_of[n.index()]
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component(&self, id: usize) -> &Component {
        &self.components[id]
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn same_component(&self, a: NodeId, b: NodeId) -> bool {
        self.component_of(a) == self.component_of(b)
    }
}

pub fn sccs(g: &Cfg) -> SccPartition {
    let adj: Vec<Vec<usize>> = g
        .nodes()
        .map(|n| g.successors(n).iter().map(|m| m.index()).collect())
        .collect();
    SccPartition::from_adjacency(&adj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn describe(g: &Cfg, p: &SccPartition) -> Vec<(Vec<String>, bool, bool)> {
        p.components()
            .iter()
            .map(|c| {
                let mut labels: Vec<_> = c.nodes.iter().map(|&n| g.label(n).to_owned()).collect();
                labels.sort();
                (labels, c.trivial, c.terminal)
            })
            .collect()
    }

    #[test]
    fn two_entry_cycle_components() {
        let g = fixtures::two_entry_cycle();
        let p = sccs(&g);
        assert_eq!(
            describe(&g, &p),
            vec![
                (vec!["a".into()], true, false),
                (vec!["b".into(), "c".into()], false, true),
            ]
        );
    }

    #[test]
    fn chain_is_all_trivial() {
        let g = Cfg::from_edges(&["x", "y", "z"], &[("x", "y"), ("y", "z")]).unwrap();
        let p = sccs(&g);
        assert_eq!(p.len(), 3);
        assert!(p.components().iter().all(|c| c.trivial));
        let z = p.component(p.component_of(g.node("z").unwrap()));
        assert!(z.terminal);
        let y = p.component(p.component_of(g.node("y").unwrap()));
        assert!(!y.terminal);
    }

    #[test]
    fn self_loop_detour_self_loop_is_nontrivial() {
        let g = fixtures::self_loop_detour();
        let p = sccs(&g);
        let d = p.component(p.component_of(g.node("d").unwrap()));
        assert_eq!(d.nodes.len(), 1);
        assert!(!d.trivial);
        assert!(!d.terminal);
        let e = p.component(p.component_of(g.node("e").unwrap()));
        assert!(e.trivial && e.terminal);
    }
}
