//! Backward coloring of the nodes whose every maximal path hits a target.
//!
//! Targets start red. A node turns red once all of its (distinct)
//! successors are red and it has at least one successor. Each node keeps a
//! counter of successors that are not red yet; when a node turns red, the
//! counters of its predecessors are decremented. At the fixpoint a node is
//! red exactly when all maximal paths from it contain a target.
//!
//! Only uncolored nodes react to a decrement. A target sitting on a cycle
//! would otherwise "turn red" a second time and decrement its predecessors
//! twice.

use std::collections::VecDeque;

use crate::cfg::{Cfg, NodeId};
use crate::error::AnalysisError;
use crate::set::NodeSet;

/// Reusable scratch state for repeated colorings of one graph.
pub struct Coloring<'g> {
    g: &'g Cfg,
    counter: Vec<u32>,
    red: NodeSet,
    stack: Vec<NodeId>,
    visits: usize,
}

impl<'g> Coloring<'g> {
    pub fn new(g: &'g Cfg) -> Self {
        Coloring {
            g,
            counter: vec![0; g.node_count()],
            red: g.empty_set(),
            stack: Vec::new(),
            visits: 0,
        }
    }

    /// Colors from scratch with the given seed set. An empty seed leaves
    /// everything uncolored.
    pub fn run(&mut self, targets: impl IntoIterator<Item = NodeId>) {
        let g = self.g;
        for n in g.nodes() {
            self.counter[n.index()] = g.successors(n).len() as u32;
        }
        self.red.clear();
        self.visits = 0;
        self.stack.clear();
        for t in targets {
            if self.red.insert(t) {
                self.stack.push(t);
            }
        }
        while let Some(n) = self.stack.pop() {
            for &m in g.predecessors(n) {
                self.visits += 1;
                if self.red.contains(m) {
                    continue;
                }
                let c = &mut self.counter[m.index()];
                *c -= 1;
                if *c == 0 {
                    self.red.insert(m);
                    self.stack.push(m);
                }
            }
        }
    }

    #[inline]
    pub fn is_red(&self, n: NodeId) -> bool {
        self.red.contains(n)
    }

    pub fn red(&self) -> &NodeSet {
        &self.red
    }

    /// Number of predecessor visits made by the last run.
    pub fn visits(&self) -> usize {
        self.visits
    }
}

/// Nodes from which every maximal path contains some node of `targets`.
pub fn color_all_paths_contain(g: &Cfg, targets: &NodeSet) -> Result<NodeSet, AnalysisError> {
    if targets.is_empty() {
        return Err(AnalysisError::EmptyTargets);
    }
    let mut c = Coloring::new(g);
    c.run(targets.iter());
    Ok(c.red)
}

/// For every node `n`, the set of nodes lying on all maximal paths from `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VpMap {
    sets: Vec<NodeSet>,
}

impl VpMap {
    /// Set of nodes on all maximal paths from `n`.
    pub fn of(&self, n: NodeId) -> &NodeSet {
        &self.sets[n.index()]
    }

    /// Whether `m` lies on all maximal paths from `n`.
    #[inline]
    pub fn on_all_paths(&self, n: NodeId, m: NodeId) -> bool {
        self.sets[n.index()].contains(m)
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// One coloring per node; every red node collects the seed's mark.
pub fn vp_sets(g: &Cfg) -> VpMap {
    let n = g.node_count();
    let mut sets = vec![NodeSet::new(n); n];
    let mut c = Coloring::new(g);
    for target in g.nodes() {
        c.run([target]);
        for m in c.red().iter() {
            sets[m.index()].insert(target);
        }
    }
    VpMap { sets }
}

/// Whether every maximal path from `s` contains `first`, with no `then`
/// before its first occurrence.
pub fn first_before_on_all(
    g: &Cfg,
    s: NodeId,
    first: NodeId,
    then: NodeId,
) -> Result<bool, AnalysisError> {
    if first == then {
        return Err(AnalysisError::SameNode);
    }
    let mut c = Coloring::new(g);
    c.run([first]);
    Ok(c.is_red(s) && !reaches_avoiding(g, s, then, first))
}

/// Whether a finite path `from .. to` exists that does not pass `avoid`.
/// `from == avoid` never reaches.
pub(crate) fn reaches_avoiding(g: &Cfg, from: NodeId, to: NodeId, avoid: NodeId) -> bool {
    if from == avoid {
        return false;
    }
    reach_avoiding(g, from, avoid).contains(to)
}

/// Nodes reachable from `from` in the graph with `avoid` deleted.
pub(crate) fn reach_avoiding(g: &Cfg, from: NodeId, avoid: NodeId) -> NodeSet {
    let mut seen = g.empty_set();
    if from == avoid {
        return seen;
    }
    let mut queue = VecDeque::from([from]);
    seen.insert(from);
    while let Some(n) = queue.pop_front() {
        for &m in g.successors(n) {
            if m != avoid && seen.insert(m) {
                queue.push_back(m);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn red_labels(g: &Cfg, targets: &[&str]) -> Vec<String> {
        let t = g.set_from_labels(targets).unwrap();
        color_all_paths_contain(g, &t)
            .unwrap()
            .labels(g)
            .into_iter()
            .map(str::to_owned)
            .collect()
    }

    #[test]
    fn nested_diamond_all_paths_to_5() {
        let g = fixtures::nested_diamond();
        assert_eq!(red_labels(&g, &["5"]), ["2", "3", "4", "5"]);
    }

    #[test]
    fn self_loop_detour_only_e_reaches_e_surely() {
        let g = fixtures::self_loop_detour();
        assert_eq!(red_labels(&g, &["e"]), ["e"]);
    }

    #[test]
    fn unreachable_target_colors_only_itself() {
        let g = Cfg::from_edges(&["x", "y"], &[("x", "y")]).unwrap();
        assert_eq!(red_labels(&g, &["x"]), ["x"]);
    }

    #[test]
    fn empty_targets_is_an_error() {
        let g = fixtures::nested_diamond();
        assert_eq!(
            color_all_paths_contain(&g, &g.empty_set()),
            Err(AnalysisError::EmptyTargets)
        );
    }

    #[test]
    fn self_loop_seed_does_not_double_count() {
        // m -> n, m -> x; n loops. Not every path from m contains n.
        let g = Cfg::from_edges(&["n", "m", "x"], &[("n", "n"), ("m", "n"), ("m", "x")]).unwrap();
        assert_eq!(red_labels(&g, &["n"]), ["n"]);
    }

    #[test]
    fn nested_diamond_vp_sets() {
        let g = fixtures::nested_diamond();
        let vp = vp_sets(&g);
        let expect: &[(&str, &[&str])] = &[
            ("1", &["1", "6"]),
            ("2", &["2", "5", "6"]),
            ("3", &["3", "5", "6"]),
            ("4", &["4", "5", "6"]),
            ("5", &["5", "6"]),
            ("6", &["6"]),
        ];
        for (n, set) in expect {
            assert_eq!(vp.of(g.node(n).unwrap()).labels(&g), *set, "V_{n}");
        }
    }

    #[test]
    fn two_entry_cycle_vp_sets() {
        let g = fixtures::two_entry_cycle();
        let vp = vp_sets(&g);
        let l = |n: &str| vp.of(g.node(n).unwrap()).labels(&g);
        assert_eq!(l("a"), ["a", "b", "c"]);
        assert_eq!(l("b"), ["b", "c"]);
        assert_eq!(l("c"), ["b", "c"]);
    }

    #[test]
    fn edgeless_vp_sets_are_singletons() {
        let g = Cfg::from_edges(&["a", "b", "c"], &[]).unwrap();
        let vp = vp_sets(&g);
        for n in g.nodes() {
            assert_eq!(vp.of(n).iter().collect::<Vec<_>>(), [n]);
        }
    }

    #[test]
    fn first_before_examples() {
        let g = fixtures::cycle_with_exit();
        let n = |l: &str| g.node(l).unwrap();
        assert!(first_before_on_all(&g, n("a"), n("a"), n("b")).unwrap());
        assert!(first_before_on_all(&g, n("b"), n("b"), n("a")).unwrap());

        let g = fixtures::nested_diamond();
        let n = |l: &str| g.node(l).unwrap();
        assert!(!first_before_on_all(&g, n("2"), n("3"), n("5")).unwrap());
        assert!(first_before_on_all(&g, n("3"), n("3"), n("5")).unwrap());
        assert!(first_before_on_all(&g, n("2"), n("5"), n("6")).unwrap());
        assert_eq!(
            first_before_on_all(&g, n("2"), n("5"), n("5")),
            Err(AnalysisError::SameNode)
        );
    }

    #[test]
    fn visits_bounded_by_edges() {
        let g = fixtures::strip_cycle();
        let mut c = Coloring::new(&g);
        for n in g.nodes() {
            c.run([n]);
            assert!(c.visits() <= g.edge_count());
        }
    }
}
