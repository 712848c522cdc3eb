//! Decisive order dependence in `O(|V|^3)`.
//!
//! For a predicate `p` let `V_p` be the nodes on all maximal paths from `p`.
//! The projection graph `A_p` has the nodes `V_p` and an edge `x -> y`
//! whenever `G` has a path from `x` to `y` with at least one edge whose
//! interior avoids `V_p`. `A_p` preserves the order of first occurrences of
//! `V_p` nodes along maximal paths, and when `p` has two or more successors
//! in it, `A_p` is `p` plus a single cycle.
//!
//! `V1` (`V2`) are the first `V_p` nodes reachable from the first (second)
//! CFG successor of `p` through nodes outside `V_p`. Walking the cycle from
//! a `V1` node and classifying each node as `V1`, `V2` or neither (`U`),
//! some pair is DOD on `p` iff the class word reads `V1+ V2+ V1*` with `U`s
//! ignored. The dependent pairs are then the product of two segments: the
//! run from the last `V1` before the `V2` block up to that block, and the
//! run from the last `V2` of the block up to the next `V1`.

use crate::cfg::{Cfg, NodeId};
use crate::error::AnalysisError;
use crate::maximal_paths::{vp_sets, VpMap};
use crate::ntscd::ntscd_for_predicate;
use crate::relation::{DodRelation, NtscdRelation};
use crate::scc::SccPartition;
use crate::set::NodeSet;

/// `A_p`: the projection graph of `V_p`.
#[derive(Clone, Debug)]
pub struct ProjectionGraph {
    predicate: NodeId,
    members: NodeSet,
    /// `V_p` in ascending id order; local indices refer to this.
    nodes: Vec<NodeId>,
    local: Vec<u32>,
    succ: Vec<Vec<u32>>,
}

impl ProjectionGraph {
    pub fn predicate(&self) -> NodeId {
        self.predicate
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    pub fn members(&self) -> &NodeSet {
        &self.members
    }

    pub fn contains(&self, n: NodeId) -> bool {
        self.members.contains(n)
    }

    fn local_of(&self, n: NodeId) -> usize {
        debug_assert!(self.contains(n));
        self.local[n.index()] as usize
    }

    pub fn successors(&self, n: NodeId) -> impl ExactSizeIterator<Item = NodeId> + '_ {
        self.succ[self.local_of(n)]
            .iter()
            .map(|&j| self.nodes[j as usize])
    }

    pub fn out_degree(&self, n: NodeId) -> usize {
        self.succ[self.local_of(n)].len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.succ.iter().enumerate().flat_map(move |(i, out)| {
            out.iter()
                .map(move |&j| (self.nodes[i], self.nodes[j as usize]))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }
}

/// Builds `A_p` by a search from every `V_p` node that stops at `V_p` nodes.
pub fn build_ap(g: &Cfg, p: NodeId, vp_of_p: &NodeSet) -> ProjectionGraph {
    let nodes: Vec<NodeId> = vp_of_p.iter().collect();
    let mut local = vec![u32::MAX; g.node_count()];
    for (i, n) in nodes.iter().enumerate() {
        local[n.index()] = i as u32;
    }
    let mut stamp = vec![u32::MAX; g.node_count()];
    let mut stack = Vec::new();
    let mut succ = Vec::with_capacity(nodes.len());
    for (i, &n) in nodes.iter().enumerate() {
        let tag = i as u32;
        let mut out: Vec<u32> = Vec::new();
        stack.clear();
        for &s in g.successors(n) {
            if stamp[s.index()] != tag {
                stamp[s.index()] = tag;
                stack.push(s);
            }
        }
        while let Some(x) = stack.pop() {
            if vp_of_p.contains(x) {
                out.push(local[x.index()]);
                continue;
            }
            for &y in g.successors(x) {
                if stamp[y.index()] != tag {
                    stamp[y.index()] = tag;
                    stack.push(y);
                }
            }
        }
        out.sort_unstable();
        succ.push(out);
    }
    ProjectionGraph {
        predicate: p,
        members: vp_of_p.clone(),
        nodes,
        local,
        succ,
    }
}

/// Role of a `V_p` node relative to the two CFG successors of `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeClass {
    V1,
    V2,
    U,
}

/// The first-reached sets `V1`, `V2` and the rest `U` of `V_p \ {p}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuccessorClasses {
    pub v1: NodeSet,
    pub v2: NodeSet,
    pub u: NodeSet,
}

impl SuccessorClasses {
    /// Class of a cycle node. Assumes `V1` and `V2` are disjoint.
    pub fn class_of(&self, n: NodeId) -> NodeClass {
        if self.v1.contains(n) {
            NodeClass::V1
        } else if self.v2.contains(n) {
            NodeClass::V2
        } else {
            NodeClass::U
        }
    }
}

fn first_reached(g: &Cfg, s: NodeId, members: &NodeSet) -> NodeSet {
    let mut hits = g.empty_set();
    if members.contains(s) {
        hits.insert(s);
        return hits;
    }
    let mut seen = g.empty_set();
    seen.insert(s);
    let mut stack = vec![s];
    while let Some(x) = stack.pop() {
        for &y in g.successors(x) {
            if members.contains(y) {
                hits.insert(y);
            } else if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    hits
}

/// `V1`, `V2` and `U` for predicate `p`.
pub fn compute_v1_v2(g: &Cfg, p: NodeId, vp_of_p: &NodeSet) -> SuccessorClasses {
    let (s1, s2) = g.branch_targets(p).expect("p is a predicate");
    let v1 = first_reached(g, s1, vp_of_p);
    let v2 = first_reached(g, s2, vp_of_p);
    let mut u = vp_of_p.clone();
    u.remove(p);
    for n in v1.iter().chain(v2.iter()) {
        u.remove(n);
    }
    SuccessorClasses { v1, v2, u }
}

fn violation(g: &Cfg, ap: &ProjectionGraph, detail: String) -> AnalysisError {
    AnalysisError::StructureViolation {
        predicate: g.label(ap.predicate()).to_owned(),
        detail,
    }
}

/// Walks the cycle of `A_p` once, starting at the smallest-label node of
/// `v1`.
pub fn unfold_cycle(
    g: &Cfg,
    ap: &ProjectionGraph,
    v1: &NodeSet,
) -> Result<Vec<NodeId>, AnalysisError> {
    let p = ap.predicate();
    let start = v1
        .iter()
        .min_by(|&a, &b| g.label(a).cmp(g.label(b)))
        .ok_or_else(|| violation(g, ap, "empty V1".into()))?;
    if start == p || !ap.contains(start) {
        return Err(violation(
            g,
            ap,
            format!("start {} is not a cycle node", g.label(start)),
        ));
    }
    let expected = ap.nodes().len() - 1;
    let mut seq = Vec::with_capacity(expected);
    let mut seen = g.empty_set();
    let mut cur = start;
    loop {
        if !seen.insert(cur) {
            return Err(violation(g, ap, format!("walk revisits {}", g.label(cur))));
        }
        seq.push(cur);
        let mut succ = ap.successors(cur);
        let next = match (succ.len(), succ.next()) {
            (1, Some(next)) if next != p => next,
            (k, _) => {
                return Err(violation(
                    g,
                    ap,
                    format!(
                        "{} has {k} successor(s) in A_p, expected one cycle successor",
                        g.label(cur)
                    ),
                ))
            }
        };
        if next == start {
            break;
        }
        cur = next;
    }
    if seq.len() != expected {
        return Err(violation(
            g,
            ap,
            format!("cycle covers {} of {} nodes", seq.len(), expected),
        ));
    }
    Ok(seq)
}

/// Whether the class word of `seq` (from a `V1` node) is `V1+ V2+ V1*`
/// once `U`s are dropped.
pub fn match_unfolding_pattern(seq: &[NodeId], classes: &SuccessorClasses) -> bool {
    #[derive(PartialEq)]
    enum State {
        Leading,
        Middle,
        Trailing,
    }
    match seq.first() {
        Some(&n) if classes.class_of(n) == NodeClass::V1 => {}
        _ => return false,
    }
    let mut state = State::Leading;
    for &n in seq {
        match (classes.class_of(n), &state) {
            (NodeClass::U, _) => {}
            (NodeClass::V2, State::Leading) => state = State::Middle,
            (NodeClass::V2, State::Middle) => {}
            (NodeClass::V2, State::Trailing) => return false,
            (NodeClass::V1, State::Middle) => state = State::Trailing,
            (NodeClass::V1, _) => {}
        }
    }
    state != State::Leading
}

/// The two strip segments whose product is the DOD relation of `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripSegments {
    /// `V1 U*` prefix of the unique `V1 U* V2` path on the cycle.
    pub m_segment: Vec<NodeId>,
    /// `V2 U*` prefix of the unique `V2 U* V1` path on the cycle.
    pub o_segment: Vec<NodeId>,
}

/// Requires `match_unfolding_pattern(seq, classes)`.
pub fn extract_segments(seq: &[NodeId], classes: &SuccessorClasses) -> StripSegments {
    let class: Vec<NodeClass> = seq.iter().map(|&n| classes.class_of(n)).collect();
    let first_v2 = class
        .iter()
        .position(|&c| c == NodeClass::V2)
        .expect("pattern has a V2 node");
    let m_start = class[..first_v2]
        .iter()
        .rposition(|&c| c == NodeClass::V1)
        .expect("pattern starts with V1");
    let next_v1 = class[first_v2..]
        .iter()
        .position(|&c| c == NodeClass::V1)
        .map(|i| first_v2 + i);
    let block_end = next_v1.unwrap_or(seq.len());
    let o_start = first_v2
        + class[first_v2..block_end]
            .iter()
            .rposition(|&c| c == NodeClass::V2)
            .expect("block holds a V2 node");
    StripSegments {
        m_segment: seq[m_start..first_v2].to_vec(),
        o_segment: seq[o_start..block_end].to_vec(),
    }
}

/// Why a predicate has, or lacks, DOD pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PredicateVerdict {
    /// `p` has at most one successor in `A_p`.
    SingleEntry,
    /// `V1` and `V2` share a node.
    SharedEntry,
    /// The cycle unfolding does not have the required shape.
    PatternMismatch,
    Dependent(StripSegments),
}

/// Full DOD analysis of one predicate.
pub fn analyze_predicate(
    g: &Cfg,
    vp: &VpMap,
    p: NodeId,
) -> Result<PredicateVerdict, AnalysisError> {
    let members = vp.of(p);
    // Two successors in A_p means p plus a cycle of at least two nodes.
    if members.len() < 3 {
        return Ok(PredicateVerdict::SingleEntry);
    }
    let ap = build_ap(g, p, members);
    if ap.out_degree(p) <= 1 {
        return Ok(PredicateVerdict::SingleEntry);
    }
    if cfg!(debug_assertions) {
        check_ap_structure(g, &ap)?;
    }
    let classes = compute_v1_v2(g, p, members);
    if !classes.v1.is_disjoint(&classes.v2) {
        return Ok(PredicateVerdict::SharedEntry);
    }
    let seq = unfold_cycle(g, &ap, &classes.v1)?;
    if !match_unfolding_pattern(&seq, &classes) {
        return Ok(PredicateVerdict::PatternMismatch);
    }
    Ok(PredicateVerdict::Dependent(extract_segments(
        &seq, &classes,
    )))
}

/// Shape guaranteed when `p` has two or more successors in `A_p`: `p` is a
/// trivial SCC without incoming edges and the rest is one terminal cycle.
pub fn check_ap_structure(g: &Cfg, ap: &ProjectionGraph) -> Result<(), AnalysisError> {
    let p = ap.predicate();
    let adj: Vec<Vec<usize>> = ap
        .succ
        .iter()
        .map(|out| out.iter().map(|&j| j as usize).collect())
        .collect();
    let sccs = SccPartition::from_adjacency(&adj);
    let lp = NodeId::new(ap.local_of(p));
    if !sccs.component(sccs.component_of(lp)).trivial {
        return Err(violation(g, ap, "p is on a cycle of A_p".into()));
    }
    if ap.edges().any(|(_, y)| y == p) {
        return Err(violation(g, ap, "p has an incoming edge in A_p".into()));
    }
    let nontrivial: Vec<_> = sccs.components().iter().filter(|c| !c.trivial).collect();
    match nontrivial.as_slice() {
        [c] if c.terminal && c.nodes.len() + 1 == ap.nodes().len() => {}
        _ => {
            return Err(violation(
                g,
                ap,
                "A_p minus p is not one terminal SCC".into(),
            ))
        }
    }
    for &n in ap.nodes() {
        if n != p && ap.out_degree(n) != 1 {
            return Err(violation(
                g,
                ap,
                format!("{} is not a simple cycle node", g.label(n)),
            ));
        }
    }
    Ok(())
}

fn emit(p: NodeId, verdict: &PredicateVerdict, out: &mut DodRelation) {
    if let PredicateVerdict::Dependent(seg) = verdict {
        for &a in &seg.m_segment {
            for &b in &seg.o_segment {
                out.insert(p, a, b);
            }
        }
    }
}

fn expect_structure<T>(g: &Cfg, r: Result<T, AnalysisError>) -> T {
    r.unwrap_or_else(|e| panic!("internal invariant broken on {g:?}: {e}"))
}

/// DOD with the projection-graph algorithm.
pub fn dod_new(g: &Cfg) -> DodRelation {
    let vp = vp_sets(g);
    dod_from_vp(g, &vp)
}

pub fn dod_from_vp(g: &Cfg, vp: &VpMap) -> DodRelation {
    let mut out = DodRelation::new();
    for p in g.predicates() {
        let verdict = expect_structure(g, analyze_predicate(g, vp, p));
        emit(p, &verdict, &mut out);
    }
    out
}

/// DOD and NTSCD from a single `V_n` computation.
pub fn dod_new_with_ntscd(g: &Cfg) -> (DodRelation, NtscdRelation) {
    let vp = vp_sets(g);
    let mut dod = DodRelation::new();
    let mut ntscd = NtscdRelation::new();
    for p in g.predicates() {
        let verdict = expect_structure(g, analyze_predicate(g, &vp, p));
        emit(p, &verdict, &mut dod);
        ntscd_for_predicate(g, &vp, p, &mut ntscd);
    }
    (dod, ntscd)
}
