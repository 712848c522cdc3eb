//! Non-termination sensitive control dependence by backward coloring.
//!
//! For every node `n`, color red the nodes whose maximal paths all contain
//! `n`. A predicate with one red and one uncolored successor controls `n`.
//! Each coloring costs `O(|V| + |E|)`, so the whole relation is `O(|V|^2)`
//! on CFGs.

use crate::cfg::{Cfg, NodeId};
use crate::maximal_paths::{Coloring, VpMap};
use crate::relation::NtscdRelation;

pub fn ntscd_new(g: &Cfg) -> NtscdRelation {
    let predicates = g.predicates();
    let mut out = NtscdRelation::new();
    let mut c = Coloring::new(g);
    for n in g.nodes() {
        c.run([n]);
        emit_for(g, &c, &predicates, n, &mut out);
    }
    out
}

/// Dependences of a single node, `{p | p ->ntscd n}`.
pub fn ntscd_of(g: &Cfg, n: NodeId) -> Vec<NodeId> {
    let mut c = Coloring::new(g);
    c.run([n]);
    let mut rel = NtscdRelation::new();
    emit_for(g, &c, &g.predicates(), n, &mut rel);
    rel.iter().map(|(p, _)| p).collect()
}

fn emit_for(g: &Cfg, c: &Coloring<'_>, predicates: &[NodeId], n: NodeId, out: &mut NtscdRelation) {
    for &p in predicates {
        let (s1, s2) = g.branch_targets(p).expect("predicate has two successors");
        if c.is_red(s1) != c.is_red(s2) {
            out.insert(p, n);
        }
    }
}

/// NTSCD read off precomputed `V_n` sets: `p` controls the nodes on all
/// maximal paths from exactly one of its successors.
pub fn ntscd_from_vp(g: &Cfg, vp: &VpMap) -> NtscdRelation {
    let mut out = NtscdRelation::new();
    for p in g.predicates() {
        ntscd_for_predicate(g, vp, p, &mut out);
    }
    out
}

pub(crate) fn ntscd_for_predicate(g: &Cfg, vp: &VpMap, p: NodeId, out: &mut NtscdRelation) {
    let (s1, s2) = g.branch_targets(p).expect("predicate has two successors");
    let (v1, v2) = (vp.of(s1), vp.of(s2));
    for n in v1.difference(v2).chain(v2.difference(v1)) {
        out.insert(p, n);
    }
}
