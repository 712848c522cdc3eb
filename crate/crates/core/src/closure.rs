//! Strong control closures.
//!
//! `V'` is strongly control-closed when every node `v` outside `V'` that is
//! reachable from `V'` either can never come back to `V'`, or is certain to
//! come back (all maximal paths from `v` meet `V'`) and always comes back to
//! the same node. The least closed superset of a set `W` is its closure
//! under NTSCD and DOD: add `p` whenever some member is NTSCD on `p`, or two
//! members are DOD on `p`.

use std::collections::VecDeque;

use crate::cfg::{Cfg, NodeId};
use crate::dod::dod_new_with_ntscd;
use crate::error::{AnalysisError, ClosureError};
use crate::maximal_paths::color_all_paths_contain;
use crate::relation::{DodRelation, NtscdRelation};
use crate::set::NodeSet;

/// First nodes of `vset` reached from `v` along paths through nodes outside
/// `vset`.
pub fn theta(g: &Cfg, v: NodeId, vset: &NodeSet) -> Result<NodeSet, AnalysisError> {
    if vset.contains(v) {
        return Err(AnalysisError::NodeInSet(g.label(v).to_owned()));
    }
    let mut hits = g.empty_set();
    let mut seen = g.empty_set();
    seen.insert(v);
    let mut queue = VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        for &y in g.successors(x) {
            if vset.contains(y) {
                hits.insert(y);
            } else if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    Ok(hits)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    /// `v` can come back to the set, but not on all maximal paths.
    EscapesThenReturns,
    /// `v` comes back on all maximal paths, but at different nodes.
    ThetaAmbiguous,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub node: NodeId,
    pub kind: ViolationKind,
}

/// Outcome of a closedness check; the witness is the smallest-label
/// offending node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureVerdict {
    pub witness: Option<Violation>,
}

impl ClosureVerdict {
    pub fn is_closed(&self) -> bool {
        self.witness.is_none()
    }
}

fn reverse_reachable(g: &Cfg, targets: &NodeSet) -> NodeSet {
    let mut seen = targets.clone();
    let mut stack: Vec<NodeId> = targets.iter().collect();
    while let Some(x) = stack.pop() {
        for &y in g.predecessors(x) {
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen
}

pub fn is_strongly_control_closed(g: &Cfg, vset: &NodeSet) -> ClosureVerdict {
    if vset.is_empty() {
        return ClosureVerdict { witness: None };
    }
    let reached = g.reachable_from(vset.iter());
    let returns = reverse_reachable(g, vset);
    let certain = color_all_paths_contain(g, vset).expect("non-empty");
    let mut outside: Vec<NodeId> = reached.difference(vset).collect();
    g.sort_by_label(&mut outside);
    for v in outside {
        if !returns.contains(v) {
            continue;
        }
        let kind = if !certain.contains(v) {
            ViolationKind::EscapesThenReturns
        } else if theta(g, v, vset).expect("v outside the set").len() > 1 {
            ViolationKind::ThetaAmbiguous
        } else {
            continue;
        };
        return ClosureVerdict {
            witness: Some(Violation { node: v, kind }),
        };
    }
    ClosureVerdict { witness: None }
}

/// Least superset of `w` closed under the NTSCD and DOD rules.
pub fn dependence_closure(
    g: &Cfg,
    w: &NodeSet,
    ntscd: &NtscdRelation,
    dod: &DodRelation,
) -> NodeSet {
    let n = g.node_count();
    let mut controllers: Vec<Vec<NodeId>> = vec![Vec::new(); n];
    for (p, d) in ntscd.iter() {
        controllers[d.index()].push(p);
    }
    let mut partners: Vec<Vec<(NodeId, NodeId)>> = vec![Vec::new(); n];
    for (p, a, b) in dod.iter() {
        partners[a.index()].push((p, b));
        partners[b.index()].push((p, a));
    }
    let mut set = w.clone();
    let mut queue: VecDeque<NodeId> = w.iter().collect();
    while let Some(x) = queue.pop_front() {
        let mut add = |p: NodeId, set: &mut NodeSet| {
            if set.insert(p) {
                queue.push_back(p);
            }
        };
        for &p in &controllers[x.index()] {
            add(p, &mut set);
        }
        for &(p, other) in &partners[x.index()] {
            if set.contains(other) {
                add(p, &mut set);
            }
        }
    }
    set
}

/// Input of [`strong_closure`].
#[derive(Clone, Debug)]
pub struct ClosureSpec {
    pub criterion: NodeSet,
    pub start: NodeId,
    /// Compute a result even when some nodes are unreachable from `start`.
    pub allow_unreachable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureResult {
    pub nodes: NodeSet,
    /// Set when the reachability precondition did not hold and was waived;
    /// the result is then not guaranteed to be minimal.
    pub best_effort: bool,
}

/// Minimal strongly control-closed superset of the criterion.
///
/// Requires `start` in the criterion and every node reachable from `start`.
pub fn strong_closure(g: &Cfg, spec: &ClosureSpec) -> Result<ClosureResult, ClosureError> {
    if !spec.criterion.contains(spec.start) {
        return Err(ClosureError::StartNotInCriterion(
            g.label(spec.start).to_owned(),
        ));
    }
    let reached = g.reachable_set(spec.start);
    let mut missing: Vec<NodeId> = g.nodes().filter(|&n| !reached.contains(n)).collect();
    if !missing.is_empty() && !spec.allow_unreachable {
        g.sort_by_label(&mut missing);
        return Err(ClosureError::Unreachable(
            missing.iter().map(|&n| g.label(n).to_owned()).collect(),
        ));
    }
    let (dod, ntscd) = dod_new_with_ntscd(g);
    Ok(ClosureResult {
        nodes: dependence_closure(g, &spec.criterion, &ntscd, &dod),
        best_effort: !missing.is_empty(),
    })
}
