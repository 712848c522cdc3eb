//! Brute-force reference implementations.
//!
//! Everything here is written straight from the definitions with plain
//! graph searches and shares no code with the algorithms it checks. The
//! central query is "is there a maximal path from `m` that avoids `X`": in
//! `G - X`, either a node that is a sink in `G` is reachable from `m`, or a
//! cycle is. Graphs are limited to a small node budget.

use std::collections::VecDeque;

use crate::cfg::{Cfg, NodeId};
use crate::error::OracleError;
use crate::relation::{DodRelation, NtscdRelation};
use crate::set::NodeSet;

/// Largest graph the oracle accepts by default.
pub const DEFAULT_BUDGET: usize = 15;
/// Largest graph accepted by the exhaustive closure search.
pub const CLOSURE_BUDGET: usize = 10;

fn check_budget(g: &Cfg, max: usize) -> Result<(), OracleError> {
    if g.node_count() > max {
        return Err(OracleError::BudgetExceeded {
            nodes: g.node_count(),
            max,
        });
    }
    Ok(())
}

/// Whether some maximal path from `m` contains no node of `avoid`.
/// `false` when `m` itself is avoided.
fn exists_maximal_avoiding_set(g: &Cfg, m: NodeId, avoid: &NodeSet) -> bool {
    if avoid.contains(m) {
        return false;
    }
    let n = g.node_count();
    let mut seen = vec![false; n];
    seen[m.index()] = true;
    let mut queue = VecDeque::from([m]);
    let mut reached = Vec::new();
    while let Some(x) = queue.pop_front() {
        reached.push(x);
        if g.successors(x).is_empty() {
            return true;
        }
        for &y in g.successors(x) {
            if !avoid.contains(y) && !seen[y.index()] {
                seen[y.index()] = true;
                queue.push_back(y);
            }
        }
    }
    // Cycle search over the reached part of G - avoid (iterative
    // three-colour DFS).
    const WHITE: u8 = 0;
    const GREY: u8 = 1;
    const BLACK: u8 = 2;
    let mut colour = vec![WHITE; n];
    for &root in &reached {
        if colour[root.index()] != WHITE {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        colour[root.index()] = GREY;
        while let Some(&mut (x, ref mut next)) = stack.last_mut() {
            let succ = g.successors(x);
            if *next == succ.len() {
                colour[x.index()] = BLACK;
                stack.pop();
                continue;
            }
            let y = succ[*next];
            *next += 1;
            if avoid.contains(y) {
                continue;
            }
            match colour[y.index()] {
                GREY => return true,
                WHITE => {
                    colour[y.index()] = GREY;
                    stack.push((y, 0));
                }
                _ => {}
            }
        }
    }
    false
}

/// Whether some maximal path from `m` does not contain `n`.
pub fn oracle_exists_maximal_avoiding(g: &Cfg, m: NodeId, n: NodeId) -> Result<bool, OracleError> {
    check_budget(g, DEFAULT_BUDGET)?;
    Ok(exists_maximal_avoiding_set(g, m, &g.set_of([n])))
}

fn on_all_paths(g: &Cfg, from: NodeId, n: NodeId) -> bool {
    !exists_maximal_avoiding_set(g, from, &g.set_of([n]))
}

/// Nodes reachable from `from` (inclusive) without entering `block`.
fn reach_without(g: &Cfg, from: NodeId, block: NodeId) -> Vec<bool> {
    let mut seen = vec![false; g.node_count()];
    if from == block {
        return seen;
    }
    seen[from.index()] = true;
    let mut stack = vec![from];
    while let Some(x) = stack.pop() {
        for &y in g.successors(x) {
            if y != block && !seen[y.index()] {
                seen[y.index()] = true;
                stack.push(y);
            }
        }
    }
    seen
}

fn reach(g: &Cfg, from: NodeId) -> Vec<bool> {
    let mut seen = vec![false; g.node_count()];
    seen[from.index()] = true;
    let mut stack = vec![from];
    while let Some(x) = stack.pop() {
        for &y in g.successors(x) {
            if !seen[y.index()] {
                seen[y.index()] = true;
                stack.push(y);
            }
        }
    }
    seen
}

fn first_before(g: &Cfg, s: NodeId, a: NodeId, b: NodeId) -> bool {
    on_all_paths(g, s, a) && !reach_without(g, s, a)[b.index()]
}

/// Whether every maximal path from `s` contains `a` with no `b` before it.
pub fn oracle_first_before(g: &Cfg, s: NodeId, a: NodeId, b: NodeId) -> Result<bool, OracleError> {
    check_budget(g, DEFAULT_BUDGET)?;
    if a == b {
        return Err(OracleError::SameNode);
    }
    Ok(first_before(g, s, a, b))
}

fn branches(g: &Cfg) -> Vec<(NodeId, NodeId, NodeId)> {
    g.nodes()
        .filter_map(|p| {
            let out = g.out_edges(p);
            (out.len() == 2 && out[0] != out[1]).then(|| (p, out[0], out[1]))
        })
        .collect()
}

/// `(p, n)` when `n` is on all maximal paths from one successor of `p` but
/// not from the other.
pub fn oracle_ntscd(g: &Cfg) -> Result<NtscdRelation, OracleError> {
    check_budget(g, DEFAULT_BUDGET)?;
    let mut out = NtscdRelation::new();
    for (p, s1, s2) in branches(g) {
        for n in g.nodes() {
            if on_all_paths(g, s1, n) != on_all_paths(g, s2, n) {
                out.insert(p, n);
            }
        }
    }
    Ok(out)
}

/// `(p, a, b)` when `a`, `b` lie on all maximal paths from each other and
/// one successor of `p` meets `a` first on all maximal paths while the
/// other meets `b` first.
pub fn oracle_dod(g: &Cfg) -> Result<DodRelation, OracleError> {
    check_budget(g, DEFAULT_BUDGET)?;
    let mut out = DodRelation::new();
    let nodes: Vec<NodeId> = g.nodes().collect();
    for (p, s1, s2) in branches(g) {
        for (i, &a) in nodes.iter().enumerate() {
            for &b in &nodes[i + 1..] {
                if a == p || b == p || !on_all_paths(g, a, b) || !on_all_paths(g, b, a) {
                    continue;
                }
                if (first_before(g, s1, a, b) && first_before(g, s2, b, a))
                    || (first_before(g, s1, b, a) && first_before(g, s2, a, b))
                {
                    out.insert(p, a, b);
                }
            }
        }
    }
    Ok(out)
}

/// Definitional closedness check.
pub fn oracle_is_strongly_closed(g: &Cfg, vset: &NodeSet) -> Result<bool, OracleError> {
    check_budget(g, DEFAULT_BUDGET)?;
    Ok(closed(g, vset))
}

fn closed(g: &Cfg, vset: &NodeSet) -> bool {
    let members: Vec<NodeId> = vset.iter().collect();
    for v in g.nodes() {
        if vset.contains(v) {
            continue;
        }
        let reachable_from_set = members.iter().any(|&m| reach(g, m)[v.index()]);
        if !reachable_from_set {
            continue;
        }
        // Can v get back to the set at all?
        let from_v = reach(g, v);
        let back = members.iter().any(|&m| from_v[m.index()]);
        if !back {
            continue;
        }
        if exists_maximal_avoiding_set(g, v, vset) {
            return false;
        }
        // First members hit from v along paths outside the set.
        let mut seen = vec![false; g.node_count()];
        let mut first = Vec::new();
        seen[v.index()] = true;
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            for &y in g.successors(x) {
                if vset.contains(y) {
                    if !first.contains(&y) {
                        first.push(y);
                    }
                } else if !seen[y.index()] {
                    seen[y.index()] = true;
                    stack.push(y);
                }
            }
        }
        if first.len() > 1 {
            return false;
        }
    }
    true
}

/// Result of the exhaustive closure search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinClosure {
    /// A closed superset of minimum cardinality.
    pub smallest: NodeSet,
    /// All inclusion-minimal closed supersets.
    pub minimal: Vec<NodeSet>,
}

impl MinClosure {
    /// More than one inclusion-minimal closed superset exists.
    pub fn is_ambiguous(&self) -> bool {
        self.minimal.len() > 1
    }
}

/// Enumerates every superset of `w` and keeps the closed ones.
pub fn oracle_min_closure(g: &Cfg, w: &NodeSet) -> Result<MinClosure, OracleError> {
    check_budget(g, CLOSURE_BUDGET)?;
    let free: Vec<NodeId> = g.nodes().filter(|&n| !w.contains(n)).collect();
    let mut closed_sets: Vec<NodeSet> = Vec::new();
    for mask in 0u32..(1 << free.len()) {
        let mut s = w.clone();
        for (i, &n) in free.iter().enumerate() {
            if mask & (1 << i) != 0 {
                s.insert(n);
            }
        }
        if closed(g, &s) {
            closed_sets.push(s);
        }
    }
    let minimal: Vec<NodeSet> = closed_sets
        .iter()
        .filter(|s| {
            !closed_sets
                .iter()
                .any(|t| t.len() < s.len() && t.is_subset(s))
        })
        .cloned()
        .collect();
    let smallest = minimal
        .iter()
        .min_by_key(|s| s.len())
        .cloned()
        .expect("the full node set is always closed");
    Ok(MinClosure { smallest, minimal })
}

/// Reducibility by exhaustive T1/T2 reduction: drop self-loops, and merge a
/// node with a single predecessor into it, until one node remains.
pub fn is_reducible(g: &Cfg) -> bool {
    let n = g.node_count();
    if n == 0 {
        return true;
    }
    let mut succ: Vec<Vec<usize>> = g
        .nodes()
        .map(|x| g.successors(x).iter().map(|y| y.index()).collect())
        .collect();
    let mut alive = vec![true; n];
    let mut remaining = n;
    loop {
        for (x, out) in succ.iter_mut().enumerate() {
            out.retain(|&y| y != x);
        }
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (x, out) in succ.iter().enumerate() {
            if alive[x] {
                for &y in out {
                    if !preds[y].contains(&x) {
                        preds[y].push(x);
                    }
                }
            }
        }
        let Some(v) = (0..n).find(|&v| alive[v] && preds[v].len() == 1) else {
            break;
        };
        let u = preds[v][0];
        let moved = std::mem::take(&mut succ[v]);
        succ[u].retain(|&y| y != v);
        for y in moved {
            if !succ[u].contains(&y) {
                succ[u].push(y);
            }
        }
        alive[v] = false;
        remaining -= 1;
    }
    remaining == 1
}
