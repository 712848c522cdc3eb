//! DOD by direct evaluation of its definition over all predicate/pair
//! triples, in two flavours.
//!
//! `(p, a, b)` is reported when `a` and `b` reach each other and one
//! successor of `p` meets `a` first on all maximal paths while the other
//! meets `b` first. The original formulation only asks for plain mutual
//! reachability and so over-approximates; the fixed one requires `b` on
//! all maximal paths from `a` and vice versa.
//!
//! Every triple is checked, so the cost is `|P|·|V|²` queries even on
//! graphs with no dependences at all. This is the reference the faster
//! algorithm is compared against, not something to run on large graphs.

use std::collections::HashMap;
use std::str::FromStr;

use crate::cfg::{Cfg, NodeId};
use crate::maximal_paths::{reach_avoiding, vp_sets, VpMap};
use crate::relation::DodRelation;
use crate::set::NodeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormulaVariant {
    /// Mutual reachability of `a` and `b`.
    Original,
    /// `b` on all maximal paths from `a` and vice versa.
    Fixed,
}

impl FromStr for FormulaVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "original" => Ok(FormulaVariant::Original),
            "fixed" => Ok(FormulaVariant::Fixed),
            other => Err(format!("unknown formula variant `{other}`")),
        }
    }
}

struct FirstBefore<'a> {
    g: &'a Cfg,
    vp: &'a VpMap,
    /// `(s, x)` -> nodes reachable from `s` without passing `x`.
    avoid: HashMap<(NodeId, NodeId), NodeSet>,
}

impl FirstBefore<'_> {
    /// Every maximal path from `s` contains `x`, and no `y` before it.
    fn holds(&mut self, s: NodeId, x: NodeId, y: NodeId) -> bool {
        if !self.vp.on_all_paths(s, x) {
            return false;
        }
        if s == x {
            return true;
        }
        if s == y {
            return false;
        }
        let g = self.g;
        !self
            .avoid
            .entry((s, x))
            .or_insert_with(|| reach_avoiding(g, s, x))
            .contains(y)
    }
}

pub fn dod_formula(g: &Cfg, variant: FormulaVariant) -> DodRelation {
    let vp = vp_sets(g);
    let reach: Vec<NodeSet> = match variant {
        FormulaVariant::Original => g.nodes().map(|n| g.reachable_set(n)).collect(),
        FormulaVariant::Fixed => Vec::new(),
    };
    let related = |a: NodeId, b: NodeId| match variant {
        FormulaVariant::Original => reach[a.index()].contains(b),
        FormulaVariant::Fixed => vp.on_all_paths(a, b),
    };

    let mut out = DodRelation::new();
    let nodes: Vec<NodeId> = g.nodes().collect();
    for p in g.predicates() {
        let (s1, s2) = g.branch_targets(p).expect("predicate");
        let mut fb = FirstBefore {
            g,
            vp: &vp,
            avoid: HashMap::new(),
        };
        for (i, &a) in nodes.iter().enumerate() {
            if a == p {
                continue;
            }
            for &b in &nodes[i + 1..] {
                if b == p || !related(a, b) || !related(b, a) {
                    continue;
                }
                let dependent = (fb.holds(s1, a, b) && fb.holds(s2, b, a))
                    || (fb.holds(s1, b, a) && fb.holds(s2, a, b));
                if dependent {
                    out.insert(p, a, b);
                }
            }
        }
    }
    out
}
