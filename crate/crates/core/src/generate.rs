//! Deterministic graph generators for tests and benchmarks.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cfg::{Cfg, CfgBuilder, NodeId};
use crate::error::GenerateError;

/// Uniformly random CFG with nodes `"0".."n-1"` and exactly `edges` edges.
///
/// Edge slots (two per node) are sampled without replacement; each slot
/// gets a uniform target, the second slot of a node never repeating the
/// first.
pub fn random_cfg(nodes: usize, edges: usize, seed: u64) -> Result<Cfg, GenerateError> {
    if edges > nodes * nodes.min(2) {
        return Err(GenerateError::InfeasibleEdges { nodes, edges });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = CfgBuilder::with_capacity(nodes);
    for i in 0..nodes {
        b.add_node(i.to_string()).expect("fresh label");
    }
    let mut slots = sample(&mut rng, 2 * nodes, edges).into_vec();
    slots.sort_unstable();
    let mut last: Option<(usize, usize)> = None;
    for slot in slots {
        let src = slot / 2;
        let dst = match last {
            Some((s, first)) if s == src => {
                let d = rng.random_range(0..nodes - 1);
                if d >= first {
                    d + 1
                } else {
                    d
                }
            }
            _ => rng.random_range(0..nodes),
        };
        last = Some((src, dst));
        b.add_edge(NodeId::new(src), NodeId::new(dst))
            .expect("at most two slots per node");
    }
    Ok(b.build())
}

struct Structured {
    b: CfgBuilder,
    rng: ChaCha8Rng,
}

impl Structured {
    fn node(&mut self) -> NodeId {
        let label = self.b.node_count().to_string();
        self.b.add_node(label).expect("fresh label")
    }

    fn edge(&mut self, a: NodeId, b: NodeId) {
        self.b
            .add_edge(a, b)
            .expect("fragments keep out-degree at most 2");
    }

    /// Builds a single-entry, single-exit fragment; the exit has no
    /// out-edges yet.
    fn fragment(&mut self, depth: u32) -> (NodeId, NodeId) {
        if depth == 0 {
            let x = self.node();
            return (x, x);
        }
        let inner = self.rng.random_range(0..depth);
        match self.rng.random_range(0..5) {
            0 => {
                let (e1, x1) = self.fragment(depth - 1);
                let (e2, x2) = self.fragment(inner);
                self.edge(x1, e2);
                (e1, x2)
            }
            1 => {
                let c = self.node();
                let (e1, x1) = self.fragment(depth - 1);
                let (e2, x2) = self.fragment(inner);
                let j = self.node();
                self.edge(c, e1);
                self.edge(c, e2);
                self.edge(x1, j);
                self.edge(x2, j);
                (c, j)
            }
            2 => {
                let c = self.node();
                let (e, x) = self.fragment(depth - 1);
                let j = self.node();
                self.edge(c, e);
                self.edge(c, j);
                self.edge(x, j);
                (c, j)
            }
            3 => {
                let h = self.node();
                let (e, x) = self.fragment(depth - 1);
                let out = self.node();
                self.edge(h, e);
                self.edge(h, out);
                self.edge(x, h);
                (h, out)
            }
            _ => {
                let (e, x) = self.fragment(depth - 1);
                let out = self.node();
                self.edge(x, e);
                self.edge(x, out);
                (e, out)
            }
        }
    }
}

/// Random structured CFG built from sequence, if/else, if, while and
/// do-while fragments nested up to `depth` levels. Always reducible.
pub fn random_reducible_cfg(depth: u32, seed: u64) -> Cfg {
    let mut s = Structured {
        b: CfgBuilder::new(),
        rng: ChaCha8Rng::seed_from_u64(seed),
    };
    s.fragment(depth);
    s.b.build()
}

/// CFG with `n^3 / 32` DOD triples: a cycle `c0..c{k-1}` with `k = n/2`
/// and predicates `p0..p{k-1}` that each branch to `c0` and `c{k/2}`.
pub fn worst_case_dod_cfg(n: usize) -> Result<Cfg, GenerateError> {
    if n < 8 || n % 4 != 0 {
        return Err(GenerateError::InvalidWorstCaseSize(n));
    }
    let k = n / 2;
    let mut b = CfgBuilder::with_capacity(n);
    let cycle: Vec<NodeId> = (0..k)
        .map(|i| b.add_node(format!("c{i}")).expect("fresh label"))
        .collect();
    for i in 0..k {
        b.add_edge(cycle[i], cycle[(i + 1) % k]).expect("degree 1");
    }
    for j in 0..k {
        let p = b.add_node(format!("p{j}")).expect("fresh label");
        b.add_edge(p, cycle[0]).expect("degree 1");
        b.add_edge(p, cycle[k / 2]).expect("degree 2");
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_is_deterministic_and_exact() {
        let g = random_cfg(20, 33, 7).unwrap();
        assert_eq!(g.node_count(), 20);
        assert_eq!(g.edge_count(), 33);
        assert_eq!(g, random_cfg(20, 33, 7).unwrap());
        assert_ne!(g, random_cfg(20, 33, 8).unwrap());
        for n in g.nodes() {
            let out = g.out_edges(n);
            assert!(out.len() <= 2);
            if out.len() == 2 {
                assert_ne!(out[0], out[1]);
            }
        }
    }

    #[test]
    fn infeasible_edge_counts() {
        assert_eq!(
            random_cfg(3, 7, 0),
            Err(GenerateError::InfeasibleEdges { nodes: 3, edges: 7 })
        );
        assert!(random_cfg(1, 2, 0).is_err());
        assert_eq!(random_cfg(1, 1, 0).unwrap().edge_count(), 1);
        assert_eq!(random_cfg(4, 8, 0).unwrap().edge_count(), 8);
    }

    #[test]
    fn reducible_has_one_sink_exit() {
        for seed in 0..20 {
            let g = random_reducible_cfg(4, seed);
            assert_eq!(g, random_reducible_cfg(4, seed));
            let sinks = g.nodes().filter(|&n| g.successors(n).is_empty()).count();
            assert_eq!(sinks, 1, "seed {seed}");
        }
    }

    #[test]
    fn worst_case_sizes() {
        assert_eq!(worst_case_dod_cfg(8).unwrap().node_count(), 8);
        assert_eq!(worst_case_dod_cfg(16).unwrap().predicates().len(), 8);
        assert!(worst_case_dod_cfg(6).is_err());
        assert!(worst_case_dod_cfg(10).is_err());
    }
}
