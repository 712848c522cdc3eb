#![allow(dead_code)]

use ctrldep::{random_cfg, Cfg};
use proptest::prelude::*;

/// Random CFGs with `1..=max_nodes` nodes and any feasible edge count.
pub fn small_cfg(max_nodes: usize) -> impl Strategy<Value = Cfg> {
    (1..=max_nodes)
        .prop_flat_map(|n| (Just(n), 0..=n * n.min(2), any::<u64>()))
        .prop_map(|(n, m, seed)| random_cfg(n, m, seed).expect("feasible by construction"))
}
