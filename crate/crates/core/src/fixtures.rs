//! Small graphs used throughout the tests and documentation.

use crate::cfg::Cfg;

fn build(nodes: &[&str], edges: &[(&str, &str)]) -> Cfg {
    Cfg::from_edges(nodes, edges).expect("fixture is well formed")
}

/// Branch `b` may divert into the self-loop at `d` and never reach `e`.
pub fn self_loop_detour() -> Cfg {
    build(
        &["a", "b", "c", "d", "e"],
        &[
            ("a", "b"),
            ("a", "c"),
            ("c", "d"),
            ("d", "e"),
            ("b", "c"),
            ("d", "d"),
            ("b", "e"),
        ],
    )
}

/// Diamond `2..5` nested in the branch `1 -> {2, 6}`; the worklist
/// algorithm gets this one wrong under FIFO popping.
pub fn nested_diamond() -> Cfg {
    build(
        &["1", "2", "3", "4", "5", "6"],
        &[
            ("1", "2"),
            ("1", "6"),
            ("2", "3"),
            ("2", "4"),
            ("3", "5"),
            ("4", "5"),
            ("5", "6"),
        ],
    )
}

/// The smallest irreducible graph: `a` decides which of `b`, `c` runs first.
pub fn two_entry_cycle() -> Cfg {
    build(
        &["a", "b", "c"],
        &[("a", "b"), ("a", "c"), ("b", "c"), ("c", "b")],
    )
}

/// Mutually reachable `a`, `b` that are not on all maximal paths from `p`.
pub fn cycle_with_exit() -> Cfg {
    build(
        &["p", "a", "b", "c"],
        &[("p", "a"), ("p", "b"), ("b", "c"), ("a", "b"), ("b", "a")],
    )
}

/// A predicate `p` whose projection graph is the 8-cycle `n1..n8` with
/// first-reached sets `{n1, n7}` (via `s1`) and `{n2, n5}` (via `s2`).
pub fn strip_cycle() -> Cfg {
    build(
        &[
            "p", "s1", "s2", "n1", "n2", "n3", "n4", "n5", "n6", "n7", "n8",
        ],
        &[
            ("p", "s1"),
            ("p", "s2"),
            ("s1", "n1"),
            ("s1", "n7"),
            ("s2", "n2"),
            ("s2", "n5"),
            ("n1", "n2"),
            ("n2", "n3"),
            ("n3", "n4"),
            ("n4", "n5"),
            ("n5", "n6"),
            ("n6", "n7"),
            ("n7", "n8"),
            ("n8", "n1"),
        ],
    )
}

/// [`two_entry_cycle`] with an entry node `s -> a`, so every node is reachable from `s`.
pub fn two_entry_cycle_with_entry() -> Cfg {
    build(
        &["s", "a", "b", "c"],
        &[("s", "a"), ("a", "b"), ("a", "c"), ("b", "c"), ("c", "b")],
    )
}
