mod common;

use ctrldep::dod::{
    analyze_predicate, build_ap, compute_v1_v2, extract_segments, match_unfolding_pattern,
    unfold_cycle, PredicateVerdict,
};
use ctrldep::maximal_paths::Coloring;
use ctrldep::oracle::{is_reducible, oracle_dod};
use ctrldep::{
    color_all_paths_contain, dod_new, parse_cfg, random_reducible_cfg, sccs, serialize_cfg,
    vp_sets, worst_case_dod_cfg, GraphFormat, NodeSet,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn coloring_is_monotone_in_the_seed(g in common::small_cfg(12), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..4)) {
        let n = g.node_count();
        let small: Vec<_> = picks.iter().map(|i| ctrldep::NodeId::new(i.index(n))).collect();
        let mut big = g.set_of(small.iter().copied());
        let small = big.clone();
        big.insert(ctrldep::NodeId::new(0));
        let red_small = color_all_paths_contain(&g, &small).unwrap();
        let red_big = color_all_paths_contain(&g, &big).unwrap();
        prop_assert!(red_small.is_subset(&red_big));
        prop_assert!(small.is_subset(&red_small));
    }

    #[test]
    fn coloring_visits_at_most_every_edge(g in common::small_cfg(12)) {
        let mut c = Coloring::new(&g);
        for n in g.nodes() {
            c.run([n]);
            prop_assert!(c.visits() <= g.edge_count());
        }
    }

    #[test]
    fn formats_round_trip(g in common::small_cfg(12)) {
        for format in [GraphFormat::Json, GraphFormat::EdgeList] {
            let text = serialize_cfg(&g, format);
            prop_assert_eq!(&parse_cfg(&text, format).unwrap(), &g);
        }
    }

    #[test]
    fn scc_agrees_with_mutual_reachability(g in common::small_cfg(12)) {
        let part = sccs(&g);
        let reach: Vec<NodeSet> = g.nodes().map(|n| g.reachable_set(n)).collect();
        for a in g.nodes() {
            for b in g.nodes() {
                let mutual = reach[a.index()].contains(b) && reach[b.index()].contains(a);
                prop_assert_eq!(part.same_component(a, b), mutual);
            }
        }
    }

    #[test]
    fn unfolding_start_is_irrelevant(g in common::small_cfg(12)) {
        let vp = vp_sets(&g);
        for p in g.predicates() {
            let PredicateVerdict::Dependent(expected) = analyze_predicate(&g, &vp, p).unwrap() else {
                continue;
            };
            let ap = build_ap(&g, p, vp.of(p));
            let classes = compute_v1_v2(&g, p, vp.of(p));
            for start in classes.v1.iter() {
                let seq = unfold_cycle(&g, &ap, &g.set_of([start])).unwrap();
                prop_assert!(match_unfolding_pattern(&seq, &classes));
                let seg = extract_segments(&seq, &classes);
                let sorted = |v: &[ctrldep::NodeId]| { let mut v = v.to_vec(); v.sort(); v };
                prop_assert_eq!(sorted(&seg.m_segment), sorted(&expected.m_segment));
                prop_assert_eq!(sorted(&seg.o_segment), sorted(&expected.o_segment));
            }
        }
    }
}

#[test]
fn reducible_graphs_have_no_dod() {
    for seed in 0..200 {
        let g = random_reducible_cfg(4, seed);
        assert!(is_reducible(&g), "seed {seed}");
        assert!(dod_new(&g).is_empty(), "seed {seed}: {g:?}");
    }
}

#[test]
fn worst_case_sizes() {
    for n in [8usize, 16, 32] {
        let g = worst_case_dod_cfg(n).unwrap();
        assert_eq!(dod_new(&g).len(), n * n * n / 32, "n = {n}");
    }
    let g = worst_case_dod_cfg(8).unwrap();
    assert_eq!(dod_new(&g), oracle_dod(&g).unwrap());
}
