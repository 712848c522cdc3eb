//! Differential check of every algorithm variant against the oracle.

use std::fmt::Debug;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Args;
use ctrldep::oracle::{
    oracle_dod, oracle_is_strongly_closed, oracle_min_closure, oracle_ntscd, CLOSURE_BUDGET,
    DEFAULT_BUDGET,
};
use ctrldep::{
    dod_formula, dod_new, is_strongly_control_closed, ntscd_from_vp, ntscd_new,
    ntscd_ranganath_fixed, random_cfg, serialize_cfg, strong_closure, vp_sets, Cfg, ClosureSpec,
    FormulaVariant, GraphFormat, NodeId,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::InputArgs;

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Number of random graphs to check.
    #[arg(long, conflicts_with = "input")]
    pub count: Option<usize>,
    /// Upper bound on the node count of generated graphs (at most 15).
    #[arg(long, default_value_t = 12)]
    pub max_nodes: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Check a single graph file instead.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub format: Option<GraphFormat>,
    /// Directory that receives graphs with mismatches.
    #[arg(long, default_value = ".")]
    pub save_dir: PathBuf,
}

/// One disagreement found on a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub check: &'static str,
    pub expected: String,
    pub actual: String,
}

fn compare<T: PartialEq + Debug>(
    out: &mut Vec<Mismatch>,
    check: &'static str,
    expected: &T,
    actual: &T,
) {
    if expected != actual {
        out.push(Mismatch {
            check,
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
        });
    }
}

/// Graph number `index` of the stream determined by `seed`.
pub fn sample_graph(seed: u64, index: u64, max_nodes: usize) -> Cfg {
    let graph_seed = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(index);
    let mut rng = ChaCha8Rng::seed_from_u64(graph_seed);
    let n = rng.random_range(1..=max_nodes);
    let m = rng.random_range(0..=n * n.min(2));
    random_cfg(n, m, graph_seed).expect("feasible by construction")
}

/// Closure criteria checked on `g`: the first node reaching everything,
/// alone and with one or two more nodes.
fn closure_specs(g: &Cfg) -> Vec<ClosureSpec> {
    let n = g.node_count();
    let Some(start) = g.nodes().find(|&s| g.reachable_set(s).len() == n) else {
        return Vec::new();
    };
    let mut specs = Vec::new();
    for extra in [0usize, 1, 2] {
        let mut criterion = g.set_of([start]);
        for k in 0..extra {
            criterion.insert(NodeId::new((start.index() + 1 + k * 3) % n));
        }
        specs.push(ClosureSpec {
            criterion,
            start,
            allow_unreachable: false,
        });
    }
    specs
}

/// Runs every gated agreement property on one graph.
pub fn check_graph(g: &Cfg) -> Vec<Mismatch> {
    let mut out = Vec::new();
    let ntscd = oracle_ntscd(g).expect("within budget");
    compare(&mut out, "ntscd-new", &ntscd, &ntscd_new(g));
    compare(&mut out, "ntscd-vp", &ntscd, &ntscd_from_vp(g, &vp_sets(g)));
    compare(
        &mut out,
        "ntscd-rang-fixed",
        &ntscd,
        &ntscd_ranganath_fixed(g),
    );

    let dod = oracle_dod(g).expect("within budget");
    let new = dod_new(g);
    compare(&mut out, "dod-new", &dod, &new);
    compare(
        &mut out,
        "dod-formula-fixed",
        &dod,
        &dod_formula(g, FormulaVariant::Fixed),
    );
    let original = dod_formula(g, FormulaVariant::Original);
    if !original.is_superset(&new) {
        out.push(Mismatch {
            check: "dod-formula superset of dod-new",
            expected: format!("{new:?}"),
            actual: format!("{original:?}"),
        });
    }

    for spec in closure_specs(g) {
        let closure = match strong_closure(g, &spec) {
            Ok(r) => r.nodes,
            Err(e) => {
                out.push(Mismatch {
                    check: "cc precondition",
                    expected: "a closure".into(),
                    actual: e.to_string(),
                });
                continue;
            }
        };
        let closed = is_strongly_control_closed(g, &closure).is_closed();
        compare(&mut out, "cc closed", &true, &closed);
        compare(
            &mut out,
            "cc closed (oracle)",
            &true,
            &oracle_is_strongly_closed(g, &closure).expect("within budget"),
        );
        if g.node_count() <= CLOSURE_BUDGET {
            let min = oracle_min_closure(g, &spec.criterion).expect("within budget");
            if min.is_ambiguous() {
                out.push(Mismatch {
                    check: "cc unique minimum",
                    expected: "one minimal closed superset".into(),
                    actual: format!("{:?}", min.minimal),
                });
            }
            compare(&mut out, "cc minimal", &min.smallest, &closure);
        }
    }
    out
}

/// Worker count from `CTRLDEP_THREADS`; unset or 0 means automatic.
pub fn thread_count() -> usize {
    std::env::var("CTRLDEP_THREADS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(0)
}

pub fn run(args: CheckArgs) -> Result<i32> {
    if args.max_nodes > DEFAULT_BUDGET || args.max_nodes == 0 {
        bail!("--max-nodes must be between 1 and {DEFAULT_BUDGET} (oracle budget)");
    }
    let graphs: Vec<(String, Cfg)> = match (&args.input, args.count) {
        (Some(path), _) => {
            let g = crate::io::read_graph(&InputArgs {
                input: path.clone(),
                format: args.format,
            })?;
            if g.node_count() > DEFAULT_BUDGET {
                bail!(
                    "graph has {} nodes, oracle budget is {DEFAULT_BUDGET}",
                    g.node_count()
                );
            }
            vec![(path.display().to_string(), g)]
        }
        (None, Some(count)) => (0..count as u64)
            .map(|i| {
                (
                    format!("graph {i}"),
                    sample_graph(args.seed, i, args.max_nodes),
                )
            })
            .collect(),
        (None, None) => bail!("check needs --count or --input"),
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(thread_count())
        .build()
        .context("starting worker threads")?;
    let results: Vec<Vec<Mismatch>> =
        pool.install(|| graphs.par_iter().map(|(_, g)| check_graph(g)).collect());

    println!("note: ntscd-rang (the unfixed worklist algorithm) is known to be incorrect and is excluded from the check");
    let mut failed = 0;
    for (i, ((name, g), mismatches)) in graphs.iter().zip(&results).enumerate() {
        if mismatches.is_empty() {
            continue;
        }
        failed += 1;
        let file = args
            .save_dir
            .join(format!("check-mismatch-{}-{i}.json", args.seed));
        std::fs::write(&file, serialize_cfg(g, GraphFormat::Json))
            .with_context(|| format!("writing {}", file.display()))?;
        println!(
            "{name}: {} mismatch(es), graph saved to {}",
            mismatches.len(),
            file.display()
        );
        for m in mismatches {
            println!("  {}: expected {} got {}", m.check, m.expected, m.actual);
        }
    }
    println!(
        "checked {} graph(s), {failed} with mismatches",
        graphs.len()
    );
    Ok(i32::from(failed > 0))
}
