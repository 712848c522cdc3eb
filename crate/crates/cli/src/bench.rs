//! Timing sweeps written as CSV.

use std::path::PathBuf;
use std::str::FromStr;
use std::time::Duration;

use anyhow::{bail, ensure, Context, Result};
use clap::Args;
use ctrldep::ranganath::PolicySpec;
use ctrldep::Cfg;
use serde::Serialize;

use crate::algo::{self, Algo, ClosureArgs, Prepared};
use crate::gen::{generate, Shape};

/// An inclusive range `start..end:step`, or a single value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sweep {
    pub start: usize,
    pub end: usize,
    pub step: usize,
}

impl Sweep {
    pub fn values(&self) -> impl Iterator<Item = usize> {
        (self.start..=self.end).step_by(self.step)
    }
}

impl FromStr for Sweep {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid number `{t}` in sweep `{s}`"))
        };
        let Some((start, rest)) = s.split_once("..") else {
            let v = num(s)?;
            return Ok(Sweep {
                start: v,
                end: v,
                step: 1,
            });
        };
        let (end, step) = rest.split_once(':').unwrap_or((rest, "1"));
        let sweep = Sweep {
            start: num(start)?,
            end: num(end)?,
            step: num(step)?,
        };
        if sweep.step == 0 || sweep.start > sweep.end {
            return Err(format!("empty sweep `{s}`"));
        }
        Ok(sweep)
    }
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value = "random")]
    pub shape: Shape,
    /// Node counts, e.g. `500` or `100..1000:100`.
    #[arg(long)]
    pub nodes: Option<Sweep>,
    /// Edge counts for random graphs, e.g. `50..1000:50`.
    #[arg(long)]
    pub edges: Option<Sweep>,
    /// Nesting depths for reducible graphs.
    #[arg(long)]
    pub depth: Option<Sweep>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Timed repetitions per cell.
    #[arg(long, default_value_t = 10)]
    pub reps: usize,
    /// Comma-separated algorithm ids.
    #[arg(long)]
    pub algos: String,
    /// CSV destination, `-` for standard output.
    #[arg(long, default_value = "-")]
    pub csv: PathBuf,
}

/// One CSV row.
#[derive(Clone, Debug, Serialize)]
pub struct BenchRecord {
    pub algo: &'static str,
    pub shape: &'static str,
    pub nodes: usize,
    pub edges: usize,
    pub seed: u64,
    pub reps: usize,
    pub mean_us: f64,
    pub min_us: f64,
}

/// Times `reps` runs of `algo` on `g`. Closures use the first node as
/// criterion and start and tolerate unreachable nodes.
pub fn measure(g: &Cfg, algo: Algo, reps: usize) -> Result<(f64, f64)> {
    ensure!(reps > 0, "--reps must be positive");
    let prepared = match algo {
        Algo::Cc if g.node_count() > 0 => {
            let first = g.label(ctrldep::NodeId::new(0)).to_owned();
            algo::prepare(
                g,
                algo,
                &PolicySpec::Fifo,
                &ClosureArgs {
                    criterion: Some(first.clone()),
                    start: Some(first),
                    allow_unreachable: true,
                },
            )?
        }
        Algo::NtscdRang => Prepared::Policy(ctrldep::WorklistPolicy::Fifo),
        _ => Prepared::Plain,
    };
    let mut total = Duration::ZERO;
    let mut min = Duration::MAX;
    for _ in 0..reps {
        let (_, t) = algo::run(g, algo, &prepared)?;
        total += t;
        min = min.min(t);
    }
    let us = |d: Duration| d.as_secs_f64() * 1e6;
    Ok((us(total) / reps as f64, us(min)))
}

/// Generator parameters of one sweep cell: nodes, edges, depth.
type Cell = (Option<usize>, Option<usize>, Option<u32>);

/// Graph parameters of every sweep cell, in CSV order.
fn cells(args: &BenchArgs) -> Result<Vec<Cell>> {
    let list = |s: &Option<Sweep>, flag: &str| -> Result<Vec<usize>> {
        s.as_ref()
            .map(|s| s.values().collect())
            .with_context(|| format!("--shape {} needs --{flag}", args.shape.name()))
    };
    Ok(match args.shape {
        Shape::Random => {
            let nodes = list(&args.nodes, "nodes")?;
            let edges = list(&args.edges, "edges")?;
            nodes
                .iter()
                .flat_map(|&n| edges.iter().map(move |&m| (Some(n), Some(m), None)))
                .collect()
        }
        Shape::Reducible => list(&args.depth, "depth")?
            .into_iter()
            .map(|d| (None, None, Some(d as u32)))
            .collect(),
        Shape::DodWorst => list(&args.nodes, "nodes")?
            .into_iter()
            .map(|n| (Some(n), None, None))
            .collect(),
    })
}

pub fn sweep(args: &BenchArgs) -> Result<Vec<BenchRecord>> {
    let algos = Algo::parse_list(&args.algos)?;
    if algos.is_empty() {
        bail!("--algos lists no algorithm");
    }
    let mut rows = Vec::new();
    for (nodes, edges, depth) in cells(args)? {
        let g = generate(args.shape, nodes, edges, depth, args.seed)?;
        for &algo in &algos {
            let (mean_us, min_us) = measure(&g, algo, args.reps)?;
            rows.push(BenchRecord {
                algo: algo.name(),
                shape: args.shape.name(),
                nodes: g.node_count(),
                edges: g.edge_count(),
                seed: args.seed,
                reps: args.reps,
                mean_us,
                min_us,
            });
        }
    }
    Ok(rows)
}

pub fn run(args: BenchArgs) -> Result<i32> {
    let rows = sweep(&args)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in &rows {
        w.serialize(row)?;
    }
    let bytes = w.into_inner().context("flushing CSV")?;
    crate::io::write_output(&args.csv, &String::from_utf8(bytes)?)?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_syntax() {
        let s: Sweep = "50..1000:50".parse().unwrap();
        assert_eq!(s.values().count(), 20);
        let s: Sweep = "500".parse().unwrap();
        assert_eq!(s.values().collect::<Vec<_>>(), [500]);
        assert!("10..5".parse::<Sweep>().is_err());
        assert!("1..5:0".parse::<Sweep>().is_err());
        assert!("x".parse::<Sweep>().is_err());
    }
}
