use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::{Args, ValueEnum};
use ctrldep::{
    random_cfg, random_reducible_cfg, serialize_cfg, worst_case_dod_cfg, Cfg, GraphFormat,
};

use crate::io;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Shape {
    /// `--nodes` nodes with `--edges` uniformly placed edges.
    Random,
    /// Structured (reducible) graph of nesting `--depth`.
    Reducible,
    /// The worst case for DOD size on `--nodes` nodes.
    DodWorst,
}

impl Shape {
    pub fn name(self) -> &'static str {
        match self {
            Shape::Random => "random",
            Shape::Reducible => "reducible",
            Shape::DodWorst => "dod-worst",
        }
    }
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub shape: Shape,
    #[arg(long)]
    pub nodes: Option<usize>,
    #[arg(long)]
    pub edges: Option<usize>,
    #[arg(long)]
    pub depth: Option<u32>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value = "json")]
    pub format: GraphFormat,
    #[arg(long, default_value = "-")]
    pub output: PathBuf,
}

pub fn generate(
    shape: Shape,
    nodes: Option<usize>,
    edges: Option<usize>,
    depth: Option<u32>,
    seed: u64,
) -> Result<Cfg> {
    Ok(match shape {
        Shape::Random => {
            let (Some(n), Some(m)) = (nodes, edges) else {
                bail!("--shape random needs --nodes and --edges");
            };
            random_cfg(n, m, seed)?
        }
        Shape::Reducible => {
            let Some(d) = depth else {
                bail!("--shape reducible needs --depth");
            };
            random_reducible_cfg(d, seed)
        }
        Shape::DodWorst => {
            let Some(n) = nodes else {
                bail!("--shape dod-worst needs --nodes");
            };
            worst_case_dod_cfg(n)?
        }
    })
}

pub fn run(args: GenArgs) -> Result<i32> {
    let g = generate(args.shape, args.nodes, args.edges, args.depth, args.seed)?;
    let mut text = serialize_cfg(&g, args.format);
    if !text.ends_with('\n') {
        text.push('\n');
    }
    io::write_output(&args.output, &text)?;
    Ok(0)
}
