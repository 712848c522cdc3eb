//! The `ctrldep` command line.
//!
//! Exit codes: 0 success, 1 `diff` found a difference or `check` found a
//! mismatch, 2 bad input or flags, 3 closure preconditions not met.

pub mod algo;
pub mod bench;
pub mod check;
pub mod diff;
pub mod gen;
pub mod io;
pub mod report;

use std::path::PathBuf;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use ctrldep::ranganath::PolicySpec;
use ctrldep::{ClosureError, GraphFormat};

use crate::algo::{Algo, ClosureArgs};

#[derive(Debug, Parser)]
#[command(
    name = "ctrldep",
    version,
    about = "Strong control dependence and closures on CFGs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one algorithm and print a JSON report.
    Analyze(AnalyzeArgs),
    /// Compare the relations computed by two algorithms.
    Diff(DiffArgs),
    /// Generate a graph.
    Gen(gen::GenArgs),
    /// Cross-check every algorithm against the brute-force oracle.
    Check(check::CheckArgs),
    /// Time algorithms over a sweep of generated graphs.
    Bench(bench::BenchArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Graph file, `-` for standard input.
    #[arg(long)]
    pub input: PathBuf,
    /// Input format; inferred from the file extension when omitted.
    #[arg(long)]
    pub format: Option<GraphFormat>,
}

#[derive(Debug, Args)]
pub struct SelectionArgs {
    /// Worklist policy for ntscd-rang: fifo, lifo or order:a,b,c.
    #[arg(long, default_value = "fifo")]
    pub policy: PolicySpec,
    /// Comma-separated criterion labels for cc.
    #[arg(long)]
    pub criterion: Option<String>,
    /// Start node for cc; must be in the criterion.
    #[arg(long)]
    pub start: Option<String>,
    /// Compute a best-effort closure even if some nodes are unreachable
    /// from the start node.
    #[arg(long)]
    pub allow_unreachable: bool,
}

impl SelectionArgs {
    pub fn closure(&self) -> ClosureArgs {
        ClosureArgs {
            criterion: self.criterion.clone(),
            start: self.start.clone(),
            allow_unreachable: self.allow_unreachable,
        }
    }
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum)]
    pub algo: Algo,
    #[command(flatten)]
    pub select: SelectionArgs,
    /// Report destination, `-` for standard output.
    #[arg(long, default_value = "-")]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct DiffArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// The two algorithms to compare; give the flag twice.
    #[arg(long, value_enum, num_args = 1, required = true)]
    pub algo: Vec<Algo>,
    #[command(flatten)]
    pub select: SelectionArgs,
}

pub fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Analyze(args) => analyze(args),
        Command::Diff(args) => diff::run(args),
        Command::Gen(args) => gen::run(args),
        Command::Check(args) => check::run(args),
        Command::Bench(args) => bench::run(args),
    }
}

fn analyze(args: AnalyzeArgs) -> Result<i32> {
    let g = io::read_graph(&args.input)?;
    let prepared = algo::prepare(&g, args.algo, &args.select.policy, &args.select.closure())?;
    let (output, elapsed) = algo::run(&g, args.algo, &prepared)?;
    if let algo::Output::Closure {
        best_effort: true, ..
    } = output
    {
        eprintln!(
            "warning: some nodes are unreachable from the start node; closure is best effort"
        );
    }
    let report = report::AnalysisReport::new(&g, args.algo, &output, elapsed.as_micros());
    let mut text = serde_json::to_string(&report)?;
    text.push('\n');
    io::write_output(&args.output, &text)?;
    Ok(0)
}

/// Exit status for an error that aborted a command.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    if err.chain().any(|e| e.is::<ClosureError>()) {
        3
    } else {
        2
    }
}
