//! Algorithm selection shared by the subcommands.

use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use ctrldep::ranganath::PolicySpec;
use ctrldep::{
    dod_formula, dod_new, ntscd_from_vp, ntscd_new, ntscd_ranganath, ntscd_ranganath_fixed,
    strong_closure, vp_sets, Cfg, ClosureSpec, DodRelation, FormulaVariant, NodeSet, NtscdRelation,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum)]
pub enum Algo {
    NtscdNew,
    NtscdVp,
    NtscdRang,
    NtscdRangFixed,
    DodNew,
    DodFormula,
    DodFormulaFixed,
    Cc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationKind {
    Ntscd,
    Dod,
    Closure,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::NtscdNew => "ntscd-new",
            Algo::NtscdVp => "ntscd-vp",
            Algo::NtscdRang => "ntscd-rang",
            Algo::NtscdRangFixed => "ntscd-rang-fixed",
            Algo::DodNew => "dod-new",
            Algo::DodFormula => "dod-formula",
            Algo::DodFormulaFixed => "dod-formula-fixed",
            Algo::Cc => "cc",
        }
    }

    pub fn kind(self) -> RelationKind {
        match self {
            Algo::NtscdNew | Algo::NtscdVp | Algo::NtscdRang | Algo::NtscdRangFixed => {
                RelationKind::Ntscd
            }
            Algo::DodNew | Algo::DodFormula | Algo::DodFormulaFixed => RelationKind::Dod,
            Algo::Cc => RelationKind::Closure,
        }
    }

    pub fn parse_list(s: &str) -> Result<Vec<Algo>> {
        s.split(',')
            .map(str::trim)
            .filter(|a| !a.is_empty())
            .map(|a| Algo::from_str(a, false).map_err(|e| anyhow::anyhow!(e)))
            .collect()
    }
}

/// Criterion and start labels for closure runs.
#[derive(Clone, Debug, Default)]
pub struct ClosureArgs {
    pub criterion: Option<String>,
    pub start: Option<String>,
    pub allow_unreachable: bool,
}

impl ClosureArgs {
    pub fn spec(&self, g: &Cfg) -> Result<ClosureSpec> {
        let (Some(criterion), Some(start)) = (&self.criterion, &self.start) else {
            bail!("--algo cc needs --criterion and --start");
        };
        let labels: Vec<&str> = criterion
            .split(',')
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .collect();
        let criterion = g.set_from_labels(&labels).context("invalid --criterion")?;
        let start = g.require(start).context("invalid --start")?;
        Ok(ClosureSpec {
            criterion,
            start,
            allow_unreachable: self.allow_unreachable,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Output {
    Ntscd(NtscdRelation),
    Dod(DodRelation),
    Closure { nodes: NodeSet, best_effort: bool },
}

/// Everything an algorithm needs besides the graph, resolved before the
/// clock starts.
pub enum Prepared {
    Plain,
    Policy(ctrldep::WorklistPolicy),
    Closure(ClosureSpec),
}

pub fn prepare(
    g: &Cfg,
    algo: Algo,
    policy: &PolicySpec,
    closure: &ClosureArgs,
) -> Result<Prepared> {
    Ok(match algo {
        Algo::NtscdRang => Prepared::Policy(policy.resolve(g).context("invalid --policy")?),
        Algo::Cc => Prepared::Closure(closure.spec(g)?),
        _ => Prepared::Plain,
    })
}

/// Runs `algo` and reports the time spent in the algorithm itself.
pub fn run(g: &Cfg, algo: Algo, prepared: &Prepared) -> Result<(Output, Duration)> {
    let start = Instant::now();
    let out = match (algo, prepared) {
        (Algo::NtscdNew, _) => Output::Ntscd(ntscd_new(g)),
        (Algo::NtscdVp, _) => Output::Ntscd(ntscd_from_vp(g, &vp_sets(g))),
        (Algo::NtscdRang, Prepared::Policy(p)) => Output::Ntscd(ntscd_ranganath(g, p)),
        (Algo::NtscdRang, _) => Output::Ntscd(ntscd_ranganath(g, &ctrldep::WorklistPolicy::Fifo)),
        (Algo::NtscdRangFixed, _) => Output::Ntscd(ntscd_ranganath_fixed(g)),
        (Algo::DodNew, _) => Output::Dod(dod_new(g)),
        (Algo::DodFormula, _) => Output::Dod(dod_formula(g, FormulaVariant::Original)),
        (Algo::DodFormulaFixed, _) => Output::Dod(dod_formula(g, FormulaVariant::Fixed)),
        (Algo::Cc, Prepared::Closure(spec)) => {
            let r = strong_closure(g, spec)?;
            Output::Closure {
                nodes: r.nodes,
                best_effort: r.best_effort,
            }
        }
        (Algo::Cc, _) => bail!("--algo cc needs --criterion and --start"),
    };
    Ok((out, start.elapsed()))
}
