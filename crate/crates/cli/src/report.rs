use serde::Serialize;

use ctrldep::Cfg;

use crate::algo::{Algo, Output};

#[derive(Debug, Serialize)]
pub struct GraphStats {
    pub nodes: usize,
    pub edges: usize,
    pub predicates: usize,
}

impl GraphStats {
    pub fn of(g: &Cfg) -> Self {
        GraphStats {
            nodes: g.node_count(),
            edges: g.edge_count(),
            predicates: g.predicates().len(),
        }
    }
}

/// JSON report of one analysis run. Relations are sorted by label.
#[derive(Debug, Serialize)]
pub struct AnalysisReport {
    pub graph: GraphStats,
    pub algo: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ntscd: Option<Vec<[String; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dod: Option<Vec<[String; 3]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closure: Option<Vec<String>>,
    pub time_us: u128,
}

impl AnalysisReport {
    pub fn new(g: &Cfg, algo: Algo, output: &Output, time_us: u128) -> Self {
        let mut report = AnalysisReport {
            graph: GraphStats::of(g),
            algo: algo.name(),
            ntscd: None,
            dod: None,
            closure: None,
            time_us,
        };
        match output {
            Output::Ntscd(r) => report.ntscd = Some(r.to_labels(g)),
            Output::Dod(r) => report.dod = Some(r.to_labels(g)),
            Output::Closure { nodes, .. } => {
                report.closure = Some(nodes.labels(g).into_iter().map(str::to_owned).collect())
            }
        }
        report
    }
}
