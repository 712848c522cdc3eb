use std::fmt;

use thiserror::Error;

/// Where in an input document an error was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    /// 1-based line and column of a textual record.
    Line { line: usize, column: usize },
    /// Index into the JSON `nodes` array.
    NodeEntry(usize),
    /// Index into the JSON `edges` array.
    EdgeEntry(usize),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Line { line, column } => write!(f, "line {line}, column {column}"),
            Location::NodeEntry(i) => write!(f, "nodes[{i}]"),
            Location::EdgeEntry(i) => write!(f, "edges[{i}]"),
        }
    }
}

#[derive(Debug, Error)]
pub enum CfgError {
    #[error("duplicate node label `{0}`")]
    DuplicateNode(String),
    #[error("edge endpoint `{0}` is not a declared node")]
    UndeclaredNode(String),
    #[error("node `{0}`: out-degree exceeds 2")]
    OutDegreeExceeded(String),
    #[error(
        "invalid node label {0:?} (labels are non-empty and contain no whitespace, ',' or '#')"
    )]
    InvalidLabel(String),
    #[error("{location}: {message}")]
    Syntax { location: Location, message: String },
    #[error("{location}: {source}")]
    At {
        location: Location,
        #[source]
        source: Box<CfgError>,
    },
}

impl CfgError {
    pub(crate) fn at(self, location: Location) -> CfgError {
        CfgError::At {
            location,
            source: Box::new(self),
        }
    }

    /// The innermost error, stripped of location wrappers.
    pub fn kind(&self) -> &CfgError {
        match self {
            CfgError::At { source, .. } => source.kind(),
            other => other,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenerateError {
    #[error("cannot place {edges} edges on {nodes} nodes with out-degree at most 2")]
    InfeasibleEdges { nodes: usize, edges: usize },
    #[error("worst-case DOD graph needs at least 8 nodes and a multiple of 4, got {0}")]
    InvalidWorstCaseSize(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("target set is empty")]
    EmptyTargets,
    #[error("the two query nodes must differ")]
    SameNode,
    #[error("node {0} must not belong to the set")]
    NodeInSet(String),
    #[error("projection graph structure violated for predicate {predicate}: {detail}")]
    StructureViolation { predicate: String, detail: String },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClosureError {
    #[error("start node `{0}` is not in the criterion set")]
    StartNotInCriterion(String),
    #[error("{} node(s) unreachable from start: {}", .0.len(), .0.join(", "))]
    Unreachable(Vec<String>),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {nodes} nodes, oracle budget is {max}")]
    BudgetExceeded { nodes: usize, max: usize },
    #[error("the two query nodes must differ")]
    SameNode,
}
