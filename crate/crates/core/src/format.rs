//! Textual graph formats.
//!
//! JSON:
//!
//! ```json
//! {"nodes":["a","b"],"edges":[["a","b"]]}
//! ```
//!
//! Edge list: one `src dst` record per line (or separated by `,`), `#`
//! starts a comment. Nodes are declared implicitly by first appearance. A
//! record with a single label declares that node, which is how isolated
//! nodes and node order survive a round trip.
//!
//! Both formats keep edge order and reject nodes with more than two
//! out-edges.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cfg::{Cfg, CfgBuilder};
use crate::error::{CfgError, Location};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphFormat {
    Json,
    EdgeList,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(GraphFormat::Json),
            "edgelist" | "edges" => Ok(GraphFormat::EdgeList),
            other => Err(format!(
                "unknown graph format `{other}` (expected json or edgelist)"
            )),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonGraph {
    nodes: Vec<String>,
    edges: Vec<(String, String)>,
}

pub fn parse_cfg(text: &str, format: GraphFormat) -> Result<Cfg, CfgError> {
    match format {
        GraphFormat::Json => parse_json(text),
        GraphFormat::EdgeList => parse_edge_list(text),
    }
}

pub fn serialize_cfg(g: &Cfg, format: GraphFormat) -> String {
    match format {
        GraphFormat::Json => to_json(g),
        GraphFormat::EdgeList => to_edge_list(g),
    }
}

fn parse_json(text: &str) -> Result<Cfg, CfgError> {
    let raw: JsonGraph = serde_json::from_str(text).map_err(|e| CfgError::Syntax {
        location: Location::Line {
            line: e.line(),
            column: e.column(),
        },
        message: e.to_string(),
    })?;
    let mut b = CfgBuilder::with_capacity(raw.nodes.len());
    for (i, label) in raw.nodes.into_iter().enumerate() {
        b.add_node(label)
            .map_err(|e| e.at(Location::NodeEntry(i)))?;
    }
    for (i, (src, dst)) in raw.edges.iter().enumerate() {
        b.add_edge_by_label(src, dst)
            .map_err(|e| e.at(Location::EdgeEntry(i)))?;
    }
    Ok(b.build())
}

fn to_json(g: &Cfg) -> String {
    let raw = JsonGraph {
        nodes: g.labels().to_vec(),
        edges: g
            .edges()
            .map(|(a, b)| (g.label(a).to_owned(), g.label(b).to_owned()))
            .collect(),
    };
    serde_json::to_string(&raw).expect("graph serialization cannot fail")
}

fn parse_edge_list(text: &str) -> Result<Cfg, CfgError> {
    let mut b = CfgBuilder::new();
    for (lineno, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("");
        let mut offset = 0;
        for record in content.split(',') {
            let column = offset + 1 + (record.len() - record.trim_start().len());
            offset += record.len() + 1;
            let location = Location::Line {
                line: lineno + 1,
                column,
            };
            let tokens: Vec<&str> = record.split_whitespace().collect();
            match tokens.as_slice() {
                [] => {}
                [node] => {
                    b.node_or_insert(node).map_err(|e| e.at(location))?;
                }
                [src, dst] => {
                    let s = b.node_or_insert(src).map_err(|e| e.at(location))?;
                    let d = b.node_or_insert(dst).map_err(|e| e.at(location))?;
                    b.add_edge(s, d).map_err(|e| e.at(location))?;
                }
                _ => {
                    return Err(CfgError::Syntax {
                        location,
                        message: format!("expected `src dst`, found {} labels", tokens.len()),
                    })
                }
            }
        }
    }
    Ok(b.build())
}

fn to_edge_list(g: &Cfg) -> String {
    let mut out = String::new();
    for label in g.labels() {
        let _ = writeln!(out, "{label}");
    }
    for (a, b) in g.edges() {
        let _ = writeln!(out, "{} {}", g.label(a), g.label(b));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn single_node_json() {
        let g = parse_cfg(r#"{"nodes":["a"],"edges":[]}"#, GraphFormat::Json).unwrap();
        assert_eq!(g.node_count(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(
            serialize_cfg(&g, GraphFormat::Json),
            r#"{"nodes":["a"],"edges":[]}"#
        );
    }

    #[test]
    fn nested_diamond_edge_list_inline() {
        let g = parse_cfg("1 2,1 6,2 3,2 4,3 5,4 5,5 6", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.node_count(), 6);
        assert_eq!(g.edge_count(), 7);
        let preds: Vec<_> = g.predicates().iter().map(|&p| g.label(p)).collect();
        assert_eq!(preds, ["1", "2"]);
        let edges = |g: &Cfg| -> Vec<(String, String)> {
            g.edges()
                .map(|(a, b)| (g.label(a).to_owned(), g.label(b).to_owned()))
                .collect()
        };
        assert_eq!(edges(&g), edges(&fixtures::nested_diamond()));
    }

    #[test]
    fn two_entry_cycle_json_edges() {
        let json = serialize_cfg(&fixtures::two_entry_cycle(), GraphFormat::Json);
        assert!(json.contains(r#""edges":[["a","b"],["a","c"],["b","c"],["c","b"]]"#));
    }

    #[test]
    fn out_degree_error_has_position() {
        let err = parse_cfg("a b\na c\n# comment\na d\n", GraphFormat::EdgeList).unwrap_err();
        assert!(matches!(err.kind(), CfgError::OutDegreeExceeded(_)));
        let msg = err.to_string();
        assert!(msg.starts_with("line 4, column 1"), "{msg}");
        assert!(msg.contains("out-degree exceeds 2"), "{msg}");

        let err = parse_cfg(
            r#"{"nodes":["a","b","c","d"],"edges":[["a","b"],["a","c"],["a","d"]]}"#,
            GraphFormat::Json,
        )
        .unwrap_err();
        assert_eq!(err.to_string(), "edges[2]: node `a`: out-degree exceeds 2");
    }

    #[test]
    fn json_semantic_errors() {
        let err = parse_cfg(r#"{"nodes":["a","a"],"edges":[]}"#, GraphFormat::Json).unwrap_err();
        assert!(matches!(err.kind(), CfgError::DuplicateNode(_)));
        assert!(err.to_string().starts_with("nodes[1]"));

        let err =
            parse_cfg(r#"{"nodes":["a"],"edges":[["a","z"]]}"#, GraphFormat::Json).unwrap_err();
        assert!(matches!(err.kind(), CfgError::UndeclaredNode(ref l) if l == "z"));
    }

    #[test]
    fn json_syntax_error_has_line() {
        let err = parse_cfg("{\"nodes\": [\"a\",\n  ]}", GraphFormat::Json).unwrap_err();
        match err {
            CfgError::Syntax {
                location: Location::Line { line, .. },
                ..
            } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn edge_list_syntax_error() {
        let err = parse_cfg("a b c", GraphFormat::EdgeList).unwrap_err();
        assert!(matches!(err, CfgError::Syntax { .. }));
        let err = parse_cfg("a b, x y z", GraphFormat::EdgeList).unwrap_err();
        assert!(err.to_string().starts_with("line 1, column 6"), "{err}");
    }

    #[test]
    fn edge_list_keeps_isolated_nodes() {
        let g = Cfg::from_edges(&["z", "a", "b"], &[("a", "b")]).unwrap();
        let text = serialize_cfg(&g, GraphFormat::EdgeList);
        assert_eq!(parse_cfg(&text, GraphFormat::EdgeList).unwrap(), g);
    }
}
