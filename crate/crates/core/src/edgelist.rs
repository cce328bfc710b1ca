//! Plain-text edge lists.
//!
//! ```text
//! undirected
//! # nodes 4
//! 0 1
//! 1 2
//! ```
//!
//! The first non-comment line is `undirected` or `directed`. Each further
//! line holds one edge `u v`. Lines starting with `#` are comments, except
//! `# nodes N`, which declares the node count so isolated nodes survive.
//! Ids are remapped to `0..N` in order of first appearance.

use std::collections::HashMap;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let err = |line: usize, message: String| Error::EdgeList { line, message };
    let mut graph: Option<Graph> = None;
    let mut ids: HashMap<u64, usize> = HashMap::new();
    let mut declared: Option<(usize, usize)> = None;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let mut words = comment.split_whitespace();
            if words.next() == Some("nodes") {
                let n = words
                    .next()
                    .and_then(|w| w.parse::<usize>().ok())
                    .filter(|_| words.next().is_none())
                    .ok_or_else(|| err(line_no, format!("malformed node count '{line}'")))?;
                declared = Some((n, line_no));
            }
            continue;
        }
        let Some(g) = graph.as_mut() else {
            graph = Some(match line {
                "undirected" => Graph::undirected(),
                "directed" => Graph::directed(),
                _ => {
                    return Err(err(
                        line_no,
                        format!("expected 'undirected' or 'directed', found '{line}'"),
                    ))
                }
            });
            continue;
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = fields[..] else {
            return Err(err(line_no, format!("expected 'u v', found '{line}'")));
        };
        let parse_id = |s: &str| {
            s.parse::<u64>()
                .map_err(|_| err(line_no, format!("invalid node id '{s}'")))
        };
        let (a, b) = (parse_id(a)?, parse_id(b)?);
        if a == b {
            return Err(err(line_no, format!("self-loop on node {a}")));
        }
        let mut id = |x: u64| *ids.entry(x).or_insert_with(|| g.add_node());
        let (u, v) = (id(a), id(b));
        g.add_edge(u, v)?;
    }

    let mut g = graph.ok_or_else(|| err(0, "missing 'undirected' or 'directed' header".into()))?;
    if let Some((n, line_no)) = declared {
        if n < g.node_count() {
            return Err(err(
                line_no,
                format!("declared {n} nodes but edges reference {}", g.node_count()),
            ));
        }
        while g.node_count() < n {
            g.add_node();
        }
    }
    Ok(g)
}

/// Header, an optional `# nodes N` line when some node has no edges, then
/// the sorted edge list, each line ending in LF.
pub fn serialize_edgelist(g: &Graph) -> String {
    let mut out = String::from(if g.is_directed() {
        "directed\n"
    } else {
        "undirected\n"
    });
    let isolated = (0..g.node_count()).any(|u| g.out_degree(u) + g.in_degree(u) == 0);
    if isolated {
        writeln!(out, "# nodes {}", g.node_count()).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
