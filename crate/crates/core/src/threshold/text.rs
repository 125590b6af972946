//! Rooted-graph text format: an edge list followed by `roots <r1> <r2> ...`.

use crate::graph::io::{numbered_lines, parse_edge, parse_header};
use crate::graph::{Graph, GraphError};

use super::{RootedGraph, ThresholdError};

impl RootedGraph {
    pub fn to_text(&self) -> String {
        let mut out = self.graph().to_edge_list();
        let roots: Vec<String> = self.roots().iter().map(|r| r.to_string()).collect();
        out.push_str(&format!("roots {}\n", roots.join(" ")));
        out
    }

    pub fn from_text(text: &str) -> Result<RootedGraph, ThresholdError> {
        let mut lines = numbered_lines(text);
        let n = parse_header(&mut lines)?;
        let mut edges = Vec::new();
        let mut roots = None;
        for (line, content) in lines {
            if roots.is_some() {
                return Err(GraphError::Parse { line, message: "`roots` must be the last line".into() }.into());
            }
            if let Some(rest) = content.strip_prefix("roots") {
                let parsed = rest
                    .split_whitespace()
                    .map(|t| t.parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| GraphError::Parse { line, message: format!("bad roots line `{content}`") })?;
                roots = Some(parsed);
            } else {
                let (u, v) = parse_edge(line, content, n)?;
                edges.push((u, v));
            }
        }
        let roots = roots.ok_or(GraphError::Parse { line: 0, message: "missing `roots` line".into() })?;
        RootedGraph::new(Graph::from_edges(n, edges)?, roots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gadget_round_trip() {
        let g = RootedGraph::common_neighbor_gadget();
        let text = g.to_text();
        assert_eq!(text, "n 3\n0 2\n1 2\nroots 0 1\n");
        assert_eq!(RootedGraph::from_text(&text).unwrap(), g);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(RootedGraph::from_text("n 3\n0 2\n").is_err());
        assert!(RootedGraph::from_text("n 3\nroots 0\n0 2\n").is_err());
        assert!(RootedGraph::from_text("n 3\n0 2\nroots\n").is_err());
        assert!(RootedGraph::from_text("n 3\n0 2\nroots 5\n").is_err());
    }
}
