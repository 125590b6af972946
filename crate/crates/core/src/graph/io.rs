//! Edge-list text format and DOT export.
//!
//! ```text
//! n 4
//! 0 1
//! 0 3
//! 1 2
//! 2 3
//! ```
//!
//! First line `n <N>`, then one `<u> <v>` line per edge with `u < v`,
//! sorted lexicographically. Writing is canonical; reading accepts the
//! edge lines in any order but rejects loops, duplicates and bad indices.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::{Graph, GraphError};

impl Graph {
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.vertex_count());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = numbered_lines(text);
        let n = parse_header(&mut lines)?;
        let mut edges = BTreeSet::new();
        for (line, content) in lines {
            let (u, v) = parse_edge(line, content, n)?;
            if !edges.insert((u.min(v), u.max(v))) {
                return Err(GraphError::Parse { line, message: format!("duplicate edge {u} {v}") });
            }
        }
        Graph::from_edges(n, edges)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.vertex_count() {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

/// Non-blank lines with their 1-based line numbers.
pub(crate) fn numbered_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

pub(crate) fn parse_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
) -> Result<usize, GraphError> {
    let (line, header) = lines.next().ok_or(GraphError::Parse {
        line: 1,
        message: "missing `n <N>` header".into(),
    })?;
    let n = header
        .strip_prefix("n ")
        .and_then(|rest| rest.trim().parse::<usize>().ok())
        .ok_or_else(|| GraphError::Parse { line, message: format!("expected `n <N>`, got `{header}`") })?;
    if n == 0 {
        return Err(GraphError::NoVertices);
    }
    Ok(n)
}

pub(crate) fn parse_edge(line: usize, content: &str, n: usize) -> Result<(usize, usize), GraphError> {
    let err = |message: String| GraphError::Parse { line, message };
    let nums: Vec<usize> = content
        .split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| err(format!("bad vertex `{t}`"))))
        .collect::<Result<_, _>>()?;
    match nums[..] {
        [u, v] if u == v => Err(err(format!("self-loop at {u}"))),
        [u, v] if u >= n || v >= n => Err(err(format!("vertex out of range in `{content}`"))),
        [u, v] => Ok((u, v)),
        _ => Err(err(format!("expected `<u> <v>`, got `{content}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gnp_sample, named};
    use proptest::prelude::*;

    #[test]
    fn c4_text_is_canonical() {
        let text = named("c4").unwrap().to_edge_list();
        assert_eq!(text, "n 4\n0 1\n0 3\n1 2\n2 3\n");
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(Graph::from_edge_list("").is_err());
        assert!(Graph::from_edge_list("n 3\n0 0\n").is_err());
        assert!(Graph::from_edge_list("n 3\n0 3\n").is_err());
        assert!(Graph::from_edge_list("n 3\n0 1\n1 0\n").is_err());
        assert!(Graph::from_edge_list("n 3\n0 1 2\n").is_err());
        assert!(Graph::from_edge_list("vertices 3\n").is_err());
    }

    #[test]
    fn dot_lists_every_edge() {
        let dot = named("p4").unwrap().to_dot();
        assert!(dot.starts_with("graph G {"));
        assert_eq!(dot.matches(" -- ").count(), 3);
    }

    proptest! {
        #[test]
        fn edge_list_round_trips(n in 1usize..40, p in 0.0f64..=1.0, seed: u64) {
            let g = gnp_sample(n, p, seed).unwrap();
            let text = g.to_edge_list();
            let back = Graph::from_edge_list(&text).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(back.to_edge_list(), text);
        }

        #[test]
        fn complement_is_an_involution(n in 1usize..70, p in 0.0f64..=1.0, seed: u64) {
            let g = gnp_sample(n, p, seed).unwrap();
            let c = g.complement();
            prop_assert_eq!(c.edge_count() + g.edge_count(), n * (n - 1) / 2);
            prop_assert_eq!(c.complement(), g);
        }

        #[test]
        fn neighborhoods_and_components(n in 1usize..30, p in 0.0f64..=1.0, seed: u64) {
            let g = gnp_sample(n, p, seed).unwrap();
            for v in 0..n {
                prop_assert!(!g.open_neighborhood(v).unwrap().contains(v));
                prop_assert!(g.closed_neighborhood(v).unwrap().contains(v));
            }
            let total: usize = g.components().iter().map(Vec::len).sum();
            prop_assert_eq!(total, n);
            prop_assert_eq!(g.is_connected(), g.diameter() != crate::graph::Diameter::Infinite);
        }
    }
}
