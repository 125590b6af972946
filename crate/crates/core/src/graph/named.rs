//! Witness graphs with fixed vertex labelings.
//!
//! | name          | labeling                                                        |
//! |---------------|-----------------------------------------------------------------|
//! | `c4`          | cycle 0-1-2-3-0                                                 |
//! | `p4`          | path 0-1-2-3                                                    |
//! | `d4`          | `c4` plus the chord 0-2 (vertices 0 and 2 have degree 3)        |
//! | `k33`         | sides {0,1,2} and {3,4,5}                                       |
//! | `petersen`    | outer 0-1-2-3-4-0, spokes i-(i+5), inner 5-7, 5-8, 6-8, 6-9, 7-9 |
//! | `cycle(k)`    | 0-1-…-(k-1)-0, k ≥ 3                                            |
//! | `path(k)`     | 0-1-…-(k-1), k ≥ 1                                              |
//! | `complete(k)` | all pairs, k ≥ 1                                                |

use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    C4,
    P4,
    D4,
    K33,
    Petersen,
    Cycle(usize),
    Path(usize),
    Complete(usize),
}

impl NamedGraph {
    pub fn build(self) -> Graph {
        let edges: Vec<(usize, usize)> = match self {
            NamedGraph::C4 => return NamedGraph::Cycle(4).build(),
            NamedGraph::P4 => return NamedGraph::Path(4).build(),
            NamedGraph::D4 => vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)],
            NamedGraph::K33 => (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect(),
            NamedGraph::Petersen => {
                let mut e: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
                e.extend((0..5).map(|i| (i, i + 5)));
                e.extend([(5, 7), (5, 8), (6, 8), (6, 9), (7, 9)]);
                e
            }
            NamedGraph::Cycle(k) => (0..k).map(|i| (i, (i + 1) % k)).collect(),
            NamedGraph::Path(k) => (1..k).map(|i| (i - 1, i)).collect(),
            NamedGraph::Complete(k) => return Graph::complete(k).expect("k >= 1 checked at parse"),
        };
        Graph::from_edges(self.vertex_count(), edges).expect("named graph edges are valid")
    }

    pub fn vertex_count(self) -> usize {
        match self {
            NamedGraph::C4 | NamedGraph::P4 | NamedGraph::D4 => 4,
            NamedGraph::K33 => 6,
            NamedGraph::Petersen => 10,
            NamedGraph::Cycle(k) | NamedGraph::Path(k) | NamedGraph::Complete(k) => k,
        }
    }
}

impl FromStr for NamedGraph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || GraphError::UnknownName(s.to_string());
        let s_trim = s.trim().to_ascii_lowercase();
        match s_trim.as_str() {
            "c4" => return Ok(NamedGraph::C4),
            "p4" => return Ok(NamedGraph::P4),
            "d4" => return Ok(NamedGraph::D4),
            "k33" => return Ok(NamedGraph::K33),
            "petersen" => return Ok(NamedGraph::Petersen),
            _ => {}
        }
        let (head, rest) = s_trim.split_once('(').ok_or_else(unknown)?;
        let arg: usize = rest
            .strip_suffix(')')
            .and_then(|a| a.trim().parse().ok())
            .ok_or_else(unknown)?;
        match head {
            "cycle" if arg >= 3 => Ok(NamedGraph::Cycle(arg)),
            "path" if arg >= 1 => Ok(NamedGraph::Path(arg)),
            "complete" if arg >= 1 => Ok(NamedGraph::Complete(arg)),
            _ => Err(unknown()),
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::C4 => f.write_str("c4"),
            NamedGraph::P4 => f.write_str("p4"),
            NamedGraph::D4 => f.write_str("d4"),
            NamedGraph::K33 => f.write_str("k33"),
            NamedGraph::Petersen => f.write_str("petersen"),
            NamedGraph::Cycle(k) => write!(f, "cycle({k})"),
            NamedGraph::Path(k) => write!(f, "path({k})"),
            NamedGraph::Complete(k) => write!(f, "complete({k})"),
        }
    }
}

/// Looks up a witness graph by name, e.g. `"petersen"` or `"cycle(5)"`.
pub fn named(name: &str) -> Result<Graph, GraphError> {
    Ok(name.parse::<NamedGraph>()?.build())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_regular(g: &Graph, d: usize) -> bool {
        (0..g.vertex_count()).all(|v| g.degree(v) == d)
    }

    #[test]
    fn petersen_shape() {
        let g = named("petersen").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 15));
        assert!(is_regular(&g, 3));
    }

    #[test]
    fn c4_and_k33_shape() {
        let c4 = named("c4").unwrap();
        assert_eq!((c4.vertex_count(), c4.edge_count()), (4, 4));
        assert!(is_regular(&c4, 2));

        let k33 = named("k33").unwrap();
        assert_eq!((k33.vertex_count(), k33.edge_count()), (6, 9));
        for u in 0..3 {
            for v in 0..3 {
                assert!(!k33.has_edge(u, v) && !k33.has_edge(u + 3, v + 3));
                assert!(k33.has_edge(u, v + 3));
            }
        }
    }

    #[test]
    fn d4_has_two_dominating_vertices() {
        let d4 = named("d4").unwrap();
        assert_eq!(d4.degree(0), 3);
        assert_eq!(d4.degree(2), 3);
        assert_eq!(d4.edge_count(), 5);
    }

    #[test]
    fn parametric_names() {
        assert_eq!(named("cycle(5)").unwrap().edge_count(), 5);
        assert_eq!(named("path(1)").unwrap().edge_count(), 0);
        assert_eq!(named("complete(4)").unwrap().edge_count(), 6);
        assert!(named("cycle(2)").is_err());
        assert!(named("hypercube").is_err());
        assert_eq!("Complete(4)".parse::<NamedGraph>().unwrap().to_string(), "complete(4)");
    }
}
