//! Rooted graphs, extension densities and threshold functions.
//!
//! For a rooted graph `(H, R)` and an induced subgraph `S ⊇ R`, the density
//! counts edges of `S` not inside `R`. Two denominators are offered:
//! [`Convention::Paper`] divides by `|V_S|`, [`Convention::NonRoot`] by
//! `|V_S ∖ R|`. All arithmetic is exact.

mod text;

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::logic::Formula;

/// Largest pattern for subextension enumeration.
pub const MAX_PATTERN: usize = 16;
/// Largest pattern for extension statements.
pub const MAX_STATEMENT: usize = 8;

#[derive(Debug, Error, PartialEq)]
pub enum ThresholdError {
    #[error("a rooted graph needs at least one root")]
    NoRoots,
    #[error("root {root} out of range for a graph on {n} vertices")]
    RootOutOfRange { root: usize, n: usize },
    #[error("root {0} listed twice")]
    DuplicateRoot(usize),
    #[error("pattern has {n} vertices, at most {max} supported here")]
    TooLarge { n: usize, max: usize },
    #[error("no non-root vertices")]
    NoNonRoots,
    #[error("maximal density is zero: no non-root structure")]
    ZeroDensity,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Denominator `|V_S|`.
    #[default]
    Paper,
    /// Denominator `|V_S ∖ R|`.
    NonRoot,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Paper => "paper",
            Convention::NonRoot => "nonroot",
        })
    }
}

impl FromStr for Convention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "paper" => Ok(Convention::Paper),
            "nonroot" | "non-root" => Ok(Convention::NonRoot),
            _ => Err(format!("unknown convention `{s}` (expected paper or nonroot)")),
        }
    }
}

/// Pattern graph `H` with designated roots `R`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootedGraph {
    h: Graph,
    roots: Vec<usize>,
}

impl RootedGraph {
    pub fn new(h: Graph, roots: impl IntoIterator<Item = usize>) -> Result<RootedGraph, ThresholdError> {
        let n = h.vertex_count();
        let mut rs: Vec<usize> = Vec::new();
        for r in roots {
            if r >= n {
                return Err(ThresholdError::RootOutOfRange { root: r, n });
            }
            if rs.contains(&r) {
                return Err(ThresholdError::DuplicateRoot(r));
            }
            rs.push(r);
        }
        if rs.is_empty() {
            return Err(ThresholdError::NoRoots);
        }
        rs.sort_unstable();
        Ok(RootedGraph { h, roots: rs })
    }

    /// Two roots joined through one non-root: `x – z – y`.
    pub fn common_neighbor_gadget() -> RootedGraph {
        RootedGraph::new(Graph::from_edges(3, [(0, 2), (1, 2)]).expect("valid gadget"), [0, 1])
            .expect("valid roots")
    }

    pub fn graph(&self) -> &Graph {
        &self.h
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn is_root(&self, v: usize) -> bool {
        self.roots.binary_search(&v).is_ok()
    }

    pub fn non_roots(&self) -> Vec<usize> {
        (0..self.h.vertex_count()).filter(|&v| !self.is_root(v)).collect()
    }

    /// `|E_H ∖ E_R|`: edges with at least one non-root end.
    pub fn free_edges(&self) -> usize {
        self.h.edges().filter(|&(u, v)| !(self.is_root(u) && self.is_root(v))).count()
    }

    /// Some edge joins a root to a non-root.
    pub fn is_grounded(&self) -> bool {
        self.h.edges().any(|(u, v)| self.is_root(u) != self.is_root(v))
    }

    /// `|E_H ∖ E_R|` over `|V_H|` or `|V_H ∖ R|`.
    pub fn dens(&self, conv: Convention) -> Result<Ratio<i64>, ThresholdError> {
        let denom = match conv {
            Convention::Paper => self.h.vertex_count(),
            Convention::NonRoot => self.h.vertex_count() - self.roots.len(),
        };
        if denom == 0 {
            return Err(ThresholdError::NoNonRoots);
        }
        Ok(Ratio::new(self.free_edges() as i64, denom as i64))
    }
}

/// An induced subgraph `S` with `R ⊆ V_S ⊆ V_H`, remembering which vertices of `H` it uses.
#[derive(Clone, Debug, PartialEq)]
pub struct Subextension {
    /// Vertices of `H` in `S`, sorted.
    pub vertices: Vec<usize>,
    /// `S` relabeled to `0..vertices.len()`.
    pub rooted: RootedGraph,
}

/// All subextensions, one per subset of non-roots (the empty subset first, `H` last).
pub fn subextensions(rg: &RootedGraph) -> Result<Vec<Subextension>, ThresholdError> {
    let n = rg.h.vertex_count();
    if n > MAX_PATTERN {
        return Err(ThresholdError::TooLarge { n, max: MAX_PATTERN });
    }
    let free = rg.non_roots();
    let mut out = Vec::with_capacity(1 << free.len());
    for mask in 0u32..1 << free.len() {
        let mut vertices: Vec<usize> = rg.roots.clone();
        vertices.extend(free.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v));
        vertices.sort_unstable();
        let h = rg.h.induced(&vertices)?;
        let roots = vertices.iter().enumerate().filter(|(_, &v)| rg.is_root(v)).map(|(i, _)| i);
        let rooted = RootedGraph::new(h, roots)?;
        out.push(Subextension { vertices, rooted });
    }
    Ok(out)
}

/// Subextensions that take part in the maximum: all of them under the `Paper`
/// convention, those with a non-root otherwise.
fn candidates(rg: &RootedGraph, conv: Convention) -> Result<Vec<(Subextension, Ratio<i64>)>, ThresholdError> {
    let mut out = Vec::new();
    for s in subextensions(rg)? {
        match s.rooted.dens(conv) {
            Ok(d) => out.push((s, d)),
            Err(ThresholdError::NoNonRoots) => {}
            Err(e) => return Err(e),
        }
    }
    if out.is_empty() {
        return Err(ThresholdError::NoNonRoots);
    }
    Ok(out)
}

/// Maximal density over subextensions.
pub fn mad(rg: &RootedGraph, conv: Convention) -> Result<Ratio<i64>, ThresholdError> {
    Ok(candidates(rg, conv)?.into_iter().map(|(_, d)| d).max().expect("non-empty"))
}

/// Subextensions attaining [`mad`].
pub fn primal_subextensions(rg: &RootedGraph, conv: Convention) -> Result<Vec<Subextension>, ThresholdError> {
    let all = candidates(rg, conv)?;
    let best = all.iter().map(|(_, d)| *d).max().expect("non-empty");
    Ok(all.into_iter().filter(|(_, d)| *d == best).map(|(s, _)| s).collect())
}

pub fn is_grounded(rg: &RootedGraph) -> bool {
    rg.is_grounded()
}

/// `f(N) = N^exponent · (log N)^log_exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdFn {
    pub exponent: Ratio<i64>,
    pub log_exponent: Ratio<i64>,
    pub convention: Convention,
}

impl ThresholdFn {
    pub fn to_json(&self) -> Value {
        json!({
            "exponent_num": self.exponent.numer(),
            "exponent_den": self.exponent.denom(),
            "log_exp_num": self.log_exponent.numer(),
            "log_exp_den": self.log_exponent.denom(),
            "convention": self.convention.to_string(),
        })
    }
}

impl fmt::Display for ThresholdFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N^({})", self.exponent)?;
        if *self.log_exponent.numer() != 0 {
            write!(f, " (log N)^({})", self.log_exponent)?;
        }
        Ok(())
    }
}

/// Exponent `−1/mad`; a log factor `1/s` appears when some primal
/// subextension is grounded, `s` being the fewest free edges among those.
pub fn threshold(rg: &RootedGraph, conv: Convention) -> Result<ThresholdFn, ThresholdError> {
    let m = mad(rg, conv)?;
    if *m.numer() == 0 {
        return Err(ThresholdError::ZeroDensity);
    }
    let s = primal_subextensions(rg, conv)?
        .iter()
        .filter(|s| s.rooted.is_grounded())
        .map(|s| s.rooted.free_edges() as i64)
        .min();
    Ok(ThresholdFn {
        exponent: -m.recip(),
        log_exponent: s.map_or(Ratio::from_integer(0), |s| Ratio::new(1, s)),
        convention: conv,
    })
}

/// `∀x1…xr ∃y1…ys ⋀ E(·,·)` over the edges of `H` with a non-root end.
/// Adjacency among roots and non-adjacency are left unconstrained.
pub fn ext_statement(rg: &RootedGraph) -> Result<Formula, ThresholdError> {
    let n = rg.h.vertex_count();
    if n > MAX_STATEMENT {
        return Err(ThresholdError::TooLarge { n, max: MAX_STATEMENT });
    }
    let mut names = vec![String::new(); n];
    for (i, &r) in rg.roots.iter().enumerate() {
        names[r] = format!("x{}", i + 1);
    }
    let free = rg.non_roots();
    for (i, &v) in free.iter().enumerate() {
        names[v] = format!("y{}", i + 1);
    }
    let atoms = rg
        .h
        .edges()
        .filter(|&(u, v)| !(rg.is_root(u) && rg.is_root(v)))
        .map(|(u, v)| Formula::edge(&names[u], &names[v]));
    let body = Formula::and_all(atoms).unwrap_or_else(|| Formula::eq("x1", "x1"));
    let body = Formula::exists_all(free.iter().map(|&v| names[v].clone()), body);
    Ok(Formula::forall_all(rg.roots.iter().map(|&r| names[r].clone()), body))
}
