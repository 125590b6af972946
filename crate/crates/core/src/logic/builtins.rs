//! Constructors for extension axioms and the winning-condition sentences.

use std::fmt;
use std::str::FromStr;

use super::{Formula, LogicError};

fn vars(prefix: &str, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

fn neq(a: &str, b: &str) -> Formula {
    Formula::not(Formula::eq(a, b))
}

fn pairwise_distinct(vs: &[String]) -> Vec<Formula> {
    let mut out = Vec::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            out.push(neq(&vs[i], &vs[j]));
        }
    }
    out
}

/// `EA_{m,n}`: every `n` distinct vertices have a further vertex `z`
/// adjacent to the first `m` of them and non-adjacent to the other `n − m`.
pub fn extension_axiom(m: usize, n: usize) -> Result<Formula, LogicError> {
    if n == 0 || m > n {
        return Err(LogicError::BadAxiom { m, n });
    }
    let xs = vars("x", n);
    let mut body: Vec<Formula> = xs.iter().map(|x| neq("z", x)).collect();
    body.extend(xs[..m].iter().map(|x| Formula::edge("z", x)));
    body.extend(xs[m..].iter().map(|x| Formula::not(Formula::edge("z", x))));
    let witness = Formula::exists("z", Formula::and_all(body).expect("n >= 1"));
    let guard = Formula::and_all(pairwise_distinct(&xs));
    Ok(Formula::forall_all(xs, Formula::guarded(guard, witness)))
}

/// Named sentences whose truth certifies a winner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// Robber escapes `k` cops: a neighbor of the robber no cop can reach.
    Escape { k: usize },
    /// Robber escapes `m` cops and `traps` traps.
    TrapEscape { m: usize, traps: usize },
    /// Robber escapes a cop moving on the complement edge set.
    ComplementaryEscape,
    /// A tandem pair always catches the robber in one move.
    TandemCapture,
    /// At least `r` isolated vertices.
    IsolatedVertices { r: usize },
    EmptyGraph,
}

impl Builtin {
    pub fn formula(&self) -> Formula {
        match *self {
            Builtin::Escape { k } => escape(k),
            Builtin::TrapEscape { m, traps } => trap_escape(m, traps),
            Builtin::ComplementaryEscape => Formula::forall_all(
                ["x", "y"],
                Formula::exists(
                    "z",
                    Formula::implies(
                        neq("x", "y"),
                        Formula::and(Formula::edge("y", "z"), Formula::edge("x", "z")),
                    ),
                ),
            ),
            Builtin::TandemCapture => {
                let premise = Formula::and_all([neq("x1", "x2"), neq("x1", "y"), neq("x2", "y")]).unwrap();
                let conclusion = Formula::and_all([
                    neq("x1", "z"),
                    neq("x2", "z"),
                    neq("y", "z"),
                    Formula::edge("x1", "z"),
                    Formula::edge("y", "z"),
                ])
                .unwrap();
                Formula::forall_all(["x1", "x2", "y"], Formula::exists("z", Formula::implies(premise, conclusion)))
            }
            Builtin::IsolatedVertices { r } => isolated_vertices(r),
            Builtin::EmptyGraph => {
                Formula::forall_all(["x", "y"], Formula::not(Formula::edge("x", "y")))
            }
        }
    }

    fn validate(self) -> Result<Builtin, LogicError> {
        let bad = |what: &str| Err(LogicError::BadParameter(what.to_string()));
        match self {
            Builtin::Escape { k: 0 } => bad("escape needs k >= 1"),
            Builtin::TrapEscape { m: 0, .. } => bad("trap_escape needs m >= 1"),
            Builtin::TrapEscape { traps: 0, .. } => bad("trap_escape needs at least one trap"),
            Builtin::IsolatedVertices { r: 0 } => bad("isolated_vertices needs r >= 1"),
            ok => Ok(ok),
        }
    }
}

fn escape(k: usize) -> Formula {
    let xs = vars("x", k);
    let mut premise = pairwise_distinct(&xs);
    premise.extend(xs.iter().map(|x| neq(x, "y")));
    let mut conclusion: Vec<Formula> = xs.iter().map(|x| neq(x, "z")).collect();
    conclusion.push(neq("y", "z"));
    conclusion.extend(xs.iter().map(|x| Formula::not(Formula::edge(x, "z"))));
    conclusion.push(Formula::edge("y", "z"));
    let body = Formula::guarded(Formula::and_all(premise), Formula::and_all(conclusion).unwrap());
    let mut quantified = xs;
    quantified.push("y".into());
    Formula::forall_all(quantified, Formula::exists("z", body))
}

fn trap_escape(m: usize, k: usize) -> Formula {
    let xs = vars("x", m);
    let ts = vars("t", k);
    let mut premise = Vec::new();
    for x in &xs {
        for t in &ts {
            premise.push(neq(x, t));
            premise.push(neq("y", x));
            premise.push(neq("y", t));
        }
    }
    premise.extend(pairwise_distinct(&xs));
    premise.extend(pairwise_distinct(&ts));
    let mut conclusion: Vec<Formula> = xs.iter().map(|x| neq("z", x)).collect();
    conclusion.extend(ts.iter().map(|t| neq("z", t)));
    conclusion.push(neq("y", "z"));
    conclusion.extend(xs.iter().map(|x| Formula::not(Formula::edge("z", x))));
    conclusion.push(Formula::edge("y", "z"));
    let body = Formula::guarded(Formula::and_all(premise), Formula::and_all(conclusion).unwrap());
    let mut quantified = xs;
    quantified.extend(ts);
    quantified.push("y".into());
    Formula::forall_all(quantified, Formula::exists("z", body))
}

fn isolated_vertices(r: usize) -> Formula {
    let xs = vars("x", r);
    let alone = xs
        .iter()
        .map(|x| Formula::or(Formula::eq("y", x), Formula::not(Formula::edge("y", x))));
    let body = Formula::forall("y", Formula::and_all(alone).unwrap());
    let inner = match Formula::and_all(pairwise_distinct(&xs)) {
        Some(distinct) => Formula::and(distinct, body),
        None => body,
    };
    Formula::exists_all(xs, inner)
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Escape { k } => write!(f, "escape_{k}"),
            Builtin::TrapEscape { m, traps } => write!(f, "trap_escape_{m}_{traps}"),
            Builtin::ComplementaryEscape => f.write_str("complementary_escape"),
            Builtin::TandemCapture => f.write_str("tandem_capture"),
            Builtin::IsolatedVertices { r } => write!(f, "isolated_vertices_{r}"),
            Builtin::EmptyGraph => f.write_str("empty_graph"),
        }
    }
}

impl FromStr for Builtin {
    type Err = LogicError;

    /// Accepts the names printed by `Display`, e.g. `escape_3` or `trap_escape_1_1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || LogicError::UnknownBuiltin(s.to_string());
        let num = |t: &str| t.parse::<usize>().map_err(|_| unknown());
        let b = match s {
            "complementary_escape" => Builtin::ComplementaryEscape,
            "tandem_capture" => Builtin::TandemCapture,
            "empty_graph" => Builtin::EmptyGraph,
            _ => {
                if let Some(rest) = s.strip_prefix("trap_escape_") {
                    let (m, t) = rest.split_once('_').ok_or_else(unknown)?;
                    Builtin::TrapEscape { m: num(m)?, traps: num(t)? }
                } else if let Some(k) = s.strip_prefix("escape_") {
                    Builtin::Escape { k: num(k)? }
                } else if let Some(r) = s.strip_prefix("isolated_vertices_") {
                    Builtin::IsolatedVertices { r: num(r)? }
                } else {
                    return Err(unknown());
                }
            }
        };
        b.validate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named, Graph};
    use crate::logic::{parse_sentence, Sentence};
    use crate::testutil::all_graphs;

    fn holds(f: &Formula, g: &Graph) -> bool {
        Sentence::new(f.clone()).unwrap().holds(g)
    }

    /// Direct check of EA_{m,n}: every ordered n-tuple of distinct vertices
    /// has a witness outside it, adjacent to the first m and to none of the rest.
    fn ea_direct(g: &Graph, m: usize, n: usize) -> bool {
        fn tuples(g: &Graph, m: usize, n: usize, chosen: &mut Vec<usize>) -> bool {
            if chosen.len() == n {
                return (0..g.vertex_count()).any(|z| {
                    !chosen.contains(&z)
                        && chosen[..m].iter().all(|&x| g.has_edge(z, x))
                        && chosen[m..].iter().all(|&x| !g.has_edge(z, x))
                });
            }
            for v in 0..g.vertex_count() {
                if chosen.contains(&v) {
                    continue;
                }
                chosen.push(v);
                let ok = tuples(g, m, n, chosen);
                chosen.pop();
                if !ok {
                    return false;
                }
            }
            true
        }
        tuples(g, m, n, &mut Vec::new())
    }

    #[test]
    fn ea_3_8_shape() {
        let f = extension_axiom(3, 8).unwrap();
        assert_eq!(f.quantifier_counts(), (8, 1));
        assert_eq!(f.edge_atom_polarity(), (3, 5));
        assert!(f.is_sentence());
        assert_eq!(extension_axiom(3, 2), Err(LogicError::BadAxiom { m: 3, n: 2 }));
        assert!(extension_axiom(0, 0).is_err());
    }

    #[test]
    fn ea_0_1_on_empty_graphs() {
        let f = extension_axiom(0, 1).unwrap();
        for n in 2..6 {
            assert!(holds(&f, &Graph::empty(n).unwrap()));
        }
        assert!(!holds(&f, &Graph::empty(1).unwrap()));
        assert!(!holds(&f, &Graph::complete(4).unwrap()));
    }

    #[test]
    fn ea_1_2_matches_guarded_escape_sentence() {
        let ea = extension_axiom(1, 2).unwrap();
        let guarded = parse_sentence(
            "forall x forall y exists z (!(x=y) -> !(z=x) & !(z=y) & E(y,z) & !E(x,z))",
        )
        .unwrap();
        let escape1 = Builtin::Escape { k: 1 }.formula();
        for n in 1..=5 {
            for g in all_graphs(n) {
                let v = holds(&ea, &g);
                assert_eq!(v, holds(&guarded, &g), "{g:?}");
                assert_eq!(v, holds(&escape1, &g), "{g:?}");
            }
        }
    }

    #[test]
    fn unguarded_escape_differs_on_single_edge() {
        // Without z≠x the witness may be the cop's own vertex.
        let unguarded = parse_sentence("forall x forall y exists z (!(x=y) -> (E(y,z) & !E(x,z)))").unwrap();
        let k2 = Graph::complete(2).unwrap();
        assert!(holds(&unguarded, &k2));
        assert!(!holds(&extension_axiom(1, 2).unwrap(), &k2));
    }

    #[test]
    fn ea_matches_direct_checker() {
        for n_vertices in 1..=6 {
            for g in all_graphs(n_vertices) {
                for n in 1..=3 {
                    for m in 0..=n {
                        let f = extension_axiom(m, n).unwrap();
                        assert_eq!(holds(&f, &g), ea_direct(&g, m, n), "EA_{m},{n} on {g:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn stronger_axioms_imply_weaker_ones() {
        for k in 1..=2usize {
            let strong = extension_axiom(k, 2 * k).unwrap();
            let weak: Vec<Formula> = (1..=2 * k)
                .flat_map(|n| (0..=n).map(move |m| (m, n)))
                .filter(|&(m, n)| k >= m.max(n - m))
                .map(|(m, n)| extension_axiom(m, n).unwrap())
                .collect();
            // Graphs with fewer than 2k vertices satisfy the strong axiom vacuously.
            for n_vertices in 2 * k..=6 {
                for g in all_graphs(n_vertices) {
                    if holds(&strong, &g) {
                        for f in &weak {
                            assert!(holds(f, &g), "{f} fails on {g:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn builtin_examples() {
        let g = Graph::from_edges(5, [(2, 3), (3, 4), (2, 4)]).unwrap();
        assert!(holds(&Builtin::IsolatedVertices { r: 2 }.formula(), &g));
        assert!(!holds(&Builtin::IsolatedVertices { r: 3 }.formula(), &g));
        let one_isolated = Graph::from_edges(4, [(1, 2), (2, 3)]).unwrap();
        assert!(!holds(&Builtin::IsolatedVertices { r: 2 }.formula(), &one_isolated));

        assert!(holds(&Builtin::TandemCapture.formula(), &Graph::complete(4).unwrap()));
        assert!(!holds(&Builtin::TrapEscape { m: 1, traps: 1 }.formula(), &named("k33").unwrap()));
        assert!(!holds(&Builtin::Escape { k: 1 }.formula(), &named("c4").unwrap()));
        assert!(holds(&Builtin::EmptyGraph.formula(), &Graph::empty(3).unwrap()));
    }

    #[test]
    fn complementary_escape_matches_display() {
        let parsed = parse_sentence("forall x forall y exists z (!(x=y) -> E(y,z) & E(x,z))").unwrap();
        assert_eq!(Builtin::ComplementaryEscape.formula(), parsed);
    }

    #[test]
    fn isolated_pair_matches_display_with_distinctness() {
        let text = "exists x1 exists x2 (!(x1=x2) & (forall y ((y=x1 | !E(y,x1)) & (y=x2 | !E(y,x2)))))";
        assert_eq!(Builtin::IsolatedVertices { r: 2 }.formula(), parse_sentence(text).unwrap());
    }

    #[test]
    fn names_round_trip() {
        for b in [
            Builtin::Escape { k: 3 },
            Builtin::TrapEscape { m: 2, traps: 1 },
            Builtin::ComplementaryEscape,
            Builtin::TandemCapture,
            Builtin::IsolatedVertices { r: 2 },
            Builtin::EmptyGraph,
        ] {
            assert_eq!(b.to_string().parse::<Builtin>().unwrap(), b);
            assert!(b.formula().is_sentence());
            let printed = b.formula().to_string();
            assert_eq!(parse_sentence(&printed).unwrap(), b.formula());
        }
        assert!("escape_0".parse::<Builtin>().is_err());
        assert!("teleport".parse::<Builtin>().is_err());
    }
}
