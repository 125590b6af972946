//! Move generation for the explicit arena.

use crate::graph::Graph;

use super::arena::GameState;
use super::{Turn, Variant};

/// Vertices a piece at `v` can reach in one step, staying first.
pub(crate) fn closed_neighbors(g: &Graph, v: usize) -> impl Iterator<Item = usize> + '_ {
    std::iter::once(v).chain(g.neighbors(v).iter().copied())
}

pub(crate) fn edge_key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// All non-decreasing `k`-tuples over `0..n`, in lexicographic order.
pub(crate) fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(n, k, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Ordered tandem placements `(a, b)` with `b ∈ N[a]`.
pub(crate) fn tandem_pairs(g: &Graph) -> Vec<(usize, usize)> {
    (0..g.vertex_count())
        .flat_map(|a| closed_neighbors(g, a).map(move |b| (a, b)))
        .collect()
}

pub(crate) fn initial_state(v: Variant) -> GameState {
    let stock = match v {
        Variant::Traps { t, .. } => t,
        Variant::Roadblocks { b, .. } => b,
        _ => 0,
    };
    GameState {
        cops: Vec::new(),
        robber: None,
        traps: Vec::new(),
        blocks: Vec::new(),
        stock,
        turn: Turn::PlacementCops,
    }
}

pub(crate) struct Rules<'a> {
    pub g: &'a Graph,
    pub variant: Variant,
    /// Complement graph, used by the complementary cop.
    pub complement: Option<Graph>,
}

impl<'a> Rules<'a> {
    pub fn new(g: &'a Graph, variant: Variant) -> Rules<'a> {
        let complement = matches!(variant, Variant::Complementary).then(|| g.complement());
        Rules { g, variant, complement }
    }

    /// Successor states, sorted and without duplicates. Empty for captures.
    pub fn successors(&self, s: &GameState) -> Vec<GameState> {
        if s.is_capture() {
            return Vec::new();
        }
        let mut out = match s.turn {
            Turn::PlacementCops => self.placements(s),
            Turn::PlacementRobber => (0..self.g.vertex_count())
                .map(|r| GameState { robber: Some(r), turn: Turn::Cops, ..s.clone() })
                .collect(),
            Turn::Cops => self.cop_moves(s),
            Turn::Robber => self.robber_moves(s),
        };
        out.sort();
        out.dedup();
        out
    }

    fn placements(&self, s: &GameState) -> Vec<GameState> {
        let n = self.g.vertex_count();
        let cop_sets: Vec<Vec<usize>> = match self.variant {
            Variant::Tandem => tandem_pairs(self.g).into_iter().map(|(a, b)| vec![a, b]).collect(),
            v => multisets(n, v.cop_count()),
        };
        cop_sets
            .into_iter()
            .map(|cops| GameState { cops, turn: Turn::PlacementRobber, ..s.clone() })
            .collect()
    }

    fn cop_moves(&self, s: &GameState) -> Vec<GameState> {
        let after = |cops: Vec<usize>, traps: Vec<usize>, blocks: Vec<(usize, usize)>, stock: usize| GameState {
            cops,
            robber: s.robber,
            traps,
            blocks,
            stock,
            turn: Turn::Robber,
        };
        let mut out = Vec::new();
        match self.variant {
            Variant::Classic { .. } => {
                let mut cur = Vec::with_capacity(s.cops.len());
                self.classic_rec(&s.cops, &mut cur, &mut |cops| {
                    let mut cops = cops.to_vec();
                    cops.sort_unstable();
                    out.push(after(cops, Vec::new(), Vec::new(), 0));
                });
            }
            Variant::Complementary => {
                let comp = self.complement.as_ref().expect("complement built for this variant");
                for c in closed_neighbors(comp, s.cops[0]) {
                    out.push(after(vec![c], Vec::new(), Vec::new(), 0));
                }
            }
            Variant::Tandem => {
                for a in closed_neighbors(self.g, s.cops[0]) {
                    for b in closed_neighbors(self.g, a) {
                        out.push(after(vec![a, b], Vec::new(), Vec::new(), 0));
                    }
                }
            }
            Variant::Traps { .. } | Variant::Roadblocks { .. } => {
                let traps = matches!(self.variant, Variant::Traps { .. });
                let mut cur = s.clone();
                self.action_rec(0, traps, &mut cur, &mut |st| {
                    let mut cops = st.cops.clone();
                    cops.sort_unstable();
                    out.push(after(cops, st.traps.clone(), st.blocks.clone(), st.stock));
                });
            }
        }
        out
    }

    fn classic_rec(&self, from: &[usize], cur: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
        let i = cur.len();
        if i == from.len() {
            emit(cur);
            return;
        }
        for c in closed_neighbors(self.g, from[i]) {
            cur.push(c);
            self.classic_rec(from, cur, emit);
            cur.pop();
        }
    }

    /// Cop `i` moves, then takes at most one action at its new vertex; cops
    /// act in index order of the sorted tuple.
    fn action_rec(&self, i: usize, traps: bool, st: &mut GameState, emit: &mut dyn FnMut(&GameState)) {
        if i == st.cops.len() {
            emit(st);
            return;
        }
        let from = st.cops[i];
        for c in closed_neighbors(self.g, from) {
            st.cops[i] = c;
            for next in self.actions(st, c, traps) {
                let mut next = next;
                self.action_rec(i + 1, traps, &mut next, emit);
            }
        }
        st.cops[i] = from;
    }

    fn actions(&self, st: &GameState, c: usize, traps: bool) -> Vec<GameState> {
        let mut out = vec![st.clone()];
        if traps {
            match st.traps.binary_search(&c) {
                Ok(pos) => {
                    let mut s = st.clone();
                    s.traps.remove(pos);
                    s.stock += 1;
                    out.push(s);
                }
                Err(pos) if st.stock > 0 => {
                    let mut s = st.clone();
                    s.traps.insert(pos, c);
                    s.stock -= 1;
                    out.push(s);
                }
                Err(_) => {}
            }
        } else {
            for &w in self.g.neighbors(c) {
                let e = edge_key(c, w);
                match st.blocks.binary_search(&e) {
                    Ok(pos) => {
                        let mut s = st.clone();
                        s.blocks.remove(pos);
                        s.stock += 1;
                        out.push(s);
                    }
                    Err(pos) if st.stock > 0 => {
                        let mut s = st.clone();
                        s.blocks.insert(pos, e);
                        s.stock -= 1;
                        out.push(s);
                    }
                    Err(_) => {}
                }
            }
        }
        out
    }

    fn robber_moves(&self, s: &GameState) -> Vec<GameState> {
        let r = s.robber.expect("robber placed before moving");
        closed_neighbors(self.g, r)
            .filter(|&w| w == r || s.blocks.binary_search(&edge_key(r, w)).is_err())
            .map(|w| GameState { robber: Some(w), turn: Turn::Cops, ..s.clone() })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn multiset_counts() {
        assert_eq!(multisets(4, 2).len(), 10);
        assert_eq!(multisets(5, 3).len(), 35);
        assert!(multisets(3, 2).iter().all(|m| m[0] <= m[1]));
    }

    #[test]
    fn blocked_edge_stops_robber_only() {
        let g = named("p4").unwrap();
        let rules = Rules::new(&g, Variant::Roadblocks { m: 1, b: 1 });
        let s = GameState {
            cops: vec![3],
            robber: Some(1),
            traps: vec![],
            blocks: vec![(1, 2)],
            stock: 0,
            turn: Turn::Robber,
        };
        let dests: Vec<_> = rules.successors(&s).iter().map(|t| t.robber.unwrap()).collect();
        assert_eq!(dests, vec![0, 1]);
        let cop_turn = GameState { turn: Turn::Cops, ..s.clone() };
        // Cop at 3 can step to 2; at 2 it may lift the block on 1-2.
        assert!(rules
            .successors(&cop_turn)
            .iter()
            .any(|t| t.cops == vec![2] && t.blocks.is_empty() && t.stock == 1));
    }

    #[test]
    fn traps_respect_stock() {
        let g = named("c4").unwrap();
        let rules = Rules::new(&g, Variant::Traps { m: 2, t: 1 });
        let s = GameState {
            cops: vec![0, 2],
            robber: Some(1),
            traps: vec![],
            blocks: vec![],
            stock: 1,
            turn: Turn::Cops,
        };
        for t in rules.successors(&s) {
            assert!(t.traps.len() <= 1);
            assert_eq!(t.traps.len() + t.stock, 1);
        }
    }
}
