//! Bitset backend for [`super::game_value`].
//!
//! Instead of materializing robber positions as states, every cop-side node
//! stores the set of robber vertices from which the cops win. A cop turn is
//! split into one phase per cop, so a node's successors are the ≤ Δ+1 moves
//! of a single cop:
//!
//! - phase node: `win = ⋃ win(successor)` over that cop's moves;
//! - settled node (all cops moved, robber to move):
//!   `win = occ ∪ {r : N[r] ⊆ occ ∪ traps ∪ win(start)}`,
//!   where `start` is the phase-0 node of the same configuration.
//!
//! Sweeps run settled layer first and then phases in reverse, repeating until
//! nothing changes; the result is the least fixed point. The cops win iff some
//! placement `P` has `occ(P) ∪ win(start(P)) = V`.

use rustc_hash::FxHashMap;

use crate::graph::Graph;

use super::rules::{closed_neighbors, edge_key, multisets, tandem_pairs};
use super::{Variant, Winner};

pub(crate) fn solve_value(g: &Graph, v: Variant) -> Winner {
    let board = Board::new(g);
    let cop_wins = match v {
        Variant::Classic { k } => {
            let moves: Vec<Vec<usize>> = (0..g.vertex_count()).map(|c| closed_neighbors(g, c).collect()).collect();
            if k >= g.vertex_count() {
                true
            } else {
                layered(&board, &moves, k)
            }
        }
        Variant::Complementary => {
            let comp = g.complement();
            let moves: Vec<Vec<usize>> =
                (0..g.vertex_count()).map(|c| closed_neighbors(&comp, c).collect()).collect();
            layered(&board, &moves, 1)
        }
        Variant::Tandem => tandem(&board, g),
        Variant::Traps { m, t } => stocked(&board, g, m, t, Items::Traps),
        Variant::Roadblocks { m, b } => stocked(&board, g, m, b, Items::Blocks),
    };
    if cop_wins {
        Winner::Cop
    } else {
        Winner::Robber
    }
}

fn set_bit(words: &mut [u64], v: usize) {
    words[v / 64] |= 1 << (v % 64);
}

fn clear_bit(words: &mut [u64], v: usize) {
    words[v / 64] &= !(1 << (v % 64));
}

fn or_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d |= s;
    }
}

/// Robber movement data shared by all backends.
struct Board {
    n: usize,
    w: usize,
    /// Closed neighborhood rows, `w` words per vertex.
    rows: Vec<u64>,
    full: Vec<u64>,
}

impl Board {
    fn new(g: &Graph) -> Board {
        let n = g.vertex_count();
        let w = g.row_words();
        let mut rows = Vec::with_capacity(n * w);
        for v in 0..n {
            let mut row = g.row(v).to_vec();
            set_bit(&mut row, v);
            rows.extend(row);
        }
        let mut full = vec![0u64; w];
        for v in 0..n {
            set_bit(&mut full, v);
        }
        Board { n, w, rows, full }
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.rows[r * self.w..(r + 1) * self.w]
    }

    fn occupied(&self, cops: impl IntoIterator<Item = usize>) -> Vec<u64> {
        let mut occ = vec![0u64; self.w];
        for c in cops {
            set_bit(&mut occ, c);
        }
        occ
    }

    /// `occ ∪ {r : moves(r) ⊆ safe}`, with per-vertex move rows overridden
    /// where edges are blocked.
    fn settle(&self, occ: &[u64], safe: &[u64], overrides: &[(usize, Vec<u64>)], out: &mut [u64]) {
        out.copy_from_slice(occ);
        for r in 0..self.n {
            if occ[r / 64] >> (r % 64) & 1 == 1 {
                continue;
            }
            let row = match overrides.iter().find(|(v, _)| *v == r) {
                Some((_, row)) => row.as_slice(),
                None => self.row(r),
            };
            if row.iter().zip(safe).all(|(a, s)| a & !s == 0) {
                set_bit(out, r);
            }
        }
    }

    fn covers(&self, occ: &[u64], win: &[u64]) -> bool {
        self.full.iter().zip(occ).zip(win).all(|((f, o), w)| f & !(o | w) == 0)
    }
}

/// Writes `new` over `old`, reporting whether anything changed.
fn update(old: &mut [u64], new: &[u64]) -> bool {
    if old == new {
        false
    } else {
        old.copy_from_slice(new);
        true
    }
}

/// Multisets of vertices ranked by the combinatorial number system.
struct Ranker {
    binom: Vec<Vec<usize>>,
    /// `lists[s]` holds all size-`s` multisets, flattened, in rank order.
    lists: Vec<Vec<u16>>,
    counts: Vec<usize>,
}

impl Ranker {
    fn new(n: usize, k: usize) -> Ranker {
        let top = n + k;
        let mut binom = vec![vec![0usize; k + 2]; top + 1];
        for a in 0..=top {
            binom[a][0] = 1;
            for b in 1..=(k + 1).min(a) {
                binom[a][b] = binom[a - 1][b - 1] + if b < a { binom[a - 1][b] } else { 0 };
            }
        }
        let mut ranker = Ranker { binom, lists: Vec::new(), counts: Vec::new() };
        for s in 0..=k {
            let all = multisets(n, s);
            let mut flat = vec![0u16; all.len() * s];
            for m in &all {
                let m16: Vec<u16> = m.iter().map(|&x| x as u16).collect();
                let r = ranker.rank(&m16);
                flat[r * s..(r + 1) * s].copy_from_slice(&m16);
            }
            ranker.counts.push(all.len());
            ranker.lists.push(flat);
        }
        ranker
    }

    fn rank(&self, sorted: &[u16]) -> usize {
        sorted.iter().enumerate().map(|(i, &x)| self.binom[x as usize + i][i + 1]).sum()
    }

    fn get(&self, s: usize, idx: usize) -> &[u16] {
        &self.lists[s][idx * s..(idx + 1) * s]
    }
}

/// Classic cops (and the single complementary cop). Layer `j` holds the
/// configurations where `j` cops have moved: a multiset of moved cops and a
/// multiset still to move; the smallest unmoved cop moves next.
fn layered(board: &Board, moves: &[Vec<usize>], k: usize) -> bool {
    let w = board.w;
    let ranker = Ranker::new(board.n, k);
    let cnt = &ranker.counts;
    let mut offset = vec![0usize; k + 2];
    for j in 0..=k {
        offset[j + 1] = offset[j] + cnt[j] * cnt[k - j];
    }
    let index = |j: usize, a: usize, b: usize| offset[j] + a * cnt[k - j] + b;
    let mut win = vec![0u64; offset[k + 1] * w];
    let mut scratch = vec![0u64; w];
    let mut safe = vec![0u64; w];
    let mut moved = Vec::with_capacity(k);

    loop {
        let mut changed = false;
        for ia in 0..cnt[k] {
            let cops = ranker.get(k, ia);
            let occ = board.occupied(cops.iter().map(|&c| c as usize));
            let start = index(0, 0, ia);
            for i in 0..w {
                safe[i] = occ[i] | win[start * w + i];
            }
            board.settle(&occ, &safe, &[], &mut scratch);
            let at = index(k, ia, 0);
            changed |= update(&mut win[at * w..(at + 1) * w], &scratch);
        }
        for j in (0..k).rev() {
            for ia in 0..cnt[j] {
                let done = ranker.get(j, ia);
                for ib in 0..cnt[k - j] {
                    let todo = ranker.get(k - j, ib);
                    let rest = ranker.rank(&todo[1..]);
                    scratch.iter_mut().for_each(|x| *x = 0);
                    for &c in &moves[todo[0] as usize] {
                        moved.clear();
                        moved.extend_from_slice(done);
                        let pos = moved.partition_point(|&x| x < c as u16);
                        moved.insert(pos, c as u16);
                        let src = index(j + 1, ranker.rank(&moved), rest);
                        or_into(&mut scratch, &win[src * w..(src + 1) * w]);
                    }
                    let at = index(j, ia, ib);
                    changed |= update(&mut win[at * w..(at + 1) * w], &scratch);
                }
            }
        }
        if !changed {
            break;
        }
    }
    (0..cnt[k]).any(|ic| {
        let occ = board.occupied(ranker.get(k, ic).iter().map(|&c| c as usize));
        let at = index(0, 0, ic);
        board.covers(&occ, &win[at * w..(at + 1) * w])
    })
}

/// Tandem pair `(a, b)`: the leader moves to `a' ∈ N[a]`, then the partner
/// jumps to any `b' ∈ N[a']`. Only the leader's position matters at the start
/// of a turn, so start and mid nodes are indexed by a single vertex.
fn tandem(board: &Board, g: &Graph) -> bool {
    let (n, w) = (board.n, board.w);
    let pairs = tandem_pairs(g);
    let mut first = vec![0usize; n + 1];
    for &(a, _) in &pairs {
        first[a + 1] += 1;
    }
    for a in 0..n {
        first[a + 1] += first[a];
    }
    let mut start = vec![0u64; n * w];
    let mut mid = vec![0u64; n * w];
    let mut settled = vec![0u64; pairs.len() * w];
    let mut scratch = vec![0u64; w];
    let mut safe = vec![0u64; w];
    loop {
        let mut changed = false;
        for (p, &(a, b)) in pairs.iter().enumerate() {
            let occ = board.occupied([a, b]);
            for i in 0..w {
                safe[i] = occ[i] | start[a * w + i];
            }
            board.settle(&occ, &safe, &[], &mut scratch);
            changed |= update(&mut settled[p * w..(p + 1) * w], &scratch);
        }
        for a in 0..n {
            scratch.iter_mut().for_each(|x| *x = 0);
            for p in first[a]..first[a + 1] {
                or_into(&mut scratch, &settled[p * w..(p + 1) * w]);
            }
            changed |= update(&mut mid[a * w..(a + 1) * w], &scratch);
        }
        for a in 0..n {
            scratch.iter_mut().for_each(|x| *x = 0);
            for a2 in closed_neighbors(g, a) {
                or_into(&mut scratch, &mid[a2 * w..(a2 + 1) * w]);
            }
            changed |= update(&mut start[a * w..(a + 1) * w], &scratch);
        }
        if !changed {
            break;
        }
    }
    pairs.iter().any(|&(a, b)| board.covers(&board.occupied([a, b]), &start[a * w..(a + 1) * w]))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Items {
    Traps,
    Blocks,
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct StockKey {
    phase: u8,
    /// Moved cops (sorted) followed by unmoved cops (sorted).
    cops: Vec<u16>,
    /// Trap vertices or blocked edge ids, sorted.
    items: Vec<u32>,
    stock: u16,
}

/// Traps and roadblocks: cop-side configurations are interned on the fly,
/// each cop acting right after its own move.
fn stocked(board: &Board, g: &Graph, m: usize, stock: usize, kind: Items) -> bool {
    let w = board.w;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let edge_id: FxHashMap<(usize, usize), u32> =
        edges.iter().enumerate().map(|(i, &e)| (e, i as u32)).collect();

    let mut index: FxHashMap<StockKey, u32> = FxHashMap::default();
    let mut keys: Vec<StockKey> = Vec::new();
    let mut intern = |key: StockKey, keys: &mut Vec<StockKey>| -> u32 {
        *index.entry(key.clone()).or_insert_with(|| {
            keys.push(key);
            (keys.len() - 1) as u32
        })
    };
    let roots: Vec<u32> = multisets(board.n, m)
        .into_iter()
        .map(|c| {
            let key = StockKey {
                phase: 0,
                cops: c.iter().map(|&x| x as u16).collect(),
                items: Vec::new(),
                stock: stock as u16,
            };
            intern(key, &mut keys)
        })
        .collect();

    // Successor lists; a settled node has exactly one entry, its start node.
    let mut succ: Vec<Vec<u32>> = Vec::new();
    let mut i = 0;
    while i < keys.len() {
        let key = keys[i].clone();
        let phase = key.phase as usize;
        let mut out = Vec::new();
        if phase == m {
            out.push(intern(StockKey { phase: 0, ..key }, &mut keys));
        } else {
            let done = &key.cops[..phase];
            let todo = &key.cops[phase..];
            let from = todo[0] as usize;
            for c in closed_neighbors(g, from) {
                let mut cops: Vec<u16> = done.to_vec();
                let pos = cops.partition_point(|&x| x < c as u16);
                cops.insert(pos, c as u16);
                cops.extend_from_slice(&todo[1..]);
                for (items, st) in actions(g, &edge_id, kind, c, &key.items, key.stock) {
                    let next = StockKey { phase: (phase + 1) as u8, cops: cops.clone(), items, stock: st };
                    out.push(intern(next, &mut keys));
                }
            }
            out.sort_unstable();
            out.dedup();
        }
        succ.push(out);
        i += 1;
    }

    let mut by_phase: Vec<Vec<u32>> = vec![Vec::new(); m + 1];
    for (id, key) in keys.iter().enumerate() {
        by_phase[key.phase as usize].push(id as u32);
    }
    let occs: Vec<Vec<u64>> = keys.iter().map(|k| board.occupied(k.cops.iter().map(|&c| c as usize))).collect();
    let mut win = vec![0u64; keys.len() * w];
    let mut scratch = vec![0u64; w];
    let mut safe = vec![0u64; w];
    let mut overrides: Vec<(usize, Vec<u64>)> = Vec::new();
    loop {
        let mut changed = false;
        for &id in &by_phase[m] {
            let id = id as usize;
            let key = &keys[id];
            let start = succ[id][0] as usize;
            overrides.clear();
            for i in 0..w {
                safe[i] = occs[id][i] | win[start * w + i];
            }
            match kind {
                Items::Traps => {
                    for &t in &key.items {
                        set_bit(&mut safe, t as usize);
                    }
                }
                Items::Blocks => {
                    for &e in &key.items {
                        let (u, v) = edges[e as usize];
                        for (x, y) in [(u, v), (v, u)] {
                            match overrides.iter_mut().find(|(z, _)| *z == x) {
                                Some((_, row)) => clear_bit(row, y),
                                None => {
                                    let mut row = board.row(x).to_vec();
                                    clear_bit(&mut row, y);
                                    overrides.push((x, row));
                                }
                            }
                        }
                    }
                }
            }
            board.settle(&occs[id], &safe, &overrides, &mut scratch);
            changed |= update(&mut win[id * w..(id + 1) * w], &scratch);
        }
        for j in (0..m).rev() {
            for &id in &by_phase[j] {
                let id = id as usize;
                scratch.iter_mut().for_each(|x| *x = 0);
                for &s in &succ[id] {
                    or_into(&mut scratch, &win[s as usize * w..(s as usize + 1) * w]);
                }
                changed |= update(&mut win[id * w..(id + 1) * w], &scratch);
            }
        }
        if !changed {
            break;
        }
    }
    roots
        .iter()
        .any(|&r| board.covers(&occs[r as usize], &win[r as usize * w..(r as usize + 1) * w]))
}

/// Item configurations reachable by one cop standing on `c`: do nothing,
/// lift an item there, or place one if stock remains.
fn actions(
    g: &Graph,
    edge_id: &FxHashMap<(usize, usize), u32>,
    kind: Items,
    c: usize,
    items: &[u32],
    stock: u16,
) -> Vec<(Vec<u32>, u16)> {
    let mut out = vec![(items.to_vec(), stock)];
    let spots: Vec<u32> = match kind {
        Items::Traps => vec![c as u32],
        Items::Blocks => g.neighbors(c).iter().map(|&x| edge_id[&edge_key(c, x)]).collect(),
    };
    for spot in spots {
        match items.binary_search(&spot) {
            Ok(pos) => {
                let mut next = items.to_vec();
                next.remove(pos);
                out.push((next, stock + 1));
            }
            Err(pos) if stock > 0 => {
                let mut next = items.to_vec();
                next.insert(pos, spot);
                out.push((next, stock - 1));
            }
            Err(_) => {}
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_are_a_bijection() {
        let r = Ranker::new(7, 3);
        for s in 0..=3 {
            for i in 0..r.counts[s] {
                let m = r.get(s, i);
                assert!(m.windows(2).all(|p| p[0] <= p[1]));
                assert_eq!(r.rank(m), i);
            }
        }
        assert_eq!(r.counts[3], 84);
    }
}
