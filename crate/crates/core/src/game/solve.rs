use std::collections::VecDeque;

use super::arena::{Arena, StateId};
use super::Winner;

/// Winner of every arena state with a positional strategy for the side to move.
#[derive(Clone, Debug)]
pub struct WinMap {
    cop_wins: Vec<bool>,
    strategy: Vec<Option<StateId>>,
    /// Attractor layer for cop-won states (0 = capture).
    rank: Vec<u32>,
}

impl WinMap {
    pub fn winner(&self, id: StateId) -> Winner {
        if self.cop_wins[id as usize] {
            Winner::Cop
        } else {
            Winner::Robber
        }
    }

    /// Move prescribed for the player to move; `None` at captures.
    pub fn strategy(&self, id: StateId) -> Option<StateId> {
        self.strategy[id as usize]
    }

    /// Number of attractor layers separating a cop-won state from capture.
    pub fn rank(&self, id: StateId) -> Option<u32> {
        self.cop_wins[id as usize].then(|| self.rank[id as usize])
    }

    pub fn cop_region_size(&self) -> usize {
        self.cop_wins.iter().filter(|&&w| w).count()
    }

    /// True when one more round of the attractor operator adds nothing and
    /// removes nothing.
    pub fn is_fixed_point(&self, arena: &Arena) -> bool {
        (0..arena.len() as StateId).all(|s| {
            let succ = arena.successors(s);
            let next = if arena.is_capture(s) {
                true
            } else if arena.turn(s).is_cops() {
                succ.iter().any(|&t| self.cop_wins[t as usize])
            } else {
                succ.iter().all(|&t| self.cop_wins[t as usize])
            };
            next == self.cop_wins[s as usize]
        })
    }
}

/// Backward attractor of the capture states, linear in the arena size.
pub fn solve(arena: &Arena) -> WinMap {
    let n = arena.len();
    let mut pred_count = vec![0usize; n + 1];
    for s in 0..n as StateId {
        for &t in arena.successors(s) {
            pred_count[t as usize + 1] += 1;
        }
    }
    for i in 0..n {
        pred_count[i + 1] += pred_count[i];
    }
    let mut fill = pred_count.clone();
    let mut preds = vec![0 as StateId; pred_count[n]];
    for s in 0..n as StateId {
        for &t in arena.successors(s) {
            preds[fill[t as usize]] = s;
            fill[t as usize] += 1;
        }
    }

    let mut remaining: Vec<usize> = (0..n as StateId).map(|s| arena.successors(s).len()).collect();
    let mut cop_wins = vec![false; n];
    let mut strategy = vec![None; n];
    let mut rank = vec![u32::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if arena.is_capture(s as StateId) {
            cop_wins[s] = true;
            rank[s] = 0;
            queue.push_back(s as StateId);
        }
    }
    while let Some(t) = queue.pop_front() {
        for &p in &preds[pred_count[t as usize]..pred_count[t as usize + 1]] {
            let pi = p as usize;
            if cop_wins[pi] {
                continue;
            }
            remaining[pi] -= 1;
            if arena.turn(p).is_cops() || remaining[pi] == 0 {
                cop_wins[pi] = true;
                rank[pi] = rank[t as usize] + 1;
                // For the robber this is the last successor to fall, so the
                // one that postpones capture longest.
                strategy[pi] = Some(t);
                queue.push_back(p);
            }
        }
    }
    for s in 0..n as StateId {
        if cop_wins[s as usize] {
            continue;
        }
        let succ = arena.successors(s);
        strategy[s as usize] = succ.iter().copied().find(|&t| !cop_wins[t as usize]).or(succ.first().copied());
    }
    WinMap { cop_wins, strategy, rank }
}
