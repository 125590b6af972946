use std::collections::VecDeque;
use std::fmt;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::graph::Graph;

use super::rules::{initial_state, Rules};
use super::{check_budget, GameError, Turn, Variant};

pub type StateId = u32;

/// One position of the game. Cop positions are sorted except for the
/// tandem pair, whose first entry is the leading cop.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GameState {
    pub cops: Vec<usize>,
    pub robber: Option<usize>,
    pub traps: Vec<usize>,
    pub blocks: Vec<(usize, usize)>,
    /// Unplaced traps or blocks.
    pub stock: usize,
    pub turn: Turn,
}

impl GameState {
    pub fn is_capture(&self) -> bool {
        match self.robber {
            Some(r) => self.cops.contains(&r) || self.traps.binary_search(&r).is_ok(),
            None => false,
        }
    }
}

impl fmt::Display for GameState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} cops={:?} robber=", self.turn, self.cops)?;
        match self.robber {
            Some(r) => write!(f, "{r}")?,
            None => f.write_str("-")?,
        }
        if !self.traps.is_empty() {
            write!(f, " traps={:?}", self.traps)?;
        }
        if !self.blocks.is_empty() {
            write!(f, " blocks={:?}", self.blocks)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ArenaStats {
    pub states: usize,
    pub transitions: usize,
    pub capture_states: usize,
}

/// Explicit state graph. State 0 is the empty board awaiting cop placement.
#[derive(Clone, Debug)]
pub struct Arena {
    variant: Variant,
    graph: Graph,
    states: Vec<GameState>,
    offsets: Vec<usize>,
    targets: Vec<StateId>,
}

impl Arena {
    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn initial(&self) -> StateId {
        0
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn state(&self, id: StateId) -> &GameState {
        &self.states[id as usize]
    }

    pub fn successors(&self, id: StateId) -> &[StateId] {
        &self.targets[self.offsets[id as usize]..self.offsets[id as usize + 1]]
    }

    pub fn is_capture(&self, id: StateId) -> bool {
        self.state(id).is_capture()
    }

    pub fn turn(&self, id: StateId) -> Turn {
        self.state(id).turn
    }

    pub fn find(&self, s: &GameState) -> Option<StateId> {
        self.states.iter().position(|t| t == s).map(|i| i as StateId)
    }

    pub fn stats(&self) -> ArenaStats {
        ArenaStats {
            states: self.states.len(),
            transitions: self.targets.len(),
            capture_states: self.states.iter().filter(|s| s.is_capture()).count(),
        }
    }
}

/// Builds every state reachable from the empty board, in breadth-first order.
pub fn build_arena(g: &Graph, v: Variant, max_states: u64) -> Result<Arena, GameError> {
    let v = v.validate()?;
    check_budget(g, v, max_states)?;
    let rules = Rules::new(g, v);
    let mut index: FxHashMap<GameState, StateId> = FxHashMap::default();
    let mut states = vec![initial_state(v)];
    index.insert(states[0].clone(), 0);
    let mut offsets = vec![0];
    let mut targets = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for next in rules.successors(&states[i]) {
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    let id = states.len() as StateId;
                    index.insert(next.clone(), id);
                    states.push(next);
                    queue.push_back(id as usize);
                    id
                }
            };
            targets.push(id);
        }
        offsets.push(targets.len());
    }
    Ok(Arena { variant: v, graph: g.clone(), states, offsets, targets })
}
