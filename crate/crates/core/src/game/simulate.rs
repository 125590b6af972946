use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::arena::{Arena, GameState, StateId};
use super::solve::WinMap;
use super::{GameError, Turn};

/// Chooses a move for whichever side owns `state`.
pub trait Policy {
    fn choose(&mut self, arena: &Arena, state: StateId, rng: &mut ChaCha8Rng) -> StateId;
}

/// Follows the positional strategy of a solved arena.
pub struct Optimal<'a> {
    map: &'a WinMap,
}

impl<'a> Optimal<'a> {
    pub fn new(map: &'a WinMap) -> Optimal<'a> {
        Optimal { map }
    }
}

impl Policy for Optimal<'_> {
    fn choose(&mut self, arena: &Arena, state: StateId, _: &mut ChaCha8Rng) -> StateId {
        self.map.strategy(state).unwrap_or(arena.successors(state)[0])
    }
}

pub struct UniformRandom;

impl Policy for UniformRandom {
    fn choose(&mut self, arena: &Arena, state: StateId, rng: &mut ChaCha8Rng) -> StateId {
        let succ = arena.successors(state);
        succ[rng.gen_range(0..succ.len())]
    }
}

/// Cops close in on the robber, the robber keeps its distance; ties go to
/// the first candidate.
pub struct GreedyDistance {
    dist: Vec<Vec<usize>>,
}

impl GreedyDistance {
    pub fn new(arena: &Arena) -> GreedyDistance {
        let g = arena.graph();
        let dist = (0..g.vertex_count())
            .map(|v| g.bfs(v).into_iter().map(|d| d.unwrap_or(usize::MAX)).collect())
            .collect();
        GreedyDistance { dist }
    }

    fn gap(&self, s: &GameState) -> usize {
        match s.robber {
            Some(r) => s.cops.iter().map(|&c| self.dist[c][r]).min().unwrap_or(usize::MAX),
            None => 0,
        }
    }
}

impl Policy for GreedyDistance {
    fn choose(&mut self, arena: &Arena, state: StateId, rng: &mut ChaCha8Rng) -> StateId {
        let succ = arena.successors(state);
        match arena.turn(state) {
            Turn::PlacementCops => succ[rng.gen_range(0..succ.len())],
            Turn::Cops => *succ.iter().min_by_key(|&&t| self.gap(arena.state(t))).unwrap(),
            Turn::PlacementRobber | Turn::Robber => {
                *succ.iter().max_by_key(|&&t| (self.gap(arena.state(t)), std::cmp::Reverse(t))).unwrap()
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mover {
    Cops,
    Robber,
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceStep {
    pub round: usize,
    pub mover: Mover,
    pub action: String,
    pub state: GameState,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum Outcome {
    Capture { round: usize },
    Survived { rounds: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct Trace {
    pub steps: Vec<TraceStep>,
    pub outcome: Outcome,
}

impl Trace {
    /// One JSON object per step, then the outcome.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for step in &self.steps {
            out.push_str(&serde_json::to_string(step).expect("trace steps serialize"));
            out.push('\n');
        }
        out.push_str(&serde_json::to_string(&self.outcome).expect("outcome serializes"));
        out.push('\n');
        out
    }
}

fn describe(turn: Turn, s: &GameState) -> String {
    match turn {
        Turn::PlacementCops => format!("place cops {:?}", s.cops),
        Turn::PlacementRobber => format!("place robber {}", s.robber.unwrap_or(usize::MAX)),
        Turn::Cops => {
            let mut text = format!("cops to {:?}", s.cops);
            if !s.traps.is_empty() {
                text += &format!(" traps {:?}", s.traps);
            }
            if !s.blocks.is_empty() {
                text += &format!(" blocks {:?}", s.blocks);
            }
            text
        }
        Turn::Robber => format!("robber to {}", s.robber.unwrap_or(usize::MAX)),
    }
}

/// Plays one game from the empty board. A round is a cop move followed by a
/// robber move; placement happens in round 0.
pub fn simulate(
    arena: &Arena,
    cops: &mut dyn Policy,
    robber: &mut dyn Policy,
    max_rounds: usize,
    seed: u64,
) -> Result<Trace, GameError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut state = arena.initial();
    let mut round = 0;
    let mut steps = Vec::new();
    loop {
        if arena.is_capture(state) {
            return Ok(Trace { steps, outcome: Outcome::Capture { round } });
        }
        let turn = arena.turn(state);
        if turn == Turn::Cops {
            if round == max_rounds {
                return Ok(Trace { steps, outcome: Outcome::Survived { rounds: max_rounds } });
            }
            round += 1;
        }
        let policy: &mut dyn Policy = if turn.is_cops() { &mut *cops } else { &mut *robber };
        let next = policy.choose(arena, state, &mut rng);
        if !arena.successors(state).contains(&next) {
            return Err(GameError::IllegalMove { state: arena.state(state).to_string() });
        }
        let after = arena.state(next);
        steps.push(TraceStep {
            round,
            mover: if turn.is_cops() { Mover::Cops } else { Mover::Robber },
            action: describe(turn, after),
            state: after.clone(),
        });
        state = next;
    }
}
