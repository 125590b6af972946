//! Cops-and-robber games solved as reachability games.
//!
//! Conventions shared by every backend:
//! - cops place first (colocation allowed), then the robber places seeing them;
//! - cops move first in every round; staying put is always legal;
//! - the game ends in capture as soon as a cop shares the robber's vertex or
//!   the robber steps onto a trap. Otherwise the robber wins (no draws).
//!
//! Two solvers exist. [`build_arena`] + [`solve`] construct the full state
//! graph and produce positional strategies; [`game_value`] uses a bitset
//! backend that only stores the cop-side configurations and is the one that
//! scales to random graphs with 60 vertices and 3 cops.

mod arena;
mod dismantle;
mod fast;
mod rules;
mod simulate;
mod solve;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub use arena::{build_arena, Arena, ArenaStats, GameState, StateId};
pub use dismantle::is_dismantlable;
pub use simulate::{simulate, GreedyDistance, Mover, Optimal, Outcome, Policy, Trace, TraceStep, UniformRandom};
pub use solve::{solve, WinMap};

/// Default bound on the number of logical game positions.
pub const DEFAULT_MAX_STATES: u64 = 10_000_000;

#[derive(Debug, Error, PartialEq)]
pub enum GameError {
    #[error("game needs about {estimated} states, budget is {max}")]
    BudgetExceeded { estimated: u128, max: u64 },
    #[error("invalid variant: {0}")]
    InvalidVariant(String),
    #[error("policy chose an illegal move from state {state}")]
    IllegalMove { state: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Rule set of a game.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Variant {
    /// `k` ordinary cops.
    Classic { k: usize },
    /// `m` cops sharing a stock of `t` traps.
    Traps { m: usize, t: usize },
    /// `m` cops sharing a stock of `b` edge blocks.
    Roadblocks { m: usize, b: usize },
    /// One cop moving along non-edges, the robber along edges.
    Complementary,
    /// Two cops that always stand on equal or adjacent vertices.
    Tandem,
}

impl Variant {
    pub fn validate(self) -> Result<Variant, GameError> {
        match self {
            Variant::Classic { k: 0 } => Err(GameError::InvalidVariant("classic needs k >= 1".into())),
            Variant::Traps { m: 0, .. } | Variant::Roadblocks { m: 0, .. } => {
                Err(GameError::InvalidVariant("at least one cop is required".into()))
            }
            v => Ok(v),
        }
    }

    /// Number of cop tokens on the board.
    pub fn cop_count(self) -> usize {
        match self {
            Variant::Classic { k } => k,
            Variant::Traps { m, .. } | Variant::Roadblocks { m, .. } => m,
            Variant::Complementary => 1,
            Variant::Tandem => 2,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Classic { k } => write!(f, "classic:{k}"),
            Variant::Traps { m, t } => write!(f, "traps:{m}:{t}"),
            Variant::Roadblocks { m, b } => write!(f, "roadblocks:{m}:{b}"),
            Variant::Complementary => f.write_str("complementary"),
            Variant::Tandem => f.write_str("tandem"),
        }
    }
}

impl FromStr for Variant {
    type Err = GameError;

    /// `classic:K`, `traps:M:T`, `roadblocks:M:B`, `complementary`, `tandem`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GameError::InvalidVariant(s.to_string());
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |i: usize| -> Result<usize, GameError> {
            parts.get(i).and_then(|p| p.parse().ok()).ok_or_else(bad)
        };
        let v = match (parts[0].to_ascii_lowercase().as_str(), parts.len()) {
            ("classic", 2) => Variant::Classic { k: num(1)? },
            ("traps", 3) => Variant::Traps { m: num(1)?, t: num(2)? },
            ("roadblocks", 3) => Variant::Roadblocks { m: num(1)?, b: num(2)? },
            ("complementary", 1) => Variant::Complementary,
            ("tandem", 1) => Variant::Tandem,
            _ => return Err(bad()),
        };
        v.validate()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Winner {
    Cop,
    Robber,
}

impl fmt::Display for Winner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Winner::Cop => "Cop",
            Winner::Robber => "Robber",
        })
    }
}

impl FromStr for Winner {
    type Err = GameError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "cop" | "cops" => Ok(Winner::Cop),
            "robber" => Ok(Winner::Robber),
            _ => Err(GameError::InvalidVariant(format!("unknown side `{s}`"))),
        }
    }
}

/// Whose decision a state is waiting for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Turn {
    PlacementCops,
    PlacementRobber,
    Cops,
    Robber,
}

impl Turn {
    pub fn is_cops(self) -> bool {
        matches!(self, Turn::PlacementCops | Turn::Cops)
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Logical position count used for budget checks, shared by both backends:
/// cop configurations × robber vertex × side to move, plus placement states.
pub fn estimate_states(g: &Graph, v: Variant) -> u128 {
    let n = g.vertex_count() as u128;
    let multisets = |k: usize| binomial(n + k as u128 - 1, k as u128);
    let stock_configs = |items: u128, stock: usize| -> u128 {
        (0..=stock as u128)
            .take_while(|&j| j <= items)
            .fold(0u128, |acc, j| acc.saturating_add(binomial(items, j)))
    };
    let configs = match v {
        Variant::Classic { k } => multisets(k),
        Variant::Traps { m, t } => multisets(m).saturating_mul(stock_configs(n, t)),
        Variant::Roadblocks { m, b } => {
            multisets(m).saturating_mul(stock_configs(g.edge_count() as u128, b))
        }
        Variant::Complementary => n,
        Variant::Tandem => (0..g.vertex_count()).map(|a| g.degree(a) as u128 + 1).sum(),
    };
    configs.saturating_mul(n).saturating_mul(2).saturating_add(configs).saturating_add(1)
}

pub fn check_budget(g: &Graph, v: Variant, max_states: u64) -> Result<u128, GameError> {
    let estimated = estimate_states(g, v);
    if estimated > max_states as u128 {
        return Err(GameError::BudgetExceeded { estimated, max: max_states });
    }
    Ok(estimated)
}

/// Winner under optimal play, including optimal placement, with the default budget.
pub fn game_value(g: &Graph, v: Variant) -> Result<Winner, GameError> {
    game_value_with_budget(g, v, DEFAULT_MAX_STATES)
}

pub fn game_value_with_budget(g: &Graph, v: Variant, max_states: u64) -> Result<Winner, GameError> {
    let v = v.validate()?;
    check_budget(g, v, max_states)?;
    Ok(fast::solve_value(g, v))
}

/// Same answer as [`game_value`], computed on the explicit arena.
pub fn game_value_explicit(g: &Graph, v: Variant, max_states: u64) -> Result<Winner, GameError> {
    let arena = build_arena(g, v, max_states)?;
    Ok(solve(&arena).winner(arena.initial()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CopNumber {
    Exactly(usize),
    Exceeds(usize),
}

/// Least `k ≤ k_max` such that `k` classic cops win.
pub fn cop_number(g: &Graph, k_max: usize) -> Result<CopNumber, GameError> {
    cop_number_with_budget(g, k_max, DEFAULT_MAX_STATES)
}

pub fn cop_number_with_budget(g: &Graph, k_max: usize, max_states: u64) -> Result<CopNumber, GameError> {
    if k_max == 0 {
        return Err(GameError::InvalidVariant("k_max must be at least 1".into()));
    }
    for k in 1..=k_max {
        if game_value_with_budget(g, Variant::Classic { k }, max_states)? == Winner::Cop {
            return Ok(CopNumber::Exactly(k));
        }
    }
    Ok(CopNumber::Exceeds(k_max))
}
