//! Exact and Monte Carlo estimates of `μ_n` and of win probabilities.
//!
//! Trial `i` of a run with master seed `s` samples its graph with seed
//! [`trial_seed`]`(s, i)`, so results never depend on how trials are
//! scheduled across threads.

mod estimate;
mod exact;
mod format;
mod regime;
mod seed;
mod stats;

use thiserror::Error;

use crate::game::GameError;
use crate::graph::GraphError;
use crate::logic::LogicError;

pub use estimate::{
    estimate, estimate_mu, estimate_win, sweep, sweep_csv, EstimateOptions, EstimateReport, PSpec, SweepRow,
    Target, CSV_HEADER,
};
pub use exact::{exact_mu, verify_ea_bound, EaBound, MAX_EXACT_N};
pub use format::fmt_sig;
pub use regime::{classify_regime, Regime};
pub use seed::{mix64, trial_seed};
pub use stats::{wilson_interval, z_for_confidence};

#[derive(Debug, Error)]
pub enum LabError {
    #[error("exact enumeration supports n <= {MAX_EXACT_N}, got {0}")]
    ExactTooLarge(usize),
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Logic(#[from] LogicError),
}

impl LabError {
    /// Short tag used in CSV error cells.
    pub fn kind(&self) -> &'static str {
        match self {
            LabError::ExactTooLarge(_) | LabError::Game(GameError::BudgetExceeded { .. }) => "budget",
            LabError::BadParameter(_) => "parameter",
            LabError::Game(_) => "game",
            LabError::Graph(_) => "graph",
            LabError::Logic(_) => "logic",
        }
    }
}
