//! Exact cops-and-robber solving, first-order sentence evaluation and
//! random-graph experiments on finite simple graphs.
//!
//! - [`graph`]: graph representation, samplers, witness graphs.
//! - [`logic`]: first-order formulas over `{E, =}`: parser, evaluator, constructors.
//! - [`game`]: explicit arenas, attractor solving, cop number, simulation.
//! - [`lab`]: exact and Monte Carlo estimation, regime classification, sweeps.
//! - [`threshold`]: rooted graphs, densities and threshold functions.

pub mod graph;
pub mod game;
pub mod lab;
pub mod logic;
pub mod threshold;

#[cfg(test)]
mod testutil;
