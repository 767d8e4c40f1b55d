//! Domination-game toolkit: exact minimax solving, the greedy
//! potential-function Dominator with its phase automaton and value
//! assignments, adversarial worst-case search, and an exact-arithmetic
//! bound-verification harness.

pub mod bitset;
pub mod bounds;
pub mod error;
pub mod game;
pub mod gen;
pub mod graph;
pub mod phase;
pub mod scheme;
pub mod solver;
pub mod strategy;
pub mod verify;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use game::{Color, GameState, Player, ResidualView};
pub use graph::Graph;
pub use scheme::{Family, Params, Scheme};
pub use solver::{check_sandwich, domination_number, game_value, SandwichReport, SolverConfig};
pub use strategy::{play_game, worst_case_length_vs_greedy, Policy, Trace};
