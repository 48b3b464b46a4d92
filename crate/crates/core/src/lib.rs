//! Exact solvers for the free and fixed flooding games on vertex-colored
//! graphs.
//!
//! The crate is organised around the game model in [`game`]: a
//! [`ColoredGraph`] board, [`GameState`] values that evolve under
//! [`Move`]s, and [`verify_solution`] which every solver's witness must pass.
//! On top of that sit the engines:
//!
//! - [`oracle`]: breadth-first search over contracted states, the ground truth.
//! - [`interval`] and [`dp`]: compact proper interval representations, the
//!   color-set path and the interval dynamic program over color subsets.
//! - [`mpq`]: MPQ-trees for general interval graphs and the projection of the
//!   root node onto a color-set path.
//! - [`split`]: the clique-move search for split graphs.
//! - [`reductions`]: Vertex Cover instance generators with certificates.
//! - [`instances`], [`generate`] and [`enumerate`]: `.flood.json` documents,
//!   seeded generators and exhaustive small-graph enumeration.

pub mod canon;
pub mod colorset;
pub mod dp;
pub mod dsu;
pub mod enumerate;
pub mod error;
pub mod game;
pub mod generate;
pub mod graph;
pub mod instances;
pub mod interval;
pub mod mpq;
pub mod oracle;
pub mod reductions;
pub mod solve;
pub mod split;


pub use error::{FloodError, Result};
pub use game::{bounds, contract, verify_solution, Bounds, GameState, Move, Variant, Verdict};
pub use graph::{Color, ColoredGraph, Vertex};
pub use oracle::{solve_exact, SearchBudget, Solution};
