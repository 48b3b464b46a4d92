//! Engine selection.
//!
//! `Auto` tries split recognition first, then interval recognition, and falls
//! back to exhaustive search. Graphs that are both split and interval go to
//! the split engine. The fixed variant is only solved by exhaustive search.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dp::solve_proper_interval;
use crate::error::{FloodError, Result};
use crate::game::Variant;
use crate::graph::ColoredGraph;
use crate::mpq::{build_mpq, solve_interval};
use crate::oracle::{solve_exact, SearchBudget, Solution};
use crate::split::{recognize_split, solve_split_with};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Engine {
    Auto,
    Oracle,
    Interval,
    ProperInterval,
    Split,
}

impl Engine {
    pub const ALL: [Engine; 5] = [Engine::Auto, Engine::Oracle, Engine::Interval, Engine::ProperInterval, Engine::Split];

    pub fn name(self) -> &'static str {
        match self {
            Engine::Auto => "auto",
            Engine::Oracle => "oracle",
            Engine::Interval => "interval",
            Engine::ProperInterval => "proper-interval",
            Engine::Split => "split",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = FloodError;

    fn from_str(s: &str) -> Result<Self> {
        Engine::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| FloodError::InvalidInput(format!("unknown engine {s:?}")))
    }
}

/// A solution and the engine that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub engine: Engine,
    #[serde(flatten)]
    pub solution: Solution,
}

/// The engine `Auto` resolves to for `g` under `variant`.
pub fn select_engine(g: &ColoredGraph, variant: Variant) -> Engine {
    if variant != Variant::Free {
        Engine::Oracle
    } else if recognize_split(g).is_ok() {
        Engine::Split
    } else if build_mpq(g).is_ok() {
        Engine::Interval
    } else {
        Engine::Oracle
    }
}

pub fn solve(g: &ColoredGraph, variant: Variant, engine: Engine, budget: SearchBudget) -> Result<Outcome> {
    let engine = match engine {
        Engine::Auto => select_engine(g, variant),
        e => e,
    };
    if engine != Engine::Oracle && variant != Variant::Free {
        return Err(FloodError::InvalidInput(format!("the {engine} engine solves only the free variant")));
    }
    let solution = match engine {
        Engine::Oracle | Engine::Auto => solve_exact(g, variant, budget)?,
        Engine::Interval => solve_interval(g)?,
        Engine::ProperInterval => solve_proper_interval(g)?,
        Engine::Split => solve_split_with(g, budget)?,
    };
    Ok(Outcome { engine, solution })
}
