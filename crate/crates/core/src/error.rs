use std::fmt;

use crate::graph::{Color, Vertex};

pub type Result<T, E = FloodError> = std::result::Result<T, E>;

/// An induced subgraph that certifies a graph is outside a recognised class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForbiddenStructure {
    /// `center` adjacent to three pairwise non-adjacent `leaves`.
    Claw { center: Vertex, leaves: [Vertex; 3] },
    /// An induced cycle of length at least four, in cyclic order.
    ChordlessCycle(Vec<Vertex>),
    /// Three independent vertices, each pair joined by a path that avoids the
    /// closed neighbourhood of the third.
    AsteroidalTriple([Vertex; 3]),
    /// An induced 2K2, C4 or C5 (a split-graph obstruction).
    SplitObstruction(Vec<Vertex>),
}

impl fmt::Display for ForbiddenStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForbiddenStructure::Claw { center, leaves } => {
                write!(f, "claw centred at {center} with leaves {leaves:?}")
            }
            ForbiddenStructure::ChordlessCycle(c) => write!(f, "chordless cycle {c:?}"),
            ForbiddenStructure::AsteroidalTriple(t) => write!(f, "asteroidal triple {t:?}"),
            ForbiddenStructure::SplitObstruction(s) => {
                write!(f, "induced 2K2/C4/C5 on {s:?}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FloodError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("color {color} is outside 1..={k}")]
    UnknownColor { color: Color, k: Color },
    #[error("graph is not connected")]
    Disconnected,
    #[error("move {index} plays vertex {vertex} but the fixed variant pins vertex {pivot}")]
    VariantViolation { index: usize, vertex: Vertex, pivot: Vertex },
    #[error("search budget exhausted after {explored} states; optimum is at least {lower_bound}")]
    BudgetExhausted { explored: usize, lower_bound: usize },
    #[error("not a proper interval graph: {0}")]
    NotProperInterval(ForbiddenStructure),
    #[error("not an interval graph: {0}")]
    NotInterval(ForbiddenStructure),
    #[error("not a split graph: {0}")]
    NotSplit(ForbiddenStructure),
    #[error("interval representation is not compact: {0}")]
    Compactness(String),
    #[error("{what} needs {needed} but capacity is {max}")]
    Capacity { what: &'static str, needed: usize, max: usize },
    #[error("witness gap: dynamic program claims {dp_opt} moves but no witness of that length was found{}", oracle_note(.oracle_opt))]
    WitnessGap { dp_opt: usize, oracle_opt: Option<usize> },
    #[error("reduction domain: {0}")]
    ReductionDomain(String),
    #[error("{field}: {message}")]
    Parse { field: String, message: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

fn oracle_note(opt: &Option<usize>) -> String {
    match opt {
        Some(o) => format!(" (exhaustive optimum is {o})"),
        None => String::new(),
    }
}

impl FloodError {
    pub(crate) fn parse(field: impl Into<String>, message: impl Into<String>) -> Self {
        FloodError::Parse { field: field.into(), message: message.into() }
    }
}
