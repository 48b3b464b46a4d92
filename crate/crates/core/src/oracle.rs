//! Exhaustive breadth-first search over contracted board states.
//!
//! The search runs on the blob quotient of the input. A state is the coloring
//! of the quotient vertices (colors renumbered densely); because blobs are
//! determined by the coloring this is the same information as a blob
//! labeling plus blob colors. Layers are expanded in order and the first goal
//! reached is optimal.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{FloodError, Result};
use crate::game::{contract, GameState, Move, Variant};
use crate::graph::{Color, ColoredGraph, Vertex};

/// Limits for exhaustive search. Running out of any of them is an error,
/// never a wrong answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_states: usize,
    pub max_depth: usize,
    pub time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_states: 4_000_000, max_depth: 64, time_limit: Duration::from_secs(60) }
    }
}

impl SearchBudget {
    pub fn with_max_states(self, max_states: usize) -> Self {
        SearchBudget { max_states, ..self }
    }

    pub fn with_time_limit(self, time_limit: Duration) -> Self {
        SearchBudget { time_limit, ..self }
    }
}

/// An optimum together with a witness of that length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    pub opt: usize,
    pub witness: Vec<Move>,
}

const PARALLEL_FRONTIER: usize = 2048;

/// The quotient board in the compact form the search works on.
#[derive(Clone)]
struct Board {
    adj: Vec<Vec<u16>>,
    /// Smallest original vertex of every quotient vertex.
    representative: Vec<Vertex>,
    /// Dense color index → original color id.
    palette: Vec<Color>,
    start: Vec<u8>,
    pivot: Option<u16>,
    pivot_vertex: Option<Vertex>,
    /// Smallest movable original vertex of every quotient vertex, when moves
    /// are restricted.
    movers: Option<Vec<Option<Vertex>>>,
}

impl Board {
    fn new(g: &ColoredGraph, variant: Variant) -> Result<Board> {
        variant.check(g)?;
        let state = GameState::new(g.clone());
        let (q, map) = contract(&state);
        if q.n() > u16::MAX as usize {
            return Err(FloodError::Capacity { what: "oracle quotient", needed: q.n(), max: u16::MAX as usize });
        }
        let mut palette: Vec<Color> = q.colors().to_vec();
        palette.sort_unstable();
        palette.dedup();
        if palette.len() > u8::MAX as usize {
            return Err(FloodError::Capacity { what: "oracle colors", needed: palette.len(), max: u8::MAX as usize });
        }
        let start = q
            .colors()
            .iter()
            .map(|c| palette.binary_search(c).expect("color in palette") as u8)
            .collect();
        let mut representative = vec![usize::MAX; q.n()];
        for (v, &qv) in map.iter().enumerate() {
            representative[qv] = representative[qv].min(v);
        }
        let adj = (0..q.n()).map(|v| q.neighbors(v).iter().map(|&w| w as u16).collect()).collect();
        let pivot = variant.pivot().map(|p| map[p] as u16);
        Ok(Board { adj, representative, palette, start, pivot, pivot_vertex: variant.pivot(), movers: None })
    }

    /// Only blobs containing a vertex with `movable[v]` may be played.
    fn restrict(mut self, g: &ColoredGraph, movable: &[bool]) -> Board {
        let (_, map) = contract(&GameState::new(g.clone()));
        let mut movers = vec![None; self.n()];
        for v in (0..g.n()).rev().filter(|&v| movable[v]) {
            movers[map[v]] = Some(v);
        }
        self.movers = Some(movers);
        self
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    fn distinct(&self, coloring: &[u8]) -> usize {
        let mut mask = [0u64; 4];
        for &c in coloring {
            mask[c as usize / 64] |= 1 << (c % 64);
        }
        mask.iter().map(|m| m.count_ones() as usize).sum()
    }

    fn present(&self, coloring: &[u8]) -> Vec<u8> {
        let mut seen = vec![false; self.palette.len()];
        for &c in coloring {
            seen[c as usize] = true;
        }
        (0..self.palette.len() as u8).filter(|&c| seen[c as usize]).collect()
    }

    /// Blob of `v` under `coloring`, sorted.
    fn blob(&self, coloring: &[u8], v: usize, scratch: &mut Vec<bool>) -> Vec<usize> {
        scratch.clear();
        scratch.resize(self.n(), false);
        let c = coloring[v];
        let mut stack = vec![v];
        let mut out = Vec::new();
        scratch[v] = true;
        while let Some(u) = stack.pop() {
            out.push(u);
            for &w in &self.adj[u] {
                let w = w as usize;
                if !scratch[w] && coloring[w] == c {
                    scratch[w] = true;
                    stack.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Successors in canonical order: blobs by smallest quotient vertex, then
    /// target color ascending. Only colors present in the state are used.
    fn successors(&self, coloring: &[u8]) -> Vec<(u16, u8, Vec<u8>)> {
        let present = self.present(coloring);
        let mut out = Vec::new();
        let mut scratch = Vec::new();
        let mut done = vec![false; self.n()];
        let roots: Vec<usize> = match self.pivot {
            Some(p) => vec![p as usize],
            None => (0..self.n()).collect(),
        };
        for v in roots {
            if done[v] {
                continue;
            }
            let blob = self.blob(coloring, v, &mut scratch);
            for &u in &blob {
                done[u] = true;
            }
            let v = match &self.movers {
                None => v,
                Some(m) => match blob.iter().find(|&&u| m[u].is_some()) {
                    Some(&u) => u,
                    None => continue,
                },
            };
            let own = coloring[v];
            for &c in &present {
                if c == own {
                    continue;
                }
                let mut next = coloring.to_vec();
                for &u in &blob {
                    next[u] = c;
                }
                out.push((v as u16, c, next));
            }
        }
        out
    }

    fn to_move(&self, v: u16, c: u8) -> Move {
        // In the fixed game the move must name the pivot itself.
        let vertex = match &self.movers {
            Some(m) => m[v as usize].expect("restricted moves name a movable vertex"),
            None => self.pivot_vertex.unwrap_or(self.representative[v as usize]),
        };
        Move::new(vertex, self.palette[c as usize])
    }
}

struct Node {
    parent: u32,
    via: (u16, u8),
}

/// Minimum number of moves to make `g` monochrome under `variant`, with a
/// witness.
pub fn solve_exact(g: &ColoredGraph, variant: Variant, budget: SearchBudget) -> Result<Solution> {
    let board = Board::new(g, variant)?;
    search(&board, budget)
}

/// As [`solve_exact`] for the free game, playing only blobs that contain a
/// vertex `v` with `movable[v]`. Every non-monochrome state must have a
/// merging move on such a blob.
pub(crate) fn solve_restricted(g: &ColoredGraph, movable: &[bool], budget: SearchBudget) -> Result<Solution> {
    let board = Board::new(g, Variant::Free)?.restrict(g, movable);
    search(&board, budget)
}

fn search(board: &Board, budget: SearchBudget) -> Result<Solution> {
    let started = Instant::now();
    let lower0 = board.distinct(&board.start).saturating_sub(1);
    if lower0 == 0 {
        return Ok(Solution { opt: 0, witness: Vec::new() });
    }
    // Greedy absorption never needs more than blobs − 1 moves.
    let upper = board.n() - 1;

    let mut index: HashMap<Box<[u8]>, u32> = HashMap::new();
    let mut keys: Vec<Box<[u8]>> = Vec::new();
    let mut nodes: Vec<Node> = Vec::new();
    let start: Box<[u8]> = board.start.clone().into_boxed_slice();
    index.insert(start.clone(), 0);
    keys.push(start);
    nodes.push(Node { parent: u32::MAX, via: (0, 0) });

    let mut frontier: Vec<u32> = vec![0];
    let mut depth = 0usize;
    while !frontier.is_empty() {
        if depth >= budget.max_depth {
            return Err(FloodError::BudgetExhausted { explored: keys.len(), lower_bound: (depth + 1).max(lower0) });
        }
        if started.elapsed() > budget.time_limit {
            return Err(FloodError::BudgetExhausted { explored: keys.len(), lower_bound: (depth + 1).max(lower0) });
        }
        let expand = |&id: &u32| -> Vec<(u16, u8, Vec<u8>)> {
            board
                .successors(&keys[id as usize])
                .into_iter()
                .filter(|(_, _, next)| depth + 1 + board.distinct(next).saturating_sub(1) <= upper)
                .collect()
        };
        let batches: Vec<Vec<(u16, u8, Vec<u8>)>> = if frontier.len() >= PARALLEL_FRONTIER {
            frontier.par_iter().map(expand).collect()
        } else {
            frontier.iter().map(expand).collect()
        };
        let mut next_frontier = Vec::new();
        for (&parent, batch) in frontier.iter().zip(batches) {
            for (v, c, next) in batch {
                let key = next.into_boxed_slice();
                if index.contains_key(&key) {
                    continue;
                }
                let id = keys.len() as u32;
                let goal = board.distinct(&key) == 1;
                index.insert(key.clone(), id);
                keys.push(key);
                nodes.push(Node { parent, via: (v, c) });
                if goal {
                    return Ok(Solution { opt: depth + 1, witness: trace(board, &nodes, id) });
                }
                next_frontier.push(id);
                if keys.len() > budget.max_states {
                    return Err(FloodError::BudgetExhausted {
                        explored: keys.len(),
                        lower_bound: (depth + 1).max(lower0),
                    });
                }
            }
        }
        frontier = next_frontier;
        depth += 1;
    }
    unreachable!("greedy absorption bounds the optimum, so the search always reaches a goal")
}

fn trace(board: &Board, nodes: &[Node], mut id: u32) -> Vec<Move> {
    let mut moves = Vec::new();
    while nodes[id as usize].parent != u32::MAX {
        let (v, c) = nodes[id as usize].via;
        moves.push(board.to_move(v, c));
        id = nodes[id as usize].parent;
    }
    moves.reverse();
    moves
}

/// A suggested next move.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hint {
    #[serde(rename = "move")]
    pub mv: Move,
    /// Optimum from the current state; a lower bound when `optimal` is false.
    pub remaining_opt: usize,
    /// False when the budget ran out and the move was chosen by the
    /// distinct-color bound alone.
    pub optimal: bool,
}

/// First move of an optimal continuation from `state`, ties broken by the
/// lowest blob (quotient vertex) and then the lowest color.
pub fn hint(state: &GameState, variant: Variant, budget: SearchBudget) -> Result<Hint> {
    if state.is_monochrome() {
        return Err(FloodError::InvalidInput("board is already monochrome".into()));
    }
    let g = state.current_graph();
    let board = Board::new(&g, variant)?;
    let candidates = board.successors(&board.start);
    let degrade = |lower_bound: usize| -> Hint {
        let (v, c, _) = candidates
            .iter()
            .min_by_key(|(_, _, next)| board.distinct(next))
            .expect("a non-monochrome board has a move");
        Hint { mv: board.to_move(*v, *c), remaining_opt: lower_bound, optimal: false }
    };
    let opt = match search(&board, budget) {
        Ok(s) => s.opt,
        Err(FloodError::BudgetExhausted { lower_bound, .. }) => return Ok(degrade(lower_bound)),
        Err(e) => return Err(e),
    };
    let tighter = SearchBudget { max_depth: opt - 1, ..budget };
    for (v, c, next) in &candidates {
        let sub = Board { start: next.clone(), ..board.clone() };
        match search(&sub, tighter) {
            Ok(s) if s.opt == opt - 1 => {
                return Ok(Hint { mv: board.to_move(*v, *c), remaining_opt: opt, optimal: true })
            }
            Ok(_) => {}
            Err(FloodError::BudgetExhausted { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(degrade(opt))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::verify_solution;

    fn path(colors: &[Color]) -> ColoredGraph {
        let edges: Vec<_> = (1..colors.len()).map(|i| (i - 1, i)).collect();
        ColoredGraph::new(colors.len(), &edges, colors.to_vec(), *colors.iter().max().unwrap()).unwrap()
    }

    /// Single edge gadget: backbone b1..b6 = 0..5, hairs h3 = 6, h4 = 7.
    /// Colors b = 1, e = 2, u = 3, v = 4.
    fn gadget() -> ColoredGraph {
        let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6), (3, 7)];
        ColoredGraph::new(8, &edges, vec![1, 2, 4, 3, 2, 1, 3, 4], 4).unwrap()
    }

    #[test]
    fn monochrome_needs_nothing() {
        let s = solve_exact(&path(&[2, 2, 2]), Variant::Free, SearchBudget::default()).unwrap();
        assert_eq!(s, Solution { opt: 0, witness: vec![] });
    }

    #[test]
    fn gadget_takes_four_moves() {
        let g = gadget();
        let s = solve_exact(&g, Variant::Free, SearchBudget::default()).unwrap();
        assert_eq!(s.opt, 4);
        assert!(verify_solution(&g, Variant::Free, &s.witness).valid);
        let listed = [Move::new(2, 3), Move::new(2, 2), Move::new(2, 1), Move::new(7, 1)];
        let v = verify_solution(&g, Variant::Free, &listed);
        assert!(v.valid);
        assert_eq!(v.final_color, Some(1));
    }

    #[test]
    fn alternating_path_of_five() {
        let g = path(&[1, 2, 1, 2, 1]);
        let s = solve_exact(&g, Variant::Free, SearchBudget::default()).unwrap();
        assert_eq!(s.opt, 2);
        assert!(verify_solution(&g, Variant::Free, &s.witness).valid);
    }

    #[test]
    fn fixed_variant_is_never_cheaper() {
        let g = path(&[1, 2, 3, 1, 2]);
        let free = solve_exact(&g, Variant::Free, SearchBudget::default()).unwrap().opt;
        for p in 0..g.n() {
            let fixed = solve_exact(&g, Variant::Fixed { pivot: p }, SearchBudget::default()).unwrap();
            assert!(fixed.opt >= free);
            assert!(verify_solution(&g, Variant::Fixed { pivot: p }, &fixed.witness).valid);
        }
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let g = gadget();
        let tiny = SearchBudget { max_depth: 2, ..SearchBudget::default() };
        match solve_exact(&g, Variant::Free, tiny) {
            Err(FloodError::BudgetExhausted { lower_bound, .. }) => assert!(lower_bound >= 3),
            other => panic!("expected budget error, got {other:?}"),
        }
        let few = SearchBudget::default().with_max_states(5);
        assert!(matches!(solve_exact(&g, Variant::Free, few), Err(FloodError::BudgetExhausted { .. })));
    }

    #[test]
    fn hint_on_short_path_prefers_lowest_blob() {
        let s = GameState::new(path(&[1, 2, 1]));
        let h = hint(&s, Variant::Free, SearchBudget::default()).unwrap();
        // Recoloring an end only merges it with the middle; the middle move is
        // the unique one-move finish.
        assert_eq!(h, Hint { mv: Move::new(1, 1), remaining_opt: 1, optimal: true });
    }

    #[test]
    fn hint_after_first_gadget_move() {
        let s = GameState::new(gadget()).apply_move(Move::new(2, 3), Variant::Free).unwrap();
        let h = hint(&s, Variant::Free, SearchBudget::default()).unwrap();
        assert_eq!(h.remaining_opt, 3);
        let t = s.apply_move(h.mv, Variant::Free).unwrap();
        let rest = solve_exact(&t.current_graph(), Variant::Free, SearchBudget::default()).unwrap();
        assert_eq!(rest.opt, 2);
    }

    #[test]
    fn hint_degrades_when_budget_is_tiny() {
        let s = GameState::new(gadget());
        let h = hint(&s, Variant::Free, SearchBudget { max_depth: 1, ..Default::default() }).unwrap();
        assert!(!h.optimal);
        assert!(h.remaining_opt >= 2);
    }
}
