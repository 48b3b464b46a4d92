//! Game semantics: moves, blob maintenance, replay and verification.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::dsu::DisjointSets;
use crate::error::{FloodError, Result};
use crate::graph::{Color, ColoredGraph, Vertex};

/// A coloring operation: recolor the blob of `vertex` with `color`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Move {
    pub vertex: Vertex,
    pub color: Color,
}

impl Move {
    pub fn new(vertex: Vertex, color: Color) -> Self {
        Move { vertex, color }
    }
}

/// Free play, or every move pinned to one pivot vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Variant {
    #[default]
    Free,
    Fixed {
        pivot: Vertex,
    },
}

impl Variant {
    pub fn pivot(&self) -> Option<Vertex> {
        match *self {
            Variant::Free => None,
            Variant::Fixed { pivot } => Some(pivot),
        }
    }

    pub fn check(&self, g: &ColoredGraph) -> Result<()> {
        match *self {
            Variant::Free => Ok(()),
            Variant::Fixed { pivot } => g.check_vertex(pivot),
        }
    }
}

/// A board position: the initial graph, the current coloring and the blob
/// partition it induces.
///
/// States are values; [`GameState::apply_move`] returns a new state and the
/// partition only ever coarsens.
#[derive(Debug, Clone)]
pub struct GameState {
    graph: Arc<ColoredGraph>,
    colors: Vec<Color>,
    blobs: DisjointSets,
    history: Vec<Move>,
}

impl GameState {
    pub fn new(graph: impl Into<Arc<ColoredGraph>>) -> Self {
        let graph = graph.into();
        let colors = graph.colors().to_vec();
        let mut blobs = DisjointSets::new(graph.n());
        for (u, v) in graph.edges() {
            if colors[u] == colors[v] {
                blobs.union(u, v);
            }
        }
        GameState { graph, colors, blobs, history: Vec::new() }
    }

    /// Replays `moves` from the initial board under `variant`.
    pub fn replay(graph: impl Into<Arc<ColoredGraph>>, variant: Variant, moves: &[Move]) -> Result<Self> {
        let mut state = GameState::new(graph);
        for &m in moves {
            state = state.apply_move(m, variant)?;
        }
        Ok(state)
    }

    /// The initial board.
    pub fn graph(&self) -> &ColoredGraph {
        &self.graph
    }

    pub fn shared_graph(&self) -> Arc<ColoredGraph> {
        Arc::clone(&self.graph)
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn history(&self) -> &[Move] {
        &self.history
    }

    /// The current coloring as a standalone board.
    pub fn current_graph(&self) -> ColoredGraph {
        self.graph
            .recolored(self.colors.clone(), self.graph.k())
            .expect("current coloring stays within 1..=k")
    }

    /// Label of every vertex's blob: the smallest vertex id in that blob.
    pub fn blob_labels(&self) -> Vec<Vertex> {
        let n = self.graph.n();
        let mut min_of_root = vec![usize::MAX; n];
        for v in 0..n {
            let r = self.blobs.root(v);
            min_of_root[r] = min_of_root[r].min(v);
        }
        (0..n).map(|v| min_of_root[self.blobs.root(v)]).collect()
    }

    /// Blobs as sorted vertex lists, ordered by their smallest vertex.
    pub fn blobs(&self) -> Vec<Vec<Vertex>> {
        let labels = self.blob_labels();
        let mut out: Vec<Vec<Vertex>> = Vec::new();
        let mut index = vec![usize::MAX; self.graph.n()];
        for (v, &l) in labels.iter().enumerate() {
            if index[l] == usize::MAX {
                index[l] = out.len();
                out.push(Vec::new());
            }
            out[index[l]].push(v);
        }
        out
    }

    pub fn blob_of(&self, v: Vertex) -> Vec<Vertex> {
        let r = self.blobs.root(v);
        (0..self.graph.n()).filter(|&u| self.blobs.root(u) == r).collect()
    }

    pub fn blob_count(&self) -> usize {
        (0..self.graph.n()).filter(|&v| self.blobs.root(v) == v).count()
    }

    pub fn distinct_colors(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    pub fn is_monochrome(&self) -> bool {
        self.colors.iter().all(|&c| c == self.colors[0])
    }

    /// The flood neighbourhood of `v` for color `c`.
    ///
    /// When `v` already has color `c` this is `v`'s blob. Otherwise it is the
    /// set of `c`-colored vertices that a move `(v, c)` would absorb: every
    /// component of the `c`-colored subgraph touching `v`'s blob. Empty when no
    /// neighbour of the blob has color `c`.
    pub fn flood_neighborhood(&self, v: Vertex, c: Color) -> Result<Vec<Vertex>> {
        self.graph.check_vertex(v)?;
        self.graph.check_color(c)?;
        if self.colors[v] == c {
            return Ok(self.blob_of(v));
        }
        let r = self.blobs.root(v);
        let mut out: Vec<Vertex> = Vec::new();
        let mut seen_roots: Vec<usize> = Vec::new();
        for u in 0..self.graph.n() {
            if self.blobs.root(u) != r {
                continue;
            }
            for &w in self.graph.neighbors(u) {
                if self.colors[w] == c {
                    let wr = self.blobs.root(w);
                    if !seen_roots.contains(&wr) {
                        seen_roots.push(wr);
                    }
                }
            }
        }
        for u in 0..self.graph.n() {
            if seen_roots.contains(&self.blobs.root(u)) {
                out.push(u);
            }
        }
        Ok(out)
    }

    /// Plays `m` under `variant`, returning the successor state.
    pub fn apply_move(&self, m: Move, variant: Variant) -> Result<GameState> {
        self.graph.check_vertex(m.vertex)?;
        self.graph.check_color(m.color)?;
        if let Variant::Fixed { pivot } = variant {
            if m.vertex != pivot {
                return Err(FloodError::VariantViolation {
                    index: self.history.len(),
                    vertex: m.vertex,
                    pivot,
                });
            }
        }
        let mut next = self.clone();
        next.history.push(m);
        let r = next.blobs.root(m.vertex);
        let members: Vec<Vertex> = (0..next.graph.n()).filter(|&u| next.blobs.root(u) == r).collect();
        for &u in &members {
            next.colors[u] = m.color;
        }
        for &u in &members {
            for &w in next.graph.neighbors(u) {
                if next.colors[w] == m.color {
                    next.blobs.union(u, w);
                }
            }
        }
        Ok(next)
    }
}

/// Outcome of replaying a candidate solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub valid: bool,
    pub final_color: Option<Color>,
    pub length: usize,
    pub violation: Option<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Index of the offending move; equals the move count when every move was
    /// legal but the final board is not monochrome.
    pub index: usize,
    pub reason: String,
}

/// Replays `moves` from `g` and reports whether the board ends monochrome.
pub fn verify_solution(g: &ColoredGraph, variant: Variant, moves: &[Move]) -> Verdict {
    let mut state = GameState::new(g.clone());
    let fail = |index: usize, reason: String| Verdict {
        valid: false,
        final_color: None,
        length: moves.len(),
        violation: Some(Violation { index, reason }),
    };
    if let Err(e) = variant.check(g) {
        return fail(0, format!("bad variant: {e}"));
    }
    for (i, &m) in moves.iter().enumerate() {
        state = match state.apply_move(m, variant) {
            Ok(s) => s,
            Err(e) => return fail(i, e.to_string()),
        };
    }
    if state.is_monochrome() {
        Verdict { valid: true, final_color: Some(state.color(0)), length: moves.len(), violation: None }
    } else {
        fail(
            moves.len(),
            format!("board still has {} colors after the last move", state.distinct_colors()),
        )
    }
}

/// Quotient of the current state: one vertex per blob, numbered in order of
/// each blob's smallest vertex, together with the vertex → quotient map.
pub fn contract(state: &GameState) -> (ColoredGraph, Vec<Vertex>) {
    let labels = state.blob_labels();
    let n = state.graph().n();
    let mut id = vec![usize::MAX; n];
    let mut colors = Vec::new();
    for v in 0..n {
        if labels[v] == v {
            id[v] = colors.len();
            colors.push(state.color(v));
        }
    }
    let map: Vec<Vertex> = labels.iter().map(|&l| id[l]).collect();
    let mut edges: Vec<(Vertex, Vertex)> = state
        .graph()
        .edges()
        .filter_map(|(u, v)| {
            let (a, b) = (map[u], map[v]);
            (a != b).then(|| (a.min(b), a.max(b)))
        })
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let q = ColoredGraph::new(colors.len(), &edges, colors, state.graph().k())
        .expect("quotient of a connected graph is connected");
    (q, map)
}

/// Universal envelope on the optimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// Distinct colors present minus one.
    pub lower: usize,
    /// Initial blobs minus one.
    pub upper: usize,
}

pub fn bounds(g: &ColoredGraph) -> Bounds {
    let state = GameState::new(g.clone());
    Bounds { lower: g.distinct_colors() - 1, upper: state.blob_count() - 1 }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(colors: &[Color]) -> ColoredGraph {
        let n = colors.len();
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        let k = *colors.iter().max().unwrap();
        ColoredGraph::new(n, &edges, colors.to_vec(), k).unwrap()
    }

    #[test]
    fn flood_neighborhood_on_short_path() {
        let s = GameState::new(path(&[1, 2, 1]));
        assert_eq!(s.flood_neighborhood(1, 2).unwrap(), vec![1]);
        assert_eq!(s.flood_neighborhood(0, 2).unwrap(), vec![1]);
        assert_eq!(s.flood_neighborhood(1, 1).unwrap(), vec![0, 2]);
        assert!(s.flood_neighborhood(3, 1).is_err());
        assert!(s.flood_neighborhood(0, 3).is_err());
    }

    #[test]
    fn flood_neighborhood_empty_when_color_absent_nearby() {
        let s = GameState::new(path(&[1, 2, 3]));
        assert!(s.flood_neighborhood(0, 3).unwrap().is_empty());
    }

    #[test]
    fn monochrome_triangle_neighborhood_is_everything() {
        let g = ColoredGraph::new(3, &[(0, 1), (1, 2), (0, 2)], vec![1, 1, 1], 1).unwrap();
        let s = GameState::new(g);
        assert_eq!(s.flood_neighborhood(2, 1).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn recolor_to_own_color_only_extends_history() {
        let s = GameState::new(path(&[1, 2, 1]));
        let t = s.apply_move(Move::new(1, 2), Variant::Free).unwrap();
        assert_eq!(t.colors(), s.colors());
        assert_eq!(t.blob_labels(), s.blob_labels());
        assert_eq!(t.history().len(), 1);
    }

    #[test]
    fn middle_move_finishes_path() {
        let s = GameState::new(path(&[1, 2, 1]));
        let t = s.apply_move(Move::new(1, 1), Variant::Free).unwrap();
        assert_eq!(t.blob_count(), 1);
        assert_eq!(t.distinct_colors(), 1);
    }

    #[test]
    fn fixed_variant_rejects_other_vertices() {
        let s = GameState::new(path(&[1, 2, 1]));
        let err = s.apply_move(Move::new(0, 2), Variant::Fixed { pivot: 1 }).unwrap_err();
        assert_eq!(err, FloodError::VariantViolation { index: 0, vertex: 0, pivot: 1 });
    }

    #[test]
    fn verify_reports_first_violation() {
        let g = path(&[1, 2, 1]);
        let v = verify_solution(&g, Variant::Free, &[]);
        assert!(!v.valid);
        assert_eq!(v.violation.unwrap().index, 0);
        let v = verify_solution(&g, Variant::Free, &[Move::new(1, 1)]);
        assert!(v.valid);
        assert_eq!(v.final_color, Some(1));
        let v = verify_solution(&g, Variant::Free, &[Move::new(7, 1), Move::new(1, 1)]);
        assert_eq!(v.violation.unwrap().index, 0);
        let mono = path(&[2, 2]);
        let v = verify_solution(&mono, Variant::Free, &[]);
        assert!(v.valid && v.length == 0);
    }

    #[test]
    fn contract_merges_equal_neighbours() {
        let s = GameState::new(path(&[1, 2, 2, 1]));
        let (q, map) = contract(&s);
        assert_eq!(q.colors(), &[1, 2, 1]);
        assert_eq!(map, vec![0, 1, 1, 2]);
        assert_eq!(q.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let mono = GameState::new(path(&[3, 3, 3]));
        assert_eq!(contract(&mono).0.n(), 1);
    }

    #[test]
    fn bounds_on_small_boards() {
        assert_eq!(bounds(&path(&[1, 1])), Bounds { lower: 0, upper: 0 });
        assert_eq!(bounds(&path(&[1, 2, 1])), Bounds { lower: 1, upper: 2 });
    }
}
