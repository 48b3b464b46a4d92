//! Exhaustive enumeration of small graphs up to isomorphism and of their
//! colorings up to symmetry.
//!
//! Graphs grow one vertex at a time. Every class enumerated here is closed
//! under induced subgraphs, and every connected graph has a vertex whose
//! removal keeps it connected, so extending each graph on `n − 1` vertices by
//! every neighbourhood reaches every graph on `n`. Interval graphs are
//! recognised as chordal graphs without an asteroidal triple, independently
//! of the MPQ-tree builder.

use std::collections::BTreeSet;

use crate::canon::{canonical_coloring, SmallGraph};
use crate::graph::Color;
use crate::interval::chordal::perfect_elimination_order;
use crate::interval::forbidden::find_asteroidal_triple;
use crate::interval::lexbfs::proper_interval_ordering;

/// Which graphs to keep while growing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    All,
    Connected,
    ConnectedInterval,
    ConnectedProperInterval,
}

impl Family {
    fn admits(self, g: &SmallGraph) -> bool {
        let connected = || g.is_connected();
        let uncolored = || g.colored(vec![1; g.n()], 1).expect("connected graph");
        match self {
            Family::All => true,
            Family::Connected => connected(),
            Family::ConnectedInterval => connected() && {
                let g = uncolored();
                perfect_elimination_order(&g).is_some() && find_asteroidal_triple(&g).is_none()
            },
            Family::ConnectedProperInterval => connected() && proper_interval_ordering(&uncolored()).is_some(),
        }
    }
}

/// Canonical representatives of `family` on exactly `1..=max_n` vertices,
/// indexed by vertex count (index 0 is empty).
pub fn graphs(family: Family, max_n: usize) -> Vec<Vec<SmallGraph>> {
    let mut levels = vec![Vec::new(), vec![SmallGraph::empty(1)]];
    for n in 2..=max_n {
        let next: BTreeSet<SmallGraph> = levels[n - 1]
            .iter()
            .flat_map(|g: &SmallGraph| (0..1u16 << (n - 1)).map(move |mask| g.extended(mask)))
            .filter(|g| family.admits(g))
            .map(|g| g.canonical())
            .collect();
        levels.push(next.into_iter().collect());
    }
    levels.truncate(max_n + 1);
    levels
}

/// Colorings of `n` vertices with colors `1..=max_colors`, one per color
/// permutation class (first occurrences appear in increasing order).
pub fn colorings(n: usize, max_colors: Color) -> Vec<Vec<Color>> {
    fn rec(prefix: &mut Vec<Color>, n: usize, used: Color, max: Color, out: &mut Vec<Vec<Color>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for c in 1..=(used + 1).min(max) {
            prefix.push(c);
            rec(prefix, n, used.max(c), max, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), n, 0, max_colors, &mut out);
    out
}

/// Colorings of `g` with at most `max_colors` colors, one per orbit under
/// automorphisms and color permutations.
pub fn distinct_colorings(g: &SmallGraph, max_colors: Color) -> Vec<Vec<Color>> {
    let autos = g.automorphisms();
    let unique: BTreeSet<Vec<Color>> =
        colorings(g.n(), max_colors).into_iter().map(|c| canonical_coloring(&c, &autos)).collect();
    unique.into_iter().collect()
}

/// Graphs on `n` vertices with a universal vertex, up to isomorphism: one
/// vertex joined to every graph on `n − 1` vertices.
pub fn graphs_with_universal_vertex(n: usize) -> Vec<SmallGraph> {
    if n == 1 {
        return vec![SmallGraph::empty(1)];
    }
    let rest = graphs(Family::All, n - 1).pop().unwrap_or_default();
    rest.iter().map(|h| h.extended((1u16 << (n - 1)) - 1).canonical()).collect()
}
