//! Split graphs: recognition and an exact solver that only ever recolors
//! clique vertices.

use serde::{Deserialize, Serialize};

use crate::error::{FloodError, ForbiddenStructure, Result};
use crate::game::{Move, Variant};
use crate::graph::{ColoredGraph, Vertex};
use crate::oracle::{solve_restricted, SearchBudget, Solution};

/// A partition of the vertices into a clique and an independent set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitDecomposition {
    pub clique: Vec<Vertex>,
    pub independent: Vec<Vertex>,
}

/// Palettes at least this large make the clique search grow like `(k!)²`.
pub const SPLIT_WARN_COLORS: usize = 8;

fn is_clique(g: &ColoredGraph, set: &[Vertex]) -> bool {
    set.iter().enumerate().all(|(i, &u)| set[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

fn decomposition(g: &ColoredGraph, mut clique: Vec<Vertex>) -> Option<SplitDecomposition> {
    clique.sort_unstable();
    let independent: Vec<Vertex> = g.vertices().filter(|v| clique.binary_search(v).is_err()).collect();
    let split = is_clique(g, &clique) && independent.iter().all(|&u| g.neighbors(u).iter().all(|w| clique.binary_search(w).is_ok()));
    split.then_some(SplitDecomposition { clique, independent })
}

/// Recognises split graphs from the degree sequence.
///
/// Among all decompositions the one with the largest clique is returned, ties
/// going to the lexicographically smallest clique.
pub fn recognize_split(g: &ColoredGraph) -> Result<SplitDecomposition> {
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let m = order.iter().enumerate().take_while(|&(i, &v)| g.degree(v) >= i).count();
    let head: usize = order[..m].iter().map(|&v| g.degree(v)).sum();
    let tail: usize = order[m..].iter().map(|&v| g.degree(v)).sum();
    if head != m * (m.max(1) - 1) + tail {
        return Err(FloodError::NotSplit(ForbiddenStructure::SplitObstruction(split_obstruction(g))));
    }
    let base = decomposition(g, order[..m].to_vec()).ok_or_else(|| FloodError::Internal("degree sequence split but partition invalid".into()))?;
    let mut candidates = vec![base.clone()];
    for &x in &base.independent {
        let missing: Vec<Vertex> = base.clique.iter().copied().filter(|&y| !g.has_edge(x, y)).collect();
        let grown = match missing.as_slice() {
            [] => [&base.clique[..], &[x]].concat(),
            [y] => base.clique.iter().copied().filter(|v| v != y).chain([x]).collect(),
            _ => continue,
        };
        candidates.extend(decomposition(g, grown));
    }
    Ok(candidates
        .into_iter()
        .min_by(|a, b| b.clique.len().cmp(&a.clique.len()).then_with(|| a.clique.cmp(&b.clique)))
        .expect("the degree-sequence partition is a candidate"))
}

/// An induced 2K2, C4 or C5, which every non-split graph contains.
fn split_obstruction(g: &ColoredGraph) -> Vec<Vertex> {
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if [c, d].contains(&a) || [c, d].contains(&b) {
                continue;
            }
            let cross = [(a, c), (a, d), (b, c), (b, d)].map(|(u, v)| g.has_edge(u, v));
            match cross {
                [false, false, false, false] => return vec![a, b, c, d],
                [true, false, false, true] => return vec![a, b, d, c],
                [false, true, true, false] => return vec![a, b, c, d],
                _ => {}
            }
        }
    }
    for start in g.vertices() {
        if let Some(cycle) = induced_path_cycle(g, &mut vec![start], 5) {
            return cycle;
        }
    }
    Vec::new()
}

/// Extends an induced path from `path[0]` with larger vertices and closes it
/// into an induced cycle of length `len`.
fn induced_path_cycle(g: &ColoredGraph, path: &mut Vec<Vertex>, len: usize) -> Option<Vec<Vertex>> {
    let last = *path.last().expect("nonempty path");
    if path.len() == len {
        return g.has_edge(last, path[0]).then(|| path.clone());
    }
    for &w in g.neighbors(last) {
        if w <= path[0] || path.contains(&w) {
            continue;
        }
        let inner = &path[..path.len() - 1];
        // Only the first vertex may see the closing vertex.
        let chord = inner.iter().enumerate().any(|(i, &u)| g.has_edge(u, w) && !(i == 0 && path.len() + 1 == len));
        if chord {
            continue;
        }
        path.push(w);
        if let Some(c) = induced_path_cycle(g, path, len) {
            return Some(c);
        }
        path.pop();
    }
    None
}

/// Exact free-game optimum on a connected split graph.
pub fn solve_split(g: &ColoredGraph) -> Result<Solution> {
    solve_split_with(g, SearchBudget::default())
}

/// As [`solve_split`] under an explicit budget.
///
/// Independent twins of equal color are merged first. The search then
/// recolors only blobs that contain a clique vertex.
pub fn solve_split_with(g: &ColoredGraph, budget: SearchBudget) -> Result<Solution> {
    let split = recognize_split(g)?;
    if g.distinct_colors() >= SPLIT_WARN_COLORS {
        log::warn!("split search with {} colors may need (k!)^2 states", g.distinct_colors());
    }
    let (reduced, original) = drop_twins(g, &split)?;
    let mut movable = vec![false; reduced.n()];
    for (i, &v) in original.iter().enumerate() {
        movable[i] = split.clique.binary_search(&v).is_ok();
    }
    if split.clique.is_empty() {
        movable.iter_mut().for_each(|m| *m = true);
    }
    let sol = solve_restricted(&reduced, &movable, budget)?;
    let witness = sol.witness.iter().map(|m| Move::new(original[m.vertex], m.color)).collect();
    let sol = Solution { opt: sol.opt, witness };
    debug_assert!(crate::game::verify_solution(g, Variant::Free, &sol.witness).valid);
    Ok(sol)
}

/// Removes all but the smallest of each group of independent vertices with
/// the same color and neighbourhood. Returns the reduced graph and the
/// original id of each kept vertex.
fn drop_twins(g: &ColoredGraph, split: &SplitDecomposition) -> Result<(ColoredGraph, Vec<Vertex>)> {
    let mut seen = std::collections::HashSet::new();
    let kept: Vec<Vertex> = g
        .vertices()
        .filter(|&v| split.clique.binary_search(&v).is_ok() || seen.insert((g.color(v), g.neighbors(v).to_vec())))
        .collect();
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in kept.iter().enumerate() {
        index[v] = i;
    }
    let edges: Vec<(Vertex, Vertex)> =
        g.edges().filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX).map(|(u, v)| (index[u], index[v])).collect();
    let colors = kept.iter().map(|&v| g.color(v)).collect();
    Ok((ColoredGraph::new(kept.len(), &edges, colors, g.k())?, kept))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::solve_exact;

    fn graph(n: usize, edges: &[(Vertex, Vertex)], colors: &[u16]) -> ColoredGraph {
        let k = *colors.iter().max().unwrap();
        ColoredGraph::new(n, edges, colors.iter().map(|&c| c as _).collect(), k as _).unwrap()
    }

    #[test]
    fn triangle_is_all_clique() {
        let g = graph(3, &[(0, 1), (1, 2), (0, 2)], &[1, 2, 3]);
        let d = recognize_split(&g).unwrap();
        assert_eq!(d.clique, vec![0, 1, 2]);
        assert!(d.independent.is_empty());
    }

    #[test]
    fn four_cycle_is_not_split() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)], &[1, 1, 1, 1]);
        match recognize_split(&g) {
            Err(FloodError::NotSplit(ForbiddenStructure::SplitObstruction(s))) => assert_eq!(s.len(), 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn five_cycle_obstruction_is_the_cycle() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)], &[1; 5]);
        match recognize_split(&g) {
            Err(FloodError::NotSplit(ForbiddenStructure::SplitObstruction(s))) => assert_eq!(s.len(), 5),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn star_takes_center_and_first_leaf() {
        let g = graph(4, &[(0, 1), (0, 2), (0, 3)], &[1, 2, 3, 2]);
        let d = recognize_split(&g).unwrap();
        assert_eq!(d.clique, vec![0, 1]);
        assert_eq!(d.independent, vec![2, 3]);
    }

    #[test]
    fn small_examples() {
        let mono = graph(3, &[(0, 1), (0, 2)], &[1, 1, 1]);
        assert_eq!(solve_split(&mono).unwrap().opt, 0);
        let pendant = graph(3, &[(0, 1), (0, 2)], &[1, 2, 3]);
        assert_eq!(solve_split(&pendant).unwrap().opt, 2);
        let star = graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)], &[1, 2, 3, 2, 3]);
        let sol = solve_split(&star).unwrap();
        assert_eq!(sol.opt, 2);
        assert_eq!(sol.opt, solve_exact(&star, Variant::Free, SearchBudget::default()).unwrap().opt);
    }

    #[test]
    fn twins_map_back_to_original_ids() {
        let g = graph(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4)], &[1, 2, 3, 1, 1]);
        let sol = solve_split(&g).unwrap();
        let v = crate::game::verify_solution(&g, Variant::Free, &sol.witness);
        assert!(v.valid);
        assert_eq!(v.length, sol.opt);
    }
}
