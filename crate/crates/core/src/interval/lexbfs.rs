//! Lexicographic breadth-first search by partition refinement.

use crate::graph::{ColoredGraph, Vertex};

/// LexBFS ordering of `g`.
///
/// With `previous = None` ties go to the smallest vertex id. With a previous
/// ordering this is LexBFS+: ties go to the vertex that comes last in
/// `previous`.
pub fn lexbfs(g: &ColoredGraph, previous: Option<&[Vertex]>) -> Vec<Vertex> {
    let n = g.n();
    let rank: Option<Vec<usize>> = previous.map(|p| {
        let mut r = vec![0; n];
        for (i, &v) in p.iter().enumerate() {
            r[v] = i;
        }
        r
    });
    let mut cells: Vec<Vec<Vertex>> = vec![(0..n).collect()];
    let mut order = Vec::with_capacity(n);
    while let Some(first) = cells.first_mut() {
        let pick = match &rank {
            Some(r) => (0..first.len()).max_by_key(|&i| r[first[i]]).expect("cells are never empty"),
            None => 0,
        };
        let v = first.remove(pick);
        order.push(v);
        let mut refined = Vec::with_capacity(cells.len() + 1);
        for cell in cells.drain(..) {
            let (near, far): (Vec<Vertex>, Vec<Vertex>) = cell.into_iter().partition(|&u| g.has_edge(v, u));
            if !near.is_empty() {
                refined.push(near);
            }
            if !far.is_empty() {
                refined.push(far);
            }
        }
        cells = refined;
    }
    order
}

/// Whether every closed neighbourhood is a contiguous block of `order`.
pub fn is_umbrella_ordering(g: &ColoredGraph, order: &[Vertex]) -> bool {
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let (lo, hi) = g
            .neighbors(v)
            .iter()
            .fold((pos[v], pos[v]), |(lo, hi), &w| (lo.min(pos[w]), hi.max(pos[w])));
        hi - lo == g.degree(v)
    })
}

/// Three-sweep LexBFS+ ordering; an umbrella ordering exactly when `g` is a
/// proper interval graph.
pub fn proper_interval_ordering(g: &ColoredGraph) -> Option<Vec<Vertex>> {
    let first = lexbfs(g, None);
    let second = lexbfs(g, Some(&first));
    let third = lexbfs(g, Some(&second));
    is_umbrella_ordering(g, &third).then_some(third)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexbfs_on_a_path_walks_it() {
        let g = ColoredGraph::uncolored(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(lexbfs(&g, None), vec![0, 1, 2, 3]);
        let order = proper_interval_ordering(&g).unwrap();
        assert!(order == vec![0, 1, 2, 3] || order == vec![3, 2, 1, 0]);
    }

    #[test]
    fn claw_has_no_umbrella_ordering() {
        let g = ColoredGraph::uncolored(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(proper_interval_ordering(&g).is_none());
    }
}
