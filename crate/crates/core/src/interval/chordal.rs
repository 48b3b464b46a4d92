//! Chordality, maximal cliques and obstruction search.

use std::collections::VecDeque;

use crate::graph::{ColoredGraph, Vertex};

use super::lexbfs::lexbfs;

/// A perfect elimination ordering, if `g` is chordal.
pub fn perfect_elimination_order(g: &ColoredGraph) -> Option<Vec<Vertex>> {
    let mut order = lexbfs(g, None);
    order.reverse();
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &order {
        let later: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        if let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) {
            if later.iter().any(|&w| w != parent && !g.has_edge(parent, w)) {
                return None;
            }
        }
    }
    Some(order)
}

/// Maximal cliques of a chordal graph from a perfect elimination ordering,
/// each sorted, listed in order of their first eliminated vertex.
pub fn maximal_cliques(g: &ColoredGraph, peo: &[Vertex]) -> Vec<Vec<Vertex>> {
    let mut pos = vec![0; g.n()];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    let candidates: Vec<Vec<Vertex>> = peo
        .iter()
        .map(|&v| {
            let mut c: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect();
    let contains = |big: &Vec<Vertex>, small: &Vec<Vertex>| small.iter().all(|x| big.binary_search(x).is_ok());
    let mut out: Vec<Vec<Vertex>> = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        let dominated = candidates
            .iter()
            .enumerate()
            .any(|(j, d)| j != i && (d.len() > c.len() || (d.len() == c.len() && j < i)) && contains(d, c));
        if !dominated {
            out.push(c.clone());
        }
    }
    out
}

/// Shortest path from `from` to `to` using only vertices allowed by `ok`.
pub(crate) fn shortest_path(
    g: &ColoredGraph,
    from: Vertex,
    to: Vertex,
    ok: impl Fn(Vertex) -> bool,
) -> Option<Vec<Vertex>> {
    let mut prev = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::from([from]);
    prev[from] = from;
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut x = to;
            while x != from {
                x = prev[x];
                path.push(x);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbors(u) {
            if prev[w] == usize::MAX && ok(w) {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// An induced cycle of length at least four, if one exists.
pub fn find_chordless_cycle(g: &ColoredGraph) -> Option<Vec<Vertex>> {
    for v in g.vertices() {
        let nb = g.neighbors(v);
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if g.has_edge(x, y) {
                    continue;
                }
                let path = shortest_path(g, x, y, |w| w == x || w == y || (w != v && !g.has_edge(v, w)));
                if let Some(mut p) = path {
                    p.push(v);
                    return Some(p);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_cycle_is_not_chordal() {
        let g = ColoredGraph::uncolored(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(perfect_elimination_order(&g).is_none());
        let c = find_chordless_cycle(&g).unwrap();
        assert_eq!(c.len(), 4);
    }

    #[test]
    fn cliques_of_a_diamond() {
        let g = ColoredGraph::uncolored(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let peo = perfect_elimination_order(&g).unwrap();
        let mut cliques = maximal_cliques(&g, &peo);
        cliques.sort();
        assert_eq!(cliques, vec![vec![0, 1, 2], vec![1, 2, 3]]);
        assert!(find_chordless_cycle(&g).is_none());
    }

    #[test]
    fn complete_graph_has_one_clique() {
        let edges: Vec<_> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        let g = ColoredGraph::uncolored(5, &edges).unwrap();
        let peo = perfect_elimination_order(&g).unwrap();
        assert_eq!(maximal_cliques(&g, &peo), vec![vec![0, 1, 2, 3, 4]]);
    }
}
