//! Brute-force search for claws and asteroidal triples.

use crate::graph::{ColoredGraph, Vertex};

pub fn find_claw(g: &ColoredGraph) -> Option<(Vertex, [Vertex; 3])> {
    for v in g.vertices() {
        let nb = g.neighbors(v);
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &c in &nb[j + 1..] {
                    if !g.has_edge(a, c) && !g.has_edge(b, c) {
                        return Some((v, [a, b, c]));
                    }
                }
            }
        }
    }
    None
}

/// Component labels of `g` minus the closed neighbourhood of `x`
/// (`usize::MAX` for removed vertices).
fn components_avoiding(g: &ColoredGraph, x: Vertex) -> Vec<usize> {
    let n = g.n();
    let mut label = vec![usize::MAX; n];
    let removed = |w: Vertex| w == x || g.has_edge(x, w);
    let mut next = 0;
    for s in 0..n {
        if label[s] != usize::MAX || removed(s) {
            continue;
        }
        label[s] = next;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if label[w] == usize::MAX && !removed(w) {
                    label[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    label
}

pub fn find_asteroidal_triple(g: &ColoredGraph) -> Option<[Vertex; 3]> {
    let n = g.n();
    let comps: Vec<Vec<usize>> = (0..n).map(|x| components_avoiding(g, x)).collect();
    let linked = |a: Vertex, b: Vertex, avoid: Vertex| {
        comps[avoid][a] != usize::MAX && comps[avoid][a] == comps[avoid][b]
    };
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) || g.has_edge(b, c) {
                    continue;
                }
                if linked(a, b, c) && linked(a, c, b) && linked(b, c, a) {
                    return Some([a, b, c]);
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
    fn star_is_a_claw() {
        let g = ColoredGraph::uncolored(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(find_claw(&g), Some((0, [1, 2, 3])));
        assert_eq!(find_asteroidal_triple(&g), None);
    }

    #[test]
    fn subdivided_claw_has_an_asteroidal_triple() {
        // centre 0, arms 1-2, 3-4, 5-6
        let g = ColoredGraph::uncolored(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(find_asteroidal_triple(&g), Some([2, 4, 6]));
    }
}
