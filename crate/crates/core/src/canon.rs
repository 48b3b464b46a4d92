//! Canonical forms of small graphs and colorings, for deduplicating
//! exhaustive enumerations.

use crate::graph::{Color, ColoredGraph, Vertex};

/// Largest vertex count the bitmask encoding supports.
pub const SMALL_MAX: usize = 11;

/// A graph on at most [`SMALL_MAX`] vertices as neighbourhood bitmasks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallGraph {
    pub adj: Vec<u16>,
}

impl SmallGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= SMALL_MAX, "small graphs have at most {SMALL_MAX} vertices");
        SmallGraph { adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let n = self.n();
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| self.has_edge(u, v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen: u16 = 1;
        let mut frontier: u16 = 1;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen.count_ones() as usize == n
    }

    /// A copy with one more vertex adjacent to `mask`.
    pub fn extended(&self, mask: u16) -> Self {
        let n = self.n();
        let mut g = self.clone();
        g.adj.push(0);
        for u in (0..n).filter(|&u| mask >> u & 1 == 1) {
            g.add_edge(u, n);
        }
        g
    }

    /// The same graph with vertex `order[i]` renamed `i`.
    pub fn relabeled(&self, order: &[Vertex]) -> Self {
        let n = self.n();
        let mut g = Self::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                if self.has_edge(order[i], order[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn colored(&self, colors: Vec<Color>, k: Color) -> crate::error::Result<ColoredGraph> {
        ColoredGraph::new(self.n(), &self.edges(), colors, k)
    }

    fn code(&self, order: &[Vertex]) -> u64 {
        let n = self.n();
        let mut code = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                code = code << 1 | u64::from(self.has_edge(order[i], order[j]));
            }
        }
        code
    }

    /// Vertex classes under colour refinement, in a canonical class order.
    fn cells(&self) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut label: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        loop {
            let mut signature: Vec<(usize, Vec<usize>)> = (0..n)
                .map(|v| {
                    let mut around: Vec<usize> = (0..n).filter(|&u| self.has_edge(v, u)).map(|u| label[u]).collect();
                    around.sort_unstable();
                    (label[v], around)
                })
                .collect();
            let mut distinct = signature.clone();
            distinct.sort();
            distinct.dedup();
            let next: Vec<usize> = signature.iter_mut().map(|s| distinct.binary_search(s).unwrap()).collect();
            let classes = |l: &[usize]| {
                let mut c = l.to_vec();
                c.sort_unstable();
                c.dedup();
                c.len()
            };
            let done = classes(&next) == classes(&label);
            label = next;
            if done {
                break;
            }
        }
        let mut cells: Vec<Vec<Vertex>> = Vec::new();
        let mut order: Vec<Vertex> = (0..n).collect();
        order.sort_by_key(|&v| (label[v], v));
        for v in order {
            match cells.last_mut() {
                Some(cell) if label[cell[0]] == label[v] => cell.push(v),
                _ => cells.push(vec![v]),
            }
        }
        cells
    }

    /// Calls `visit` on every vertex order that keeps the refinement cells in
    /// place.
    fn for_each_order(&self, visit: &mut dyn FnMut(&[Vertex])) {
        fn rec(cells: &[Vec<Vertex>], prefix: &mut Vec<Vertex>, visit: &mut dyn FnMut(&[Vertex])) {
            match cells.split_first() {
                None => visit(prefix),
                Some((cell, rest)) => {
                    let mut cell = cell.clone();
                    permute(&mut cell, 0, &mut |p| {
                        let len = prefix.len();
                        prefix.extend_from_slice(p);
                        rec(rest, prefix, visit);
                        prefix.truncate(len);
                    });
                }
            }
        }
        rec(&self.cells(), &mut Vec::with_capacity(self.n()), visit);
    }

    /// The isomorphism-invariant relabeling of this graph.
    pub fn canonical(&self) -> SmallGraph {
        let mut best: Option<(u64, Vec<Vertex>)> = None;
        self.for_each_order(&mut |order| {
            let code = self.code(order);
            if best.as_ref().is_none_or(|(b, _)| code > *b) {
                best = Some((code, order.to_vec()));
            }
        });
        let (_, order) = best.expect("at least one order");
        self.relabeled(&order)
    }

    /// Every automorphism as a vertex map.
    pub fn automorphisms(&self) -> Vec<Vec<Vertex>> {
        let mut base: Option<(u64, Vec<Vertex>)> = None;
        let mut out = Vec::new();
        self.for_each_order(&mut |order| match &base {
            None => {
                base = Some((self.code(order), order.to_vec()));
                out.push((0..order.len()).collect());
            }
            Some((code, first)) => {
                if self.code(order) == *code && order != first.as_slice() {
                    let mut map = vec![0; order.len()];
                    for (i, &v) in first.iter().enumerate() {
                        map[v] = order[i];
                    }
                    out.push(map);
                }
            }
        });
        out
    }
}

fn permute(items: &mut [Vertex], start: usize, visit: &mut dyn FnMut(&[Vertex])) {
    if start == items.len() {
        visit(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permute(items, start + 1, visit);
        items.swap(start, i);
    }
}

/// Renames colors by first occurrence, so colorings that differ by a color
/// permutation coincide.
pub fn normalize_colors(colors: &[Color]) -> Vec<Color> {
    let mut names: Vec<Color> = Vec::new();
    colors
        .iter()
        .map(|c| match names.iter().position(|x| x == c) {
            Some(i) => i as Color + 1,
            None => {
                names.push(*c);
                names.len() as Color
            }
        })
        .collect()
}

/// The least normalized coloring over the given automorphisms.
pub fn canonical_coloring(colors: &[Color], automorphisms: &[Vec<Vertex>]) -> Vec<Color> {
    automorphisms
        .iter()
        .map(|map| {
            let mut moved = vec![0; colors.len()];
            for (v, &c) in colors.iter().enumerate() {
                moved[map[v]] = c;
            }
            normalize_colors(&moved)
        })
        .min()
        .expect("the identity is an automorphism")
}
