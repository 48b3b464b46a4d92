use std::collections::VecDeque;

use crate::error::{FloodError, Result};

pub type Vertex = usize;
/// Color ids are dense integers `1..=k`.
pub type Color = u32;

/// A connected, simple, undirected graph with one color per vertex.
///
/// Edges between equal-colored vertices are allowed. `k` may exceed the
/// number of colors actually used.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    adj: Vec<Vec<Vertex>>,
    colors: Vec<Color>,
    k: Color,
    edge_count: usize,
}

impl ColoredGraph {
    pub fn new(n: usize, edges: &[(Vertex, Vertex)], colors: Vec<Color>, k: Color) -> Result<Self> {
        if n == 0 {
            return Err(FloodError::InvalidInput("graph has no vertices".into()));
        }
        if colors.len() != n {
            return Err(FloodError::InvalidInput(format!(
                "{} colors given for {n} vertices",
                colors.len()
            )));
        }
        if k == 0 {
            return Err(FloodError::InvalidInput("k must be positive".into()));
        }
        if let Some(&c) = colors.iter().find(|&&c| c == 0 || c > k) {
            return Err(FloodError::UnknownColor { color: c, k });
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(FloodError::UnknownVertex(u));
            }
            if v >= n {
                return Err(FloodError::UnknownVertex(v));
            }
            if u == v {
                return Err(FloodError::InvalidInput(format!("loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(FloodError::InvalidInput(format!("duplicate edge at vertex {u}")));
            }
        }
        let g = ColoredGraph { adj, colors, k, edge_count: edges.len() };
        if !g.is_connected() {
            return Err(FloodError::Disconnected);
        }
        Ok(g)
    }

    /// Same graph, uniform color 1 with `k = 1`.
    pub fn uncolored(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        Self::new(n, edges, vec![1; n], 1)
    }

    /// The same board under a different coloring.
    pub fn recolored(&self, colors: Vec<Color>, k: Color) -> Result<Self> {
        if colors.len() != self.n() {
            return Err(FloodError::InvalidInput("coloring length mismatch".into()));
        }
        if let Some(&c) = colors.iter().find(|&&c| c == 0 || c > k) {
            return Err(FloodError::UnknownColor { color: c, k });
        }
        Ok(ColoredGraph { adj: self.adj.clone(), colors, k, edge_count: self.edge_count })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn k(&self) -> Color {
        self.k
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Number of distinct colors present.
    pub fn distinct_colors(&self) -> usize {
        let mut seen: Vec<Color> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    pub fn is_monochrome(&self) -> bool {
        self.colors.iter().all(|&c| c == self.colors[0])
    }

    fn is_connected(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(FloodError::UnknownVertex(v))
        }
    }

    pub fn check_color(&self, c: Color) -> Result<()> {
        if (1..=self.k).contains(&c) {
            Ok(())
        } else {
            Err(FloodError::UnknownColor { color: c, k: self.k })
        }
    }
}
