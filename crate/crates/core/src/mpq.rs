//! Modified PQ-trees of interval graphs and the projection of the game onto
//! the root node.
//!
//! Construction works top-down on the maximal cliques. For a node over the
//! clique family `𝒞`, the vertices in every clique of `𝒞` are taken first.
//! If the remaining vertices split `𝒞` into several components the node is a
//! P-node over them. Otherwise the clique sets of the remaining vertices have
//! an overlap component covering `𝒞`; its consecutive arrangement is unique
//! up to reversal and its blocks become the children of a Q-node, whose
//! vertices are those spanning two or more blocks.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::colorset::{ColorSet, ColorSetPath, Provenance};
use crate::dp::{dp_solve_with, reconstruct_witness_with, TableKind};
use crate::dsu::DisjointSets;
use crate::error::{FloodError, ForbiddenStructure, Result};
use crate::game::{bounds, Move};
use crate::graph::{Color, ColoredGraph, Vertex};
use crate::interval::chordal::{find_chordless_cycle, maximal_cliques, perfect_elimination_order};
use crate::interval::forbidden::find_asteroidal_triple;
use crate::interval::IntervalRepresentation;
use crate::oracle::Solution;

/// A node of the tree; children are indices into [`MpqTree::nodes`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MpqNode {
    /// A maximal clique and the vertices whose only clique it is.
    Leaf { clique: usize, vertices: Vec<Vertex> },
    /// Vertices in every clique below and in no other.
    P { vertices: Vec<Vertex>, children: Vec<usize> },
    /// Ordered children; each vertex occupies the sections `first..=last`.
    Q { spans: Vec<(Vertex, usize, usize)>, children: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MpqTree {
    pub nodes: Vec<MpqNode>,
    pub root: usize,
    /// Maximal cliques, each sorted; leaves refer to them by index.
    pub cliques: Vec<Vec<Vertex>>,
}

/// Certificate that `g` is not an interval graph.
pub fn interval_obstruction(g: &ColoredGraph) -> ForbiddenStructure {
    if let Some(c) = find_chordless_cycle(g) {
        return ForbiddenStructure::ChordlessCycle(c);
    }
    match find_asteroidal_triple(g) {
        Some(t) => ForbiddenStructure::AsteroidalTriple(t),
        None => unreachable!("chordal AT-free graphs are interval graphs"),
    }
}

fn overlaps(a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> bool {
    !a.is_disjoint(b) && !a.is_subset(b) && !b.is_subset(a)
}

/// Inserts `set` into the ordered partition `segments` so that it occupies a
/// contiguous run. `None` if no such placement exists.
fn place(segments: &mut Vec<BTreeSet<usize>>, set: &BTreeSet<usize>) -> Option<()> {
    let covered: BTreeSet<usize> = segments.iter().flatten().copied().collect();
    let fresh: BTreeSet<usize> = set.difference(&covered).copied().collect();
    let hit: Vec<usize> = (0..segments.len()).filter(|&i| !segments[i].is_disjoint(set)).collect();
    let (i, j) = (*hit.first()?, *hit.last()?);
    if hit.len() != j - i + 1 {
        return None;
    }
    let full = |s: &BTreeSet<usize>| s.is_subset(set);
    if (i + 1..j).any(|x| !full(&segments[x])) {
        return None;
    }
    let split = |s: &BTreeSet<usize>| -> (BTreeSet<usize>, BTreeSet<usize>) {
        (s.intersection(set).copied().collect(), s.difference(set).copied().collect())
    };
    let last = segments.len() - 1;
    let mut out: Vec<BTreeSet<usize>> = Vec::with_capacity(segments.len() + 3);
    if !fresh.is_empty() {
        let right_ok = j == last && (i + 1..=j).all(|x| full(&segments[x]));
        let left_ok = i == 0 && (i..j).all(|x| full(&segments[x]));
        if right_ok {
            out.extend(segments[..i].iter().cloned());
            let (inside, outside) = split(&segments[i]);
            out.push(outside);
            out.push(inside);
            out.extend(segments[i + 1..].iter().cloned());
            out.push(fresh);
        } else if left_ok {
            out.push(fresh);
            out.extend(segments[..j].iter().cloned());
            let (inside, outside) = split(&segments[j]);
            out.push(inside);
            out.push(outside);
            out.extend(segments[j + 1..].iter().cloned());
        } else {
            return None;
        }
    } else {
        if i == j {
            return None;
        }
        out.extend(segments[..i].iter().cloned());
        let (inside, outside) = split(&segments[i]);
        out.push(outside);
        out.push(inside);
        out.extend(segments[i + 1..j].iter().cloned());
        let (inside, outside) = split(&segments[j]);
        out.push(inside);
        out.push(outside);
        out.extend(segments[j + 1..].iter().cloned());
    }
    out.retain(|s| !s.is_empty());
    *segments = out;
    Some(())
}

struct Builder<'a> {
    cliques: &'a [Vec<Vertex>],
    nodes: Vec<MpqNode>,
}

impl Builder<'_> {
    fn build(&mut self, family: &[usize], assigned: &BTreeSet<Vertex>) -> Option<usize> {
        if family.len() == 1 {
            let c = family[0];
            let vertices = self.cliques[c].iter().copied().filter(|v| !assigned.contains(v)).collect();
            self.nodes.push(MpqNode::Leaf { clique: c, vertices });
            return Some(self.nodes.len() - 1);
        }
        // Clique sets of the vertices still to place.
        let mut sets: BTreeMap<Vertex, BTreeSet<usize>> = BTreeMap::new();
        for &c in family {
            for &v in self.cliques[c].iter().filter(|v| !assigned.contains(v)) {
                sets.entry(v).or_default().insert(c);
            }
        }
        let everywhere: Vec<Vertex> = sets.iter().filter(|(_, s)| s.len() == family.len()).map(|(&v, _)| v).collect();
        let partial: BTreeMap<Vertex, BTreeSet<usize>> =
            sets.into_iter().filter(|(_, s)| s.len() < family.len()).collect();

        let index: BTreeMap<usize, usize> = family.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut dsu = DisjointSets::new(family.len());
        for s in partial.values() {
            let first = index[s.iter().next().unwrap()];
            for c in s {
                dsu.union(first, index[c]);
            }
        }
        let mut components: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, &c) in family.iter().enumerate() {
            components.entry(dsu.find(i)).or_default().push(c);
        }

        let mut below = assigned.clone();
        if components.len() > 1 {
            below.extend(&everywhere);
            let mut groups: Vec<Vec<usize>> = components.into_values().collect();
            groups.sort();
            let children = groups.iter().map(|grp| self.build(grp, &below)).collect::<Option<Vec<_>>>()?;
            self.nodes.push(MpqNode::P { vertices: everywhere, children });
            return Some(self.nodes.len() - 1);
        }

        // One component: arrange the overlap component holding a maximal set.
        let distinct: Vec<BTreeSet<usize>> = partial.values().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let start = (0..distinct.len())
            .find(|&i| !distinct.iter().any(|o| o != &distinct[i] && distinct[i].is_subset(o)))?;
        let mut placed = vec![false; distinct.len()];
        placed[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut segments = vec![distinct[start].clone()];
        let mut members = vec![start];
        while let Some(a) = queue.pop_front() {
            for b in 0..distinct.len() {
                if !placed[b] && overlaps(&distinct[a], &distinct[b]) {
                    placed[b] = true;
                    place(&mut segments, &distinct[b])?;
                    members.push(b);
                    queue.push_back(b);
                }
            }
        }
        let all: BTreeSet<usize> = segments.iter().flatten().copied().collect();
        if all.len() != family.len() || segments.len() < 3 {
            return None;
        }
        // Canonical orientation: the block holding the smallest clique first.
        let first_min = *segments[0].iter().next().unwrap();
        let last_min = *segments[segments.len() - 1].iter().next().unwrap();
        if last_min < first_min {
            segments.reverse();
        }
        let block_of: BTreeMap<usize, usize> =
            segments.iter().enumerate().flat_map(|(b, s)| s.iter().map(move |&c| (c, b))).collect();

        let mut spans: Vec<(Vertex, usize, usize)> =
            everywhere.iter().map(|&v| (v, 0, segments.len() - 1)).collect();
        for (&v, s) in &partial {
            let blocks: BTreeSet<usize> = s.iter().map(|c| block_of[c]).collect();
            if blocks.len() < 2 {
                continue;
            }
            let (lo, hi) = (*blocks.iter().next().unwrap(), *blocks.iter().next_back().unwrap());
            let expected: usize = (lo..=hi).map(|b| segments[b].len()).sum();
            if s.len() != expected {
                return None;
            }
            spans.push((v, lo, hi));
        }
        spans.sort_unstable();
        below.extend(spans.iter().map(|&(v, _, _)| v));
        let children = segments
            .iter()
            .map(|s| self.build(&s.iter().copied().collect::<Vec<_>>(), &below))
            .collect::<Option<Vec<_>>>()?;
        self.nodes.push(MpqNode::Q { spans, children });
        Some(self.nodes.len() - 1)
    }
}

/// Builds the tree of a connected interval graph.
pub fn build_mpq(g: &ColoredGraph) -> Result<MpqTree> {
    let peo = perfect_elimination_order(g).ok_or_else(|| FloodError::NotInterval(interval_obstruction(g)))?;
    let mut cliques = maximal_cliques(g, &peo);
    for c in &mut cliques {
        c.sort_unstable();
    }
    cliques.sort();
    let mut builder = Builder { cliques: &cliques, nodes: Vec::new() };
    let family: Vec<usize> = (0..cliques.len()).collect();
    let root = builder
        .build(&family, &BTreeSet::new())
        .ok_or_else(|| FloodError::NotInterval(interval_obstruction(g)))?;
    let tree = MpqTree { nodes: builder.nodes, root, cliques };
    tree.check(g)?;
    Ok(tree)
}

impl MpqTree {
    pub fn children(&self, node: usize) -> &[usize] {
        match &self.nodes[node] {
            MpqNode::Leaf { .. } => &[],
            MpqNode::P { children, .. } | MpqNode::Q { children, .. } => children,
        }
    }

    /// Sections of a Q-node in order; empty for other nodes.
    pub fn sections(&self, node: usize) -> Vec<Vec<Vertex>> {
        match &self.nodes[node] {
            MpqNode::Q { spans, children } => (0..children.len())
                .map(|i| spans.iter().filter(|&&(_, lo, hi)| lo <= i && i <= hi).map(|&(v, _, _)| v).collect())
                .collect(),
            _ => Vec::new(),
        }
    }

    /// Vertices stored at the node itself.
    pub fn own_vertices(&self, node: usize) -> Vec<Vertex> {
        match &self.nodes[node] {
            MpqNode::Leaf { vertices, .. } | MpqNode::P { vertices, .. } => vertices.clone(),
            MpqNode::Q { spans, .. } => spans.iter().map(|&(v, _, _)| v).collect(),
        }
    }

    /// Every vertex stored at the node or below it.
    pub fn subtree_vertices(&self, node: usize) -> Vec<Vertex> {
        let mut out = self.own_vertices(node);
        for &c in self.children(node) {
            out.extend(self.subtree_vertices(c));
        }
        out.sort_unstable();
        out
    }

    /// Leaf cliques from left to right.
    pub fn frontier(&self) -> Vec<usize> {
        fn walk(t: &MpqTree, node: usize, out: &mut Vec<usize>) {
            if let MpqNode::Leaf { clique, .. } = t.nodes[node] {
                out.push(clique);
            }
            for &c in t.children(node) {
                walk(t, c, out);
            }
        }
        let mut out = Vec::new();
        walk(self, self.root, &mut out);
        out
    }

    /// Depth of the node each vertex is stored at (root is 0).
    pub fn home_depths(&self, n: usize) -> Vec<usize> {
        let mut depth = vec![0; n];
        let mut stack = vec![(self.root, 0)];
        while let Some((node, d)) = stack.pop() {
            for v in self.own_vertices(node) {
                depth[v] = d;
            }
            stack.extend(self.children(node).iter().map(|&c| (c, d + 1)));
        }
        depth
    }

    /// An interval representation with clique `j` of the frontier at point `j`.
    pub fn realize(&self, g: &ColoredGraph) -> IntervalRepresentation {
        let mut intervals = vec![(usize::MAX, 0); g.n()];
        for (p, &c) in self.frontier().iter().enumerate() {
            for &v in &self.cliques[c] {
                let iv = &mut intervals[v];
                iv.0 = iv.0.min(p);
                iv.1 = iv.1.max(p);
            }
        }
        IntervalRepresentation { intervals, colors: g.colors().to_vec(), k: g.k() }
    }

    /// Structural checks: leaves match the maximal cliques, each clique is the
    /// union of the sets on its root path, each vertex has one home, Q-nodes
    /// have at least three children and each vertex is stored once.
    pub fn check(&self, g: &ColoredGraph) -> Result<()> {
        let fail = |m: String| Err(FloodError::Internal(format!("MPQ tree: {m}")));
        let mut leaves = vec![0usize; self.cliques.len()];
        let mut homes = vec![0usize; g.n()];
        let mut stack: Vec<(usize, BTreeSet<Vertex>)> = vec![(self.root, BTreeSet::new())];
        while let Some((node, above)) = stack.pop() {
            match &self.nodes[node] {
                MpqNode::Leaf { clique, vertices } => {
                    leaves[*clique] += 1;
                    let mut all = above.clone();
                    all.extend(vertices);
                    if all.iter().copied().collect::<Vec<_>>() != self.cliques[*clique] {
                        return fail(format!("clique {clique} is not its root path"));
                    }
                    for &v in vertices {
                        homes[v] += 1;
                    }
                }
                MpqNode::P { vertices, children } => {
                    for &v in vertices {
                        homes[v] += 1;
                    }
                    for &c in children {
                        let mut a = above.clone();
                        a.extend(vertices);
                        stack.push((c, a));
                    }
                }
                MpqNode::Q { spans, children } => {
                    if children.len() < 3 {
                        return fail(format!("Q-node with {} children", children.len()));
                    }
                    for &(v, lo, hi) in spans {
                        homes[v] += 1;
                        if lo >= hi || hi >= children.len() {
                            return fail(format!("vertex {v} spans sections {lo}..={hi}"));
                        }
                    }
                    for (i, sec) in self.sections(node).into_iter().enumerate() {
                        let mut a = above.clone();
                        a.extend(sec);
                        stack.push((children[i], a));
                    }
                }
            }
        }
        if let Some(c) = leaves.iter().position(|&x| x != 1) {
            return fail(format!("clique {c} appears in {} leaves", leaves[c]));
        }
        if let Some(v) = homes.iter().position(|&x| x != 1) {
            return fail(format!("vertex {v} stored {} times", homes[v]));
        }
        Ok(())
    }

    /// Indented text dump: one line per node with its kind and vertex sets.
    pub fn to_text(&self) -> String {
        fn walk(t: &MpqTree, node: usize, depth: usize, out: &mut String) {
            let pad = "  ".repeat(depth);
            match &t.nodes[node] {
                MpqNode::Leaf { clique, vertices } => {
                    let _ = writeln!(out, "{pad}leaf clique={clique} {vertices:?}");
                }
                MpqNode::P { vertices, .. } => {
                    let _ = writeln!(out, "{pad}P {vertices:?}");
                }
                MpqNode::Q { .. } => {
                    let _ = writeln!(out, "{pad}Q sections={:?}", t.sections(node));
                }
            }
            for &c in t.children(node) {
                walk(t, c, depth + 1, out);
            }
        }
        let mut out = String::new();
        walk(self, self.root, 0, &mut out);
        out
    }
}

/// The game seen from the root node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootProjection {
    /// The root is a leaf or P-node: its vertices are universal.
    Universal { distinct: usize, vertices: Vec<Vertex> },
    /// The root is a Q-node.
    Path(ColorSetPath),
}

/// Projects the graph onto the root node.
///
/// For a Q-node with sections `S_1..S_m` the path alternates section
/// positions, holding the colors of `S_i` and of every vertex below section
/// `i`, with boundary positions holding the colors of `S_i ∩ S_{i+1}`.
pub fn root_projection(t: &MpqTree, g: &ColoredGraph) -> Result<RootProjection> {
    let root_vertices = t.own_vertices(t.root);
    if root_vertices.is_empty() {
        return Err(FloodError::Disconnected);
    }
    let MpqNode::Q { children, .. } = &t.nodes[t.root] else {
        return Ok(RootProjection::Universal { distinct: g.distinct_colors(), vertices: root_vertices });
    };
    let sections = t.sections(t.root);
    let colors = |vs: &[Vertex]| vs.iter().map(|&v| g.color(v)).collect::<ColorSet>();
    let mut sets = Vec::new();
    let mut provenance = Vec::new();
    for (i, sec) in sections.iter().enumerate() {
        if i > 0 {
            let shared: Vec<Vertex> = sec.iter().copied().filter(|v| sections[i - 1].contains(v)).collect();
            sets.push(colors(&shared));
            provenance.push(Provenance::Boundary { index: i - 1, vertices: shared });
        }
        let nested = t.subtree_vertices(children[i]);
        sets.push(colors(sec).union(colors(&nested)));
        provenance.push(Provenance::Section { index: i, vertices: sec.clone(), nested });
    }
    Ok(RootProjection::Path(ColorSetPath { sets, provenance }))
}

/// Interval engine: tree, root projection, table, witness.
pub fn solve_interval(g: &ColoredGraph) -> Result<Solution> {
    let tree = build_mpq(g)?;
    match root_projection(&tree, g)? {
        RootProjection::Universal { vertices, .. } => {
            let u = vertices[0];
            let mut present: Vec<Color> = g.colors().iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
            present.retain(|&c| c != g.color(u));
            let witness: Vec<Move> = present.into_iter().map(|c| Move::new(u, c)).collect();
            Ok(Solution { opt: witness.len(), witness })
        }
        RootProjection::Path(path) => {
            let sol = dp_solve_with(&path, g.k(), Some(bounds(g).upper), TableKind::Auto)?;
            let depth = tree.home_depths(g.n());
            // leftovers are absorbed shallowest first
            let mut deepest: BTreeMap<Color, usize> = BTreeMap::new();
            for v in g.vertices() {
                let d = deepest.entry(g.color(v)).or_default();
                *d = (*d).max(depth[v]);
            }
            let rank = |c: Color| deepest.get(&c).copied().unwrap_or(0);
            let witness = reconstruct_witness_with(g, &sol, &path, &rank)?;
            Ok(Solution { opt: sol.opt, witness })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)], colors: Vec<Color>) -> ColoredGraph {
        let k = *colors.iter().max().unwrap();
        ColoredGraph::new(n, edges, colors, k).unwrap()
    }

    #[test]
    fn complete_graph_is_one_leaf() {
        let g = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], vec![1, 2, 3, 1]);
        let t = build_mpq(&g).unwrap();
        assert_eq!(t.nodes.len(), 1);
        assert!(matches!(root_projection(&t, &g).unwrap(), RootProjection::Universal { distinct: 3, .. }));
        assert_eq!(solve_interval(&g).unwrap().opt, 2);
    }

    #[test]
    fn four_cycle_is_rejected() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], vec![1; 4]);
        assert!(matches!(build_mpq(&g), Err(FloodError::NotInterval(ForbiddenStructure::ChordlessCycle(_)))));
    }

    #[test]
    fn path_is_a_q_node_with_boundaries() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)], vec![1, 2, 1, 2]);
        let t = build_mpq(&g).unwrap();
        assert_eq!(t.sections(t.root), vec![vec![1], vec![1, 2], vec![2]]);
        let RootProjection::Path(p) = root_projection(&t, &g).unwrap() else { panic!() };
        let sets: Vec<Vec<Color>> = p.sets.iter().map(|s| s.iter().collect()).collect();
        assert_eq!(sets, vec![vec![1, 2], vec![2], vec![1, 2], vec![1], vec![1, 2]]);
        assert_eq!(solve_interval(&g).unwrap().opt, 2);
    }

    #[test]
    fn nested_colors_land_in_their_section() {
        // intervals [0,10] [1,2] [4,5] [9,12] [11,14]
        let rep = IntervalRepresentation {
            intervals: vec![(0, 10), (1, 2), (4, 5), (9, 12), (11, 14)],
            colors: vec![1, 2, 3, 1, 2],
            k: 3,
        };
        let g = rep.to_graph().unwrap();
        let t = build_mpq(&g).unwrap();
        assert!(matches!(t.nodes[t.root], MpqNode::Q { .. }));
        let RootProjection::Path(p) = root_projection(&t, &g).unwrap() else { panic!() };
        let sets: Vec<Vec<Color>> = p.sets.iter().map(|s| s.iter().collect()).collect();
        assert_eq!(sets, vec![vec![1, 2, 3], vec![1], vec![1], vec![1], vec![1, 2]]);
        let exact = crate::oracle::solve_exact(&g, crate::game::Variant::Free, Default::default()).unwrap();
        assert_eq!(solve_interval(&g).unwrap().opt, exact.opt);
    }

    #[test]
    fn realized_representation_reproduces_the_graph() {
        let g = graph(6, &[(0, 1), (1, 2), (2, 3), (1, 3), (3, 4), (3, 5)], vec![1, 2, 1, 2, 3, 1]);
        let t = build_mpq(&g).unwrap();
        let rep = t.realize(&g);
        assert_eq!(rep.edges(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn asteroidal_triple_is_reported() {
        // subdivided claw: chordal but not interval
        let g = graph(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)], vec![1; 7]);
        assert!(matches!(build_mpq(&g), Err(FloodError::NotInterval(ForbiddenStructure::AsteroidalTriple(_)))));
    }
}
