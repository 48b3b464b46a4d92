//! Interval representations, proper interval recognition and the color-set
//! path sampled from a representation.

pub mod chordal;
pub mod forbidden;
pub mod lexbfs;

use serde::{Deserialize, Serialize};

use crate::colorset::{ColorSet, ColorSetPath, Provenance, MAX_COLOR};
use crate::error::{FloodError, ForbiddenStructure, Result};
use crate::graph::{Color, ColoredGraph, Vertex};

/// Integer-endpoint intervals, one per vertex, with vertex colors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalRepresentation {
    pub intervals: Vec<(usize, usize)>,
    pub colors: Vec<Color>,
    pub k: Color,
}

impl IntervalRepresentation {
    pub fn n(&self) -> usize {
        self.intervals.len()
    }

    /// Largest right endpoint.
    pub fn span(&self) -> usize {
        self.intervals.iter().map(|&(_, r)| r).max().unwrap_or(0)
    }

    /// Vertices whose interval contains the point `twice_point / 2`.
    pub fn sample(&self, twice_point: usize) -> Vec<Vertex> {
        (0..self.n())
            .filter(|&v| {
                let (l, r) = self.intervals[v];
                2 * l <= twice_point && twice_point <= 2 * r
            })
            .collect()
    }

    pub fn intersects(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = self.intervals[u];
        let (c, d) = self.intervals[v];
        a <= d && c <= b
    }

    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let n = self.n();
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.intersects(u, v))
            .collect()
    }

    /// The intersection graph with the representation's coloring.
    pub fn to_graph(&self) -> Result<ColoredGraph> {
        ColoredGraph::new(self.n(), &self.edges(), self.colors.clone(), self.k)
    }

    /// No interval strictly contains another (identical intervals allowed).
    pub fn is_proper(&self) -> bool {
        let n = self.n();
        (0..n).all(|u| {
            (0..n).all(|v| {
                let (a, b) = self.intervals[u];
                let (c, d) = self.intervals[v];
                !(a <= c && d <= b && (a, b) != (c, d))
            })
        })
    }

    /// Checks endpoints, connectivity and the compactness conditions: the
    /// representation starts at 0, every sampled point is covered, consecutive
    /// integer points see different interval sets, and `P ≤ 2n − 1`.
    pub fn validate(&self) -> Result<()> {
        if self.intervals.is_empty() {
            return Err(FloodError::InvalidInput("no intervals".into()));
        }
        if self.colors.len() != self.n() {
            return Err(FloodError::InvalidInput("one color per interval required".into()));
        }
        if let Some((v, _)) = self.intervals.iter().enumerate().find(|(_, &(l, r))| l > r) {
            return Err(FloodError::InvalidInput(format!("interval {v} has L > R")));
        }
        let min_l = self.intervals.iter().map(|&(l, _)| l).min().unwrap();
        if min_l != 0 {
            return Err(FloodError::Compactness(format!("leftmost endpoint is {min_l}, not 0")));
        }
        let span = self.span();
        if span + 1 > 2 * self.n() {
            return Err(FloodError::Compactness(format!("span {span} exceeds 2n - 1")));
        }
        let mut prev: Option<Vec<Vertex>> = None;
        for t in 0..=2 * span {
            let here = self.sample(t);
            if here.is_empty() {
                return Err(FloodError::Compactness(format!("no interval covers {}", t as f64 / 2.0)));
            }
            if t % 2 == 0 {
                if prev.as_ref() == Some(&here) {
                    return Err(FloodError::Compactness(format!(
                        "points {} and {} are covered by the same intervals",
                        t / 2 - 1,
                        t / 2
                    )));
                }
                prev = Some(here);
            }
        }
        self.to_graph().map(|_| ())
    }
}

/// Compact proper interval representation of `g`, unique up to reversal and
/// the order of twins.
///
/// Fails with a claw, chordless cycle or asteroidal triple when `g` is not a
/// proper interval graph.
pub fn build_representation(g: &ColoredGraph) -> Result<IntervalRepresentation> {
    let order = lexbfs::proper_interval_ordering(g).ok_or_else(|| FloodError::NotProperInterval(obstruction(g)))?;
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // reach[i]: position of the furthest neighbour to the right of order[i].
    let reach: Vec<usize> = order
        .iter()
        .map(|&v| g.neighbors(v).iter().map(|&w| pos[w]).fold(pos[v], usize::max))
        .collect();

    // Endpoint events: left endpoints in order, each right endpoint of i placed
    // after the left endpoint of reach[i].
    #[derive(Clone, Copy, PartialEq)]
    enum Event {
        Left(usize),
        Right(usize),
    }
    let mut events = Vec::with_capacity(2 * n);
    let mut next_right = 0;
    for j in 0..n {
        events.push(Event::Left(j));
        while next_right < n && reach[next_right] == j {
            events.push(Event::Right(next_right));
            next_right += 1;
        }
    }
    debug_assert_eq!(next_right, n, "reach is nondecreasing along an umbrella ordering");

    // A right endpoint directly after a left endpoint shares its point;
    // every other event opens a new point.
    let mut intervals = vec![(0, 0); n];
    let mut point = 0;
    let mut last: Option<Event> = None;
    for e in events {
        let shares = matches!((last, e), (Some(Event::Left(_)), Event::Right(_)));
        if last.is_some() && !shares {
            point += 1;
        }
        match e {
            Event::Left(i) => intervals[order[i]].0 = point,
            Event::Right(i) => intervals[order[i]].1 = point,
        }
        last = Some(e);
    }
    Ok(IntervalRepresentation { intervals, colors: g.colors().to_vec(), k: g.k() })
}

/// A certificate that `g` is not a proper interval graph.
pub fn obstruction(g: &ColoredGraph) -> ForbiddenStructure {
    if let Some(c) = chordal::find_chordless_cycle(g) {
        return ForbiddenStructure::ChordlessCycle(c);
    }
    if let Some((center, leaves)) = forbidden::find_claw(g) {
        return ForbiddenStructure::Claw { center, leaves };
    }
    if let Some(t) = forbidden::find_asteroidal_triple(g) {
        return ForbiddenStructure::AsteroidalTriple(t);
    }
    unreachable!("chordal, claw-free and AT-free graphs are proper interval graphs")
}

/// Samples `rep` at every integer and half-integer point.
///
/// Position `2p` holds the colors of the intervals containing `p`, position
/// `2p + 1` those containing `p + 0.5`.
pub fn build_colorset_path(rep: &IntervalRepresentation) -> Result<ColorSetPath> {
    if rep.k > MAX_COLOR {
        return Err(FloodError::Capacity { what: "color-set path colors", needed: rep.k as usize, max: MAX_COLOR as usize });
    }
    let span = rep.span();
    let mut sets = Vec::with_capacity(2 * span + 1);
    let mut provenance = Vec::with_capacity(2 * span + 1);
    for t in 0..=2 * span {
        let vertices = rep.sample(t);
        if vertices.is_empty() {
            return Err(FloodError::Compactness(format!("no interval covers {}", t as f64 / 2.0)));
        }
        sets.push(vertices.iter().map(|&v| rep.colors[v]).collect::<ColorSet>());
        provenance.push(Provenance::Point { twice_point: t, vertices });
    }
    Ok(ColorSetPath { sets, provenance })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)], colors: Vec<Color>) -> ColoredGraph {
        let k = *colors.iter().max().unwrap();
        ColoredGraph::new(n, edges, colors, k).unwrap()
    }

    #[test]
    fn single_edge_layout() {
        let g = graph(2, &[(0, 1)], vec![1, 2]);
        let rep = build_representation(&g).unwrap();
        assert!(rep.intervals == vec![(0, 1), (1, 2)] || rep.intervals == vec![(1, 2), (0, 1)]);
        rep.validate().unwrap();
        let path = build_colorset_path(&rep).unwrap();
        let sets: Vec<Vec<Color>> = path.sets.iter().map(|s| s.iter().collect()).collect();
        let expected = vec![vec![1], vec![1], vec![1, 2], vec![2], vec![2]];
        let mut reversed = expected.clone();
        reversed.reverse();
        assert!(sets == expected || sets == reversed, "{sets:?}");
    }

    #[test]
    fn claw_is_rejected_with_a_witness() {
        let g = graph(4, &[(0, 1), (0, 2), (0, 3)], vec![1, 1, 1, 1]);
        match build_representation(&g) {
            Err(FloodError::NotProperInterval(ForbiddenStructure::Claw { center: 0, .. })) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cycle_is_rejected_with_a_cycle() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)], vec![1; 5]);
        assert!(matches!(
            build_representation(&g),
            Err(FloodError::NotProperInterval(ForbiddenStructure::ChordlessCycle(c))) if c.len() == 5
        ));
    }

    #[test]
    fn three_path_reproduces_adjacency() {
        let g = graph(3, &[(0, 1), (1, 2)], vec![1, 2, 1]);
        let rep = build_representation(&g).unwrap();
        rep.validate().unwrap();
        assert_eq!(rep.edges(), vec![(0, 1), (1, 2)]);
        let path = build_colorset_path(&rep).unwrap();
        assert_eq!(path.len(), 2 * rep.span() + 1);
        for (i, w) in path.sets.windows(2).enumerate() {
            // half-integer samples sit inside both neighbours
            let (a, b) = (w[0], w[1]);
            if i % 2 == 0 {
                assert!(b.is_subset(a));
            } else {
                assert!(a.is_subset(b));
            }
        }
    }

    #[test]
    fn monochrome_path_is_constant() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 2)], vec![3; 4]);
        let path = build_colorset_path(&build_representation(&g).unwrap()).unwrap();
        assert!(path.sets.iter().all(|&s| s == ColorSet::single(3)));
    }

    #[test]
    fn twins_and_triangles_stay_compact() {
        let g = graph(3, &[(0, 1), (1, 2), (0, 2)], vec![1, 2, 3]);
        let rep = build_representation(&g).unwrap();
        rep.validate().unwrap();
        assert_eq!(rep.edges().len(), 3);
        assert!(rep.is_proper());
    }

    #[test]
    fn validate_rejects_gaps_and_repeats() {
        let gap = IntervalRepresentation { intervals: vec![(0, 1), (2, 3)], colors: vec![1, 1], k: 1 };
        assert!(matches!(gap.validate(), Err(FloodError::Compactness(_))));
        let repeat = IntervalRepresentation { intervals: vec![(0, 2), (0, 2)], colors: vec![1, 1], k: 1 };
        assert!(matches!(repeat.validate(), Err(FloodError::Compactness(_))));
    }
}
