//! Seeded random instances of each supported graph class.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{FloodError, Result};
use crate::graph::{Color, ColoredGraph, Vertex};
use crate::instances::InstanceDocument;
use crate::interval::IntervalRepresentation;

pub const PRNG: &str = "ChaCha8 (rand_chacha 0.3, seed_from_u64)";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphKind {
    ProperInterval,
    Interval,
    Caterpillar,
    Split,
    Path,
}

impl GraphKind {
    pub const ALL: [GraphKind; 5] =
        [GraphKind::ProperInterval, GraphKind::Interval, GraphKind::Caterpillar, GraphKind::Split, GraphKind::Path];

    pub fn name(self) -> &'static str {
        match self {
            GraphKind::ProperInterval => "proper_interval",
            GraphKind::Interval => "interval",
            GraphKind::Caterpillar => "caterpillar",
            GraphKind::Split => "split",
            GraphKind::Path => "path",
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphKind {
    type Err = FloodError;

    fn from_str(s: &str) -> Result<Self> {
        GraphKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| FloodError::InvalidInput(format!("unknown graph kind {s:?}")))
    }
}

/// Uniform colors over `1..=k`, every color used at least once.
fn random_colors(rng: &mut ChaCha8Rng, n: usize, k: Color) -> Vec<Color> {
    let mut colors: Vec<Color> = (1..=k).chain((k as usize..n).map(|_| rng.gen_range(1..=k))).collect();
    colors.shuffle(rng);
    colors
}

/// A connected instance of `kind` with `n` vertices and exactly `k` colors.
///
/// Deterministic in `(kind, n, k, seed)`. Interval kinds carry their
/// representation.
pub fn gen_random(kind: GraphKind, n: usize, k: Color, seed: u64) -> Result<InstanceDocument> {
    if n == 0 || k == 0 {
        return Err(FloodError::InvalidInput("n and k must be at least 1".into()));
    }
    if k as usize > n {
        return Err(FloodError::InvalidInput(format!("cannot use all {k} colors on {n} vertices")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let doc = match kind {
        GraphKind::ProperInterval | GraphKind::Interval => {
            let intervals = if kind == GraphKind::ProperInterval { unit_intervals(&mut rng, n) } else { intervals(&mut rng, n) };
            let colors = random_colors(&mut rng, n, k);
            InstanceDocument::from_representation(&IntervalRepresentation { intervals, colors, k })?
        }
        GraphKind::Caterpillar | GraphKind::Split | GraphKind::Path => {
            let edges = match kind {
                GraphKind::Caterpillar => caterpillar(&mut rng, n),
                GraphKind::Split => split(&mut rng, n),
                _ => (1..n).map(|i| (i - 1, i)).collect(),
            };
            let colors = random_colors(&mut rng, n, k);
            InstanceDocument::from_graph(&ColoredGraph::new(n, &edges, colors, k)?)
        }
    };
    Ok(doc.with_meta("generator", kind.name()).with_meta("prng", PRNG).with_meta("seed", seed))
}

/// Equal-length intervals with left endpoints advancing by less than the
/// length, so consecutive intervals always meet.
fn unit_intervals(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, usize)> {
    const LENGTH: usize = 4;
    let mut left = 0;
    (0..n)
        .map(|i| {
            if i > 0 {
                left += rng.gen_range(0..LENGTH);
            }
            (left, left + LENGTH)
        })
        .collect()
}

/// Each new interval starts inside the union of the previous ones.
fn intervals(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, usize)> {
    let mut out = vec![(0, rng.gen_range(0..=n))];
    let mut reach = out[0].1;
    for _ in 1..n {
        let l = rng.gen_range(0..=reach);
        let r = l + rng.gen_range(0..=n);
        reach = reach.max(r);
        out.push((l, r));
    }
    out
}

/// A backbone path with every other vertex hung on a random backbone vertex.
fn caterpillar(rng: &mut ChaCha8Rng, n: usize) -> Vec<(Vertex, Vertex)> {
    let spine = rng.gen_range(n.div_ceil(2)..=n);
    let mut edges: Vec<(Vertex, Vertex)> = (1..spine).map(|i| (i - 1, i)).collect();
    edges.extend((spine..n).map(|h| (rng.gen_range(0..spine), h)));
    edges
}

/// A random clique with each remaining vertex joined to a nonempty random
/// subset of it.
fn split(rng: &mut ChaCha8Rng, n: usize) -> Vec<(Vertex, Vertex)> {
    let mut ids: Vec<Vertex> = (0..n).collect();
    ids.shuffle(rng);
    let size = rng.gen_range(1..=n);
    let (clique, rest) = ids.split_at(size);
    let mut edges = Vec::new();
    for (i, &u) in clique.iter().enumerate() {
        edges.extend(clique[i + 1..].iter().map(|&v| (u.min(v), u.max(v))));
    }
    for &x in rest {
        let anchor = clique[rng.gen_range(0..clique.len())];
        for &y in clique {
            if y == anchor || rng.gen_bool(0.5) {
                edges.push((x.min(y), x.max(y)));
            }
        }
    }
    edges.sort_unstable();
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::emit;
    use crate::interval::lexbfs::proper_interval_ordering;
    use crate::split::recognize_split;

    #[test]
    fn deterministic() {
        let a = emit(&gen_random(GraphKind::Path, 5, 2, 1).unwrap());
        let b = emit(&gen_random(GraphKind::Path, 5, 2, 1).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn outputs_are_in_class() {
        for seed in 0..40 {
            for kind in GraphKind::ALL {
                let doc = gen_random(kind, 9, 4, seed).unwrap();
                doc.validate().unwrap();
                let g = doc.graph().unwrap();
                assert_eq!(g.distinct_colors(), 4);
                match kind {
                    GraphKind::ProperInterval => assert!(proper_interval_ordering(&g).is_some()),
                    GraphKind::Interval => assert!(crate::mpq::build_mpq(&g).is_ok()),
                    GraphKind::Caterpillar => assert_eq!(g.edge_count(), 8),
                    GraphKind::Split => assert!(recognize_split(&g).is_ok()),
                    GraphKind::Path => assert_eq!(g.edge_count(), 8),
                }
            }
        }
    }

    #[test]
    fn too_many_colors_is_rejected() {
        assert!(gen_random(GraphKind::Path, 3, 4, 0).is_err());
    }
}
