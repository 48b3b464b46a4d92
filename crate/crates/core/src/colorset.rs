//! Color subsets as bit masks and the color-set path built from them.

use std::fmt;

use crate::graph::{Color, Vertex};

/// Largest color id a [`ColorSet`] can hold.
pub const MAX_COLOR: Color = 64;

/// A subset of `{1..=64}`; color `c` is bit `c - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColorSet(pub u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn single(c: Color) -> Self {
        debug_assert!((1..=MAX_COLOR).contains(&c));
        ColorSet(1 << (c - 1))
    }

    pub fn full(k: Color) -> Self {
        if k >= 64 {
            ColorSet(u64::MAX)
        } else {
            ColorSet((1u64 << k) - 1)
        }
    }

    pub fn contains(self, c: Color) -> bool {
        self.0 >> (c - 1) & 1 == 1
    }

    pub fn insert(&mut self, c: Color) {
        self.0 |= 1 << (c - 1);
    }

    pub fn with(self, c: Color) -> Self {
        ColorSet(self.0 | 1 << (c - 1))
    }

    pub fn without(self, c: Color) -> Self {
        ColorSet(self.0 & !(1 << (c - 1)))
    }

    pub fn union(self, other: ColorSet) -> Self {
        ColorSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ColorSet) -> Self {
        ColorSet(self.0 & other.0)
    }

    pub fn minus(self, other: ColorSet) -> Self {
        ColorSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = Color> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let c = bits.trailing_zeros() + 1;
            bits &= bits - 1;
            Some(c)
        })
    }

    /// All subsets of `self`, starting from `self` itself and ending with the
    /// empty set.
    pub fn subsets(self) -> impl Iterator<Item = ColorSet> {
        let full = self.0;
        let mut cur = Some(full);
        std::iter::from_fn(move || {
            let s = cur?;
            cur = if s == 0 { None } else { Some((s - 1) & full) };
            Some(ColorSet(s))
        })
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut s = ColorSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Where a path position came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// Sample of an interval representation at `twice_point / 2`; `vertices`
    /// are the intervals containing that point.
    Point { twice_point: usize, vertices: Vec<Vertex> },
    /// Section `index` of an MPQ root Q-node: the root vertices of that
    /// section and the vertices of the subtree hanging below it.
    Section { index: usize, vertices: Vec<Vertex>, nested: Vec<Vertex> },
    /// Boundary between sections `index` and `index + 1`: the root vertices
    /// that belong to both.
    Boundary { index: usize, vertices: Vec<Vertex> },
}

impl Provenance {
    /// Vertices a move at this position may be played on.
    pub fn playable(&self) -> &[Vertex] {
        match self {
            Provenance::Point { vertices, .. }
            | Provenance::Section { vertices, .. }
            | Provenance::Boundary { vertices, .. } => vertices,
        }
    }

    /// Vertices that only contribute their color here.
    pub fn nested(&self) -> &[Vertex] {
        match self {
            Provenance::Section { nested, .. } => nested,
            _ => &[],
        }
    }
}

/// The sequence of color sets the interval dynamic program runs on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorSetPath {
    pub sets: Vec<ColorSet>,
    pub provenance: Vec<Provenance>,
}

impl ColorSetPath {
    /// A path without back-references, for tests and synthetic inputs.
    pub fn from_sets(sets: Vec<ColorSet>) -> Self {
        let provenance = (0..sets.len())
            .map(|i| Provenance::Point { twice_point: i, vertices: Vec::new() })
            .collect();
        ColorSetPath { sets, provenance }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn colors(&self) -> ColorSet {
        self.sets.iter().fold(ColorSet::EMPTY, |a, &s| a.union(s))
    }

    pub fn reversed(&self) -> Self {
        ColorSetPath {
            sets: self.sets.iter().rev().copied().collect(),
            provenance: self.provenance.iter().rev().cloned().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerate_every_submask_once() {
        let s: ColorSet = [1, 3, 4].into_iter().collect();
        let all: Vec<_> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], s);
        assert_eq!(*all.last().unwrap(), ColorSet::EMPTY);
        assert!(all.iter().all(|t| t.is_subset(s)));
    }

    #[test]
    fn set_algebra() {
        let a: ColorSet = [1, 2].into_iter().collect();
        let b = ColorSet::single(2).with(5);
        assert_eq!(a.union(b).iter().collect::<Vec<_>>(), vec![1, 2, 5]);
        assert_eq!(a.intersection(b), ColorSet::single(2));
        assert_eq!(a.minus(b), ColorSet::single(1));
        assert_eq!(ColorSet::full(64).len(), 64);
        assert!(ColorSet::full(64).contains(64));
        assert_eq!(format!("{:?}", b), "{2, 5}");
    }
}
