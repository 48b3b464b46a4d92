//! Pareto-frontier table for palettes too large to enumerate every subset.
//!
//! `f(ℓ, r, c, ·)` is nonincreasing in `S`, so it is stored as the minimal
//! pairs `(T, v)` with `f(ℓ, r, c, S) = min { v : T ⊆ S }`.
//!
//! Entries are pruned by the potential
//! `v + |T| + max(0, |O ∖ (T ∪ {c})| − 1)`, where `O` is the set of colors
//! occurring outside `ℓ..=r`. Every color of `O` that is neither kept nor
//! dominating must cost a move elsewhere, except possibly the final color.
//! The potential never decreases from a cell to a cell built from it (each
//! color a range eliminates costs it at least one move), equals the total
//! cost at the root, and is not increased by Pareto dominance. So with a
//! bound at least the optimum, every entry of an optimal derivation survives.

use rayon::prelude::*;

use super::{base_cost, INF};
use crate::colorset::ColorSet;
use crate::error::{FloodError, Result};
use crate::graph::Color;

/// Total frontier entries allowed before giving up.
const MAX_ENTRIES: usize = 50_000_000;

type Frontier = Vec<(u64, u16)>;

#[derive(Debug, Clone, Default)]
struct Cell {
    /// Indexed by local color minus one.
    f: Vec<Frontier>,
    other: Vec<Frontier>,
}

#[derive(Debug, Clone)]
pub(crate) struct SparseTable {
    q: usize,
    k: usize,
    bound: u16,
    cells: Vec<Cell>,
    /// `prefix[i]`: colors at positions `< i`; `suffix[i]`: at positions `≥ i`.
    prefix: Vec<u64>,
    suffix: Vec<u64>,
}

fn lookup(frontier: &Frontier, s: u64) -> u16 {
    frontier.iter().filter(|&&(t, _)| t & !s == 0).map(|&(_, v)| v).min().unwrap_or(INF)
}

fn potential(t: u64, v: u16) -> u16 {
    v + t.count_ones() as u16
}

/// Potential of entry `(t, v)` for dominating color bit `cbit` in a cell
/// whose outside colors are `out`.
fn outside_potential(t: u64, v: u16, cbit: u64, out: u64) -> u16 {
    let missing = (out & !(t | cbit)).count_ones() as u16;
    potential(t, v) + missing.saturating_sub(1)
}

/// Keeps the pairs not dominated by another pair with a subset mask and no
/// larger value.
fn pareto(mut entries: Frontier) -> Frontier {
    entries.sort_unstable_by_key(|&(t, v)| (v, t.count_ones(), t));
    entries.dedup_by_key(|e| e.0);
    let mut kept: Frontier = Vec::with_capacity(entries.len());
    for (t, v) in entries {
        if !kept.iter().any(|&(u, _)| u & !t == 0) {
            kept.push((t, v));
        }
    }
    kept
}

impl SparseTable {
    fn index(&self, l: usize, r: usize) -> usize {
        let start = l * self.q - l * l.saturating_sub(1) / 2;
        start + r - l
    }

    pub(crate) fn fill(sets: &[ColorSet], k: usize, upper: Option<usize>) -> Result<Self> {
        let trivial = sets.iter().map(|s| s.len()).sum::<usize>();
        let lower = sets.iter().fold(ColorSet::EMPTY, |a, &s| a.union(s)).len().saturating_sub(1);
        let cap = upper.unwrap_or(trivial).min(trivial).min(INF as usize - 1);
        // Widen the bound until the optimum fits under it.
        let mut bound = lower.min(cap);
        loop {
            let t = Self::fill_with(sets, k, bound as u16)?;
            let (opt, _, _) = t.optimum(sets.len());
            if (opt as usize) <= bound {
                return Ok(t);
            }
            if bound >= cap {
                return Err(FloodError::InvalidInput("bound below the optimum".into()));
            }
            bound = (bound + 1 + bound / 8).min(cap);
        }
    }

    fn fill_with(sets: &[ColorSet], k: usize, bound: u16) -> Result<Self> {
        let q = sets.len();
        let mut prefix = vec![0u64; q + 1];
        let mut suffix = vec![0u64; q + 1];
        for i in 0..q {
            prefix[i + 1] = prefix[i] | sets[i].0;
            suffix[q - 1 - i] = suffix[q - i] | sets[q - 1 - i].0;
        }
        let cells = vec![Cell::default(); q * (q + 1) / 2];
        let mut t = SparseTable { q, k, bound, cells, prefix, suffix };
        let mut total = 0usize;
        for d in 0..q {
            let computed: Vec<Cell> = (0..q - d)
                .into_par_iter()
                .map(|l| if d == 0 { t.base(l, sets[l]) } else { t.combine(l, l + d) })
                .collect();
            for (l, cell) in computed.into_iter().enumerate() {
                total += cell.f.iter().chain(&cell.other).map(Vec::len).sum::<usize>();
                let i = t.index(l, l + d);
                t.cells[i] = cell;
            }
            if total > MAX_ENTRIES {
                return Err(FloodError::Capacity { what: "dynamic program frontier entries", needed: total, max: MAX_ENTRIES });
            }
        }
        Ok(t)
    }

    fn finish(&self, f: Vec<Frontier>) -> Cell {
        let k = self.k;
        let other = (0..k)
            .map(|c| {
                let bit = 1u64 << c;
                let entries = (0..k)
                    .filter(|&x| x != c)
                    .flat_map(|x| f[x].iter().map(move |&(t, v)| (t & !bit, v)))
                    .filter(|&(t, v)| potential(t, v) <= self.bound)
                    .collect();
                pareto(entries)
            })
            .collect();
        Cell { f, other }
    }

    fn outside(&self, l: usize, r: usize) -> u64 {
        self.prefix[l] | self.suffix[r + 1]
    }

    fn base(&self, l: usize, set: ColorSet) -> Cell {
        let out = self.outside(l, l);
        let f = (0..self.k)
            .map(|c| {
                let color = c as Color + 1;
                let entries = set
                    .without(color)
                    .subsets()
                    .map(|t| (t.0, base_cost(set, color, t)))
                    .filter(|&(t, v)| outside_potential(t, v, 1 << c, out) <= self.bound)
                    .collect();
                pareto(entries)
            })
            .collect();
        self.finish(f)
    }

    fn combine(&self, l: usize, r: usize) -> Cell {
        let k = self.k;
        let bound = self.bound;
        let out = self.outside(l, r);
        let f = (0..k)
            .map(|c| {
                let bit = 1u64 << c;
                let mut entries: Frontier = Vec::new();
                let mut product = |a: &Frontier, b: &Frontier, extra: u16| {
                    for &(ta, va) in a {
                        for &(tb, vb) in b {
                            let t = (ta | tb) & !bit;
                            let v = va + vb + extra;
                            if outside_potential(t, v, bit, out) <= bound {
                                entries.push((t, v));
                            }
                        }
                    }
                };
                for i in l + 1..=r {
                    let left = &self.cells[self.index(l, i - 1)];
                    let right = &self.cells[self.index(i, r)];
                    product(&left.f[c], &right.f[c], 0);
                    product(&left.f[c], &right.other[c], 1);
                    product(&left.other[c], &right.f[c], 1);
                }
                pareto(entries)
            })
            .collect();
        self.finish(f)
    }

    pub(crate) fn get(&self, l: usize, r: usize, c: Color, s: ColorSet) -> u16 {
        let cell = &self.cells[self.index(l, r)];
        lookup(&cell.f[c as usize - 1], s.without(c).0)
    }

    pub(crate) fn get_other(&self, l: usize, r: usize, c: Color, s: ColorSet) -> u16 {
        let cell = &self.cells[self.index(l, r)];
        lookup(&cell.other[c as usize - 1], s.without(c).0)
    }

    pub(crate) fn optimum(&self, q: usize) -> (u16, Color, ColorSet) {
        let cell = &self.cells[self.index(0, q - 1)];
        let mut best = (u16::MAX, 0, ColorSet::EMPTY);
        let mut best_key = (u16::MAX, Color::MAX, u32::MAX, u64::MAX);
        for c in 0..self.k {
            for &(t, v) in &cell.f[c] {
                let key = (potential(t, v), c as Color + 1, t.count_ones(), t);
                if key < best_key {
                    best_key = key;
                    best = (key.0, key.1, ColorSet(t));
                }
            }
        }
        best
    }
}
