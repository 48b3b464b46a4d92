//! Dense table over every color subset, for small palettes.
//!
//! Each cell `(ℓ, r)` holds two blocks indexed by `(c, S)`: `f` itself and
//! `other[c][S] = min over c' ≠ c of f(c', S ∪ {c})`, the cost of dominating
//! the range with a different color that is recolored to `c` afterwards. The
//! bit of `c` inside `S` is ignored, so every mask is stored.
//!
//! Cells are kept twice, row-major by `ℓ` and column-major by `r`, so the
//! split loop reads both halves contiguously.

use rayon::prelude::*;

use super::{base_cost, INF};
use crate::colorset::ColorSet;
use crate::graph::Color;

#[derive(Debug, Clone)]
pub(crate) struct DenseTable {
    q: usize,
    k: usize,
    by_row: Vec<u16>,
    by_col: Vec<u16>,
}

impl DenseTable {
    fn block(&self) -> usize {
        2 * (self.k << self.k)
    }

    fn row_index(&self, l: usize, r: usize) -> usize {
        // rows before `l` hold q, q - 1, ..., q - l + 1 cells
        let start = l * self.q - l * l.saturating_sub(1) / 2;
        (start + r - l) * self.block()
    }

    fn col_index(&self, l: usize, r: usize) -> usize {
        (r * (r + 1) / 2 + l) * self.block()
    }

    fn row_cell(&self, l: usize, r: usize) -> &[u16] {
        let i = self.row_index(l, r);
        &self.by_row[i..i + self.block()]
    }

    fn col_cell(&self, l: usize, r: usize) -> &[u16] {
        let i = self.col_index(l, r);
        &self.by_col[i..i + self.block()]
    }

    pub(crate) fn fill(sets: &[ColorSet], k: usize) -> Self {
        let q = sets.len();
        let cells = q * (q + 1) / 2;
        let mut t = DenseTable { q, k, by_row: Vec::new(), by_col: Vec::new() };
        let block = t.block();
        t.by_row = vec![INF; cells * block];
        t.by_col = vec![INF; cells * block];

        for d in 0..q {
            let computed: Vec<Vec<u16>> = (0..q - d)
                .into_par_iter()
                .map(|l| if d == 0 { base_block(sets[l], k) } else { t.combine(l, l + d) })
                .collect();
            for (l, cell) in computed.into_iter().enumerate() {
                let (ri, ci) = (t.row_index(l, l + d), t.col_index(l, l + d));
                t.by_row[ri..ri + block].copy_from_slice(&cell);
                t.by_col[ci..ci + block].copy_from_slice(&cell);
            }
        }
        t
    }

    fn combine(&self, l: usize, r: usize) -> Vec<u16> {
        let half = self.k << self.k;
        let mut out = vec![INF; 2 * half];
        let acc = &mut out[..half];
        for i in l + 1..=r {
            let (a, oa) = self.row_cell(l, i - 1).split_at(half);
            let (b, ob) = self.col_cell(i, r).split_at(half);
            for ((((v, &a), &oa), &b), &ob) in acc.iter_mut().zip(a).zip(oa).zip(b).zip(ob) {
                *v = (*v).min(a + b).min(a + ob + 1).min(oa + b + 1);
            }
        }
        for v in acc.iter_mut() {
            *v = (*v).min(INF);
        }
        fill_other(&mut out, self.k);
        out
    }

    pub(crate) fn get(&self, l: usize, r: usize, c: Color, s: ColorSet) -> u16 {
        let m = 1usize << self.k;
        self.row_cell(l, r)[(c as usize - 1) * m + s.0 as usize]
    }

    /// `other[c][S]` for a cell, in local colors.
    pub(crate) fn get_other(&self, l: usize, r: usize, c: Color, s: ColorSet) -> u16 {
        let m = 1usize << self.k;
        self.row_cell(l, r)[self.k * m + (c as usize - 1) * m + s.0 as usize]
    }

    /// Best `(value, c, S)` for the whole path: `f + |S ∖ {c}|`, smallest
    /// value first, then lowest color, then smallest leftover set.
    pub(crate) fn optimum(&self, q: usize) -> (u16, Color, ColorSet) {
        let m = 1u64 << self.k;
        let mut best = (u16::MAX, 0, ColorSet::EMPTY);
        for c in 1..=self.k as Color {
            let mut masks: Vec<ColorSet> = (0..m).map(ColorSet).filter(|s| !s.contains(c)).collect();
            masks.sort_by_key(|s| (s.len(), s.0));
            for s in masks {
                let v = self.get(0, q - 1, c, s) + s.len() as u16;
                if v < best.0 {
                    best = (v, c, s);
                }
            }
        }
        best
    }
}

fn base_block(set: ColorSet, k: usize) -> Vec<u16> {
    let m = 1usize << k;
    let mut out = vec![INF; 2 * k * m];
    for c in 0..k {
        for s in 0..m {
            out[c * m + s] = base_cost(set, c as Color + 1, ColorSet(s as u64));
        }
    }
    fill_other(&mut out, k);
    out
}

fn fill_other(cell: &mut [u16], k: usize) {
    let m = 1usize << k;
    let (f, other) = cell.split_at_mut(k * m);
    for c in 0..k {
        for s in 0..m {
            let with_c = s | 1 << c;
            other[c * m + s] = (0..k).filter(|&x| x != c).map(|x| f[x * m + with_c]).min().unwrap_or(INF);
        }
    }
}
