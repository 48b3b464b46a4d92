//! The interval dynamic program over color subsets.
//!
//! `f(ℓ, r, c, S)` is the fewest moves, played inside positions `ℓ..=r` of a
//! color-set path, after which every position contains `c` and every other
//! color left in the range lies in `S`. It is filled by increasing `r − ℓ`
//! from three cases:
//!
//! 1. split at `i`; the right part is dominated by some `c' ≠ c` and then
//!    recolored to `c` with one move,
//! 2. the mirror image with the left part recolored,
//! 3. both parts dominated by `c` directly.
//!
//! The optimum of the whole board is `min over (c, S) of f(0, q, c, S) + |S|`:
//! after domination one move per leftover color absorbs it into the
//! dominating blob.
//!
//! Consecutive positions with equal color sets are merged before filling.
//! Every run through one of them continues through the other, so they stay
//! equal under every move and the game on the shorter path is the same.

mod dense;
pub mod literal;
mod sparse;
mod witness;

use crate::colorset::{ColorSet, ColorSetPath, MAX_COLOR};
use crate::error::{FloodError, Result};
use crate::graph::{Color, ColoredGraph};
use crate::interval::{build_colorset_path, build_representation};

pub use witness::{execute_plan, plan_moves, plan_moves_with, reconstruct_witness, reconstruct_witness_with, PlanMove};

/// Unreachable / infeasible marker in the table.
pub const INF: u16 = u16::MAX / 4;

/// Largest palette the dense table is used for; larger palettes switch to the
/// Pareto-frontier table.
pub const DENSE_MAX_COLORS: usize = 8;

/// Colors present in the path, renumbered densely so the table only spans
/// colors that occur. Color `palette[i]` is local color `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Palette {
    pub colors: Vec<Color>,
}

impl Palette {
    fn of(path: &ColorSetPath) -> Self {
        Palette { colors: path.colors().iter().collect() }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    fn local(&self, set: ColorSet) -> ColorSet {
        set.iter()
            .map(|c| self.colors.binary_search(&c).expect("color in palette") as Color + 1)
            .collect()
    }

    fn global(&self, set: ColorSet) -> ColorSet {
        set.iter().map(|c| self.colors[c as usize - 1]).collect()
    }

    fn global_color(&self, c: Color) -> Color {
        self.colors[c as usize - 1]
    }
}

/// Storage behind a [`DpTable`].
#[derive(Debug, Clone)]
enum Store {
    Dense(dense::DenseTable),
    Sparse(sparse::SparseTable),
}

/// The filled table `f(ℓ, r, c, S)` for one color-set path.
///
/// Table positions index the path with consecutive equal sets merged.
#[derive(Debug, Clone)]
pub struct DpTable {
    store: Store,
    palette: Palette,
    local_sets: Vec<ColorSet>,
    /// Path index of the first position merged into each table position.
    starts: Vec<usize>,
}

impl DpTable {
    pub fn positions(&self) -> usize {
        self.local_sets.len()
    }

    /// Path index where table position `pos` begins.
    pub fn path_index(&self, pos: usize) -> usize {
        self.starts[pos]
    }

    pub fn palette(&self) -> &Palette {
        &self.palette
    }

    /// `f(ℓ, r, c, S)` in original color ids. Colors of `S` absent from the
    /// path are ignored; a dominating color absent from the path is
    /// infeasible in this table.
    pub fn value(&self, l: usize, r: usize, c: Color, s: ColorSet) -> Option<u16> {
        let lc = self.palette.colors.binary_search(&c).ok()? as Color + 1;
        let ls = self.palette.local(s.intersection(ColorSet(self.palette.colors.iter().fold(0u64, |m, &x| m | 1 << (x - 1)))));
        let v = self.local_value(l, r, lc, ls);
        (v < INF).then_some(v)
    }

    pub(crate) fn local_value(&self, l: usize, r: usize, c: Color, s: ColorSet) -> u16 {
        if l > r {
            return 0;
        }
        match &self.store {
            Store::Dense(t) => t.get(l, r, c, s),
            Store::Sparse(t) => t.get(l, r, c, s),
        }
    }

    pub(crate) fn local_other(&self, l: usize, r: usize, c: Color, s: ColorSet) -> u16 {
        match &self.store {
            Store::Dense(t) => t.get_other(l, r, c, s),
            Store::Sparse(t) => t.get_other(l, r, c, s),
        }
    }

    /// Whether the dense table was used.
    pub fn is_dense(&self) -> bool {
        matches!(self.store, Store::Dense(_))
    }
}

/// Result of [`dp_solve`].
#[derive(Debug, Clone)]
pub struct DpSolution {
    pub opt: usize,
    pub table: DpTable,
    /// Dominating color and leftover set achieving the optimum (original ids).
    pub best: (Color, ColorSet),
}

/// Cost of dominating a single position holding `set` with `c`, leaving only
/// colors of `s`.
pub(crate) fn base_cost(set: ColorSet, c: Color, s: ColorSet) -> u16 {
    if set.contains(c) {
        set.minus(s).without(c).len() as u16
    } else {
        set.minus(s).len().max(1) as u16
    }
}

/// Which table layout to fill.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TableKind {
    /// Dense up to [`DENSE_MAX_COLORS`] colors, frontier beyond.
    #[default]
    Auto,
    Dense,
    Frontier,
}

/// Fills the table for `path` and returns the optimum.
pub fn dp_solve(path: &ColorSetPath, k: Color) -> Result<DpSolution> {
    dp_solve_with(path, k, None, TableKind::Auto)
}

/// As [`dp_solve`], with an optional upper bound on the optimum that caps the
/// frontier table's pruning bound, and an explicit table layout.
pub fn dp_solve_with(path: &ColorSetPath, k: Color, upper: Option<usize>, kind: TableKind) -> Result<DpSolution> {
    if k == 0 {
        return Err(FloodError::InvalidInput("k must be positive".into()));
    }
    if path.is_empty() {
        return Err(FloodError::InvalidInput("empty color-set path".into()));
    }
    if path.sets.iter().any(|s| s.is_empty()) {
        return Err(FloodError::Compactness("empty color set in path".into()));
    }
    let all = path.colors();
    if all.iter().any(|c| c > k) || k > MAX_COLOR {
        return Err(FloodError::Capacity { what: "dynamic program colors", needed: k as usize, max: MAX_COLOR as usize });
    }
    let palette = Palette::of(path);
    let mut local_sets: Vec<ColorSet> = Vec::with_capacity(path.len());
    let mut starts = Vec::with_capacity(path.len());
    for (i, &s) in path.sets.iter().enumerate() {
        if i == 0 || path.sets[i - 1] != s {
            local_sets.push(palette.local(s));
            starts.push(i);
        }
    }
    let kk = palette.len();
    let q = local_sets.len();
    let dense = match kind {
        TableKind::Auto => kk <= DENSE_MAX_COLORS,
        TableKind::Dense => true,
        TableKind::Frontier => false,
    };
    if dense && kk > 16 {
        return Err(FloodError::Capacity { what: "dense table colors", needed: kk, max: 16 });
    }
    let (store, opt, best_c, best_s) = if dense {
        let t = dense::DenseTable::fill(&local_sets, kk);
        let (opt, c, s) = t.optimum(q);
        (Store::Dense(t), opt, c, s)
    } else {
        let t = sparse::SparseTable::fill(&local_sets, kk, upper)?;
        let (opt, c, s) = t.optimum(q);
        (Store::Sparse(t), opt, c, s)
    };
    let best = (palette.global_color(best_c), palette.global(best_s));
    Ok(DpSolution { opt: opt as usize, table: DpTable { store, palette, local_sets, starts }, best })
}

/// Proper interval engine: representation, color-set path, table, witness.
pub fn solve_proper_interval(g: &ColoredGraph) -> Result<crate::oracle::Solution> {
    let rep = build_representation(g)?;
    let path = build_colorset_path(&rep)?;
    let upper = crate::game::bounds(g).upper;
    let sol = dp_solve_with(&path, g.k(), Some(upper), TableKind::Auto)?;
    let witness = reconstruct_witness(g, &sol, &path)?;
    Ok(crate::oracle::Solution { opt: sol.opt, witness })
}

