//! Turning a filled table into a move sequence on the source graph.

use serde::{Deserialize, Serialize};

use super::{base_cost, dp_solve, DpSolution, DpTable};
use crate::colorset::{ColorSet, ColorSetPath};
use crate::error::{FloodError, Result};
use crate::game::{GameState, Move, Variant};
use crate::graph::{Color, ColoredGraph, Vertex};

/// One move of the path game: recolor the run of `from` through position
/// `pos` to `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanMove {
    pub pos: usize,
    pub from: Color,
    pub to: Color,
}

/// Backtracks an optimal derivation and appends the leftover absorption in
/// increasing color order.
///
/// Ties are broken by smallest split index, then the right-recolored case
/// before the left-recolored case before the direct case, then smallest
/// recolored color.
pub fn plan_moves(sol: &DpSolution) -> Vec<PlanMove> {
    plan_moves_with(sol, &|_| 0)
}

/// As [`plan_moves`], absorbing leftover colors by increasing `rank`, then
/// increasing color.
pub fn plan_moves_with(sol: &DpSolution, rank: &dyn Fn(Color) -> usize) -> Vec<PlanMove> {
    let table = &sol.table;
    let q = table.positions();
    let pal = table.palette();
    let local_c = pal.colors.binary_search(&sol.best.0).expect("best color in palette") as Color + 1;
    let local_s = pal.local(sol.best.1);
    let mut plan = Vec::new();
    backtrack(table, 0, q - 1, local_c, local_s, &mut plan);
    let mut leftovers: Vec<Color> = local_s.iter().collect();
    leftovers.sort_by_key(|&x| (rank(pal.global_color(x)), x));
    let mut current = local_c;
    for x in leftovers {
        plan.push(PlanMove { pos: 0, from: current, to: x });
        current = x;
    }
    plan.iter()
        .map(|m| PlanMove { pos: table.path_index(m.pos), from: pal.global_color(m.from), to: pal.global_color(m.to) })
        .collect()
}

fn backtrack(t: &DpTable, l: usize, r: usize, c: Color, s: ColorSet, out: &mut Vec<PlanMove>) {
    let s = s.without(c);
    if l == r {
        let set = t.local_sets[l];
        let bad = set.minus(s).without(c);
        if !set.contains(c) && bad.is_empty() {
            let x = set.iter().next().expect("nonempty position");
            out.push(PlanMove { pos: l, from: x, to: c });
        }
        for x in bad.iter() {
            out.push(PlanMove { pos: l, from: x, to: c });
        }
        debug_assert_eq!(base_cost(set, c, s) as usize, bad.len().max(usize::from(!set.contains(c))));
        return;
    }
    let target = t.local_value(l, r, c, s);
    let k = t.palette().len() as Color;
    let with_c = s.with(c);
    for i in l + 1..=r {
        let a = t.local_value(l, i - 1, c, s);
        let b = t.local_value(i, r, c, s);
        if a + t.local_other(i, r, c, s) + 1 == target {
            if let Some(c2) = (1..=k).filter(|&x| x != c).find(|&x| a + t.local_value(i, r, x, with_c) + 1 == target) {
                backtrack(t, l, i - 1, c, s, out);
                backtrack(t, i, r, c2, with_c, out);
                out.push(PlanMove { pos: i, from: c2, to: c });
                return;
            }
        }
        if t.local_other(l, i - 1, c, s) + 1 + b == target {
            if let Some(c2) = (1..=k).filter(|&x| x != c).find(|&x| t.local_value(l, i - 1, x, with_c) + 1 + b == target) {
                backtrack(t, l, i - 1, c2, with_c, out);
                out.push(PlanMove { pos: i - 1, from: c2, to: c });
                backtrack(t, i, r, c, s, out);
                return;
            }
        }
        if a + b == target {
            backtrack(t, l, i - 1, c, s, out);
            backtrack(t, i, r, c, s, out);
            return;
        }
    }
    unreachable!("table value without a derivation at ({l}, {r}, {c}, {s:?})");
}

fn vertices_at(path: &ColorSetPath, pos: usize) -> impl Iterator<Item = Vertex> + '_ {
    let p = &path.provenance[pos];
    p.playable().iter().chain(p.nested()).copied()
}

/// Plays `plan` on `g`, choosing at each step the smallest vertex at the
/// position that currently has the `from` color. Returns `None` as soon as a
/// position no longer holds the expected color.
pub fn execute_plan(g: &ColoredGraph, path: &ColorSetPath, plan: &[PlanMove]) -> Option<Vec<Move>> {
    let mut state = GameState::new(g.clone());
    let mut moves = Vec::with_capacity(plan.len());
    for pm in plan {
        let playable = path.provenance[pm.pos].playable();
        let v = playable
            .iter()
            .copied()
            .filter(|&v| state.color(v) == pm.from)
            .min()
            .or_else(|| vertices_at(path, pm.pos).filter(|&v| state.color(v) == pm.from).min())?;
        let m = Move::new(v, pm.to);
        state = state.apply_move(m, Variant::Free).ok()?;
        moves.push(m);
    }
    state.is_monochrome().then_some(moves)
}

/// The color-set path of `path`'s positions under the current coloring.
pub(crate) fn resample(path: &ColorSetPath, state: &GameState) -> ColorSetPath {
    let sets = (0..path.len()).map(|i| vertices_at(path, i).map(|v| state.color(v)).collect()).collect();
    ColorSetPath { sets, provenance: path.provenance.clone() }
}

/// A witness of length `sol.opt` for `g`.
///
/// The backtracked plan is tried first. If it does not finish in `opt`
/// moves, the witness is rebuilt one move at a time, each time choosing the
/// smallest move after which the table optimum drops by one. Fails with a
/// witness-gap error when no such move exists.
pub fn reconstruct_witness(g: &ColoredGraph, sol: &DpSolution, path: &ColorSetPath) -> Result<Vec<Move>> {
    reconstruct_witness_with(g, sol, path, &|_| 0)
}

/// As [`reconstruct_witness`] with the leftover order of [`plan_moves_with`].
pub fn reconstruct_witness_with(
    g: &ColoredGraph,
    sol: &DpSolution,
    path: &ColorSetPath,
    rank: &dyn Fn(Color) -> usize,
) -> Result<Vec<Move>> {
    if let Some(moves) = execute_plan(g, path, &plan_moves_with(sol, rank)) {
        if moves.len() == sol.opt {
            return Ok(moves);
        }
    }
    descend(g, sol.opt, path)
}

fn descend(g: &ColoredGraph, opt: usize, path: &ColorSetPath) -> Result<Vec<Move>> {
    let gap = || FloodError::WitnessGap { dp_opt: opt, oracle_opt: None };
    let palette: Vec<Color> = path.colors().iter().collect();
    let mut state = GameState::new(g.clone());
    let mut remaining = opt;
    while !state.is_monochrome() {
        if remaining == 0 {
            return Err(gap());
        }
        let mut found = None;
        'search: for blob in state.blobs() {
            let here = state.color(blob[0]);
            for &c in palette.iter().filter(|&&c| c != here) {
                let m = Move::new(blob[0], c);
                let next = state.apply_move(m, Variant::Free)?;
                let value = if next.is_monochrome() { 0 } else { dp_solve(&resample(path, &next), g.k())?.opt };
                if value + 1 == remaining {
                    found = Some(next);
                    break 'search;
                }
            }
        }
        state = found.ok_or_else(gap)?;
        remaining -= 1;
    }
    Ok(state.history().to_vec())
}
