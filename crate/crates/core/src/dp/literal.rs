//! Reference implementations used to cross-check the table.
//!
//! [`literal_optimum`] evaluates the recurrence with its explicit submask
//! minimizations, memoized over `(ℓ, r, c, S)`. [`setpath_optimum`] plays the
//! game on the color-set path directly by breadth-first search: a move takes a
//! maximal run of consecutive positions containing color `x` and replaces `x`
//! by `y` in each of them. Both are exponential and meant for tiny inputs.

use std::collections::{HashMap, HashSet, VecDeque};

use super::base_cost;
use crate::colorset::{ColorSet, ColorSetPath};
use crate::graph::Color;

/// Optimum of the recurrence evaluated with explicit submask enumeration.
pub fn literal_optimum(path: &ColorSetPath) -> usize {
    let palette: Vec<Color> = path.colors().iter().collect();
    let mut memo = HashMap::new();
    let q = path.len();
    let mut best = usize::MAX;
    for &c in &palette {
        let others = path.colors().without(c);
        for s in others.subsets() {
            let v = literal(&path.sets, &palette, 0, q - 1, c, s, &mut memo) as usize + s.len();
            best = best.min(v);
        }
    }
    best
}

type Memo = HashMap<(usize, usize, Color, u64), u16>;

fn literal(sets: &[ColorSet], palette: &[Color], l: usize, r: usize, c: Color, s: ColorSet, memo: &mut Memo) -> u16 {
    let s = s.without(c);
    if l > r {
        return 0;
    }
    if l == r {
        return base_cost(sets[l], c, s);
    }
    if let Some(&v) = memo.get(&(l, r, c, s.0)) {
        return v;
    }
    let mut best = u16::MAX;
    let with_c = s.with(c);
    for i in l + 1..=r {
        for &c2 in palette.iter().filter(|&&x| x != c) {
            for s1 in with_c.subsets() {
                for s2 in with_c.subsets() {
                    let right = literal(sets, palette, l, i - 1, c, s1, memo)
                        + literal(sets, palette, i, r, c2, s2, memo)
                        + 1;
                    let left = literal(sets, palette, l, i - 1, c2, s1, memo)
                        + 1
                        + literal(sets, palette, i, r, c, s2, memo);
                    best = best.min(right).min(left);
                }
            }
        }
        for s1 in s.subsets() {
            for s2 in s.subsets() {
                let both = literal(sets, palette, l, i - 1, c, s1, memo) + literal(sets, palette, i, r, c, s2, memo);
                best = best.min(both);
            }
        }
    }
    memo.insert((l, r, c, s.0), best);
    best
}

/// Maximal runs `(color, first, last)` of a set sequence.
pub fn runs(sets: &[ColorSet]) -> Vec<(Color, usize, usize)> {
    let all = sets.iter().fold(ColorSet::EMPTY, |a, &s| a.union(s));
    let mut out = Vec::new();
    for x in all.iter() {
        let mut i = 0;
        while i < sets.len() {
            if sets[i].contains(x) {
                let start = i;
                while i + 1 < sets.len() && sets[i + 1].contains(x) {
                    i += 1;
                }
                out.push((x, start, i));
            }
            i += 1;
        }
    }
    out
}

/// Applies the run move `(x, first, last) → y`.
pub fn apply_run_move(sets: &mut [ColorSet], first: usize, last: usize, x: Color, y: Color) {
    for s in &mut sets[first..=last] {
        *s = s.without(x).with(y);
    }
}

/// Exact optimum of the game played on the color-set path itself, or `None`
/// if more than `max_states` states would be visited.
pub fn setpath_optimum(path: &ColorSetPath, max_states: usize) -> Option<usize> {
    let palette: Vec<Color> = path.colors().iter().collect();
    let start = path.sets.clone();
    let done = |s: &[ColorSet]| s[0].len() == 1 && s.iter().all(|&x| x == s[0]);
    if done(&start) {
        return Some(0);
    }
    let mut seen: HashSet<Vec<ColorSet>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some((state, depth)) = queue.pop_front() {
        for (x, first, last) in runs(&state) {
            for &y in palette.iter().filter(|&&y| y != x) {
                let mut next = state.clone();
                apply_run_move(&mut next, first, last, x, y);
                if done(&next) {
                    return Some(depth + 1);
                }
                if seen.insert(next.clone()) {
                    if seen.len() > max_states {
                        return None;
                    }
                    queue.push_back((next, depth + 1));
                }
            }
        }
    }
    unreachable!("a single color can always be reached")
}
