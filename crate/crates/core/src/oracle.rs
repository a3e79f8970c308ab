//! Exhaustive ground truth on small boards.
//!
//! Two independent searches:
//!
//! - [`min_cover_exact`]: branch-and-bound set cover over all full-domain
//!   tiles. Restricting to full-domain tiles loses nothing because any tile
//!   can be extended constantly to both sides.
//! - [`exists_id_covering`]: a column-by-column sweep over the boundary
//!   values of `i` increasing and `d` decreasing tiles, started from the
//!   left-edge anchors: the `j`-th increasing tile at row `j`, the `k`-th
//!   decreasing tile at row `n + 1 - k`. Every `(i, d)`-covering can be
//!   rewritten into one with these anchors, so the sweep is complete.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::formulas::cell_count_width_bound;
use crate::geometry::{Covering, Direction, ExtNat, RectDims, Tile};

/// All full-domain tiles of the `m x n` rectangle in one direction, in
/// lexicographic order of their boundary values.
pub fn enumerate_full_domain_tiles(m: u32, n: u32, direction: Direction) -> Vec<Tile> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut values = Vec::with_capacity(m as usize + 1);
    fn rec(values: &mut Vec<u32>, len: usize, n: u32, direction: Direction, out: &mut Vec<Tile>) {
        if values.len() == len {
            out.push(Tile::new(direction, 0, values.clone()).expect("monotone by construction"));
            return;
        }
        let range = match (direction, values.last()) {
            (_, None) => 1..=n,
            (Direction::Increasing, Some(&v)) => v..=n,
            (Direction::Decreasing, Some(&v)) => 1..=v,
        };
        for v in range {
            values.push(v);
            rec(values, len, n, direction, out);
            values.pop();
        }
    }
    rec(&mut values, m as usize + 1, n, direction, &mut out);
    out
}

/// Fixed-width bitset over the cells of a rectangle.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Bits(Vec<u64>);

impl Bits {
    fn zeros(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, idx: usize) {
        self.0[idx / 64] |= 1 << (idx % 64);
    }

    fn get(&self, idx: usize) -> bool {
        self.0[idx / 64] >> (idx % 64) & 1 == 1
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn and_not(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    /// Lowest set index; with row-major indexing this is the lowest row,
    /// then the lowest column.
    fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            (0..64)
                .filter(move |b| word >> b & 1 == 1)
                .map(move |b| w * 64 + b)
        })
    }
}

struct SetCover {
    tiles: Vec<Tile>,
    masks: Vec<Bits>,
    /// Candidate tiles per cell.
    by_cell: Vec<Vec<usize>>,
    max_size: usize,
}

impl SetCover {
    fn search(&self, uncovered: &Bits, budget: usize, chosen: &mut Vec<usize>) -> bool {
        let left = uncovered.count();
        if left == 0 {
            return true;
        }
        // every tile has at most m + n - 1 cells
        if budget * self.max_size < left {
            return false;
        }
        let cell = uncovered
            .iter_ones()
            .min_by_key(|&c| self.by_cell[c].len())
            .expect("non-empty");
        for &t in &self.by_cell[cell] {
            chosen.push(t);
            if self.search(&uncovered.and_not(&self.masks[t]), budget - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// Exact minimum number of monotonous polyominoes covering the `m x n`
/// rectangle, with a witness; `direction` restricts the tiles to one class.
///
/// Budgets are tried in increasing order, so the returned count is certified
/// by an exhausted search at one tile less. Tiles whose cell set is contained
/// in another candidate's are dropped before the search: swapping a tile for
/// a superset never breaks a covering. Intended for boards with
/// `min(m, n) <= 6`.
pub fn min_cover_exact(m: u32, n: u32, direction: Option<Direction>) -> Result<(usize, Covering)> {
    let dims = RectDims::new(m, n);
    if dims.is_empty() {
        return Err(Error::Precondition("exact search needs m, n >= 1".into()));
    }
    let directions = match direction {
        Some(dir) => vec![dir],
        None => vec![Direction::Increasing, Direction::Decreasing],
    };
    let cells = dims.cell_count();
    let mut seen = BTreeSet::new();
    let mut candidates: Vec<(Tile, Bits)> = Vec::new();
    for dir in directions {
        for tile in enumerate_full_domain_tiles(m, n, dir) {
            let mut mask = Bits::zeros(cells);
            for (k, lo, hi) in tile.columns() {
                for l in lo..=hi {
                    mask.set((l as usize - 1) * m as usize + (k as usize - 1));
                }
            }
            if seen.insert(mask.clone()) {
                candidates.push((tile, mask));
            }
        }
    }
    let maximal: Vec<(Tile, Bits)> = candidates
        .iter()
        .filter(|(_, mask)| {
            !candidates
                .iter()
                .any(|(_, other)| other != mask && mask.is_subset(other))
        })
        .cloned()
        .collect();

    let (tiles, masks): (Vec<Tile>, Vec<Bits>) = maximal.into_iter().unzip();
    let by_cell = (0..cells)
        .map(|c| (0..masks.len()).filter(|&t| masks[t].get(c)).collect())
        .collect();
    let problem = SetCover {
        tiles,
        masks,
        by_cell,
        max_size: (m + n - 1) as usize,
    };
    let mut all = Bits::zeros(cells);
    for c in 0..cells {
        all.set(c);
    }
    for budget in 1.. {
        let mut chosen = Vec::new();
        if problem.search(&all, budget, &mut chosen) {
            let witness = chosen.iter().map(|&t| problem.tiles[t].clone()).collect();
            return Ok((budget, Covering::new(dims, witness)?));
        }
    }
    unreachable!("the horizontal strips always cover")
}

/// Boundary values of the `i` increasing tiles (sorted ascending) followed by
/// the `d` decreasing tiles (sorted ascending). Tiles of one class are
/// interchangeable, so sorting loses nothing.
type State = Vec<u32>;

struct Sweep {
    n: u32,
    i: usize,
    d: usize,
    /// `layers[c]` maps each state reachable after `c` columns to a
    /// predecessor and the unsorted values reached from it.
    layers: Vec<BTreeMap<State, (State, Vec<u32>)>>,
}

impl Sweep {
    fn new(n: u32, i: usize, d: usize) -> Self {
        let mut start: State = (1..=i as u32).collect();
        start.extend((1..=d as u32).map(|k| n + 1 - k).rev());
        let mut first = BTreeMap::new();
        first.insert(start.clone(), (start, Vec::new()));
        Sweep {
            n,
            i,
            d,
            layers: vec![first],
        }
    }

    fn canonical(&self, mut values: Vec<u32>) -> State {
        values[..self.i].sort_unstable();
        values[self.i..].sort_unstable();
        values
    }

    /// All next states whose column is fully covered.
    fn successors(&self, state: &State, out: &mut BTreeMap<State, (State, Vec<u32>)>) {
        let full: u64 = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        let mut next = state.clone();
        self.extend(state, 0, 0, &mut next, full, out);
    }

    fn extend(
        &self,
        state: &State,
        idx: usize,
        covered: u64,
        next: &mut Vec<u32>,
        full: u64,
        out: &mut BTreeMap<State, (State, Vec<u32>)>,
    ) {
        if idx == state.len() {
            if covered == full {
                out.entry(self.canonical(next.clone()))
                    .or_insert_with(|| (state.clone(), next.clone()));
            }
            return;
        }
        let prev = state[idx];
        let range = if idx < self.i {
            prev..=self.n
        } else {
            1..=prev
        };
        for v in range {
            let (lo, hi) = (prev.min(v), prev.max(v));
            // rows lo..=hi as bits lo-1..hi-1
            let run = ((1u64 << (hi - lo + 1)) - 1) << (lo - 1);
            next[idx] = v;
            self.extend(state, idx + 1, covered | run, next, full, out);
        }
    }

    /// Advances one column; returns whether any state survives.
    fn step(&mut self) -> bool {
        let mut out = BTreeMap::new();
        for state in self.layers.last().expect("non-empty").keys() {
            self.successors(state, &mut out);
        }
        let alive = !out.is_empty();
        self.layers.push(out);
        alive
    }

    fn width(&self) -> usize {
        self.layers.len() - 1
    }

    /// Replays a path to the first surviving state of the last layer.
    fn witness(&self) -> Result<Covering> {
        let m = self.width();
        let mut path = Vec::with_capacity(m);
        let mut state = self.layers[m]
            .keys()
            .next()
            .cloned()
            .ok_or_else(|| Error::Internal("no surviving state".into()))?;
        for c in (1..=m).rev() {
            let (prev, reached) = self.layers[c][&state].clone();
            path.push(reached);
            state = prev;
        }
        path.reverse();

        // tiles[t] follows the t-th position of the current ordering
        let mut tiles: Vec<Vec<u32>> = state.iter().map(|&v| vec![v]).collect();
        for reached in path {
            for (tile, &v) in tiles.iter_mut().zip(&reached) {
                tile.push(v);
            }
            let (inc, dec) = tiles.split_at_mut(self.i);
            inc.sort_by_key(|t| *t.last().unwrap());
            dec.sort_by_key(|t| *t.last().unwrap());
        }
        let mut out = Vec::with_capacity(self.i + self.d);
        let mut inc: Vec<_> = tiles[..self.i].to_vec();
        inc.sort_by_key(|t| t[0]);
        let mut dec: Vec<_> = tiles[self.i..].to_vec();
        dec.sort_by_key(|t| std::cmp::Reverse(t[0]));
        for values in inc {
            out.push(Tile::new(Direction::Increasing, 0, values)?);
        }
        for values in dec {
            out.push(Tile::new(Direction::Decreasing, 0, values)?);
        }
        Covering::new(RectDims::new(m as u32, self.n), out)
    }
}

fn check_split(n: u32, i: u32, d: u32) -> Result<()> {
    if i + d > n {
        return Err(Error::Domain(format!("i + d = {} exceeds n = {n}", i + d)));
    }
    if n > 63 {
        return Err(Error::Precondition("column sweep supports n <= 63".into()));
    }
    Ok(())
}

/// Some `(i, d)`-covering of the `m x n` rectangle, or `None` if there is
/// none.
pub fn exists_id_covering(m: u32, n: u32, i: u32, d: u32) -> Result<Option<Covering>> {
    check_split(n, i, d)?;
    if m == 0 {
        return Err(Error::Precondition("exact search needs m >= 1".into()));
    }
    let mut sweep = Sweep::new(n, i as usize, d as usize);
    for _ in 0..m {
        if !sweep.step() {
            return Ok(None);
        }
    }
    sweep.witness().map(Some)
}

/// Largest width of an `(i, d)`-coverable rectangle of height `n`, searched
/// up to the cell counting bound.
pub fn max_width_exact(n: u32, i: u32, d: u32) -> Result<ExtNat> {
    check_split(n, i, d)?;
    if i + d == n {
        return Ok(ExtNat::Unbounded);
    }
    let bound = cell_count_width_bound(n.into(), i.into(), d.into())?;
    let mut sweep = Sweep::new(n, i as usize, d as usize);
    while sweep.step() {
        if sweep.width() as u64 > bound {
            return Err(Error::Internal(format!(
                "width {} exceeds the counting bound {bound}",
                sweep.width()
            )));
        }
    }
    Ok(ExtNat::Finite(sweep.width() as u64 - 1))
}
