//! Rewriting families of tiles into disjoint, left-anchored normal form.
//!
//! Every rewrite here keeps or enlarges the covered region and never adds
//! tiles. The functions act on increasing tiles; decreasing families are
//! handled by flipping the rectangle upside down.

use crate::error::{Error, Result};
use crate::geometry::{CellSet, Covering, Direction, RectDims, Tile};

fn require_increasing(tiles: &[Tile]) -> Result<()> {
    if let Some(idx) = tiles.iter().position(|t| !t.is_increasing()) {
        return Err(Error::Precondition(format!(
            "tile {idx} is not tagged increasing"
        )));
    }
    Ok(())
}

fn extend_all(tiles: &[Tile], dims: RectDims) -> Result<Vec<Tile>> {
    tiles
        .iter()
        .map(|t| {
            t.fits(dims)?;
            t.extend_to_full_domain(dims.m)
        })
        .collect()
}

fn dedup_by_values(tiles: Vec<Tile>) -> Vec<Tile> {
    let mut out: Vec<Tile> = Vec::with_capacity(tiles.len());
    for t in tiles {
        if !out.iter().any(|o| o.values() == t.values()) {
            out.push(t);
        }
    }
    out
}

fn clip(tile: &Tile, cap: u32) -> Tile {
    let values = tile.values().iter().map(|&v| v.min(cap)).collect();
    Tile::new(Direction::Increasing, 0, values).expect("clipping keeps monotonicity")
}

/// Splits increasing tiles into the one reaching the top row of the last
/// column first and the others clipped strictly below that row.
///
/// All tiles are first extended to the full domain and exact duplicates are
/// dropped. With `top_row` the largest final value, `top` is the tile covering
/// the most cells in rows `>= top_row` (first such in input order) and `rest`
/// are the remaining tiles capped at `top_row - 1`, again deduplicated.
pub fn peel_top(tiles: &[Tile], dims: RectDims) -> Result<(Tile, Vec<Tile>)> {
    if tiles.is_empty() {
        return Err(Error::Precondition(
            "peel_top needs at least one tile".into(),
        ));
    }
    require_increasing(tiles)?;
    let tiles = dedup_by_values(extend_all(tiles, dims)?);
    let top_row = tiles.iter().map(Tile::last).max().expect("non-empty");
    let upper_cells = |t: &Tile| -> usize {
        t.columns()
            .map(|(_, lo, hi)| {
                let lo = lo.max(top_row);
                if hi >= lo {
                    (hi - lo + 1) as usize
                } else {
                    0
                }
            })
            .sum()
    };
    let mut best = 0;
    for (idx, t) in tiles.iter().enumerate() {
        if upper_cells(t) > upper_cells(&tiles[best]) {
            best = idx;
        }
    }
    debug_assert_eq!(tiles[best].last(), top_row);
    let rest = if top_row >= 2 {
        let clipped = tiles
            .iter()
            .enumerate()
            .filter(|&(idx, _)| idx != best)
            .map(|(_, t)| clip(t, top_row - 1))
            .collect();
        dedup_by_values(clipped)
    } else {
        Vec::new()
    };
    Ok((tiles[best].clone(), rest))
}

/// Repeatedly peels the top tile. The result is full-domain with strictly
/// decreasing final values.
pub fn canonical_top(tiles: &[Tile], dims: RectDims) -> Result<Vec<Tile>> {
    let mut out = Vec::new();
    let mut remaining = tiles.to_vec();
    while !remaining.is_empty() {
        let (top, rest) = peel_top(&remaining, dims)?;
        out.push(top);
        remaining = rest;
    }
    Ok(out)
}

/// Replaces two full-domain increasing tiles with different final values by
/// a lower tile `L` (pointwise minimum) and an upper tile `U` that together
/// cover at least as much and do not overlap: `L(k) < U(k-1)` for `k >= 1`.
pub fn merge_pair(first: &Tile, second: &Tile) -> Result<(Tile, Tile)> {
    require_increasing(&[first.clone(), second.clone()])?;
    if first.start() != 0 || second.start() != 0 || first.end() != second.end() {
        return Err(Error::Precondition(
            "merge_pair needs two tiles on the same full domain".into(),
        ));
    }
    if first.last() == second.last() {
        return Err(Error::Precondition(
            "merge_pair needs different final values".into(),
        ));
    }
    let (a, b) = (first.values(), second.values());
    let m = a.len() - 1;
    let lower: Vec<u32> = a.iter().zip(b).map(|(&x, &y)| x.min(y)).collect();
    let upper: Vec<u32> = (0..=m)
        .map(|k| {
            let here = a[k].max(b[k]);
            if k < m {
                here.max(a[k + 1].min(b[k + 1]) + 1)
            } else {
                here
            }
        })
        .collect();
    Ok((
        Tile::new(Direction::Increasing, 0, lower)?,
        Tile::new(Direction::Increasing, 0, upper)
            .map_err(|e| Error::Internal(format!("upper merge tile: {e}")))?,
    ))
}

/// Pairwise disjoint full-domain increasing tiles covering the union of the
/// input, ordered bottom to top.
pub fn disentangle(tiles: &[Tile], dims: RectDims) -> Result<Vec<Tile>> {
    let mut layer = canonical_top(tiles, dims)?;
    layer.reverse();
    let mut out = Vec::with_capacity(layer.len());
    while let Some((first, rest)) = layer.split_first() {
        let mut lower = first.clone();
        let mut next = Vec::with_capacity(rest.len());
        for t in rest {
            let (l, u) = merge_pair(&lower, t)?;
            lower = l;
            next.push(u);
        }
        out.push(lower);
        layer = next;
    }
    Ok(out)
}

/// [`disentangle`] for decreasing tiles; the output is ordered top to bottom.
pub fn disentangle_decreasing(tiles: &[Tile], dims: RectDims) -> Result<Vec<Tile>> {
    let flipped = tiles
        .iter()
        .map(|t| {
            if t.is_increasing() {
                return Err(Error::Precondition("expected decreasing tiles".into()));
            }
            t.fits(dims)?;
            t.mirrored(dims.n)
        })
        .collect::<Result<Vec<_>>>()?;
    disentangle(&flipped, dims)?
        .iter()
        .map(|t| t.mirrored(dims.n))
        .collect()
}

/// Whether the covering is in left-anchored normal form: every tile is
/// full-domain, the `j`-th increasing tile starts at row `j` and the `k`-th
/// decreasing tile starts at row `n + 1 - k`.
pub fn is_anchored(c: &Covering) -> bool {
    let n = c.dims().n;
    c.all_full_domain()
        && c.increasing().zip(1..).all(|(t, j)| t.first() == j)
        && c.decreasing().zip(1..).all(|(t, k)| t.first() + k == n + 1)
}

/// Rewrites a covering into an anchored `(i, d)`-covering of the same
/// rectangle.
///
/// Each class is disentangled, its boundary-0 values are lowered (increasing)
/// or raised (decreasing) to the anchor rows, and missing tiles are padded
/// with constant strips. Increasing tiles come first in the output.
pub fn normalize_left(c: &Covering, i: usize, d: usize) -> Result<Covering> {
    let dims = c.dims();
    if i + d > dims.n as usize {
        return Err(Error::Domain(format!(
            "i + d = {} exceeds the height {}",
            i + d,
            dims.n
        )));
    }
    let (have_i, have_d) = c.class_counts();
    if have_i > i || have_d > d {
        return Err(Error::Precondition(format!(
            "covering has classes ({have_i}, {have_d}), more than the target ({i}, {d})"
        )));
    }
    if !c.is_covering() {
        return Err(Error::Precondition("input is not a covering".into()));
    }
    let inc: Vec<Tile> = c.increasing().cloned().collect();
    let dec: Vec<Tile> = c.decreasing().cloned().collect();
    let mut tiles = Vec::with_capacity(i + d);

    let mut inc = disentangle(&inc, dims)?;
    for (j, tile) in (1u32..).zip(inc.iter_mut()) {
        *tile = reanchor(tile, j, Direction::Increasing)?;
    }
    let have = inc.len() as u32;
    tiles.extend(inc);
    for j in have + 1..=i as u32 {
        tiles.push(Tile::constant(Direction::Increasing, 0, dims.m, j)?);
    }

    let mut dec = disentangle_decreasing(&dec, dims)?;
    for (k, tile) in (1u32..).zip(dec.iter_mut()) {
        *tile = reanchor(tile, dims.n + 1 - k, Direction::Decreasing)?;
    }
    let have = dec.len() as u32;
    tiles.extend(dec);
    for k in have + 1..=d as u32 {
        tiles.push(Tile::constant(
            Direction::Decreasing,
            0,
            dims.m,
            dims.n + 1 - k,
        )?);
    }

    let out = Covering::new(dims, tiles)?;
    if !out.is_covering() {
        return Err(Error::Internal("normalization lost coverage".into()));
    }
    Ok(out)
}

/// Rewrites only the value at boundary 0. For increasing tiles the anchor
/// must not lie above the old value, for decreasing not below.
fn reanchor(tile: &Tile, anchor: u32, direction: Direction) -> Result<Tile> {
    let ok = match direction {
        Direction::Increasing => anchor <= tile.first(),
        Direction::Decreasing => anchor >= tile.first(),
    };
    if !ok {
        return Err(Error::Internal(format!(
            "anchor {anchor} would shrink tile starting at {}",
            tile.first()
        )));
    }
    let mut values = tile.values().to_vec();
    values[0] = anchor;
    Tile::new(direction, 0, values)
}

/// Union of the cells of `tiles` in `dims`.
pub fn union_of(tiles: &[Tile], dims: RectDims) -> Result<CellSet> {
    let mut set = CellSet::empty(dims);
    for t in tiles {
        set.union_with(&t.cells(dims)?);
    }
    Ok(set)
}
