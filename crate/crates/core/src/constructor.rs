//! Explicit coverings of maximal width and of minimum cardinality.
//!
//! [`cover`] builds an anchored `(i, d)`-covering of the rectangle of height
//! `e + i + d` and width `i + d + floor(id / e)`. It reduces the parameters
//! step by step:
//!
//! - `e = 0`: horizontal strips of any requested width.
//! - `i >= e`: a prefix block of width `d + e` in front of `cover(e, i - e, d)`.
//! - `d >= e > i`: the upside-down image of `cover(e, d, i)`.
//! - `i, d < e`: `cover(floor(id / e), i, d)`, cut to width `i + d + e` and
//!   reflected across the anti-diagonal.
//!
//! The reductions are recorded on an explicit stack and replayed bottom-up,
//! so deep parameter chains do not grow the call stack.

use crate::error::{Error, Result};
use crate::formulas::{max_width_split, min_tiles};
use crate::geometry::{Covering, Direction, ExtNat, RectDims, Tile};
use crate::normalizer::{is_anchored, normalize_left};

fn to_u32(v: u64, what: &str) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::Domain(format!("{what} = {v} does not fit in 32 bits")))
}

/// Extends an anchored `(i - e, d)`-covering of height `i + d` to an anchored
/// `(i, d)`-covering of height `e + i + d` by prepending `d + e` columns.
///
/// In the prefix the `d` decreasing tiles each drop by `e` rows (tile `k`,
/// counted from the top, in column `d + 1 - k`), the upper `e` increasing
/// tiles are lifted by `d + e` rows (tile `t`, counted from below, in column
/// `d + e + 1 - t`) and stay on the top `e` rows afterwards, and the lower
/// `i - e` increasing tiles run flat until they continue as the residual's
/// increasing tiles.
pub fn build_prefix(e: u32, i: u32, d: u32, residual: &Covering) -> Result<Covering> {
    if e == 0 || i < e {
        return Err(Error::Precondition(format!(
            "prefix needs i >= e >= 1, got e = {e}, i = {i}"
        )));
    }
    let rdims = residual.dims();
    let (ri, rd) = residual.class_counts();
    if rdims.n != i + d || (ri, rd) != ((i - e) as usize, d as usize) {
        return Err(Error::Precondition(format!(
            "residual must be an ({}, {d})-covering of height {}, got ({ri}, {rd}) of height {}",
            i - e,
            i + d,
            rdims.n
        )));
    }
    if !is_anchored(residual) {
        return Err(Error::Precondition("residual is not anchored".into()));
    }
    let n = e + i + d;
    let w = rdims.m;
    let lead = (d + e) as usize;
    let width = d + e + w;
    let mut tiles = Vec::with_capacity((i + d) as usize);

    for (j, rest) in (1..=i - e).zip(residual.increasing()) {
        let mut values = vec![j; lead];
        values.extend_from_slice(rest.values());
        tiles.push(Tile::new(Direction::Increasing, 0, values)?);
    }
    for t in 1..=e {
        let jump = (d + e + 1 - t) as usize;
        let mut values = vec![i - e + t; jump];
        values.resize(width as usize + 1, i + d + t);
        tiles.push(Tile::new(Direction::Increasing, 0, values)?);
    }
    for (k, rest) in (1..=d).zip(residual.decreasing()) {
        let drop = (d + 1 - k) as usize;
        let mut values = vec![n + 1 - k; drop];
        values.resize(lead, n + 1 - k - e);
        values.extend_from_slice(rest.values());
        tiles.push(Tile::new(Direction::Decreasing, 0, values)?);
    }
    Covering::new(RectDims::new(width, n), tiles)
}

/// Horizontal strips: increasing tiles on the bottom `i` rows, decreasing on
/// the top `d` rows.
fn strips(width: u32, i: u32, d: u32) -> Result<Covering> {
    let n = i + d;
    let mut tiles = Vec::with_capacity(n as usize);
    for j in 1..=i {
        tiles.push(Tile::constant(Direction::Increasing, 0, width, j)?);
    }
    for k in 1..=d {
        tiles.push(Tile::constant(Direction::Decreasing, 0, width, n + 1 - k)?);
    }
    Covering::new(RectDims::new(width, n), tiles)
}

fn increasing_first(c: Covering) -> Result<Covering> {
    let dims = c.dims();
    let (mut inc, dec): (Vec<Tile>, Vec<Tile>) =
        c.into_tiles().into_iter().partition(Tile::is_increasing);
    inc.extend(dec);
    Covering::new(dims, inc)
}

#[derive(Debug, Clone, Copy)]
enum Step {
    Prefix { e: u32, i: u32, d: u32 },
    Mirror,
    Reflect { e: u32, i: u32, d: u32 },
}

/// Anchored `(i, d)`-covering of the `M x (e + i + d)` rectangle with
/// `M = i + d + floor(id / e)` for `e >= 1`; for `e = 0` the width must be
/// given as `width_request`.
pub fn cover(e: u32, i: u32, d: u32, width_request: Option<u32>) -> Result<Covering> {
    match (e, width_request) {
        (0, None) => {
            return Err(Error::Usage("a width is required when e = 0".into()));
        }
        (1.., Some(_)) => {
            return Err(Error::Usage(
                "a width may only be requested when e = 0".into(),
            ));
        }
        _ => {}
    }
    let n = to_u32(u64::from(e) + u64::from(i) + u64::from(d), "height")?;
    let expected_width = match (
        max_width_split(n.into(), i.into(), d.into())?,
        width_request,
    ) {
        (ExtNat::Finite(w), _) => to_u32(w, "width")?,
        (ExtNat::Unbounded, Some(w)) => w,
        (ExtNat::Unbounded, None) => unreachable!("e = 0 requires a width"),
    };

    let mut steps = Vec::new();
    let (mut e, mut i, mut d) = (e, i, d);
    let mut base_width = width_request.unwrap_or(0);
    while e > 0 {
        if i >= e {
            steps.push(Step::Prefix { e, i, d });
            i -= e;
        } else if d >= e {
            steps.push(Step::Mirror);
            std::mem::swap(&mut i, &mut d);
        } else {
            steps.push(Step::Reflect { e, i, d });
            let reduced = (u64::from(i) * u64::from(d) / u64::from(e)) as u32;
            if reduced == 0 {
                base_width = i + d + e;
            }
            e = reduced;
        }
    }

    let mut current = strips(base_width, i, d)?;
    while let Some(step) = steps.pop() {
        current = match step {
            Step::Prefix { e, i, d } => build_prefix(e, i, d, &current)?,
            Step::Mirror => increasing_first(current.mirror())?,
            Step::Reflect { e, i, d } => {
                let cut = i + d + e;
                if current.dims().m < cut {
                    return Err(Error::Internal(format!(
                        "width {} below the required {cut} before reflecting",
                        current.dims().m
                    )));
                }
                let turned = current.trim(cut)?.reflect()?;
                normalize_left(&turned, i as usize, d as usize)?
            }
        };
        debug_assert!(is_anchored(&current));
    }

    if current.dims() != RectDims::new(expected_width, n) {
        return Err(Error::Internal(format!(
            "built a {} covering, expected {expected_width}x{n}",
            current.dims()
        )));
    }
    if !current.is_covering() {
        return Err(Error::Internal("construction left cells uncovered".into()));
    }
    Ok(current)
}

/// An `(i, d)`-covering of the `m x n` rectangle, if `m` does not exceed the
/// maximal width for these class counts.
pub fn construct_id_covering(m: u32, n: u32, i: u32, d: u32) -> Result<Covering> {
    let max = max_width_split(n.into(), i.into(), d.into())?;
    if !max.admits(m.into()) {
        return Err(Error::Infeasible(format!(
            "no ({i}, {d})-covering of the {m}x{n} rectangle exists (maximal width {max})"
        )));
    }
    let e = n - i - d;
    let full = cover(e, i, d, (e == 0).then_some(m))?;
    full.trim(m)
}

/// A covering of the `m x n` rectangle by the minimum number of tiles.
pub fn construct_min_covering(m: u32, n: u32) -> Result<Covering> {
    let dims = RectDims::new(m, n);
    if dims.is_empty() {
        return Covering::new(dims, Vec::new());
    }
    let p = min_tiles(m.into(), n.into()) as u32;
    if p == n {
        return Ok(Covering::horizontal_strips(dims, Direction::Increasing));
    }
    construct_id_covering(m, n, p.div_ceil(2), p / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_prefix() {
        let empty = cover(1, 0, 0, None).unwrap();
        assert_eq!(empty.dims(), RectDims::new(0, 1));
        let c = build_prefix(1, 1, 0, &empty).unwrap();
        assert_eq!(c.dims(), RectDims::new(1, 2));
        assert_eq!(c.tiles()[0].values(), &[1, 2]);
        assert!(c.is_covering());
    }

    #[test]
    fn prefix_chain() {
        let residual = cover(1, 0, 1, None).unwrap();
        assert_eq!(residual.dims(), RectDims::new(1, 2));
        let three = build_prefix(1, 1, 1, &residual).unwrap();
        assert_eq!(three.dims(), RectDims::new(3, 3));
        assert!(three.is_covering());
        assert!(is_anchored(&three));

        let five = build_prefix(1, 2, 1, &three).unwrap();
        assert_eq!(five.dims(), RectDims::new(5, 4));
        assert_eq!(five.class_counts(), (2, 1));
        assert!(five.is_covering());
    }

    #[test]
    fn prefix_rejects_bad_residuals() {
        let residual = cover(1, 0, 1, None).unwrap();
        assert!(build_prefix(1, 2, 1, &residual).is_err());
        assert!(build_prefix(2, 1, 1, &residual).is_err());
        let unanchored = Covering::new(
            RectDims::new(1, 3),
            vec![
                Tile::new(Direction::Increasing, 0, vec![2, 3]).unwrap(),
                Tile::new(Direction::Decreasing, 0, vec![3, 1]).unwrap(),
            ],
        )
        .unwrap();
        assert!(unanchored.is_covering());
        assert!(build_prefix(1, 2, 1, &unanchored).is_err());
    }

    #[test]
    fn cover_examples() {
        let s = cover(0, 2, 1, Some(7)).unwrap();
        assert_eq!(s.dims(), RectDims::new(7, 3));
        assert!(s.tiles().iter().all(Tile::is_constant));

        let c = cover(1, 1, 1, None).unwrap();
        assert_eq!((c.dims(), c.len()), (RectDims::new(3, 3), 2));

        let c = cover(2, 1, 1, None).unwrap();
        assert_eq!((c.dims(), c.len()), (RectDims::new(2, 4), 2));
        assert!(c.is_covering());

        let c = cover(1, 2, 1, None).unwrap();
        assert_eq!(c.dims(), RectDims::new(5, 4));
        assert_eq!(c.class_counts(), (2, 1));
    }

    #[test]
    fn cover_usage_errors() {
        assert!(matches!(cover(0, 1, 1, None), Err(Error::Usage(_))));
        assert!(matches!(cover(1, 1, 1, Some(3)), Err(Error::Usage(_))));
    }

    #[test]
    fn id_coverings() {
        let c = construct_id_covering(5, 4, 2, 1).unwrap();
        assert!(c.is_covering());
        assert_eq!(c.len(), 3);
        assert!(matches!(
            construct_id_covering(6, 4, 2, 1),
            Err(Error::Infeasible(_))
        ));
        let c = construct_id_covering(4, 4, 2, 1).unwrap();
        assert_eq!(c.dims(), RectDims::new(4, 4));
        assert!(c.is_covering());
        assert!(matches!(
            construct_id_covering(2, 2, 2, 1),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn min_coverings() {
        let c = construct_min_covering(4, 4).unwrap();
        assert_eq!(c.len(), 3);
        assert!(c.is_covering());

        let c = construct_min_covering(9, 1).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c.tiles()[0].is_constant());

        let c = construct_min_covering(7, 4).unwrap();
        assert_eq!(c.len(), 4);
        assert!(c.tiles().iter().all(Tile::is_constant));

        assert!(construct_min_covering(0, 5).unwrap().is_empty());
    }

    #[test]
    fn long_chains_stay_iterative() {
        let c = cover(1, 200, 0, None).unwrap();
        assert_eq!(c.dims(), RectDims::new(200, 201));
        assert_eq!(c.len(), 200);
    }
}
