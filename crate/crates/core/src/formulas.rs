//! Exact closed forms for minimum coverings and maximal widths.
//!
//! Everything here is integer arithmetic. The square-root expression for the
//! minimum tile count is evaluated through its quadratic criterion so that no
//! floating point rounding is involved.

use crate::error::{Error, Result};
use crate::geometry::ExtNat;

/// Sign of `3p^2 - 4(m+n)p + 4mn`; the count `p` suffices iff it is `<= 0`.
fn quadratic(m: u64, n: u64, p: u64) -> i128 {
    let (m, n, p) = (m as i128, n as i128, p as i128);
    3 * p * p - 4 * (m + n) * p + 4 * m * n
}

/// Minimum number of monotonous polyominoes covering an `m x n` rectangle.
///
/// Computed as the least `p` with `3p^2 - 4(m+n)p + 4mn <= 0`, starting the
/// scan from an integer square root estimate of the smaller zero.
pub fn min_tiles(m: u64, n: u64) -> u64 {
    if m == 0 || n == 0 {
        return 0;
    }
    let (mm, nn) = (m as u128, n as u128);
    // m^2 + n^2 - mn >= 0 always
    let disc = mm * mm + nn * nn - mm * nn;
    let root = disc.isqrt();
    // smaller zero is (2(m+n) - 2 sqrt(disc)) / 3 >= (2(m+n) - 2(root+1)) / 3
    let lower = (2 * (mm + nn)).saturating_sub(2 * (root + 1));
    let mut p = lower.div_ceil(3) as u64;
    while quadratic(m, n, p) > 0 {
        p += 1;
    }
    debug_assert!(p <= m.min(n));
    p
}

/// Maximal width of a rectangle of height `n` coverable by `p` tiles.
///
/// Evaluates the closed form `p + floor(p^2 / (4(n-p)))` and checks it
/// against the balanced split `max_width_split(n, ceil(p/2), floor(p/2))`.
pub fn max_width(n: u64, p: u64) -> ExtNat {
    if p >= n {
        return ExtNat::Unbounded;
    }
    let closed = p + p * p / (4 * (n - p));
    let split = max_width_split(n, p.div_ceil(2), p / 2).expect("p < n");
    assert_eq!(
        split,
        ExtNat::Finite(closed),
        "closed form and balanced split disagree for n = {n}, p = {p}"
    );
    split
}

/// Maximal width of a rectangle of height `n` with a covering by `i`
/// increasing and `d` decreasing tiles: `i + d + floor(id / (n - i - d))`,
/// unbounded when `i + d = n`.
pub fn max_width_split(n: u64, i: u64, d: u64) -> Result<ExtNat> {
    let p = i + d;
    if p > n {
        return Err(Error::Domain(format!(
            "i + d = {p} exceeds the height n = {n}"
        )));
    }
    if p == n {
        return Ok(ExtNat::Unbounded);
    }
    Ok(ExtNat::Finite(p + i * d / (n - p)))
}

/// [`max_width_split`] parametrised by the height excess `e = n - i - d`.
pub fn max_width_by_excess(e: u64, i: u64, d: u64) -> ExtNat {
    max_width_split(e + i + d, i, d).expect("height is at least i + d")
}

/// Whether the `n` horizontal strips of an `m x n` rectangle (`m >= n >= 1`)
/// form a minimum covering, i.e. `4(m+1) > (n+1)^2`.
pub fn strips_are_minimal(m: u64, n: u64) -> Result<bool> {
    if n == 0 || m < n {
        return Err(Error::Precondition(format!(
            "need m >= n >= 1, got m = {m}, n = {n}"
        )));
    }
    let (m, n) = (m as u128, n as u128);
    Ok(4 * (m + 1) > (n + 1) * (n + 1))
}

/// Upper bound on the width of any `(i, d)`-coverable rectangle of height
/// `n`, from counting cells: each tile has at most `m + n - 1` of them.
pub fn cell_count_width_bound(n: u64, i: u64, d: u64) -> Result<u64> {
    let p = i + d;
    if p >= n {
        return Err(Error::Domain(format!(
            "counting bound needs i + d < n, got i + d = {p}, n = {n}"
        )));
    }
    Ok(p * (n - 1) / (n - p))
}

/// Minimum number of increasing tiles covering an `m x n` rectangle.
pub fn min_increasing_tiles(m: u64, n: u64) -> u64 {
    m.min(n)
}
