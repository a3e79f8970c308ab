//! Tiles, cell sets and coverings of lattice rectangles.
//!
//! Cells are addressed 1-based as `(k, l)` with `k` the column and `l` the
//! row, so cell `(k, l)` is the unit square `[k-1, k] x [l-1, l]`. A tile
//! stores its values on column boundaries: value `P(t)` at boundary `t`, and
//! the cells of the tile in column `t` are the rows between `P(t-1)` and
//! `P(t)` inclusive.

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Exact rational number used for line slopes and intercepts.
pub type Rational = Ratio<i128>;

/// Width `m` (columns) and height `n` (rows) of a lattice rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RectDims {
    pub m: u32,
    pub n: u32,
}

impl RectDims {
    pub const fn new(m: u32, n: u32) -> Self {
        RectDims { m, n }
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0 || self.n == 0
    }

    pub fn cell_count(&self) -> usize {
        self.m as usize * self.n as usize
    }

    /// Dimensions with width and height swapped.
    pub fn transposed(&self) -> Self {
        RectDims::new(self.n, self.m)
    }
}

impl fmt::Display for RectDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.m, self.n)
    }
}

/// A natural number or an explicit unbounded value.
///
/// `Unbounded` compares greater than every finite value. No arithmetic is
/// defined on purpose; callers match on the variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtNat {
    Finite(u64),
    Unbounded,
}

impl ExtNat {
    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Finite(v) => Some(v),
            ExtNat::Unbounded => None,
        }
    }

    pub fn is_unbounded(self) -> bool {
        self == ExtNat::Unbounded
    }

    /// Whether a finite width `m` is at most `self`.
    pub fn admits(self, m: u64) -> bool {
        ExtNat::Finite(m) <= self
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(v) => write!(f, "{v}"),
            ExtNat::Unbounded => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Increasing,
    Decreasing,
}

impl Direction {
    pub fn opposite(self) -> Self {
        match self {
            Direction::Increasing => Direction::Decreasing,
            Direction::Decreasing => Direction::Increasing,
        }
    }
}

/// Per-cell membership over the cells of a rectangle.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CellSet {
    dims: RectDims,
    bits: Vec<bool>,
}

impl CellSet {
    pub fn empty(dims: RectDims) -> Self {
        CellSet {
            dims,
            bits: vec![false; dims.cell_count()],
        }
    }

    pub fn full(dims: RectDims) -> Self {
        CellSet {
            dims,
            bits: vec![true; dims.cell_count()],
        }
    }

    pub fn dims(&self) -> RectDims {
        self.dims
    }

    fn index(&self, k: u32, l: u32) -> Result<usize> {
        if k == 0 || l == 0 || k > self.dims.m || l > self.dims.n {
            return Err(Error::Dimension(format!(
                "cell ({k}, {l}) outside {} rectangle",
                self.dims
            )));
        }
        Ok((l as usize - 1) * self.dims.m as usize + (k as usize - 1))
    }

    pub fn contains(&self, k: u32, l: u32) -> Result<bool> {
        Ok(self.bits[self.index(k, l)?])
    }

    pub fn insert(&mut self, k: u32, l: u32) -> Result<()> {
        let idx = self.index(k, l)?;
        self.bits[idx] = true;
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }

    pub fn is_full(&self) -> bool {
        self.bits.iter().all(|&b| b)
    }

    fn check_same_dims(&self, other: &CellSet) {
        assert_eq!(self.dims, other.dims, "cell sets over different rectangles");
    }

    pub fn union_with(&mut self, other: &CellSet) {
        self.check_same_dims(other);
        for (a, &b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    pub fn is_subset(&self, other: &CellSet) -> bool {
        self.check_same_dims(other);
        self.bits.iter().zip(&other.bits).all(|(&a, &b)| !a || b)
    }

    pub fn intersects(&self, other: &CellSet) -> bool {
        self.check_same_dims(other);
        self.bits.iter().zip(&other.bits).any(|(&a, &b)| a && b)
    }

    /// Member cells as `(column, row)`, row-major from the bottom row.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        let m = self.dims.m as usize;
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(i, _)| ((i % m) as u32 + 1, (i / m) as u32 + 1))
    }
}

impl fmt::Debug for CellSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A monotonous polyomino given by its boundary values.
///
/// The tile is defined on boundaries `start ..= start + values.len() - 1`
/// and occupies the columns `start + 1 ..= start + values.len() - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tile {
    direction: Direction,
    start: u32,
    values: Vec<u32>,
}

impl Tile {
    pub fn new(direction: Direction, start: u32, values: Vec<u32>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Precondition("tile has no boundary values".into()));
        }
        if values.contains(&0) {
            return Err(Error::Dimension(
                "tile values are rows and start at 1".into(),
            ));
        }
        let monotone = values.windows(2).all(|w| match direction {
            Direction::Increasing => w[0] <= w[1],
            Direction::Decreasing => w[0] >= w[1],
        });
        if !monotone {
            return Err(Error::Precondition(format!(
                "values {values:?} are not monotone in direction {direction:?}"
            )));
        }
        Ok(Tile {
            direction,
            start,
            values,
        })
    }

    /// Constant tile at row `row` on boundaries `start ..= end`.
    pub fn constant(direction: Direction, start: u32, end: u32, row: u32) -> Result<Self> {
        if end < start {
            return Err(Error::Precondition(format!("empty domain {start}..={end}")));
        }
        Tile::new(direction, start, vec![row; (end - start + 1) as usize])
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn is_increasing(&self) -> bool {
        self.direction == Direction::Increasing
    }

    pub fn start(&self) -> u32 {
        self.start
    }

    /// Last boundary of the domain.
    pub fn end(&self) -> u32 {
        self.start + self.values.len() as u32 - 1
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn first(&self) -> u32 {
        self.values[0]
    }

    pub fn last(&self) -> u32 {
        *self.values.last().expect("tile values are non-empty")
    }

    /// Value at boundary `k`, if `k` lies in the domain.
    pub fn value_at(&self, k: u32) -> Option<u32> {
        k.checked_sub(self.start)
            .and_then(|i| self.values.get(i as usize).copied())
    }

    pub fn is_full_domain(&self, m: u32) -> bool {
        self.start == 0 && self.end() == m
    }

    pub fn is_constant(&self) -> bool {
        self.first() == self.last()
    }

    pub fn with_direction(mut self, direction: Direction) -> Result<Self> {
        if direction != self.direction && !self.is_constant() {
            return Err(Error::Precondition(
                "only constant tiles can change their direction tag".into(),
            ));
        }
        self.direction = direction;
        Ok(self)
    }

    /// Occupied columns with their row interval `(k, low, high)`.
    pub fn columns(&self) -> impl Iterator<Item = (u32, u32, u32)> + '_ {
        self.values
            .windows(2)
            .enumerate()
            .map(move |(i, w)| (self.start + i as u32 + 1, w[0].min(w[1]), w[0].max(w[1])))
    }

    pub fn fits(&self, dims: RectDims) -> Result<()> {
        if self.end() > dims.m {
            return Err(Error::Dimension(format!(
                "tile domain {}..={} exceeds width {}",
                self.start,
                self.end(),
                dims.m
            )));
        }
        if let Some(&v) = self.values.iter().find(|&&v| v > dims.n) {
            return Err(Error::Dimension(format!(
                "tile value {v} exceeds height {}",
                dims.n
            )));
        }
        Ok(())
    }

    pub fn cells(&self, dims: RectDims) -> Result<CellSet> {
        self.fits(dims)?;
        let mut set = CellSet::empty(dims);
        for (k, lo, hi) in self.columns() {
            for l in lo..=hi {
                set.insert(k, l)?;
            }
        }
        Ok(set)
    }

    /// Number of cells, from the closed count `columns + |last - first|`.
    pub fn size(&self) -> usize {
        (self.values.len() - 1) + self.first().abs_diff(self.last()) as usize
    }

    /// Extends the tile constantly to the domain `0 ..= m`.
    pub fn extend_to_full_domain(&self, m: u32) -> Result<Tile> {
        if self.end() > m {
            return Err(Error::Dimension(format!(
                "tile ends at boundary {} beyond width {m}",
                self.end()
            )));
        }
        let mut values = Vec::with_capacity(m as usize + 1);
        values.extend(std::iter::repeat_n(self.first(), self.start as usize));
        values.extend_from_slice(&self.values);
        values.extend(std::iter::repeat_n(self.last(), (m - self.end()) as usize));
        Ok(Tile {
            direction: self.direction,
            start: 0,
            values,
        })
    }

    /// Flips the tile upside down in a rectangle of height `n`; the direction
    /// flips with it.
    pub fn mirrored(&self, n: u32) -> Result<Tile> {
        if self.values.iter().any(|&v| v > n) {
            return Err(Error::Dimension(format!("tile does not fit height {n}")));
        }
        Ok(Tile {
            direction: self.direction.opposite(),
            start: self.start,
            values: self.values.iter().map(|&v| n + 1 - v).collect(),
        })
    }

    /// Recovers the boundary representation of a staircase cell set.
    ///
    /// The occupied columns must be consecutive, each with a contiguous run
    /// of rows, and adjacent runs must share their joining row as dictated by
    /// `direction`.
    pub fn from_cells(direction: Direction, cells: &CellSet) -> Result<Tile> {
        let dims = cells.dims();
        let mut runs: Vec<(u32, u32, u32)> = Vec::new();
        for k in 1..=dims.m {
            let rows: Vec<u32> = (1..=dims.n)
                .filter(|&l| cells.contains(k, l).unwrap_or(false))
                .collect();
            let Some((&lo, &hi)) = rows.first().zip(rows.last()) else {
                continue;
            };
            if (hi - lo + 1) as usize != rows.len() {
                return Err(Error::Precondition(format!(
                    "column {k} of the cell set is not contiguous"
                )));
            }
            if let Some(&(prev, _, _)) = runs.last() {
                if prev + 1 != k {
                    return Err(Error::Precondition("cell set skips a column".into()));
                }
            }
            runs.push((k, lo, hi));
        }
        let Some(&(first_col, lo, hi)) = runs.first() else {
            return Err(Error::Precondition("empty cell set".into()));
        };
        let mut values = Vec::with_capacity(runs.len() + 1);
        match direction {
            Direction::Increasing => {
                values.push(lo);
                for (idx, &(_, lo, hi)) in runs.iter().enumerate() {
                    if idx > 0 && *values.last().unwrap() != lo {
                        return Err(Error::Precondition(
                            "cell set is not an increasing staircase".into(),
                        ));
                    }
                    values.push(hi);
                }
            }
            Direction::Decreasing => {
                values.push(hi);
                for (idx, &(_, lo, hi)) in runs.iter().enumerate() {
                    if idx > 0 && *values.last().unwrap() != hi {
                        return Err(Error::Precondition(
                            "cell set is not a decreasing staircase".into(),
                        ));
                    }
                    values.push(lo);
                }
            }
        }
        Tile::new(direction, first_col - 1, values)
    }

    /// The tile whose cells are those met by the segment of
    /// `y = slope * x + intercept` over `x0 <= x <= x1`.
    ///
    /// The line must avoid integer heights at integer abscissae and stay
    /// strictly between `0` and `n` on the segment.
    pub fn from_line(
        slope: Rational,
        intercept: Rational,
        x0: i64,
        x1: i64,
        dims: RectDims,
    ) -> Result<Tile> {
        if x0 >= x1 {
            return Err(Error::Precondition(format!(
                "need x0 < x1, got {x0} >= {x1}"
            )));
        }
        if x0 < 0 || x1 > i64::from(dims.m) {
            return Err(Error::Dimension(format!(
                "abscissae {x0}..{x1} outside 0..{}",
                dims.m
            )));
        }
        let height = Rational::from_integer(i128::from(dims.n));
        let zero = Rational::from_integer(0);
        let mut values = Vec::with_capacity((x1 - x0 + 1) as usize);
        for k in x0..=x1 {
            let y = slope * Rational::from_integer(i128::from(k)) + intercept;
            if y.is_integer() {
                return Err(Error::DegenerateLine(format!(
                    "line passes through lattice point ({k}, {y})"
                )));
            }
            if y <= zero || y >= height {
                return Err(Error::Dimension(format!(
                    "line leaves the rectangle at x = {k} (y = {y})"
                )));
            }
            values.push(y.ceil().to_integer() as u32);
        }
        let direction = if slope >= zero {
            Direction::Increasing
        } else {
            Direction::Decreasing
        };
        Tile::new(direction, x0 as u32, values)
    }
}

/// A rectangle together with tiles that are claimed to cover it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Covering {
    dims: RectDims,
    tiles: Vec<Tile>,
}

impl Covering {
    /// Bundles tiles with a rectangle; every tile must fit.
    pub fn new(dims: RectDims, tiles: Vec<Tile>) -> Result<Self> {
        for (idx, tile) in tiles.iter().enumerate() {
            tile.fits(dims).map_err(|e| match e {
                Error::Dimension(msg) => Error::Dimension(format!("tile {idx}: {msg}")),
                other => other,
            })?;
        }
        Ok(Covering { dims, tiles })
    }

    /// `n` constant strips, tagged `direction`, each spanning the full width.
    pub fn horizontal_strips(dims: RectDims, direction: Direction) -> Self {
        let tiles = (1..=dims.n)
            .map(|row| Tile::constant(direction, 0, dims.m, row).expect("row >= 1"))
            .collect();
        Covering { dims, tiles }
    }

    pub fn dims(&self) -> RectDims {
        self.dims
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn into_tiles(self) -> Vec<Tile> {
        self.tiles
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    /// `(i, d)`: numbers of increasing and decreasing tiles.
    pub fn class_counts(&self) -> (usize, usize) {
        let inc = self.tiles.iter().filter(|t| t.is_increasing()).count();
        (inc, self.tiles.len() - inc)
    }

    pub fn increasing(&self) -> impl Iterator<Item = &Tile> {
        self.tiles.iter().filter(|t| t.is_increasing())
    }

    pub fn decreasing(&self) -> impl Iterator<Item = &Tile> {
        self.tiles.iter().filter(|t| !t.is_increasing())
    }

    pub fn tile_cells(&self) -> Vec<CellSet> {
        self.tiles
            .iter()
            .map(|t| t.cells(self.dims).expect("validated at construction"))
            .collect()
    }

    pub fn union(&self) -> CellSet {
        let mut set = CellSet::empty(self.dims);
        for cells in self.tile_cells() {
            set.union_with(&cells);
        }
        set
    }

    /// Whether the tiles cover every cell of the rectangle.
    pub fn is_covering(&self) -> bool {
        self.union().is_full()
    }

    pub fn all_full_domain(&self) -> bool {
        self.tiles.iter().all(|t| t.is_full_domain(self.dims.m))
    }

    /// Restricts the covering to the left-most `w` columns.
    pub fn trim(&self, w: u32) -> Result<Covering> {
        if w > self.dims.m {
            return Err(Error::Precondition(format!(
                "cannot trim width {} to {w}",
                self.dims.m
            )));
        }
        if !self.all_full_domain() {
            return Err(Error::Precondition(
                "trim needs tiles defined on the full domain".into(),
            ));
        }
        let tiles = self
            .tiles
            .iter()
            .map(|t| Tile {
                direction: t.direction,
                start: 0,
                values: t.values[..=w as usize].to_vec(),
            })
            .collect();
        Ok(Covering {
            dims: RectDims::new(w, self.dims.n),
            tiles,
        })
    }

    /// Reflects across the line `y = -x`, moved back onto the standard
    /// rectangle: an `m x n` covering becomes an `n x m` covering and cell
    /// `(x, y)` goes to `(n + 1 - y, m + 1 - x)`. Directions are preserved.
    pub fn reflect(&self) -> Result<Covering> {
        let RectDims { m, n } = self.dims;
        let target = self.dims.transposed();
        let mut tiles = Vec::with_capacity(self.tiles.len());
        for tile in &self.tiles {
            let cells = tile.cells(self.dims)?;
            if cells.is_empty() {
                if target.n == 0 {
                    return Err(Error::Dimension(
                        "cannot place a tile in a rectangle of height 0".into(),
                    ));
                }
                tiles.push(Tile::new(tile.direction, 0, vec![1])?);
                continue;
            }
            let mut image = CellSet::empty(target);
            for (x, y) in cells.iter() {
                image.insert(n + 1 - y, m + 1 - x)?;
            }
            tiles.push(Tile::from_cells(tile.direction, &image)?);
        }
        Covering::new(target, tiles)
    }

    /// Flips the covering upside down, swapping increasing and decreasing
    /// tiles.
    pub fn mirror(&self) -> Covering {
        let n = self.dims.n;
        let tiles = self
            .tiles
            .iter()
            .map(|t| t.mirrored(n).expect("validated at construction"))
            .collect();
        Covering {
            dims: self.dims,
            tiles,
        }
    }
}
