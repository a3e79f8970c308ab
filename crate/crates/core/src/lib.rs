//! Minimum coverings of lattice rectangles by monotonous polyominoes.
//!
//! A monotonous polyomino (ribbon tile, rim hook) is the staircase of cells
//! met by the graph of a monotone function. This crate evaluates the exact
//! minimum number of such tiles needed to cover an `m x n` rectangle,
//! constructs coverings attaining it, and certifies both against an
//! exhaustive search on small boards.
//!
//! - [`geometry`]: tiles, cell sets, coverings and their transforms.
//! - [`formulas`]: integer closed forms for minimum counts and widths.
//! - [`normalizer`]: rewriting tile families into disjoint, anchored ones.
//! - [`constructor`]: explicit optimal coverings.
//! - [`oracle`]: brute-force ground truth.
//! - [`io`]: JSON, ASCII and SVG.

pub mod constructor;
pub mod error;
pub mod formulas;
pub mod geometry;
pub mod io;
pub mod normalizer;
pub mod oracle;

pub use error::{Error, Result};
pub use geometry::{CellSet, Covering, Direction, ExtNat, Rational, RectDims, Tile};
