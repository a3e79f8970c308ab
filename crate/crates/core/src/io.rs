//! JSON serialization and text/vector rendering of coverings.
//!
//! JSON layout:
//!
//! ```json
//! {"m":4,"n":4,"tiles":[{"dir":"dec","start":1,"values":[3,3,1,1]}]}
//! ```
//!
//! Unknown fields are rejected and every tile is validated against the
//! rectangle, so a decoded covering is always well formed.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Covering, Direction, RectDims, Tile};

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
enum Dir {
    #[serde(rename = "inc")]
    Inc,
    #[serde(rename = "dec")]
    Dec,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TileDoc {
    dir: Dir,
    start: u32,
    values: Vec<u32>,
}

#[derive(Debug, Serialize)]
struct CoveringDoc<'a> {
    m: u32,
    n: u32,
    tiles: &'a [TileDoc],
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoveringIn {
    m: u32,
    n: u32,
    tiles: Vec<serde_json::Value>,
}

fn tile_doc(t: &Tile) -> TileDoc {
    TileDoc {
        dir: match t.direction() {
            Direction::Increasing => Dir::Inc,
            Direction::Decreasing => Dir::Dec,
        },
        start: t.start(),
        values: t.values().to_vec(),
    }
}

/// Compact single-line JSON.
pub fn tile_to_json(t: &Tile) -> String {
    serde_json::to_string(&tile_doc(t)).expect("plain data serializes")
}

/// Compact single-line JSON.
pub fn covering_to_json(c: &Covering) -> String {
    let tiles: Vec<TileDoc> = c.tiles().iter().map(tile_doc).collect();
    let doc = CoveringDoc {
        m: c.dims().m,
        n: c.dims().n,
        tiles: &tiles,
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

pub fn covering_from_json(text: &str) -> Result<Covering> {
    let doc: CoveringIn = serde_json::from_str(text).map_err(|e| Error::Parse {
        tile: None,
        message: e.to_string(),
    })?;
    let dims = RectDims::new(doc.m, doc.n);
    let mut tiles = Vec::with_capacity(doc.tiles.len());
    for (idx, value) in doc.tiles.into_iter().enumerate() {
        let parse_err = |message: String| Error::Parse {
            tile: Some(idx),
            message,
        };
        let t: TileDoc = serde_json::from_value(value).map_err(|e| parse_err(e.to_string()))?;
        let direction = match t.dir {
            Dir::Inc => Direction::Increasing,
            Dir::Dec => Direction::Decreasing,
        };
        let tile = Tile::new(direction, t.start, t.values).map_err(|e| parse_err(e.to_string()))?;
        tile.fits(dims).map_err(|e| parse_err(e.to_string()))?;
        tiles.push(tile);
    }
    Covering::new(dims, tiles)
}

/// Text grid, top row first. Each cell shows the 1-based index of the tile
/// covering it, `*` if several tiles do and `.` if none. With more than nine
/// tiles the fields are right-aligned and separated by single spaces.
pub fn ascii_render(c: &Covering) -> String {
    let dims = c.dims();
    let cells = c.tile_cells();
    let wide = cells.len() > 9;
    let width = cells.len().to_string().len();
    let mut out = String::new();
    for l in (1..=dims.n).rev() {
        for k in 1..=dims.m {
            let mut owners = cells
                .iter()
                .enumerate()
                .filter(|(_, s)| s.contains(k, l).expect("cell in range"))
                .map(|(idx, _)| idx + 1);
            let field = match (owners.next(), owners.next()) {
                (None, _) => ".".to_string(),
                (Some(idx), None) => idx.to_string(),
                (Some(_), Some(_)) => "*".to_string(),
            };
            if wide {
                if k > 1 {
                    out.push(' ');
                }
                let _ = write!(out, "{field:>width$}");
            } else {
                out.push_str(&field);
            }
        }
        out.push('\n');
    }
    out
}

/// Reads back a grid produced by [`ascii_render`] and returns its dimensions
/// with the number of cells shown as uncovered.
pub fn ascii_coverage(text: &str) -> Result<(RectDims, usize)> {
    let bad = |message: String| Error::Parse {
        tile: None,
        message,
    };
    let rows: Vec<Vec<&str>> = text
        .lines()
        .map(|line| {
            if line.contains(' ') {
                line.split_whitespace().collect()
            } else {
                line.char_indices()
                    .map(|(i, ch)| &line[i..i + ch.len_utf8()])
                    .collect()
            }
        })
        .collect();
    let m = rows.first().map_or(0, Vec::len);
    let mut uncovered = 0;
    for (idx, row) in rows.iter().enumerate() {
        if row.len() != m {
            return Err(bad(format!(
                "grid line {} has {} fields, expected {m}",
                idx + 1,
                row.len()
            )));
        }
        for field in row {
            match *field {
                "." => uncovered += 1,
                "*" => {}
                f if f.parse::<u32>().is_ok_and(|v| v >= 1) => {}
                f => return Err(bad(format!("unexpected grid field {f:?}"))),
            }
        }
    }
    let dims = RectDims::new(
        u32::try_from(m).map_err(|_| bad("grid too wide".into()))?,
        u32::try_from(rows.len()).map_err(|_| bad("grid too tall".into()))?,
    );
    Ok((dims, uncovered))
}

const CELL: u32 = 40;
const MARGIN: u32 = 20;

/// Centres of the cells of a tile in path order, reduced to turning points.
fn turning_points(t: &Tile, n: u32) -> Vec<(u32, u32)> {
    let mut cells = Vec::new();
    for (k, lo, hi) in t.columns() {
        if t.is_increasing() {
            cells.extend((lo..=hi).map(|l| (k, l)));
        } else {
            cells.extend((lo..=hi).rev().map(|l| (k, l)));
        }
    }
    let centre = |(k, l): (u32, u32)| {
        (
            MARGIN + (k - 1) * CELL + CELL / 2,
            MARGIN + (n - l) * CELL + CELL / 2,
        )
    };
    let mut pts: Vec<(u32, u32)> = Vec::with_capacity(cells.len());
    for p in cells.into_iter().map(centre) {
        if pts.len() >= 2 {
            let (a, b) = (pts[pts.len() - 2], pts[pts.len() - 1]);
            if (a.0 == b.0 && b.0 == p.0) || (a.1 == b.1 && b.1 == p.1) {
                pts.pop();
            }
        }
        pts.push(p);
    }
    pts
}

/// Standalone SVG document: the grid plus one polyline per tile through the
/// centres of its cells. A single-cell tile is drawn as a dot.
pub fn svg_render(c: &Covering) -> String {
    let RectDims { m, n } = c.dims();
    let (w, h) = (m * CELL + 2 * MARGIN, n * CELL + 2 * MARGIN);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(
        s,
        r#"<rect x="{MARGIN}" y="{MARGIN}" width="{}" height="{}" fill="white" stroke="black" stroke-width="2"/>"#,
        m * CELL,
        n * CELL
    );
    let mut grid = String::new();
    for k in 1..m {
        let _ = write!(
            grid,
            "M{} {}V{}",
            MARGIN + k * CELL,
            MARGIN,
            MARGIN + n * CELL
        );
    }
    for l in 1..n {
        let _ = write!(
            grid,
            "M{} {}H{}",
            MARGIN,
            MARGIN + l * CELL,
            MARGIN + m * CELL
        );
    }
    if !grid.is_empty() {
        let _ = writeln!(
            s,
            r##"<path d="{grid}" fill="none" stroke="#999999" stroke-width="1" stroke-dasharray="2 3"/>"##
        );
    }
    for (idx, tile) in c.tiles().iter().enumerate() {
        let hue = (idx * 137) % 360;
        let colour = format!("hsl({hue},70%,40%)");
        let pts = turning_points(tile, n);
        match pts.as_slice() {
            [] => {}
            [(x, y)] => {
                let _ = writeln!(
                    s,
                    r#"<circle cx="{x}" cy="{y}" r="6" fill="{colour}" data-tile="{}"/>"#,
                    idx + 1
                );
            }
            _ => {
                let points: Vec<String> = pts.iter().map(|(x, y)| format!("{x},{y}")).collect();
                let _ = writeln!(
                    s,
                    r#"<polyline points="{}" fill="none" stroke="{colour}" stroke-width="5" stroke-linecap="round" stroke-linejoin="round" data-tile="{}"/>"#,
                    points.join(" "),
                    idx + 1
                );
            }
        }
    }
    s.push_str("</svg>\n");
    s
}
