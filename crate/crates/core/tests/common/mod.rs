#![allow(dead_code)]

use monocover::{Covering, Direction, RectDims, Tile};
use rand::rngs::StdRng;
use rand::Rng;

/// Random tile fitting `dims` (`m, n >= 1`), possibly on a partial domain.
pub fn random_tile(rng: &mut StdRng, dims: RectDims, direction: Direction) -> Tile {
    let start = rng.gen_range(0..dims.m);
    let end = if rng.gen_bool(0.5) {
        dims.m
    } else {
        rng.gen_range(start + 1..=dims.m)
    };
    random_tile_on(rng, dims.n, direction, start, end)
}

pub fn random_full_tile(rng: &mut StdRng, dims: RectDims, direction: Direction) -> Tile {
    random_tile_on(rng, dims.n, direction, 0, dims.m)
}

fn random_tile_on(rng: &mut StdRng, n: u32, direction: Direction, start: u32, end: u32) -> Tile {
    let mut values: Vec<u32> = (start..=end).map(|_| rng.gen_range(1..=n)).collect();
    values.sort_unstable();
    // keep the height change small sometimes so tiles look like strips too
    if rng.gen_bool(0.3) {
        let base = values[0];
        for v in &mut values {
            *v = (*v).min(base + 1);
        }
    }
    if direction == Direction::Decreasing {
        values.reverse();
    }
    Tile::new(direction, start, values).expect("sorted values are monotone")
}

pub fn random_direction(rng: &mut StdRng) -> Direction {
    if rng.gen_bool(0.5) {
        Direction::Increasing
    } else {
        Direction::Decreasing
    }
}

/// Random covering of a random board of at most `max x max` cells using at
/// most `n` tiles: random tiles, then constant strips over every row that
/// still has a gap. Tiles are dropped until the count fits.
pub fn random_covering(rng: &mut StdRng, max: u32) -> Covering {
    let dims = RectDims::new(rng.gen_range(1..=max), rng.gen_range(1..=max));
    let mut tiles: Vec<Tile> = (0..rng.gen_range(1..=dims.n))
        .map(|_| {
            let dir = random_direction(rng);
            random_tile(rng, dims, dir)
        })
        .collect();
    if rng.gen_bool(0.2) && !tiles.is_empty() {
        let dup = tiles[rng.gen_range(0..tiles.len())].clone();
        tiles.push(dup);
    }
    loop {
        let partial = Covering::new(dims, tiles.clone()).expect("tiles fit");
        let union = partial.union();
        let gap_rows: Vec<u32> = (1..=dims.n)
            .filter(|&l| (1..=dims.m).any(|k| !union.contains(k, l).unwrap()))
            .collect();
        if tiles.len() + gap_rows.len() <= dims.n as usize {
            for l in gap_rows {
                let dir = random_direction(rng);
                tiles.push(Tile::constant(dir, 0, dims.m, l).unwrap());
            }
            let c = Covering::new(dims, tiles).expect("tiles fit");
            assert!(c.is_covering());
            return c;
        }
        tiles.remove(rng.gen_range(0..tiles.len()));
    }
}

/// Random family of tiles on a random board, not necessarily covering.
pub fn random_family(rng: &mut StdRng, max: u32, direction: Direction) -> (RectDims, Vec<Tile>) {
    let dims = RectDims::new(rng.gen_range(1..=max), rng.gen_range(1..=max));
    let count = rng.gen_range(1..=5);
    let tiles = (0..count)
        .map(|_| random_tile(rng, dims, direction))
        .collect();
    (dims, tiles)
}

/// Boundary values of a tile after constant extension to `0..=m`.
pub fn full_values(t: &Tile, m: u32) -> Vec<u32> {
    t.extend_to_full_domain(m).unwrap().values().to_vec()
}
