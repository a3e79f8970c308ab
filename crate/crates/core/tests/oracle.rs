use monocover::constructor::construct_id_covering;
use monocover::oracle::{
    enumerate_full_domain_tiles, exists_id_covering, max_width_exact, min_cover_exact,
};
use monocover::{formulas, Direction, ExtNat};

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, j| acc * (n + 1 - j) / j)
}

#[test]
fn full_domain_tiles_are_all_monotone_sequences() {
    for m in 1..=5u32 {
        for n in 1..=5u32 {
            for dir in [Direction::Increasing, Direction::Decreasing] {
                let tiles = enumerate_full_domain_tiles(m, n, dir);
                assert_eq!(tiles.len() as u64, binomial((n + m).into(), (m + 1).into()));
                assert!(tiles
                    .iter()
                    .all(|t| t.direction() == dir && t.is_full_domain(m)));
            }
        }
    }
}

#[test]
fn minimum_is_symmetric_and_mirrored_classes_agree() {
    for m in 1..=5u32 {
        for n in 1..=5u32 {
            let (a, _) = min_cover_exact(m, n, None).unwrap();
            let (b, _) = min_cover_exact(n, m, None).unwrap();
            assert_eq!(a, b);
            let (inc, _) = min_cover_exact(m, n, Some(Direction::Increasing)).unwrap();
            let (dec, _) = min_cover_exact(m, n, Some(Direction::Decreasing)).unwrap();
            assert_eq!(inc, dec);
        }
    }
}

#[test]
fn witnesses_have_the_requested_classes() {
    for n in 1..=5u32 {
        for i in 0..=n {
            for d in 0..=n - i {
                if i + d == 0 {
                    continue;
                }
                let max = formulas::max_width_split(n.into(), i.into(), d.into()).unwrap();
                let m = max.finite().map_or(n + 2, |w| w as u32);
                let c = exists_id_covering(m, n, i, d)
                    .unwrap()
                    .expect("width is feasible");
                assert!(c.is_covering());
                assert_eq!(c.class_counts(), (i as usize, d as usize));
                if max.finite().is_some() {
                    assert!(exists_id_covering(m + 1, n, i, d).unwrap().is_none());
                }
            }
        }
    }
}

#[test]
fn constructor_and_search_agree() {
    for n in 2..=6u32 {
        for i in 0..n {
            for d in 0..n - i {
                let exact = max_width_exact(n, i, d).unwrap();
                let w = exact.finite().unwrap() as u32;
                assert!(construct_id_covering(w, n, i, d).is_ok());
            }
        }
    }
    assert_eq!(max_width_exact(4, 2, 2).unwrap(), ExtNat::Unbounded);
}

#[test]
fn search_limits_are_reported() {
    assert!(exists_id_covering(3, 64, 1, 1).is_err());
    assert!(exists_id_covering(0, 3, 1, 1).is_err());
    assert!(max_width_exact(3, 2, 2).is_err());
}
