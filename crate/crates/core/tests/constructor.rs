use monocover::constructor::{construct_id_covering, construct_min_covering, cover};
use monocover::normalizer::is_anchored;
use monocover::{formulas, Error, ExtNat, RectDims};

#[test]
fn every_feasible_width_is_built() {
    for n in 1..=12u32 {
        for i in 0..=n {
            for d in 0..=n - i {
                let max = formulas::max_width_split(n.into(), i.into(), d.into()).unwrap();
                let top = max.finite().map_or(3 * n, |w| w as u32);
                for m in 0..=top.min(40) {
                    let c = construct_id_covering(m, n, i, d)
                        .unwrap_or_else(|e| panic!("{m}x{n} with ({i}, {d}): {e}"));
                    assert_eq!(c.dims(), RectDims::new(m, n));
                    assert!(c.is_covering(), "{m}x{n} with ({i}, {d})");
                    assert_eq!(c.class_counts(), (i as usize, d as usize));
                }
                if let ExtNat::Finite(w) = max {
                    assert!(matches!(
                        construct_id_covering(w as u32 + 1, n, i, d),
                        Err(Error::Infeasible(_))
                    ));
                }
            }
        }
    }
}

#[test]
fn extremal_coverings_are_anchored_and_symmetric() {
    for e in 1..=8u32 {
        for i in 0..=8u32 {
            for d in 0..=8u32 {
                let c = cover(e, i, d, None).unwrap();
                assert!(is_anchored(&c), "e={e}, i={i}, d={d}");
                let swapped = cover(e, d, i, None).unwrap();
                assert_eq!(c.dims(), swapped.dims());
                let mirrored = c.mirror();
                assert!(mirrored.is_covering());
                assert_eq!(mirrored.class_counts(), (d as usize, i as usize));
            }
        }
    }
}

#[test]
fn zero_excess_takes_the_requested_width() {
    let c = cover(0, 2, 3, Some(17)).unwrap();
    assert_eq!(c.dims(), RectDims::new(17, 5));
    assert!(c.is_covering() && is_anchored(&c));
    assert!(matches!(cover(0, 2, 3, None), Err(Error::Usage(_))));
    assert!(matches!(cover(1, 2, 3, Some(4)), Err(Error::Usage(_))));
}

#[test]
fn minimum_coverings_of_large_boards() {
    for (m, n) in [(1000, 3), (3, 1000), (150, 150), (400, 90), (57, 211)] {
        let c = construct_min_covering(m, n).unwrap();
        assert!(c.is_covering());
        assert_eq!(
            c.len() as u64,
            formulas::min_tiles(m.into(), n.into()),
            "{m}x{n}"
        );
    }
    assert!(construct_min_covering(0, 5).unwrap().is_empty());
    assert!(construct_min_covering(5, 0).unwrap().is_empty());
}
