use num_bigint::BigUint;
use proptest::prelude::*;
use surfcount_core::bounds::{curve_bound, general_count_for, sphere_count_general};
use surfcount_core::chunk::build_chunks;
use surfcount_core::farey::{band_surface, farey_path, intersection_number};
use surfcount_core::{parse_gauss, parse_pd, Error, Slope};

const TREFOIL_PD: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const TREFOIL_GAUSS: &str = "1 -2 3 -1 2 -3\nsigns: + + +";

#[test]
fn gauss_and_pd_give_the_same_chunks() {
    let a = build_chunks(&parse_pd(TREFOIL_PD).unwrap()).unwrap();
    let b = build_chunks(&parse_gauss(TREFOIL_GAUSS).unwrap()).unwrap();
    assert_eq!(a.sides.len(), b.sides.len());
    for (x, y) in a.sides.iter().zip(&b.sides) {
        assert_eq!(x.edges.len(), y.edges.len());
        assert_eq!(x.quads.len(), y.quads.len());
    }
}

#[test]
fn reports_recompute_to_their_value() {
    let r = general_count_for(4, -3, 1, 2).unwrap();
    assert_eq!(r.recompute(), r.value);
    assert!(r.value.bits() > 1000);
}

#[test]
fn positive_chi_is_rejected() {
    assert!(matches!(curve_bound(3, 1), Err(Error::OutOfDomain(_))));
}

proptest! {
    #[test]
    fn bounds_grow_with_crossings(n in 1u64..30, m in 1i64..4) {
        let a = sphere_count_general(n, -m).unwrap().value;
        let b = sphere_count_general(n + 1, -m).unwrap().value;
        prop_assert!(a < b);
        prop_assert!(curve_bound(n, -m).unwrap() >= BigUint::from(6 * n));
    }

    #[test]
    fn farey_paths_are_chains_of_neighbours(p in -60i64..60, q in 1i64..60) {
        let Ok(target) = Slope::new(2 * p, 2 * q + 1) else { return Ok(()) };
        let path = farey_path(target).unwrap();
        prop_assert_eq!(path.target(), target);
        for w in path.vertices.windows(2) {
            prop_assert_eq!(intersection_number(&w[0], &w[1]), 2);
        }
        if p == 0 {
            prop_assert!(band_surface(&path).is_err());
        } else {
            let s = band_surface(&path).unwrap();
            prop_assert_eq!(s.chi, -(path.edge_count() as i64));
            prop_assert_eq!(s.genus, path.edge_count() as u64);
        }
    }
}
