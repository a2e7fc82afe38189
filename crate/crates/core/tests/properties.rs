use proptest::prelude::*;

use interbody::arrangement::enumerate_chambers;
use interbody::radial::{radial_oracle, radial_value};
use interbody::rational::{int, to_f64};
use interbody::translation::affine_arrangement;
use interbody::{build_polygon, build_polytope, Polytope, Vector};

fn point(d: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(-9i64..=9, d).prop_map(|c| Vector::from_ints(&c))
}

fn direction(d: usize) -> impl Strategy<Value = Vector> {
    point(d).prop_filter("non-zero", |v| !v.is_zero())
}

fn polygon() -> impl Strategy<Value = Polytope> {
    prop::collection::vec(point(2), 3..8).prop_filter_map("full-dimensional", |pts| build_polygon(&pts).ok())
}

fn polytope3() -> impl Strategy<Value = Polytope> {
    prop::collection::vec(point(3), 4..9).prop_filter_map("full-dimensional", |pts| build_polytope(&pts, None).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn translation_round_trip(p in polygon(), t in point(2)) {
        let back = p.translate(&t).unwrap().translate(&-&t).unwrap();
        prop_assert_eq!(back.vertices(), p.vertices());
    }

    #[test]
    fn vertex_order_does_not_matter(p in polygon(), x in direction(2)) {
        let mut pts = p.vertices().to_vec();
        pts.reverse();
        let q = build_polygon(&pts).unwrap();
        prop_assert_eq!(radial_value(&p, &x).unwrap(), radial_value(&q, &x).unwrap());
    }

    #[test]
    fn homogeneous_of_degree_minus_one(p in polygon(), x in direction(2), k in 1i64..20) {
        let r = radial_value(&p, &x).unwrap();
        let scaled = radial_value(&p, &x.scale(&int(k))).unwrap();
        prop_assert_eq!(scaled * int(k), r);
    }

    #[test]
    fn even_in_the_direction(p in polytope3(), x in direction(3)) {
        prop_assert_eq!(radial_value(&p, &x).unwrap(), radial_value(&p, &-&x).unwrap());
    }

    #[test]
    fn negation_maps_chambers_to_negated_chambers(p in polygon()) {
        let q = p.negate();
        let a: Vec<_> = enumerate_chambers(&p).unwrap().into_iter().map(|c| c.cocircuit.negated()).collect();
        let b: Vec<_> = enumerate_chambers(&q).unwrap().into_iter().map(|c| c.cocircuit).collect();
        for s in &a {
            prop_assert!(b.contains(s));
        }
        prop_assert_eq!(a.len(), b.len());
    }

    #[test]
    fn arrangement_moves_against_translation(p in polygon(), t in point(2)) {
        let moved = affine_arrangement(&p.translate(&t).unwrap());
        for (h, g) in affine_arrangement(&p).iter().zip(&moved) {
            prop_assert_eq!(&h.normal, &g.normal);
            prop_assert_eq!(&h.offset - h.normal.dot(&t), g.offset.clone());
        }
    }

    #[test]
    fn agrees_with_float_slicing(p in polytope3(), x in direction(3)) {
        let exact = to_f64(&radial_value(&p, &x).unwrap());
        let float = radial_oracle(&p, &x).unwrap();
        prop_assert!((exact - float).abs() <= 1e-9 * float.abs().max(1e-3));
    }
}
