use desargues_core::arithmetic::{add, add_with_aux, negate, LineFrame};
use desargues_core::models::{FinitePlane, MoultonPlane, QPoint, RationalPlane};
use desargues_core::rational::{q, q_frac, Q};
use desargues_core::AffinePlane;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Q> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| q_frac(n, d))
}

fn point() -> impl Strategy<Value = QPoint> {
    (rat(), rat()).prop_map(|(x, y)| QPoint::new(x, y))
}

/// `O + t·(I − O)`.
fn along(o: &QPoint, i: &QPoint, t: &Q) -> QPoint {
    QPoint::new(&o.x + t * (&i.x - &o.x), &o.y + t * (&i.y - &o.y))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn rational_sums_are_vector_sums(o in point(), i in point(), s in rat(), t in rat(), aux in point()) {
        prop_assume!(o != i);
        let plane = RationalPlane::new();
        let f = LineFrame::new(&plane, o.clone(), i.clone()).unwrap();
        prop_assume!(!f.contains(&aux));
        let (a, b) = (along(&o, &i, &s), along(&o, &i, &t));
        let c = add_with_aux(&f, &a, &b, &aux).unwrap().result;
        prop_assert_eq!(c, along(&o, &i, &(&s + &t)));
        prop_assert_eq!(negate(&f, &a).unwrap().result, along(&o, &i, &-s));
    }

    #[test]
    fn moulton_join_contains_both_points(a in point(), b in point()) {
        prop_assume!(a != b);
        let plane = MoultonPlane::new();
        let l = plane.join(&a, &b).unwrap();
        prop_assert!(plane.incident(&a, &l).unwrap() && plane.incident(&b, &l).unwrap());
        prop_assert_eq!(plane.lines_through_pair(&a, &b), vec![l.clone()]);
        let p = QPoint::new(&a.x + q(1), a.y.clone());
        let m = plane.parallel_through(&p, &l).unwrap();
        prop_assert!(plane.incident(&p, &m).unwrap() && plane.parallel(&l, &m).unwrap());
    }

    #[test]
    fn moulton_origin_is_neutral(s in -20i64..20, aux in point()) {
        let plane = MoultonPlane::new();
        let f = LineFrame::new(&plane, QPoint::from_ints(0, 0), QPoint::from_ints(1, 0)).unwrap();
        prop_assume!(!f.contains(&aux));
        let (o, a) = (QPoint::from_ints(0, 0), QPoint::from_ints(s, 0));
        prop_assert_eq!(&add_with_aux(&f, &o, &a, &aux).unwrap().result, &a);
        prop_assert_eq!(&add_with_aux(&f, &a, &o, &aux).unwrap().result, &a);
    }

    #[test]
    fn finite_sums_are_associative(p in prop::sample::select(vec![3u64, 5, 7, 11]), x in 0u32..11, y in 0u32..11, z in 0u32..11) {
        let plane = FinitePlane::new(p).unwrap();
        let n = p as u32;
        let f = LineFrame::new(&plane, plane.pt(0, 1), plane.pt(1, 2)).unwrap();
        let pt = |t: u32| plane.pt(t % n, (1 + t) % n);
        let (a, b, c) = (pt(x), pt(y), pt(z));
        let left = add(&f, &add(&f, &a, &b).unwrap(), &c).unwrap();
        let right = add(&f, &a, &add(&f, &b, &c).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(left, pt(x % n + y % n + z % n));
    }
}
