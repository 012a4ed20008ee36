use pants_core::lab::{self, k_equivalent};
use pants_core::{
    canonical_class, enumerate_classes, free_reduce, parse_class, CurveClass, Engine, EnumFilter, Letter, Orientation,
    PowerPath,
};
use proptest::prelude::*;

fn c(s: &str) -> CurveClass {
    parse_class(s, Orientation::Unoriented).unwrap()
}

fn arb_class(max: usize, orientation: Orientation) -> impl Strategy<Value = CurveClass> {
    prop::collection::vec(0usize..4, 1..=max).prop_filter_map("trivial", move |v| {
        canonical_class(&free_reduce(v.into_iter().map(Letter::from_index)), orientation).ok()
    })
}

#[test]
fn parity_to_length_six() {
    assert!(lab::parity_scan(6).unwrap().pass());
}

#[test]
fn boundary_classes_meet_nothing() {
    let e = Engine::default();
    for d in enumerate_classes(5, &EnumFilter::default()).unwrap() {
        for b in ["a", "b", "ab", "aa", "CC"] {
            assert_eq!(e.intersection(&d, &c(b)), 0, "{d} {b}");
        }
    }
}

#[test]
fn census_members_have_the_right_count() {
    for k in 0..=3 {
        for d in lab::classes_with_si(k, None).unwrap() {
            assert_eq!(Engine::default().self_intersection(&d), k);
            assert!(!d.is_power());
        }
    }
}

#[test]
fn k_equivalence_is_an_equivalence() {
    let classes = enumerate_classes(4, &EnumFilter::primitive()).unwrap();
    for x in &classes {
        assert!(k_equivalent(x, x, 2).unwrap());
    }
    let report = lab::equivalence_partition(&classes, 2).unwrap();
    // Within a cell every pair is equivalent, across cells none is.
    for cell in &report.cells {
        for y in &cell.members[1..] {
            assert!(k_equivalent(&cell.members[0], y, 2).unwrap());
            assert!(k_equivalent(y, &cell.members[0], 2).unwrap());
        }
    }
    for (i, a) in report.cells.iter().enumerate() {
        for b in &report.cells[i + 1..] {
            assert!(!k_equivalent(&a.members[0], &b.members[0], 2).unwrap());
        }
    }
}

proptest! {
    #[test]
    fn intersection_is_symmetric(x in arb_class(8, Orientation::Unoriented), y in arb_class(8, Orientation::Unoriented)) {
        let e = Engine::default();
        prop_assert_eq!(e.intersection(&x, &y), e.intersection(&y, &x));
    }

    #[test]
    fn orientation_does_not_matter(x in arb_class(8, Orientation::Oriented), y in arb_class(8, Orientation::Oriented)) {
        let e = Engine::default();
        let i = e.intersection(&x, &y);
        prop_assert_eq!(e.intersection(&x.inverse(), &y), i);
        prop_assert_eq!(e.intersection(&x, &y.inverse()), i);
        prop_assert_eq!(e.self_intersection(&x.inverse()), e.self_intersection(&x));
        let (ux, uy) = (x.with_orientation(Orientation::Unoriented), y.with_orientation(Orientation::Unoriented));
        prop_assert_eq!(e.intersection(&ux, &uy), i);
    }

    #[test]
    fn intersections_are_even(x in arb_class(9, Orientation::Unoriented), y in arb_class(9, Orientation::Unoriented)) {
        prop_assert_eq!(Engine::default().intersection(&x, &y) % 2, 0);
    }

    #[test]
    fn self_intersection_of_powers(x in arb_class(5, Orientation::Unoriented), n in 2usize..=4) {
        let root = x.root();
        let e = Engine::default();
        let expected = e.self_intersection(&root) * n * n + n - 1;
        prop_assert_eq!(Engine::new(PowerPath::Direct).self_intersection(&root.pow(n)), expected);
    }

    #[test]
    fn intersection_of_powers(
        x in arb_class(5, Orientation::Unoriented),
        y in arb_class(4, Orientation::Unoriented),
        n in 1usize..=4,
        m in 1usize..=2,
    ) {
        let (d, b) = (x.root(), y.root());
        let e = Engine::default();
        let direct = Engine::new(PowerPath::Direct).intersection(&d.pow(n), &b.pow(m));
        prop_assert_eq!(direct, n * m * e.intersection(&d, &b));
    }

    #[test]
    fn self_intersection_is_half_the_self_pair(x in arb_class(8, Orientation::Unoriented)) {
        // i(x, x) counts every self-crossing twice, and the spiral of a
        // power is not a crossing of two copies.
        prop_assume!(!x.is_power());
        let e = Engine::default();
        prop_assert_eq!(e.intersection(&x, &x), 2 * e.self_intersection(&x));
    }
}
