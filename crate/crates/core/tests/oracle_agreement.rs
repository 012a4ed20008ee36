//! The combinatorial engine against the hyperbolic double-coset count.

use pants_core::hyperbolic::Oracle;
use pants_core::lab::pairs::oracle_agreement;
use pants_core::{canonical_class, free_reduce, CurveClass, Engine, Letter, Orientation, PowerPath};
use proptest::prelude::*;

#[test]
fn all_pairs_to_length_five() {
    for o in [Orientation::Unoriented, Orientation::Oriented] {
        let r = oracle_agreement(5, o).unwrap();
        assert!(r.pass(), "{o:?}: {:?}", &r.mismatches[..r.mismatches.len().min(5)]);
    }
}

fn arb_class(min: usize, max: usize) -> impl Strategy<Value = CurveClass> {
    prop::collection::vec(0usize..4, min..=max).prop_filter_map("trivial or short", move |v| {
        let w = free_reduce(v.into_iter().map(Letter::from_index));
        canonical_class(&w, Orientation::Unoriented)
            .ok()
            .filter(|c| c.len() >= min)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn longer_self_intersections(c in arb_class(7, 9)) {
        let engine = Engine::default().self_intersection(&c);
        prop_assert_eq!(Oracle::default().self_intersection(&c).unwrap(), engine);
    }

    #[test]
    fn longer_pairs(c in arb_class(5, 7), d in arb_class(5, 7)) {
        let engine = Engine::default().intersection(&c, &d);
        prop_assert_eq!(Oracle::default().intersection(&c, &d).unwrap(), engine);
    }

    #[test]
    fn powers_agree(c in arb_class(2, 3), n in 2usize..=3) {
        let p = c.pow(n);
        let direct = Engine::new(PowerPath::Direct).self_intersection(&p);
        prop_assert_eq!(Oracle::default().self_intersection(&p).unwrap(), direct);
    }
}
