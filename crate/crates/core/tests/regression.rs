//! Frozen datasets, recorded once the engine matched the oracle on every pair
//! of length <= 6. Census caps are the defaults (2k + 2, sweep of 4 lengths).

use pants_core::lab;
use pants_core::{enumerate_classes, EnumFilter};

#[test]
fn census_sizes() {
    let sizes: Vec<usize> = (0..=5).map(|k| lab::classes_with_si(k, None).unwrap().len()).collect();
    assert_eq!(sizes, [3, 3, 9, 22, 45, 84]);
}

#[test]
fn partition_cells_to_length_six() {
    let classes = enumerate_classes(6, &EnumFilter::primitive()).unwrap();
    assert_eq!(classes.len(), 99);
    let mut summary = Vec::new();
    for k in 1..=3 {
        let r = lab::equivalence_partition(&classes, k).unwrap();
        let largest = r.cells.iter().map(|c| c.members.len()).max().unwrap();
        summary.push((r.probes.len(), r.cells.len(), largest));
    }
    assert_eq!(summary, [(3, 11, 42), (9, 41, 8), (22, 79, 5)]);
}

#[test]
fn class_222_to_length_six() {
    let found: Vec<String> = lab::equiv_class_222(6).unwrap().iter().map(|c| c.to_string()).collect();
    let expected = [
        "aB", "aab", "aaB", "abb", "aBB", "aaab", "aaaB", "abbb", "aBBB", "aaaab", "aaaaB", "aabab", "ababb",
        "abbbb", "aBBBB", "aaaaab", "aaaaaB", "abbbbb", "aBBBBB",
    ];
    assert_eq!(found, expected);
}
