//! Scans over all classes up to a length: triples, the forms meeting `aB`
//! twice, and the `(2, 2, 2)` class.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::equivalence::{triple_of, Triple};
use crate::class::{enumerate_classes, parse_class, CurveClass, EnumFilter, Orientation};
use crate::engine::Engine;
use crate::error::Result;

/// Sorted triples the scan at length 8 must reach.
pub const EXPECTED_TRIPLES: [[usize; 3]; 5] = [[2, 2, 2], [2, 2, 4], [4, 4, 4], [4, 4, 6], [4, 4, 8]];
pub const EXPECTED_TRIPLES_LEN: usize = 8;

#[derive(Clone, Debug, Serialize)]
pub struct TripleRow {
    pub class: CurveClass,
    pub triple: Triple,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ObservedTriple {
    pub triple: Triple,
    pub count: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TripleScan {
    pub max_len: usize,
    pub rows: Vec<TripleRow>,
    /// Sorted triples with the number of classes giving each, ascending.
    pub observed: Vec<ObservedTriple>,
    /// Rows with `max > 2·min`.
    pub ratio_violations: Vec<TripleRow>,
    /// Rows with `max = 2·min` that are not `(q, q, 2q)` with `q` even.
    pub equality_violations: Vec<TripleRow>,
    pub odd_rows: Vec<TripleRow>,
    /// Entries of [`EXPECTED_TRIPLES`] not observed.
    pub missing: Vec<Triple>,
}

impl TripleScan {
    pub fn conjecture_holds(&self) -> bool {
        self.ratio_violations.is_empty() && self.equality_violations.is_empty()
    }

    /// The expected triples are only required from length
    /// [`EXPECTED_TRIPLES_LEN`] on.
    pub fn pass(&self) -> bool {
        self.conjecture_holds()
            && self.odd_rows.is_empty()
            && (self.max_len < EXPECTED_TRIPLES_LEN || self.missing.is_empty())
    }
}

fn equality_shape_ok(t: Triple) -> bool {
    let [x, y, z] = t.sorted().0;
    x == y && z == 2 * x && x > 0 && x % 2 == 0
}

/// Triples of every non-power, non-boundary class up to `max_len`.
pub fn scan_triples(max_len: usize) -> Result<TripleScan> {
    let classes = enumerate_classes(max_len, &EnumFilter::essential())?;
    let rows: Vec<TripleRow> = classes
        .into_par_iter()
        .map(|class| {
            let triple = triple_of(&class);
            TripleRow { class, triple }
        })
        .collect();
    let mut observed: BTreeMap<Triple, usize> = BTreeMap::new();
    let mut ratio_violations = Vec::new();
    let mut equality_violations = Vec::new();
    let mut odd_rows = Vec::new();
    for row in &rows {
        let t = row.triple;
        *observed.entry(t.sorted()).or_insert(0) += 1;
        if t.largest() > 2 * t.smallest() {
            ratio_violations.push(row.clone());
        } else if t.largest() == 2 * t.smallest() && !equality_shape_ok(t) {
            equality_violations.push(row.clone());
        }
        if !t.all_even() {
            odd_rows.push(row.clone());
        }
    }
    let missing = EXPECTED_TRIPLES
        .iter()
        .map(|&t| Triple(t))
        .filter(|t| !observed.contains_key(t))
        .collect();
    let observed = observed
        .into_iter()
        .map(|(triple, count)| ObservedTriple { triple, count })
        .collect();
    Ok(TripleScan {
        max_len,
        rows,
        observed,
        ratio_violations,
        equality_violations,
        odd_rows,
        missing,
    })
}

/// The eight forms `Cᵐ x yⁿ` / `Cᵐ xⁿ y` of classes meeting `aB` twice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TwoForm {
    #[serde(rename = "C^m a^n b")]
    CANb,
    #[serde(rename = "C^m a^n B")]
    CANBInv,
    #[serde(rename = "C^m a b^n")]
    CABn,
    #[serde(rename = "C^m a B^n")]
    CABInvN,
    #[serde(rename = "C^m A^n b")]
    CAInvNb,
    #[serde(rename = "C^m A^n B")]
    CAInvNBInv,
    #[serde(rename = "C^m A b^n")]
    CAInvBn,
    #[serde(rename = "C^m A B^n")]
    CAInvBInvN,
}

impl TwoForm {
    pub const ALL: [TwoForm; 8] = [
        TwoForm::CANb,
        TwoForm::CANBInv,
        TwoForm::CABn,
        TwoForm::CABInvN,
        TwoForm::CAInvNb,
        TwoForm::CAInvNBInv,
        TwoForm::CAInvBn,
        TwoForm::CAInvBInvN,
    ];

    /// `(first, second, exponent on the first)`.
    fn parts(self) -> (char, char, bool) {
        match self {
            TwoForm::CANb => ('a', 'b', true),
            TwoForm::CANBInv => ('a', 'B', true),
            TwoForm::CABn => ('a', 'b', false),
            TwoForm::CABInvN => ('a', 'B', false),
            TwoForm::CAInvNb => ('A', 'b', true),
            TwoForm::CAInvNBInv => ('A', 'B', true),
            TwoForm::CAInvBn => ('A', 'b', false),
            TwoForm::CAInvBInvN => ('A', 'B', false),
        }
    }

    /// The instance written out, with `C` kept as shorthand.
    pub fn spelling(self, m: usize, n: usize) -> String {
        let (x, y, on_first) = self.parts();
        let (ex, ey) = if on_first { (n, 1) } else { (1, n) };
        let mut s = "C".repeat(m);
        s.extend(std::iter::repeat_n(x, ex));
        s.extend(std::iter::repeat_n(y, ey));
        s
    }

    /// The class of the form, or `None` when the word is trivial.
    pub fn member(self, m: usize, n: usize) -> Option<CurveClass> {
        parse_class(&self.spelling(m, n), Orientation::Unoriented).ok()
    }
}

impl fmt::Display for TwoForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y, on_first) = self.parts();
        if on_first {
            write!(f, "C^m {x}^n {y}")
        } else {
            write!(f, "C^m {x} {y}^n")
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormMatch {
    pub form: TwoForm,
    pub m: usize,
    pub n: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TwoMember {
    pub class: CurveClass,
    pub matches: Vec<FormMatch>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TwoIntersectionReport {
    pub max_len: usize,
    pub members: Vec<TwoMember>,
    /// Classes meeting `aB` twice that fit none of the forms.
    pub non_members: Vec<CurveClass>,
}

impl TwoIntersectionReport {
    pub fn pass(&self) -> bool {
        self.non_members.is_empty()
    }
}

/// Canonical classes of all form instances `Cᵐ…` with `m >= 0, n >= 1`
/// whose expanded word is at most `max_len` long, before reduction.
pub fn form_index(max_len: usize) -> BTreeMap<CurveClass, Vec<FormMatch>> {
    let mut index: BTreeMap<CurveClass, Vec<FormMatch>> = BTreeMap::new();
    for form in TwoForm::ALL {
        // C^m x^n y^1 expands to 2m + n + 1 letters before reduction.
        for m in 0..=max_len / 2 {
            for n in 1..=max_len.saturating_sub(2 * m + 1) {
                if let Some(c) = form.member(m, n) {
                    if c.len() <= max_len {
                        index.entry(c).or_default().push(FormMatch { form, m, n });
                    }
                }
            }
        }
    }
    index
}

/// Non-power classes up to `max_len` with `i(·, aB) = 2`, each matched
/// against the eight forms.
pub fn classify_two_intersections(max_len: usize) -> Result<TwoIntersectionReport> {
    let ab = parse_class("aB", Orientation::Unoriented)?;
    let engine = Engine::default();
    let hits: Vec<CurveClass> = enumerate_classes(max_len, &EnumFilter::primitive())?
        .into_par_iter()
        .filter(|c| engine.intersection(c, &ab) == 2)
        .collect();
    let index = form_index(max_len);
    let mut members = Vec::new();
    let mut non_members = Vec::new();
    for class in hits {
        match index.get(&class) {
            Some(matches) => members.push(TwoMember {
                class,
                matches: matches.clone(),
            }),
            None => non_members.push(class),
        }
    }
    Ok(TwoIntersectionReport {
        max_len,
        members,
        non_members,
    })
}

/// Non-power classes up to `max_len` with triple `(2, 2, 2)`. This is an
/// observed list, not a proof of the complete answer.
pub fn equiv_class_222(max_len: usize) -> Result<Vec<CurveClass>> {
    let classes = enumerate_classes(max_len, &EnumFilter::primitive())?;
    Ok(classes
        .into_par_iter()
        .filter(|c| triple_of(c) == Triple([2, 2, 2]))
        .collect())
}

/// Sorted set of observed triples, for reports.
pub fn observed_set(scan: &TripleScan) -> BTreeSet<Triple> {
    scan.observed.iter().map(|o| o.triple).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn short_scan_is_all_222() {
        let scan = scan_triples(3).unwrap();
        assert!(scan.conjecture_holds());
        assert_eq!(observed_set(&scan).into_iter().collect::<Vec<_>>(), [Triple([2, 2, 2])]);
    }

    #[test]
    fn equality_shape() {
        assert!(equality_shape_ok(Triple([4, 2, 2])));
        assert!(!equality_shape_ok(Triple([3, 3, 6])));
        assert!(!equality_shape_ok(Triple([2, 3, 4])));
    }

    #[test]
    fn form_spellings() {
        assert_eq!(TwoForm::CABInvN.spelling(0, 1), "aB");
        assert_eq!(TwoForm::CAInvNb.spelling(2, 3), "CCAAAb");
        assert_eq!(TwoForm::CABInvN.member(0, 1).unwrap().to_string(), "aB");
        assert_eq!(TwoForm::CANb.to_string(), "C^m a^n b");
        let index = form_index(3);
        let ab = parse_class("aB", Orientation::Unoriented).unwrap();
        assert!(index[&ab].contains(&FormMatch { form: TwoForm::CABInvN, m: 0, n: 1 }));
    }

    #[test]
    fn two_intersections_short() {
        let report = classify_two_intersections(5).unwrap();
        assert!(report.pass(), "{:?}", report.non_members);
        assert!(report.members.iter().any(|m| m.class.to_string() == "aB"));
    }

    #[test]
    fn class_222_contains_the_simple_examples() {
        let found: Vec<String> = equiv_class_222(4).unwrap().iter().map(|c| c.to_string()).collect();
        for w in ["aB", "aBB", "aab", "abb"] {
            let c = parse_class(w, Orientation::Unoriented).unwrap().to_string();
            assert!(found.contains(&c), "{w}");
        }
    }
}
