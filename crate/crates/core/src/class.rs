//! Free homotopy classes as canonical cyclic words.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{Letter, ReducedWord};

/// Whether a class is identified with its inverse.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Oriented,
    #[default]
    Unoriented,
}

/// One free homotopy class of closed curves.
///
/// `word` is cyclically reduced and is the least rotation under
/// `a < A < b < B` (in unoriented mode, least over the rotations of the word
/// and of its inverse). The word is `root^exponent` where `root` is its first
/// `root_len` letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveClass {
    word: ReducedWord,
    orientation: Orientation,
    root_len: usize,
    exponent: usize,
}

impl CurveClass {
    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    pub fn letters(&self) -> &[Letter] {
        self.word.letters()
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    /// Always false; classes are never trivial.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn root_len(&self) -> usize {
        self.root_len
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn is_power(&self) -> bool {
        self.exponent >= 2
    }

    /// The primitive root, as a class in the same orientation mode.
    pub fn root(&self) -> CurveClass {
        CurveClass {
            word: ReducedWord::from_reduced(self.letters()[..self.root_len].to_vec()),
            orientation: self.orientation,
            root_len: self.root_len,
            exponent: 1,
        }
    }

    pub fn pow(&self, n: usize) -> CurveClass {
        assert!(n >= 1, "power must be positive");
        CurveClass {
            word: ReducedWord::from_reduced(self.letters().repeat(n)),
            orientation: self.orientation,
            root_len: self.root_len,
            exponent: self.exponent * n,
        }
    }

    pub fn inverse(&self) -> CurveClass {
        canonical_class(&self.word.inverse(), self.orientation).expect("inverse of a class is a class")
    }

    pub fn with_orientation(&self, orientation: Orientation) -> CurveClass {
        canonical_class(&self.word, orientation).expect("class stays non-trivial")
    }

    pub fn is_boundary_parallel(&self) -> bool {
        is_boundary_parallel(self)
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

/// Shortest first, then lexicographic.
impl Ord for CurveClass {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters().cmp(other.letters()))
            .then_with(|| (self.orientation as u8).cmp(&(other.orientation as u8)))
    }
}

impl PartialOrd for CurveClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for CurveClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&self.word)
    }
}

/// Compares the rotation of `w` starting at `i` with the one starting at `j`.
fn cmp_rotations(w: &[Letter], i: usize, v: &[Letter], j: usize) -> Ordering {
    let n = w.len();
    for k in 0..n {
        let c = w[(i + k) % n].cmp(&v[(j + k) % n]);
        if c != Ordering::Equal {
            return c;
        }
    }
    Ordering::Equal
}

fn least_rotation(w: &[Letter]) -> usize {
    (1..w.len()).fold(0, |best, i| {
        if cmp_rotations(w, i, w, best) == Ordering::Less {
            i
        } else {
            best
        }
    })
}

fn rotated(w: &[Letter], i: usize) -> Vec<Letter> {
    w[i..].iter().chain(&w[..i]).copied().collect()
}

fn inverse_letters(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|x| x.inverse()).collect()
}

fn smallest_period(w: &[Letter]) -> usize {
    let n = w.len();
    (1..=n)
        .find(|&p| n.is_multiple_of(p) && (0..n).all(|k| w[k] == w[(k + p) % n]))
        .unwrap_or(n)
}

/// True if `w` (cyclically reduced) is already the canonical rotation.
pub(crate) fn is_canonical_word(w: &[Letter], orientation: Orientation) -> bool {
    if (1..w.len()).any(|i| cmp_rotations(w, i, w, 0) == Ordering::Less) {
        return false;
    }
    if orientation == Orientation::Unoriented {
        let inv = inverse_letters(w);
        if (0..w.len()).any(|i| cmp_rotations(&inv, i, w, 0) == Ordering::Less) {
            return false;
        }
    }
    true
}

/// Builds a class from a word that is known to be canonical.
pub(crate) fn class_from_canonical(letters: Vec<Letter>, orientation: Orientation) -> CurveClass {
    debug_assert!(is_canonical_word(&letters, orientation));
    let root_len = smallest_period(&letters);
    let exponent = letters.len() / root_len;
    CurveClass {
        word: ReducedWord::from_reduced(letters),
        orientation,
        root_len,
        exponent,
    }
}

/// Cyclically reduces `w` and picks the canonical rotation.
pub fn canonical_class(w: &ReducedWord, orientation: Orientation) -> Result<CurveClass> {
    let cyc = w.cyclic_reduction();
    if cyc.is_empty() {
        return Err(Error::TrivialClass);
    }
    let w = cyc.letters();
    let mut best = rotated(w, least_rotation(w));
    if orientation == Orientation::Unoriented {
        let inv = inverse_letters(w);
        let cand = rotated(&inv, least_rotation(&inv));
        if cand < best {
            best = cand;
        }
    }
    Ok(class_from_canonical(best, orientation))
}

/// Parses a word and returns its class.
pub fn parse_class(text: &str, orientation: Orientation) -> Result<CurveClass> {
    canonical_class(&text.parse()?, orientation)
}

/// True iff the primitive root is one of the boundary words `a`, `b`, `ab`
/// (up to inversion and rotation).
pub fn is_boundary_parallel(c: &CurveClass) -> bool {
    use Letter::*;
    let root = c.root().with_orientation(Orientation::Unoriented);
    matches!(root.letters(), [A] | [B] | [A, B])
}

/// Filters for [`enumerate_classes`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumFilter {
    pub non_power_only: bool,
    pub orientation: Orientation,
    pub exclude_boundary_parallel: bool,
    /// Maximum number of classes before giving up.
    pub limit: usize,
}

impl Default for EnumFilter {
    fn default() -> Self {
        EnumFilter {
            non_power_only: false,
            orientation: Orientation::Unoriented,
            exclude_boundary_parallel: false,
            limit: 5_000_000,
        }
    }
}

impl EnumFilter {
    pub fn all(orientation: Orientation) -> Self {
        EnumFilter {
            orientation,
            ..Default::default()
        }
    }

    /// Non-power classes in unoriented mode, the convention used for all
    /// equivalence questions.
    pub fn primitive() -> Self {
        EnumFilter {
            non_power_only: true,
            ..Default::default()
        }
    }

    pub fn essential() -> Self {
        EnumFilter {
            non_power_only: true,
            exclude_boundary_parallel: true,
            ..Default::default()
        }
    }

    fn admits(&self, c: &CurveClass) -> bool {
        (!self.non_power_only || !c.is_power())
            && (!self.exclude_boundary_parallel || !c.is_boundary_parallel())
    }
}

/// Calls `visit` on every cyclically reduced word of length `len`, in
/// lexicographic order.
pub(crate) fn for_each_cyclic_word(len: usize, mut visit: impl FnMut(&[Letter])) {
    fn go(buf: &mut Vec<Letter>, len: usize, visit: &mut dyn FnMut(&[Letter])) {
        if buf.len() == len {
            if buf.len() == 1 || buf[0] != buf[len - 1].inverse() {
                visit(buf);
            }
            return;
        }
        for x in Letter::ALL {
            if buf.last().is_some_and(|&y| y == x.inverse()) {
                continue;
            }
            buf.push(x);
            go(buf, len, visit);
            buf.pop();
        }
    }
    if len > 0 {
        go(&mut Vec::with_capacity(len), len, &mut visit);
    }
}

/// Canonical classes of exactly length `len` passing `filter`, in
/// lexicographic order.
pub fn classes_of_length(len: usize, filter: &EnumFilter) -> Vec<CurveClass> {
    let mut out = Vec::new();
    for_each_cyclic_word(len, |w| {
        if is_canonical_word(w, filter.orientation) {
            let c = class_from_canonical(w.to_vec(), filter.orientation);
            if filter.admits(&c) {
                out.push(c);
            }
        }
    });
    out
}

/// One canonical representative per class of length at most `max_len`,
/// shortest first, then lexicographic.
pub fn enumerate_classes(max_len: usize, filter: &EnumFilter) -> Result<Vec<CurveClass>> {
    let mut out = Vec::new();
    for len in 1..=max_len {
        // Rough upper bound on the work before doing it.
        let words = 4.0 * 3f64.powi(len as i32 - 1);
        if words > 64.0 * filter.limit as f64 {
            return Err(Error::ResourceLimit(format!(
                "enumerating length {len} exceeds the class limit {}",
                filter.limit
            )));
        }
        out.extend(classes_of_length(len, filter));
        if out.len() > filter.limit {
            return Err(Error::ResourceLimit(format!(
                "more than {} classes of length <= {max_len}",
                filter.limit
            )));
        }
    }
    Ok(out)
}
