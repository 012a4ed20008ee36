//! The spine of the pair of pants: one vertex, two loops `a` and `b`, and a
//! cyclic order of the four half-edges at the vertex.
//!
//! In the universal cover (the Cayley tree of the free group) every vertex
//! inherits the same cyclic order, which makes the tree planar and gives a
//! circular order on its ends. A half-edge is named by the letter that leaves
//! the vertex through it: `a` leaves through the start of loop `a`, `A`
//! through its end.

use std::cmp::Ordering;
use std::sync::OnceLock;

use serde::Serialize;

use crate::class::{canonical_class, CurveClass, Orientation};
use crate::error::{Error, Result};
use crate::word::{Letter, ReducedWord};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RibbonStructure {
    order: [Letter; 4],
    #[serde(skip)]
    pos: [u8; 4],
}

impl RibbonStructure {
    /// Builds the structure, rejecting cyclic orders whose boundary has
    /// other than three components.
    pub fn from_cyclic_order(order: [Letter; 4]) -> Result<Self> {
        let mut pos = [u8::MAX; 4];
        for (i, x) in order.iter().enumerate() {
            pos[x.index()] = i as u8;
        }
        let name = || order.iter().map(|x| x.as_char()).collect::<String>();
        if pos.contains(&u8::MAX) {
            return Err(Error::InvalidRibbon(name()));
        }
        let r = RibbonStructure { order, pos };
        if r.boundary_cycles().len() != 3 {
            return Err(Error::InvalidRibbon(name()));
        }
        Ok(r)
    }

    /// The structure whose boundary words are `a`, `b` and `ab`.
    ///
    /// Found by searching all cyclic orders rather than written down.
    pub fn pair_of_pants() -> &'static RibbonStructure {
        static PANTS: OnceLock<RibbonStructure> = OnceLock::new();
        PANTS.get_or_init(|| {
            let wanted: Vec<CurveClass> = ["a", "b", "ab"]
                .iter()
                .map(|s| crate::class::parse_class(s, Orientation::Unoriented).unwrap())
                .collect();
            Self::candidates()
                .into_iter()
                .find(|r| {
                    let mut got: Vec<CurveClass> = r
                        .boundary_cycles()
                        .iter()
                        .map(|w| canonical_class(w, Orientation::Unoriented).unwrap())
                        .collect();
                    got.sort();
                    got == wanted
                })
                .expect("some cyclic order has boundary a, b, ab")
        })
    }

    /// Every cyclic order (with `a` first) that bounds a pair of pants.
    pub fn candidates() -> Vec<RibbonStructure> {
        use Letter::*;
        let rest = [AInv, B, BInv];
        let mut out = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    if let Ok(r) = Self::from_cyclic_order([A, rest[i], rest[j], rest[k]]) {
                        out.push(r);
                    }
                }
            }
        }
        out
    }

    pub fn order(&self) -> [Letter; 4] {
        self.order
    }

    #[inline]
    pub fn position(&self, x: Letter) -> u8 {
        self.pos[x.index()]
    }

    #[inline]
    fn successor(&self, x: Letter) -> Letter {
        self.order[(self.position(x) as usize + 1) % 4]
    }

    /// Words read along the boundary components: after traversing `x` the
    /// walk arrives on half-edge `x⁻¹` and leaves on the next one in the
    /// cyclic order.
    pub fn boundary_cycles(&self) -> Vec<ReducedWord> {
        let mut seen = [false; 4];
        let mut out = Vec::new();
        for start in Letter::ALL {
            if seen[start.index()] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x.index()] {
                seen[x.index()] = true;
                cycle.push(x);
                x = self.successor(x.inverse());
            }
            out.push(crate::word::free_reduce(cycle));
        }
        out
    }

    /// Rank of the outgoing letter `x` at a vertex entered along `prev`
    /// (`None` at the base vertex, where the cut sits just before the first
    /// half-edge of the order).
    #[inline]
    pub(crate) fn rank(&self, prev: Option<Letter>, x: Letter) -> u8 {
        match prev {
            None => self.position(x),
            Some(p) => (self.position(x) + 4 - self.position(p.inverse())) % 4,
        }
    }
}

/// Outcome of comparing two rays from the base vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RayOrder {
    Less,
    Greater,
    EqualTail,
}

/// The right-infinite word `w_k w_{k+1} ...` read cyclically from a class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ray {
    pub base: CurveClass,
    pub offset: usize,
}

impl Ray {
    pub fn new(base: CurveClass, offset: usize) -> Self {
        assert!(offset < base.len(), "offset out of range");
        Ray { base, offset }
    }

    pub(crate) fn end(&self) -> End<'_> {
        End::forward(self.base.letters(), self.offset)
    }
}

/// An end of the Cayley tree given by a periodic infinite reduced word
/// starting at the base vertex: either the forward reading of a cyclic word
/// from `start`, or the backward reading of the inverse letters ending just
/// before `start`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct End<'a> {
    word: &'a [Letter],
    start: usize,
    forward: bool,
}

impl<'a> End<'a> {
    pub(crate) fn forward(word: &'a [Letter], start: usize) -> Self {
        End { word, start, forward: true }
    }

    pub(crate) fn backward(word: &'a [Letter], start: usize) -> Self {
        End { word, start, forward: false }
    }

    #[inline]
    pub(crate) fn letter(&self, k: usize) -> Letter {
        let n = self.word.len();
        if self.forward {
            self.word[(self.start + k) % n]
        } else {
            self.word[(self.start + n - 1 - k % n) % n].inverse()
        }
    }

    fn period(&self) -> usize {
        self.word.len()
    }
}

/// Position of `e1` relative to `e2` in the linear order of ends obtained by
/// cutting the circle at infinity next to the base vertex.
///
/// Two periodic words with periods `p` and `q` that agree on `p + q` letters
/// agree forever.
#[inline]
pub(crate) fn compare_ends(e1: &End<'_>, e2: &End<'_>, ribbon: &RibbonStructure) -> RayOrder {
    let limit = e1.period() + e2.period();
    let mut prev = None;
    for k in 0..limit {
        let (x, y) = (e1.letter(k), e2.letter(k));
        if x != y {
            return match ribbon.rank(prev, x).cmp(&ribbon.rank(prev, y)) {
                Ordering::Less => RayOrder::Less,
                Ordering::Greater => RayOrder::Greater,
                Ordering::Equal => unreachable!("distinct letters have distinct ranks"),
            };
        }
        prev = Some(x);
    }
    RayOrder::EqualTail
}

/// Compares two rays in the circular order at infinity determined by
/// `ribbon`.
pub fn compare_rays(r1: &Ray, r2: &Ray, ribbon: &RibbonStructure) -> RayOrder {
    compare_ends(&r1.end(), &r2.end(), ribbon)
}
