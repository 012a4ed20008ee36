//! Self-intersection and intersection numbers by counting linked pairs.
//!
//! Lift both curves to axes in the planar Cayley tree. Two axes that cross
//! share a segment; translating the first vertex of that segment (in the
//! direction of the first axis) to the base vertex picks a unique
//! representative of each crossing pair modulo the deck group. Through the
//! base vertex pass exactly `len` axes of a cyclic word, one per offset, so
//! crossings are counted by offset pairs `(i, j)` such that
//!
//! * the first axis enters the base vertex along an edge the second does not
//!   use (the shared segment starts here), and
//! * the four ends of the two axes interleave on the circle at infinity.
//!
//! Axes that coincide never satisfy the first condition, so parallel copies
//! contribute nothing. Counting over all offsets of a power `dⁿ` visits each
//! axis of `d` exactly `n` times.

use serde::{Deserialize, Serialize};

use crate::class::CurveClass;
use crate::ribbon::{compare_ends, End, RayOrder, RibbonStructure};
use crate::word::Letter;

/// How powers are handled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PowerPath {
    /// Work on the primitive roots and apply `si(dⁿ) = n²·si(d) + n − 1`,
    /// `i(dⁿ, eᵐ) = nm·i(d, e)`.
    #[default]
    Formula,
    /// Count linked pairs over all offsets of the power itself. The `n − 1`
    /// crossings of an n-fold spiral still come from the push-off rule.
    Direct,
}

#[derive(Clone, Copy, Debug)]
pub struct Engine {
    ribbon: &'static RibbonStructure,
    power_path: PowerPath,
}

impl Default for Engine {
    fn default() -> Self {
        Engine {
            ribbon: RibbonStructure::pair_of_pants(),
            power_path: PowerPath::Formula,
        }
    }
}

impl Engine {
    pub fn new(power_path: PowerPath) -> Self {
        Engine {
            power_path,
            ..Default::default()
        }
    }

    pub fn ribbon(&self) -> &'static RibbonStructure {
        self.ribbon
    }

    pub fn power_path(&self) -> PowerPath {
        self.power_path
    }

    pub fn self_intersection(&self, c: &CurveClass) -> usize {
        match self.power_path {
            PowerPath::Formula => {
                let n = c.exponent();
                let root = &c.letters()[..c.root_len()];
                power_self_intersection(self.ordered_self_count(root, usize::MAX) / 2, n)
            }
            PowerPath::Direct => {
                let ordered = self.ordered_self_count(c.letters(), usize::MAX);
                debug_assert!(ordered.is_multiple_of(2));
                ordered / 2 + c.exponent() - 1
            }
        }
    }

    /// `Some(si)` if `si(c) <= cap`, `None` otherwise. Stops counting early.
    pub fn self_intersection_at_most(&self, c: &CurveClass, cap: usize) -> Option<usize> {
        let n = c.exponent();
        let root = &c.letters()[..c.root_len()];
        // si(dⁿ) >= n² si(d), so si(d) <= cap / n² is necessary.
        let root_cap = cap / (n * n);
        let ordered = self.ordered_self_count(root, 2 * root_cap + 1);
        let si = power_self_intersection(ordered / 2, n);
        (ordered <= 2 * root_cap && si <= cap).then_some(si)
    }

    pub fn intersection(&self, c1: &CurveClass, c2: &CurveClass) -> usize {
        match self.power_path {
            PowerPath::Formula => {
                let r1 = &c1.letters()[..c1.root_len()];
                let r2 = &c2.letters()[..c2.root_len()];
                c1.exponent() * c2.exponent() * self.linked_pairs(r1, r2, usize::MAX)
            }
            PowerPath::Direct => self.linked_pairs(c1.letters(), c2.letters(), usize::MAX),
        }
    }

    pub fn intersection_vector(&self, c: &CurveClass, probes: &[CurveClass]) -> Vec<usize> {
        probes.iter().map(|p| self.intersection(c, p)).collect()
    }

    fn ordered_self_count(&self, w: &[Letter], stop_above: usize) -> usize {
        self.linked_pairs(w, w, stop_above)
    }

    /// Number of offset pairs whose axes cross, as described in the module
    /// docs. Counting stops once the total exceeds `stop_above`.
    fn linked_pairs(&self, w: &[Letter], v: &[Letter], stop_above: usize) -> usize {
        let r = self.ribbon;
        let (n, m) = (w.len(), v.len());
        let mut count = 0;
        for i in 0..n {
            let f1 = End::forward(w, i);
            let b1 = End::backward(w, i);
            let entry = b1.letter(0);
            for j in 0..m {
                let f2 = End::forward(v, j);
                let b2 = End::backward(v, j);
                if entry == f2.letter(0) || entry == b2.letter(0) {
                    continue;
                }
                if linked(&f1, &b1, &f2, &b2, r) {
                    count += 1;
                    if count > stop_above {
                        return count;
                    }
                }
            }
        }
        count
    }
}

/// `a(ℓ, n) = ℓn² + n − 1`.
pub fn power_self_intersection(root_si: usize, n: usize) -> usize {
    root_si * n * n + n - 1
}

/// True iff exactly one end of the second axis lies between the ends of the
/// first.
fn linked(f1: &End<'_>, b1: &End<'_>, f2: &End<'_>, b2: &End<'_>, r: &RibbonStructure) -> bool {
    let between = |x: &End<'_>| {
        let s = compare_ends(x, f1, r);
        let t = compare_ends(x, b1, r);
        debug_assert!(s != RayOrder::EqualTail && t != RayOrder::EqualTail);
        s != t
    };
    between(f2) != between(b2)
}

pub fn self_intersection(c: &CurveClass) -> usize {
    Engine::default().self_intersection(c)
}

pub fn intersection(c1: &CurveClass, c2: &CurveClass) -> usize {
    Engine::default().intersection(c1, c2)
}

pub fn intersection_vector(c: &CurveClass, probes: &[CurveClass]) -> Vec<usize> {
    Engine::default().intersection_vector(c, probes)
}
