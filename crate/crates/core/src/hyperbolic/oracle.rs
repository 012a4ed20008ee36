//! Intersection numbers from crossing double cosets.
//!
//! For hyperbolic `u`, `v` the crossings of minimal representatives are in
//! bijection with double cosets `⟨u⟩ g ⟨v⟩` for which the axis of `u`
//! crosses `g·axis(v)`. Elements `g` are enumerated by length, each crossing
//! one is reduced to the canonical representative of its double coset
//! (shortest, then lexicographically least) and the distinct
//! representatives are counted. The count is accepted once it is unchanged
//! over three consecutive radii.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::matrix::{classify_element, ElementKind, Representation};
use crate::class::CurveClass;
use crate::error::{Error, Result};
use crate::word::{free_reduce, Letter};

/// Result of a converged count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleCount {
    pub value: usize,
    /// Radius `R` at which the counts for `R`, `R + 1`, `R + 2` agreed.
    pub radius: usize,
    pub counts: Vec<usize>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Oracle {
    /// Largest word length enumerated; defaults to `2·(|u| + |v|) + 8`.
    pub max_radius: Option<usize>,
}

impl Oracle {
    pub fn with_max_radius(max_radius: usize) -> Self {
        Oracle {
            max_radius: Some(max_radius),
        }
    }

    fn max_radius_for(&self, l1: usize, l2: usize) -> usize {
        self.max_radius.unwrap_or(2 * (l1 + l2) + 8)
    }

    pub fn intersection(&self, c1: &CurveClass, c2: &CurveClass) -> Result<usize> {
        Ok(self.intersection_count(c1, c2)?.value)
    }

    pub fn intersection_count(&self, c1: &CurveClass, c2: &CurveClass) -> Result<OracleCount> {
        if is_parabolic(c1)? || is_parabolic(c2)? {
            return Ok(OracleCount { value: 0, radius: 0, counts: vec![] });
        }
        let max_radius = self.max_radius_for(c1.len(), c2.len());
        crossing_cosets(c1.letters(), c2.letters(), max_radius)
    }

    pub fn self_intersection(&self, c: &CurveClass) -> Result<usize> {
        Ok(self.self_intersection_count(c)?.value)
    }

    /// Ordered crossings are halved; a power `dⁿ` adds the `n − 1`
    /// crossings of its spiral.
    pub fn self_intersection_count(&self, c: &CurveClass) -> Result<OracleCount> {
        let spiral = c.exponent() - 1;
        if is_parabolic(c)? {
            return Ok(OracleCount { value: spiral, radius: 0, counts: vec![] });
        }
        let max_radius = self.max_radius_for(c.len(), c.len());
        let mut count = crossing_cosets(c.letters(), c.letters(), max_radius)?;
        if count.value % 2 == 1 {
            return Err(Error::OddCount(count.value));
        }
        count.value = count.value / 2 + spiral;
        Ok(count)
    }
}

pub fn oracle_intersection(c1: &CurveClass, c2: &CurveClass, max_radius: usize) -> Result<usize> {
    Oracle::with_max_radius(max_radius).intersection(c1, c2)
}

pub fn oracle_self_intersection(c: &CurveClass, max_radius: usize) -> Result<usize> {
    Oracle::with_max_radius(max_radius).self_intersection(c)
}

fn is_parabolic(c: &CurveClass) -> Result<bool> {
    let m = Representation::pair_of_pants().matrix_of(c.root().letters());
    Ok(classify_element(&m)? == ElementKind::Parabolic)
}

/// Fixed-point form `r X² + (s − p) XY − q Y²` of the word's matrix.
fn axis_form(w: &[Letter]) -> [BigInt; 3] {
    let m = Representation::pair_of_pants().matrix_of(w);
    [m.r.clone(), &m.s - &m.p, -m.q]
}

/// Number of crossing double cosets `⟨u⟩ g ⟨v⟩`, excluding the `g` that map
/// the axis of `v` onto the axis of `u`.
fn crossing_cosets(u: &[Letter], v: &[Letter], max_radius: usize) -> Result<OracleCount> {
    // Every crossing double coset has a representative of length at most
    // ⌊|u|/2⌋ + ⌊|v|/2⌋, so the window starts there.
    let mut radius = (u.len() / 2 + v.len() / 2).min(max_radius.saturating_sub(2));
    loop {
        let top = radius + 2;
        let reps = match enumerate::<i128>(u, v, top) {
            Some(r) => r,
            None => enumerate::<BigInt>(u, v, top).expect("big integers do not overflow"),
        }?;
        let counts: Vec<usize> = (radius..=top)
            .map(|r| reps.iter().filter(|w| w.len() <= r).count())
            .collect();
        if counts.iter().all(|&c| c == counts[0]) {
            return Ok(OracleCount {
                value: counts[0],
                radius,
                counts,
            });
        }
        if top + 1 > max_radius {
            return Err(Error::NotConverged { max_radius, counts });
        }
        radius += 1;
    }
}

/// Integer type for the forms during enumeration. `None` from any method
/// means the fixed-width type overflowed.
trait Coef: Clone + Sized {
    fn from_big(x: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    /// `f ∘ N` for the 2×2 integer matrix `N = [[n0, n1], [n2, n3]]`.
    fn transform(f: &[Self; 3], n: &[i64; 4]) -> Option<[Self; 3]>;
    fn resultant_sign(f: &[Self; 3], g: &[Self; 3]) -> Ordering;
}

fn big_form<T: Coef>(f: &[T; 3]) -> [BigInt; 3] {
    [f[0].to_big(), f[1].to_big(), f[2].to_big()]
}

fn big_resultant_sign(f: &[BigInt; 3], g: &[BigInt; 3]) -> Ordering {
    super::geodesic::resultant((&f[0], &f[1], &f[2]), (&g[0], &g[1], &g[2])).cmp(&BigInt::zero())
}

fn proportional(f: &[BigInt; 3], g: &[BigInt; 3]) -> bool {
    &f[0] * &g[1] == &g[0] * &f[1] && &f[0] * &g[2] == &g[0] * &f[2] && &f[1] * &g[2] == &g[1] * &f[2]
}

impl Coef for i128 {
    fn from_big(x: &BigInt) -> Option<Self> {
        x.to_i128()
    }

    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }

    fn transform(f: &[i128; 3], n: &[i64; 4]) -> Option<[i128; 3]> {
        let [a, b, c] = *f;
        let [n0, n1, n2, n3] = n.map(i128::from);
        let term = |x: i128, y: i128, z: i128| -> Option<i128> {
            a.checked_mul(x)?.checked_add(b.checked_mul(y)?)?.checked_add(c.checked_mul(z)?)
        };
        Some([
            term(n0 * n0, n0 * n2, n2 * n2)?,
            term(2 * n0 * n1, n0 * n3 + n1 * n2, 2 * n2 * n3)?,
            term(n1 * n1, n1 * n3, n3 * n3)?,
        ])
    }

    fn resultant_sign(f: &[i128; 3], g: &[i128; 3]) -> Ordering {
        let fast = || -> Option<Ordering> {
            let det = |x: i128, y: i128, z: i128, w: i128| x.checked_mul(y)?.checked_sub(z.checked_mul(w)?);
            let ac = det(f[0], g[2], g[0], f[2])?;
            let ab = det(f[0], g[1], g[0], f[1])?;
            let bc = det(f[1], g[2], g[1], f[2])?;
            Some(ac.checked_mul(ac)?.checked_sub(ab.checked_mul(bc)?)?.cmp(&0))
        };
        fast().unwrap_or_else(|| big_resultant_sign(&big_form(f), &big_form(g)))
    }
}

impl Coef for BigInt {
    fn from_big(x: &BigInt) -> Option<Self> {
        Some(x.clone())
    }

    fn to_big(&self) -> BigInt {
        self.clone()
    }

    fn transform(f: &[BigInt; 3], n: &[i64; 4]) -> Option<[BigInt; 3]> {
        let [a, b, c] = f;
        let [n0, n1, n2, n3] = n.map(BigInt::from);
        Some([
            a * (&n0 * &n0) + b * (&n0 * &n2) + c * (&n2 * &n2),
            a * (BigInt::from(2) * &n0 * &n1) + b * (&n0 * &n3 + &n1 * &n2) + c * (BigInt::from(2) * &n2 * &n3),
            a * (&n1 * &n1) + b * (&n1 * &n3) + c * (&n3 * &n3),
        ])
    }

    fn resultant_sign(f: &[BigInt; 3], g: &[BigInt; 3]) -> Ordering {
        big_resultant_sign(f, g)
    }
}

struct Search<'a, T> {
    u: &'a [Letter],
    v: &'a [Letter],
    axis_u: [T; 3],
    axis_u_big: [BigInt; 3],
    /// Matrices of the inverse generators, indexed by letter.
    inverse_gens: [[i64; 4]; 4],
    /// `g` with its first letter last.
    rev: Vec<Letter>,
    reps: BTreeSet<Vec<Letter>>,
}

/// Canonical representatives of all crossing double cosets met by words of
/// length at most `radius`. `None` if `T` overflowed.
fn enumerate<T: Coef>(u: &[Letter], v: &[Letter], radius: usize) -> Option<Result<BTreeSet<Vec<Letter>>>> {
    let rep = Representation::pair_of_pants();
    let inverse_gens = Letter::ALL.map(|x| {
        rep.generator(x.inverse())
            .entries_i64()
            .expect("generator entries are small")
    });
    let axis_u_big = axis_form(u);
    let axis_v_big = axis_form(v);
    let axis_u = [
        T::from_big(&axis_u_big[0])?,
        T::from_big(&axis_u_big[1])?,
        T::from_big(&axis_u_big[2])?,
    ];
    let axis_v = [
        T::from_big(&axis_v_big[0])?,
        T::from_big(&axis_v_big[1])?,
        T::from_big(&axis_v_big[2])?,
    ];
    let mut s = Search {
        u,
        v,
        axis_u,
        axis_u_big,
        inverse_gens,
        rev: Vec::with_capacity(radius),
        reps: BTreeSet::new(),
    };
    match s.visit(&axis_v, radius) {
        None => None,
        Some(Err(e)) => Some(Err(e)),
        Some(Ok(())) => Some(Ok(s.reps)),
    }
}

impl<T: Coef> Search<'_, T> {
    /// `form` is the axis of `g v g⁻¹` for the current `g`.
    fn visit(&mut self, form: &[T; 3], radius: usize) -> Option<Result<()>> {
        match T::resultant_sign(&self.axis_u, form) {
            Ordering::Less => {
                let g: Vec<Letter> = self.rev.iter().rev().copied().collect();
                self.reps.insert(canonical_double_coset_rep(self.u, &g, self.v));
            }
            Ordering::Equal => {
                // Same axis (g·axis(v) = axis(u)) is no crossing; a single
                // shared endpoint cannot happen in a discrete group.
                if !proportional(&self.axis_u_big, &big_form(form)) {
                    return Some(Err(Error::SharedEndpoint));
                }
            }
            Ordering::Greater => {}
        }
        if self.rev.len() == radius {
            return Some(Ok(()));
        }
        for x in Letter::ALL {
            if self.rev.last() == Some(&x.inverse()) {
                continue;
            }
            let next = T::transform(form, &self.inverse_gens[x.index()])?;
            self.rev.push(x);
            let r = self.visit(&next, radius);
            self.rev.pop();
            match r {
                Some(Ok(())) => {}
                other => return other,
            }
        }
        Some(Ok(()))
    }
}

fn power_letters(w: &[Letter], p: i64) -> impl Iterator<Item = Letter> + '_ {
    let forward = p >= 0;
    let reps = p.unsigned_abs() as usize;
    (0..reps * w.len()).map(move |k| {
        if forward {
            w[k % w.len()]
        } else {
            w[w.len() - 1 - k % w.len()].inverse()
        }
    })
}

fn coset_element(u: &[Letter], g: &[Letter], v: &[Letter], p: i64, q: i64) -> Vec<Letter> {
    free_reduce(
        power_letters(u, p)
            .chain(g.iter().copied())
            .chain(power_letters(v, q)),
    )
    .into_letters()
}

/// Shortest, then lexicographically least, element of `⟨u⟩ g ⟨v⟩` for
/// cyclically reduced `u`, `v` and a double coset whose axes overlap.
///
/// The length of `uᵖ g v^q` is the tree distance between two points sliding
/// along the overlapping axes. Single steps that shorten the word are taken
/// until none remain; at that point every minimiser lies within
/// `(3|u| + |v|) / |u|` steps in `p` (and symmetrically in `q`), because the
/// overlap is shorter than `|u| + |v|`.
pub(crate) fn canonical_double_coset_rep(u: &[Letter], g: &[Letter], v: &[Letter]) -> Vec<Letter> {
    let (p0, q0) = {
        let (mut p, mut q) = (0i64, 0i64);
        let mut best = g.len();
        'descent: loop {
            for (dp, dq) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                let len = coset_element(u, g, v, p + dp, q + dq).len();
                if len < best {
                    best = len;
                    p += dp;
                    q += dq;
                    continue 'descent;
                }
            }
            break;
        }
        (p, q)
    };
    let (lu, lv) = (u.len() as i64, v.len() as i64);
    let kp = (3 * lu + lv + lu - 1) / lu + 1;
    let kq = (3 * lv + lu + lv - 1) / lv + 1;
    let mut best = coset_element(u, g, v, p0, q0);
    for p in p0 - kp..=p0 + kp {
        for q in q0 - kq..=q0 + kq {
            let h = coset_element(u, g, v, p, q);
            if (h.len(), &h) < (best.len(), &best) {
                best = h;
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::{parse_class, Orientation};
    use crate::word::parse_word;

    fn c(s: &str) -> CurveClass {
        parse_class(s, Orientation::Unoriented).unwrap()
    }

    fn o() -> Oracle {
        Oracle::default()
    }

    #[test]
    fn parabolic_short_circuit() {
        assert_eq!(o().intersection(&c("a"), &c("aBBab")).unwrap(), 0);
        assert_eq!(o().intersection(&c("aB"), &c("ab")).unwrap(), 0);
        assert_eq!(o().self_intersection(&c("a")).unwrap(), 0);
        assert_eq!(o().self_intersection(&c("a^3")).unwrap(), 2);
    }

    #[test]
    fn figure_eight_values() {
        assert_eq!(o().self_intersection(&c("aB")).unwrap(), 1);
        assert_eq!(o().intersection(&c("aB"), &c("abb")).unwrap(), 2);
        assert_eq!(o().intersection(&c("aB"), &c("aB")).unwrap(), 2);
        assert_eq!(o().self_intersection(&c("aaaB")).unwrap(), 3);
        assert_eq!(o().self_intersection(&c("(aB)^2")).unwrap(), 5);
    }

    #[test]
    fn symmetric() {
        for (x, y) in [("aab", "abb"), ("aBB", "abAb"), ("aaB", "aabab")] {
            assert_eq!(
                o().intersection(&c(x), &c(y)).unwrap(),
                o().intersection(&c(y), &c(x)).unwrap()
            );
        }
    }

    #[test]
    fn not_converged_when_radius_too_small() {
        let err = oracle_intersection(&c("aaBaBB"), &c("abAbbb"), 2);
        let big = o().intersection(&c("aaBaBB"), &c("abAbbb")).unwrap();
        match err {
            Err(Error::NotConverged { .. }) => {}
            Ok(v) => assert!(v <= big),
            Err(e) => panic!("{e}"),
        }
    }

    #[test]
    fn canonical_rep_is_shared_by_the_whole_double_coset() {
        let u = parse_word("aBB").unwrap().into_letters();
        let v = parse_word("abAb").unwrap().into_letters();
        let g = parse_word("ba").unwrap().into_letters();
        let base = canonical_double_coset_rep(&u, &g, &v);
        for p in -3..=3 {
            for q in -3..=3 {
                let h = coset_element(&u, &g, &v, p, q);
                assert_eq!(canonical_double_coset_rep(&u, &h, &v), base, "p={p} q={q}");
            }
        }
    }
}
