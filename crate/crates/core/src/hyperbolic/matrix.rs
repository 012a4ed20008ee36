use std::fmt;
use std::ops::Mul;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::class::{enumerate_classes, is_boundary_parallel, EnumFilter, Orientation};
use crate::error::{Error, Result};
use crate::word::{Letter, ReducedWord};

/// An element of SL(2, Z), entries `[[p, q], [r, s]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupMatrix {
    pub p: BigInt,
    pub q: BigInt,
    pub r: BigInt,
    pub s: BigInt,
}

impl GroupMatrix {
    pub fn new(p: i64, q: i64, r: i64, s: i64) -> Self {
        let m = GroupMatrix {
            p: p.into(),
            q: q.into(),
            r: r.into(),
            s: s.into(),
        };
        assert!(m.det().is_one(), "determinant must be 1");
        m
    }

    pub fn identity() -> Self {
        GroupMatrix::new(1, 0, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.p * &self.s - &self.q * &self.r
    }

    pub fn trace(&self) -> BigInt {
        &self.p + &self.s
    }

    pub fn inverse(&self) -> Self {
        GroupMatrix {
            p: self.s.clone(),
            q: -&self.q,
            r: -&self.r,
            s: self.p.clone(),
        }
    }

    pub fn is_plus_minus_identity(&self) -> bool {
        self.q.is_zero() && self.r.is_zero() && self.p == self.s && self.p.abs().is_one()
    }

    pub fn entries_i64(&self) -> Option<[i64; 4]> {
        use num_traits::ToPrimitive;
        Some([self.p.to_i64()?, self.q.to_i64()?, self.r.to_i64()?, self.s.to_i64()?])
    }
}

impl Mul for &GroupMatrix {
    type Output = GroupMatrix;

    fn mul(self, o: &GroupMatrix) -> GroupMatrix {
        let m = GroupMatrix {
            p: &self.p * &o.p + &self.q * &o.r,
            q: &self.p * &o.q + &self.q * &o.s,
            r: &self.r * &o.p + &self.s * &o.r,
            s: &self.r * &o.q + &self.s * &o.s,
        };
        debug_assert!(m.det().is_one());
        m
    }
}

impl fmt::Display for GroupMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.p, self.q, self.r, self.s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementKind {
    Identity,
    Parabolic,
    Hyperbolic,
}

/// Classifies by `|trace|`; anything elliptic means the representation is
/// not free and discrete.
pub fn classify_element(m: &GroupMatrix) -> Result<ElementKind> {
    let two = BigInt::from(2);
    let t = m.trace().abs();
    if m.is_plus_minus_identity() {
        Ok(ElementKind::Identity)
    } else if t == two {
        Ok(ElementKind::Parabolic)
    } else if t > two {
        Ok(ElementKind::Hyperbolic)
    } else {
        Err(Error::EllipticElement(m.trace().to_string()))
    }
}

/// Images of the generators `a` and `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    gens: [GroupMatrix; 4],
}

impl Representation {
    pub fn new(a: GroupMatrix, b: GroupMatrix) -> Self {
        let (ai, bi) = (a.inverse(), b.inverse());
        Representation { gens: [a, ai, b, bi] }
    }

    /// `a ↦ [[1, 2], [0, 1]]`, `b ↦ [[1, 0], [2, 1]]`. This uniformizes the
    /// thrice-punctured sphere, but its third cusp is `aB`, not `ab`.
    pub fn classical() -> Self {
        Representation::new(GroupMatrix::new(1, 2, 0, 1), GroupMatrix::new(1, 0, 2, 1))
    }

    /// `a ↦ [[1, 2], [0, 1]]`, `b ↦ [[1, 0], [-2, 1]]`: the cusps are `a`, `b`
    /// and `ab`, matching the boundary of the ribbon structure.
    pub fn flipped() -> Self {
        Representation::new(GroupMatrix::new(1, 2, 0, 1), GroupMatrix::new(1, 0, -2, 1))
    }

    /// The representation whose parabolic classes are exactly the
    /// boundary-parallel ones, chosen by [`Representation::self_check`].
    pub fn pair_of_pants() -> &'static Representation {
        static REP: OnceLock<Representation> = OnceLock::new();
        REP.get_or_init(|| {
            [Representation::classical(), Representation::flipped()]
                .into_iter()
                .find(|r| r.self_check(4).is_ok())
                .expect("one of the candidate representations has cusps a, b, ab")
        })
    }

    pub fn generator(&self, x: Letter) -> &GroupMatrix {
        &self.gens[x.index()]
    }

    pub fn matrix_of(&self, w: &[Letter]) -> GroupMatrix {
        w.iter()
            .fold(GroupMatrix::identity(), |m, &x| &m * self.generator(x))
    }

    /// Checks that, on every unoriented class of length at most `max_len`,
    /// the root is parabolic exactly when the class is boundary-parallel.
    pub fn self_check(&self, max_len: usize) -> Result<()> {
        for c in enumerate_classes(max_len, &EnumFilter::all(Orientation::Unoriented))? {
            let m = self.matrix_of(c.root().letters());
            let parabolic = classify_element(&m)? == ElementKind::Parabolic;
            if parabolic != is_boundary_parallel(&c) {
                return Err(Error::InvalidRibbon(format!(
                    "{c} is {} under the representation",
                    if parabolic { "parabolic" } else { "hyperbolic" }
                )));
            }
        }
        Ok(())
    }
}

/// Product of generator matrices under [`Representation::pair_of_pants`].
pub fn matrix_of(w: &ReducedWord) -> GroupMatrix {
    Representation::pair_of_pants().matrix_of(w.letters())
}
