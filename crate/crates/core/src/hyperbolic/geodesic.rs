//! Geodesics of the upper half-plane with exact endpoints.
//!
//! A geodesic is stored as the integer binary quadratic form
//! `A·X² + B·XY + C·Y²` whose projective roots `[X : Y]` are its endpoints on
//! the circle `R ∪ {∞}`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::matrix::{classify_element, ElementKind, GroupMatrix};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Geodesic {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl Geodesic {
    pub fn from_form(a: BigInt, b: BigInt, c: BigInt) -> Result<Self> {
        let disc = &b * &b - BigInt::from(4) * &a * &c;
        if !disc.is_positive() {
            return Err(Error::NotHyperbolic);
        }
        Ok(Geodesic { a, b, c })
    }

    /// The geodesic joining two distinct rational (or infinite) points,
    /// given as `(numerator, denominator)` with denominator 0 for `∞`.
    pub fn between(x: (i64, i64), y: (i64, i64)) -> Result<Self> {
        // (d1 X - n1 Y)(d2 X - n2 Y)
        let (n1, d1) = (BigInt::from(x.0), BigInt::from(x.1));
        let (n2, d2) = (BigInt::from(y.0), BigInt::from(y.1));
        Geodesic::from_form(&d1 * &d2, -(&d1 * &n2 + &d2 * &n1), &n1 * &n2)
    }

    pub fn form(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.c)
    }

    pub fn discriminant(&self) -> BigInt {
        &self.b * &self.b - BigInt::from(4) * &self.a * &self.c
    }

    /// Both endpoints, in increasing order (`∞` last).
    pub fn endpoints(&self) -> [Endpoint; 2] {
        if self.a.is_zero() {
            // Y (B X + C Y): the root of the linear factor and ∞.
            let e = Endpoint::surd(-self.c.clone(), BigInt::zero(), BigInt::zero(), self.b.clone());
            return [e, Endpoint::Infinity];
        }
        let d = self.discriminant();
        let two_a = BigInt::from(2) * &self.a;
        let mut e = [
            Endpoint::surd(-self.b.clone(), BigInt::from(-1), d.clone(), two_a.clone()),
            Endpoint::surd(-self.b.clone(), BigInt::from(1), d, two_a),
        ];
        e.sort();
        e
    }
}

impl fmt::Display for Geodesic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y] = self.endpoints();
        write!(f, "({x}, {y})")
    }
}

/// The axis of a hyperbolic element: the roots of `r x² + (s − p) x − q`.
pub fn axis_of(m: &GroupMatrix) -> Result<Geodesic> {
    if classify_element(m)? != ElementKind::Hyperbolic {
        return Err(Error::NotHyperbolic);
    }
    Geodesic::from_form(m.r.clone(), &m.s - &m.p, -m.q.clone())
}

/// Resultant of two binary quadratic forms.
///
/// Up to a positive factor it equals `f(y₁)·f(y₂)` over the roots `yᵢ` of
/// `g`, so it is negative exactly when `f` changes sign between the roots of
/// `g`, i.e. when the two root pairs interleave.
pub fn resultant(f: (&BigInt, &BigInt, &BigInt), g: (&BigInt, &BigInt, &BigInt)) -> BigInt {
    let (a1, b1, c1) = f;
    let (a2, b2, c2) = g;
    let ac = a1 * c2 - a2 * c1;
    let ab = a1 * b2 - a2 * b1;
    let bc = b1 * c2 - b2 * c1;
    &ac * &ac - ab * bc
}

/// True iff the endpoint pairs strictly interleave.
pub fn crossing(g1: &Geodesic, g2: &Geodesic) -> Result<bool> {
    let res = resultant(g1.form(), g2.form());
    if res.is_zero() {
        return Err(Error::SharedEndpoint);
    }
    Ok(res.is_negative())
}

/// Same predicate as [`crossing`], decided by sorting the four exact
/// endpoints instead.
pub fn interleaved(g1: &Geodesic, g2: &Geodesic) -> Result<bool> {
    let [x1, x2] = g1.endpoints();
    let inside = |y: &Endpoint| -> Result<bool> {
        match (y.cmp(&x1), y.cmp(&x2)) {
            (Ordering::Equal, _) | (_, Ordering::Equal) => Err(Error::SharedEndpoint),
            (lo, hi) => Ok(lo == Ordering::Greater && hi == Ordering::Less),
        }
    };
    let [y1, y2] = g2.endpoints();
    Ok(inside(&y1)? != inside(&y2)?)
}

/// A point of `R ∪ {∞}` of the form `(p + s·√d) / q` with `q > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Endpoint {
    Finite { p: BigInt, s: BigInt, d: BigInt, q: BigInt },
    Infinity,
}

impl Endpoint {
    pub fn surd(p: BigInt, s: BigInt, d: BigInt, q: BigInt) -> Self {
        assert!(!q.is_zero(), "zero denominator");
        assert!(!d.is_negative(), "negative radicand");
        if q.is_negative() {
            Endpoint::Finite { p: -p, s: -s, d, q: -q }
        } else {
            Endpoint::Finite { p, s, d, q }
        }
    }

    pub fn rational(num: i64, den: i64) -> Self {
        Endpoint::surd(num.into(), BigInt::zero(), BigInt::zero(), den.into())
    }

    /// Floating-point approximation, for display only.
    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        match self {
            Endpoint::Infinity => f64::INFINITY,
            Endpoint::Finite { p, s, d, q } => {
                let f = |x: &BigInt| x.to_f64().unwrap_or(f64::NAN);
                (f(p) + f(s) * f(d).sqrt()) / f(q)
            }
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::Infinity => write!(f, "inf"),
            Endpoint::Finite { p, s, d, q } => write!(f, "({p} + {s}*sqrt({d}))/{q}"),
        }
    }
}

/// Sign of `x + y·√d` for `d >= 0`.
fn sign_plus_sqrt(x: &BigInt, y: &BigInt, d: &BigInt) -> Ordering {
    let sx = x.sign_cmp();
    let sy = if d.is_zero() { Ordering::Equal } else { y.sign_cmp() };
    if sx == sy || sy == Ordering::Equal {
        return sx;
    }
    if sx == Ordering::Equal {
        return sy;
    }
    // Opposite signs: the larger magnitude wins.
    match (x * x).cmp(&(y * y * d)) {
        Ordering::Greater => sx,
        Ordering::Less => sy,
        Ordering::Equal => Ordering::Equal,
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

/// Sign of `x + y·√d + w·√e`.
fn sign_two_surds(x: &BigInt, y: &BigInt, d: &BigInt, w: &BigInt, e: &BigInt) -> Ordering {
    let s1 = sign_plus_sqrt(x, y, d);
    let s2 = if e.is_zero() { Ordering::Equal } else { w.sign_cmp() };
    if s1 == s2 || s2 == Ordering::Equal {
        return s1;
    }
    if s1 == Ordering::Equal {
        return s2;
    }
    // Compare (x + y√d)² = x² + y²d + 2xy√d with w²e.
    let t = sign_plus_sqrt(&(x * x + y * y * d - w * w * e), &(BigInt::from(2) * x * y), d);
    match t {
        Ordering::Greater => s1,
        Ordering::Less => s2,
        Ordering::Equal => Ordering::Equal,
    }
}

impl Ord for Endpoint {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Endpoint::Infinity, Endpoint::Infinity) => Ordering::Equal,
            (Endpoint::Infinity, _) => Ordering::Greater,
            (_, Endpoint::Infinity) => Ordering::Less,
            (
                Endpoint::Finite { p: p1, s: s1, d: d1, q: q1 },
                Endpoint::Finite { p: p2, s: s2, d: d2, q: q2 },
            ) => {
                // q2 (p1 + s1√d1) − q1 (p2 + s2√d2), both denominators positive.
                let x = q2 * p1 - q1 * p2;
                let y = q2 * s1;
                let w = -(q1 * s2);
                sign_two_surds(&x, &y, d1, &w, d2)
            }
        }
    }
}

impl PartialOrd for Endpoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
