//! Classes with a given self-intersection number.

use rayon::prelude::*;
use serde::Serialize;

use crate::class::{classes_of_length, enumerate_classes, parse_class, CurveClass, EnumFilter, Orientation};
use crate::engine::{power_self_intersection, Engine};
use crate::error::{Error, Result};

/// Lengths past the cap that are checked for stragglers.
pub const SWEEP_LENGTHS: usize = 4;

/// Default length cap for the census of `si = k`.
pub fn default_cap(k: usize) -> usize {
    2 * k + 2
}

/// All unoriented non-power classes with `si = k`, shortest first.
///
/// Classes up to length `cap` (default `2k + 2`) are enumerated, then every
/// class of the next [`SWEEP_LENGTHS`] lengths is checked to have `si > k`;
/// a class that does not is reported as [`Error::CapUnverified`].
pub fn classes_with_si(k: usize, cap: Option<usize>) -> Result<Vec<CurveClass>> {
    let cap = cap.unwrap_or_else(|| default_cap(k));
    let engine = Engine::default();
    let found: Vec<CurveClass> = enumerate_classes(cap, &EnumFilter::primitive())?
        .into_par_iter()
        .filter(|c| engine.self_intersection_at_most(c, k) == Some(k))
        .collect();
    for len in cap + 1..=cap + SWEEP_LENGTHS {
        let straggler = classes_of_length(len, &EnumFilter::primitive())
            .into_par_iter()
            .find_first(|c| engine.self_intersection_at_most(c, k).is_some());
        if let Some(c) = straggler {
            return Err(Error::CapUnverified {
                k,
                cap,
                si: engine.self_intersection(&c),
                len: c.len(),
                witness: c.to_string(),
            });
        }
    }
    Ok(found)
}

/// The three classes with one self-intersection, in triple order:
/// `aB`, `Cb = abb`, `aC = aab`.
pub fn si_one_classes() -> [CurveClass; 3] {
    ["aB", "abb", "aab"].map(|s| parse_class(s, Orientation::Unoriented).unwrap())
}

/// Probe classes for k-equivalence.
#[derive(Clone, Debug, Serialize)]
pub struct ProbeSet {
    pub k: usize,
    pub include_powers: bool,
    pub probes: Vec<CurveClass>,
}

impl ProbeSet {
    /// Non-power classes with `si = k`, plus the powers `dⁿ` with
    /// `si(dⁿ) = k` when `include_powers` is set.
    pub fn new(k: usize, include_powers: bool) -> Result<Self> {
        let mut probes = classes_with_si(k, None)?;
        if include_powers {
            probes.extend(power_probes(k)?);
            probes.sort();
        }
        Ok(ProbeSet {
            k,
            include_powers,
            probes,
        })
    }

    pub fn len(&self) -> usize {
        self.probes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probes.is_empty()
    }

    pub fn vector(&self, c: &CurveClass) -> Vec<usize> {
        Engine::default().intersection_vector(c, &self.probes)
    }
}

/// Powers `dⁿ`, `n >= 2`, of non-power classes with `si(dⁿ) = k`.
pub fn power_probes(k: usize) -> Result<Vec<CurveClass>> {
    let mut out = Vec::new();
    for n in 2..=k + 1 {
        let spiral = n - 1;
        if !(k - spiral).is_multiple_of(n * n) {
            continue;
        }
        let root_si = (k - spiral) / (n * n);
        for d in classes_with_si(root_si, None)? {
            debug_assert_eq!(power_self_intersection(root_si, n), k);
            out.push(d.pow(n));
        }
    }
    out.sort();
    Ok(out)
}
