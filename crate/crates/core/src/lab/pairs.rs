//! Sweeps over all pairs of short classes: engine against oracle, and the
//! parity of intersection numbers.

use rayon::prelude::*;
use serde::Serialize;

use crate::class::{enumerate_classes, CurveClass, EnumFilter, Orientation};
use crate::engine::Engine;
use crate::error::Result;
use crate::hyperbolic::Oracle;

#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub first: CurveClass,
    /// `None` for a self-intersection.
    pub second: Option<CurveClass>,
    pub engine: usize,
    pub oracle: std::result::Result<usize, String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AgreementReport {
    pub max_len: usize,
    pub orientation: Orientation,
    pub classes: usize,
    /// Unordered pairs, each class with itself included.
    pub pairs: usize,
    pub mismatches: Vec<Mismatch>,
}

impl AgreementReport {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn all_pairs(classes: &[CurveClass]) -> Vec<(&CurveClass, &CurveClass)> {
    classes
        .iter()
        .enumerate()
        .flat_map(|(i, c)| classes[i..].iter().map(move |d| (c, d)))
        .collect()
}

/// Compares `si` of every class and `i` of every pair up to `max_len`.
pub fn oracle_agreement(max_len: usize, orientation: Orientation) -> Result<AgreementReport> {
    let engine = Engine::default();
    let oracle = Oracle::default();
    let classes = enumerate_classes(max_len, &EnumFilter::all(orientation))?;
    let pairs = all_pairs(&classes);
    let self_rows = classes.par_iter().filter_map(|c| {
        let e = engine.self_intersection(c);
        let o = oracle.self_intersection(c).map_err(|err| err.to_string());
        (o != Ok(e)).then(|| Mismatch {
            first: c.clone(),
            second: None,
            engine: e,
            oracle: o,
        })
    });
    let pair_rows = pairs.par_iter().filter_map(|&(c, d)| {
        let e = engine.intersection(c, d);
        let o = oracle.intersection(c, d).map_err(|err| err.to_string());
        (o != Ok(e)).then(|| Mismatch {
            first: c.clone(),
            second: Some(d.clone()),
            engine: e,
            oracle: o,
        })
    });
    let mut mismatches: Vec<Mismatch> = self_rows.collect();
    mismatches.extend(pair_rows.collect::<Vec<_>>());
    Ok(AgreementReport {
        max_len,
        orientation,
        classes: classes.len(),
        pairs: pairs.len(),
        mismatches,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ParityReport {
    pub max_len: usize,
    pub pairs: usize,
    pub odd: Vec<(CurveClass, CurveClass, usize)>,
}

impl ParityReport {
    pub fn pass(&self) -> bool {
        self.odd.is_empty()
    }
}

/// `i` of every unordered pair of classes up to `max_len`, checked even.
pub fn parity_scan(max_len: usize) -> Result<ParityReport> {
    let engine = Engine::default();
    let classes = enumerate_classes(max_len, &EnumFilter::default())?;
    let pairs = all_pairs(&classes);
    let odd = pairs
        .par_iter()
        .filter_map(|&(c, d)| {
            let i = engine.intersection(c, d);
            (i % 2 == 1).then(|| (c.clone(), d.clone(), i))
        })
        .collect();
    Ok(ParityReport {
        max_len,
        pairs: pairs.len(),
        odd,
    })
}
