//! Triples and k-equivalence.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::census::{si_one_classes, ProbeSet};
use crate::class::CurveClass;
use crate::engine::Engine;
use crate::error::Result;
use crate::hyperbolic::Oracle;

/// Intersection numbers with `aB`, `Cb` and `aC`, in that order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Triple(pub [usize; 3]);

impl Triple {
    pub fn sorted(&self) -> Triple {
        let mut t = self.0;
        t.sort_unstable();
        Triple(t)
    }

    pub fn smallest(&self) -> usize {
        *self.0.iter().min().unwrap()
    }

    pub fn largest(&self) -> usize {
        *self.0.iter().max().unwrap()
    }

    pub fn all_even(&self) -> bool {
        self.0.iter().all(|x| x % 2 == 0)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = self.0;
        write!(f, "({x}, {y}, {z})")
    }
}

pub fn triple_of(c: &CurveClass) -> Triple {
    let e = Engine::default();
    Triple(si_one_classes().map(|p| e.intersection(c, &p)))
}

/// Agreement of the intersection vectors against every non-power class
/// with `si = k`.
pub fn k_equivalent(c1: &CurveClass, c2: &CurveClass, k: usize) -> Result<bool> {
    let probes = ProbeSet::new(k, false)?;
    Ok(probes.vector(c1) == probes.vector(c2))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub vector: Vec<usize>,
    pub members: Vec<CurveClass>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RefinementVerdict {
    pub k: usize,
    pub j: usize,
    pub include_powers: bool,
    pub pass: bool,
    /// Pairs that are k-equivalent but not j-equivalent.
    pub counterexamples: Vec<(CurveClass, CurveClass)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceReport {
    pub k: usize,
    pub include_powers: bool,
    pub probes: Vec<CurveClass>,
    pub cells: Vec<Cell>,
    pub refinement: Vec<RefinementVerdict>,
}

/// Groups classes by identical vectors. Cells keep the input order of their
/// first members, and members keep input order.
pub fn partition_by(classes: &[CurveClass], vectors: &[Vec<usize>]) -> Vec<Cell> {
    let mut index: BTreeMap<&[usize], usize> = BTreeMap::new();
    let mut cells: Vec<Cell> = Vec::new();
    for (c, v) in classes.iter().zip(vectors) {
        let at = *index.entry(v.as_slice()).or_insert_with(|| {
            cells.push(Cell {
                vector: v.clone(),
                members: Vec::new(),
            });
            cells.len() - 1
        });
        cells[at].members.push(c.clone());
    }
    cells
}

fn vectors(classes: &[CurveClass], probes: &ProbeSet) -> Vec<Vec<usize>> {
    classes.par_iter().map(|c| probes.vector(c)).collect()
}

pub fn equivalence_partition(classes: &[CurveClass], k: usize) -> Result<EquivalenceReport> {
    equivalence_report(classes, k, &[], false)
}

/// Partition by k-equivalence plus a refinement verdict for each `j`.
pub fn equivalence_report(
    classes: &[CurveClass],
    k: usize,
    js: &[usize],
    include_powers: bool,
) -> Result<EquivalenceReport> {
    let probes = ProbeSet::new(k, include_powers)?;
    let cells = partition_by(classes, &vectors(classes, &probes));
    let refinement = js
        .iter()
        .map(|&j| refine(&cells, k, j, include_powers))
        .collect::<Result<Vec<_>>>()?;
    Ok(EquivalenceReport {
        k,
        include_powers,
        probes: probes.probes,
        cells,
        refinement,
    })
}

fn refine(cells: &[Cell], k: usize, j: usize, include_powers: bool) -> Result<RefinementVerdict> {
    let mut counterexamples = Vec::new();
    if j != k {
        let coarse = ProbeSet::new(j, include_powers)?;
        for cell in cells.iter().filter(|c| c.members.len() > 1) {
            let sub = partition_by(&cell.members, &vectors(&cell.members, &coarse));
            let first = &sub[0].members[0];
            for other in &sub[1..] {
                counterexamples.push((first.clone(), other.members[0].clone()));
            }
        }
    }
    Ok(RefinementVerdict {
        k,
        j,
        include_powers,
        pass: counterexamples.is_empty(),
        counterexamples,
    })
}

/// Recomputes a counterexample with the hyperbolic oracle: true when the
/// pair agrees on every `si = k` probe and differs on some `si = j` probe.
pub fn oracle_confirms(pair: &(CurveClass, CurveClass), k: usize, j: usize, include_powers: bool) -> Result<bool> {
    let oracle = Oracle::default();
    let vector = |probes: &ProbeSet, c: &CurveClass| -> Result<Vec<usize>> {
        probes.probes.iter().map(|p| oracle.intersection(c, p)).collect()
    };
    let fine = ProbeSet::new(k, include_powers)?;
    let coarse = ProbeSet::new(j, include_powers)?;
    Ok(vector(&fine, &pair.0)? == vector(&fine, &pair.1)? && vector(&coarse, &pair.0)? != vector(&coarse, &pair.1)?)
}

/// Checks that every k-equivalent pair among `classes` is j-equivalent.
pub fn refinement_check(
    classes: &[CurveClass],
    k: usize,
    j: usize,
    include_powers: bool,
) -> Result<RefinementVerdict> {
    let report = equivalence_report(classes, k, &[j], include_powers)?;
    Ok(report.refinement.into_iter().next().unwrap())
}
