//! Checks of the power laws and of the length families.

use rayon::prelude::*;
use serde::Serialize;

use super::census::classes_with_si;
use super::equivalence::{partition_by, RefinementVerdict};
use crate::class::{enumerate_classes, parse_class, CurveClass, EnumFilter, Orientation};
use crate::engine::{power_self_intersection, Engine, PowerPath};
use crate::error::Result;
use crate::hyperbolic::Oracle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PowerSettings {
    /// Roots `d` range over primitive classes up to this length.
    pub max_root_len: usize,
    /// Exponents `2..=max_exp`.
    pub max_exp: usize,
    /// Partners `β` range over all classes up to this length.
    pub probe_len: usize,
    /// The oracle is consulted when the power word is at most this long.
    pub oracle_max_len: usize,
}

impl Default for PowerSettings {
    fn default() -> Self {
        PowerSettings {
            max_root_len: 5,
            max_exp: 3,
            probe_len: 4,
            oracle_max_len: 6,
        }
    }
}

/// One row: the formula's value next to what was computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawRow {
    pub class: CurveClass,
    pub partner: Option<CurveClass>,
    pub n: usize,
    pub expected: usize,
    pub engine: usize,
    pub oracle: Option<usize>,
    pub pass: bool,
}

impl LawRow {
    fn new(
        class: CurveClass,
        partner: Option<CurveClass>,
        n: usize,
        expected: usize,
        engine: usize,
        oracle: Option<usize>,
    ) -> Self {
        let pass = engine == expected && oracle.is_none_or(|o| o == expected);
        LawRow {
            class,
            partner,
            n,
            expected,
            engine,
            oracle,
            pass,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PowerReport {
    pub settings: PowerSettings,
    /// `si(dⁿ) = si(d)·n² + n − 1`.
    pub self_law: Vec<LawRow>,
    /// `i(dⁿ, β) = n·i(d, β)`.
    pub intersection_law: Vec<LawRow>,
    pub pass: bool,
}

/// Counts powers directly (every offset of the power word) and compares
/// with the formulas.
pub fn verify_power_formulas(settings: PowerSettings) -> Result<PowerReport> {
    let formula = Engine::default();
    let direct = Engine::new(PowerPath::Direct);
    let oracle = Oracle::default();
    let roots = enumerate_classes(settings.max_root_len, &EnumFilter::primitive())?;
    let partners = enumerate_classes(settings.probe_len, &EnumFilter::default())?;
    let exps: Vec<usize> = (2..=settings.max_exp).collect();

    let jobs: Vec<(&CurveClass, usize)> = roots
        .iter()
        .flat_map(|d| exps.iter().map(move |&n| (d, n)))
        .collect();
    let self_law = jobs
        .par_iter()
        .map(|&(d, n)| {
            let p = d.pow(n);
            let expected = power_self_intersection(formula.self_intersection(d), n);
            let oracle = (p.len() <= settings.oracle_max_len)
                .then(|| oracle.self_intersection(&p))
                .transpose()?;
            Ok(LawRow::new(d.clone(), None, n, expected, direct.self_intersection(&p), oracle))
        })
        .collect::<Result<Vec<_>>>()?;

    let jobs: Vec<(&CurveClass, usize, &CurveClass)> = jobs
        .iter()
        .flat_map(|&(d, n)| partners.iter().map(move |b| (d, n, b)))
        .collect();
    let intersection_law = jobs
        .par_iter()
        .map(|&(d, n, b)| {
            let p = d.pow(n);
            let expected = n * formula.intersection(d, b);
            let oracle = (p.len() + b.len() <= settings.oracle_max_len)
                .then(|| oracle.intersection(&p, b))
                .transpose()?;
            let engine = direct.intersection(&p, b);
            Ok(LawRow::new(d.clone(), Some(b.clone()), n, expected, engine, oracle))
        })
        .collect::<Result<Vec<_>>>()?;

    let pass = self_law.iter().chain(&intersection_law).all(|r| r.pass);
    Ok(PowerReport {
        settings,
        self_law,
        intersection_law,
        pass,
    })
}

/// The families `aⁿB`, `aⁿCb`, `aⁿCC` with `si = n, n + 1, n + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LengthFamily {
    #[serde(rename = "a^nB")]
    ANB,
    #[serde(rename = "a^nCb")]
    ANCb,
    #[serde(rename = "a^nCC")]
    ANCC,
}

impl LengthFamily {
    pub const ALL: [LengthFamily; 3] = [LengthFamily::ANB, LengthFamily::ANCb, LengthFamily::ANCC];

    pub fn member(self, n: usize) -> CurveClass {
        let tail = match self {
            LengthFamily::ANB => "B",
            LengthFamily::ANCb => "Cb",
            LengthFamily::ANCC => "CC",
        };
        parse_class(&format!("a^{n}{tail}"), Orientation::Unoriented).unwrap()
    }

    pub fn expected(self, n: usize) -> usize {
        match self {
            LengthFamily::ANB => n,
            _ => n + 1,
        }
    }
}

/// Engine and oracle on `n = 1..=max_n` of each family.
pub fn verify_families(max_n: usize) -> Result<Vec<LawRow>> {
    let jobs: Vec<(LengthFamily, usize)> = LengthFamily::ALL
        .iter()
        .flat_map(|&f| (1..=max_n).map(move |n| (f, n)))
        .collect();
    jobs.par_iter()
        .map(|&(f, n)| {
            let c = f.member(n);
            let engine = Engine::default().self_intersection(&c);
            let oracle = Oracle::default().self_intersection(&c)?;
            Ok(LawRow::new(c, None, n, f.expected(n), engine, Some(oracle)))
        })
        .collect()
}

/// Checks that classes agreeing against the power probes `{dⁿ : si(d) = ℓ}`
/// are ℓ-equivalent. The power probes have `si = ℓn² + n − 1`.
pub fn power_refinement_check(classes: &[CurveClass], ell: usize, n: usize) -> Result<RefinementVerdict> {
    let engine = Engine::default();
    let roots = classes_with_si(ell, None)?;
    let powers: Vec<CurveClass> = roots.iter().map(|d| d.pow(n)).collect();
    let vectors: Vec<Vec<usize>> = classes
        .par_iter()
        .map(|c| engine.intersection_vector(c, &powers))
        .collect();
    let mut counterexamples = Vec::new();
    for cell in partition_by(classes, &vectors) {
        let fine: Vec<Vec<usize>> = cell
            .members
            .iter()
            .map(|c| engine.intersection_vector(c, &roots))
            .collect();
        let sub = partition_by(&cell.members, &fine);
        for other in &sub[1..] {
            counterexamples.push((sub[0].members[0].clone(), other.members[0].clone()));
        }
    }
    Ok(RefinementVerdict {
        k: power_self_intersection(ell, n),
        j: ell,
        include_powers: true,
        pass: counterexamples.is_empty(),
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_power_report_passes() {
        let report = verify_power_formulas(PowerSettings {
            max_root_len: 3,
            max_exp: 3,
            probe_len: 3,
            oracle_max_len: 6,
        })
        .unwrap();
        assert!(report.pass);
        assert!(report.self_law.iter().any(|r| r.oracle.is_some()));
        let ab = report
            .self_law
            .iter()
            .find(|r| r.class.to_string() == "aB" && r.n == 2)
            .unwrap();
        assert_eq!(ab.expected, 5);
    }

    #[test]
    fn family_members() {
        assert_eq!(LengthFamily::ANB.member(2).to_string(), "aaB");
        assert_eq!(LengthFamily::ANCb.member(1).len(), 4);
        assert_eq!(LengthFamily::ANCC.member(1).len(), 5);
    }

    #[test]
    fn families_to_four() {
        assert!(verify_families(4).unwrap().iter().all(|r| r.pass));
    }

    #[test]
    fn power_probes_refine_to_the_root_level() {
        let classes = enumerate_classes(4, &EnumFilter::primitive()).unwrap();
        let v = power_refinement_check(&classes, 1, 2).unwrap();
        assert_eq!(v.k, 5);
        assert!(v.pass, "{:?}", v.counterexamples);
    }
}
