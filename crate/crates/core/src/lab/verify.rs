//! The table of checked claims shared by `pants verify-paper` and the
//! acceptance tests.

use std::fmt;

use serde::Serialize;

use super::census::classes_with_si;
use super::equivalence::{oracle_confirms, refinement_check};
use super::pairs::{oracle_agreement, parity_scan};
use super::powers::{power_refinement_check, verify_families, verify_power_formulas, PowerSettings};
use super::scans::{classify_two_intersections, equiv_class_222, scan_triples};
use crate::class::{enumerate_classes, parse_class, CurveClass, EnumFilter, Orientation};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifySettings {
    /// Length bound of the triple and two-intersection scans.
    pub max_len: usize,
    /// Largest power exponent.
    pub max_exp: usize,
    pub family_max_n: usize,
    pub oracle_len: usize,
    pub parity_len: usize,
    pub refine_len: usize,
}

impl Default for VerifySettings {
    fn default() -> Self {
        VerifySettings::with_max_len(8, 3)
    }
}

impl VerifySettings {
    /// The other bounds follow `max_len`, clamped to their usual values.
    pub fn with_max_len(max_len: usize, max_exp: usize) -> Self {
        VerifySettings {
            max_len,
            max_exp,
            family_max_n: 8,
            oracle_len: max_len.min(6),
            parity_len: max_len.min(7),
            refine_len: max_len.min(7),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ClaimStatus {
    Pass,
    Fail,
    /// Reported for reference; nothing to pass or fail.
    Info,
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimStatus::Pass => "PASS",
            ClaimStatus::Fail => "FAIL",
            ClaimStatus::Info => "INFO",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub id: &'static str,
    pub statement: String,
    pub status: ClaimStatus,
    pub detail: String,
}

impl Claim {
    fn check(id: &'static str, statement: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Claim {
            id,
            statement: statement.into(),
            status: if pass { ClaimStatus::Pass } else { ClaimStatus::Fail },
            detail: detail.into(),
        }
    }
}

fn words(classes: &[CurveClass]) -> String {
    classes.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

fn canon_set(words: &[&str]) -> Vec<CurveClass> {
    let mut v: Vec<CurveClass> = words
        .iter()
        .map(|w| parse_class(w, Orientation::Unoriented).unwrap())
        .collect();
    v.sort();
    v
}

pub fn si_one_claim() -> Result<Claim> {
    let got = classes_with_si(1, None)?;
    let want = canon_set(&["aB", "aC", "Cb"]);
    Ok(Claim::check("si1-census", "si = 1 classes are aB, aC, Cb", got == want, words(&got)))
}

pub fn si_two_claim() -> Result<Claim> {
    let got = classes_with_si(2, None)?;
    let want = canon_set(&["aaB", "aBB", "aaC", "aCC", "Cbb", "CCb", "aCb", "CaB", "CAb"]);
    Ok(Claim::check("si2-census", "si = 2 classes are the nine listed", got == want, words(&got)))
}

pub fn family_claim(max_n: usize) -> Result<Claim> {
    let rows = verify_families(max_n)?;
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("{}: {} vs {}/{:?}", r.class, r.expected, r.engine, r.oracle))
        .collect();
    Ok(Claim::check(
        "length-families",
        format!("si(a^nB) = n, si(a^nCb) = si(a^nCC) = n + 1 for n <= {max_n}"),
        bad.is_empty(),
        format!("{} rows checked by engine and oracle; {} failing {}", rows.len(), bad.len(), bad.join("; ")).trim_end().to_string(),
    ))
}

pub fn power_claim(settings: PowerSettings) -> Result<Claim> {
    let report = verify_power_formulas(settings)?;
    let failing = report.self_law.iter().chain(&report.intersection_law).filter(|r| !r.pass).count();
    let oracle_rows = report
        .self_law
        .iter()
        .chain(&report.intersection_law)
        .filter(|r| r.oracle.is_some())
        .count();
    Ok(Claim::check(
        "power-laws",
        format!(
            "si(d^n) = si(d)n^2 + n - 1 and i(d^n, b) = n i(d, b), |d| <= {}, n <= {}, |b| <= {}",
            settings.max_root_len, settings.max_exp, settings.probe_len
        ),
        report.pass,
        format!(
            "{} self rows, {} intersection rows, {} also by oracle, {} failing",
            report.self_law.len(),
            report.intersection_law.len(),
            oracle_rows,
            failing
        ),
    ))
}

pub fn agreement_claim(max_len: usize) -> Result<Claim> {
    let mut pass = true;
    let mut detail = Vec::new();
    for o in [Orientation::Unoriented, Orientation::Oriented] {
        let r = oracle_agreement(max_len, o)?;
        pass &= r.pass();
        let first = r
            .mismatches
            .first()
            .map(|m| format!(" first {} {:?}: {} vs {:?}", m.first, m.second.as_ref().map(|c| c.to_string()), m.engine, m.oracle))
            .unwrap_or_default();
        detail.push(format!(
            "{o:?}: {} classes, {} pairs, {} mismatches{first}",
            r.classes,
            r.pairs,
            r.mismatches.len()
        ));
    }
    Ok(Claim::check(
        "oracle-agreement",
        format!("engine equals the hyperbolic count for lengths <= {max_len}"),
        pass,
        detail.join("; "),
    ))
}

pub fn parity_claim(max_len: usize) -> Result<Claim> {
    let r = parity_scan(max_len)?;
    let detail = match r.odd.first() {
        None => format!("{} pairs, all even", r.pairs),
        Some((c, d, i)) => format!("{} odd of {} pairs, first i({c}, {d}) = {i}", r.odd.len(), r.pairs),
    };
    Ok(Claim::check(
        "parity",
        format!("i is even on all pairs of length <= {max_len}"),
        r.pass(),
        detail,
    ))
}

pub fn refinement_claims(max_len: usize) -> Result<Vec<Claim>> {
    let classes = enumerate_classes(max_len, &EnumFilter::primitive())?;
    let mut out = Vec::new();
    for (id, k) in [("refine-k2", 2), ("refine-k3", 3), ("refine-k4", 4)] {
        let mut pass = true;
        let mut detail = Vec::new();
        for j in (1..k).filter(|&j| j <= 2) {
            let v = refinement_check(&classes, k, j, false)?;
            pass &= v.pass;
            let mut first = String::new();
            if let Some(pair) = v.counterexamples.first() {
                let confirmed = oracle_confirms(pair, k, j, false)?;
                first = format!(
                    ", e.g. {} ~ {} (oracle {})",
                    pair.0,
                    pair.1,
                    if confirmed { "confirms" } else { "disagrees" }
                );
            }
            detail.push(format!("j = {j}: {} counterexamples{first}", v.counterexamples.len()));
        }
        out.push(Claim::check(
            id,
            format!("{k}-equivalence implies j-equivalence for j <= 2 on {} classes of length <= {max_len}", classes.len()),
            pass,
            detail.join("; "),
        ));
    }
    Ok(out)
}

pub fn power_equivalence_claim(max_len: usize) -> Result<Claim> {
    let classes = enumerate_classes(max_len, &EnumFilter::primitive())?;
    let mut pass = true;
    let mut detail = Vec::new();
    for ell in 0..=2 {
        for n in 1..=2 {
            let v = power_refinement_check(&classes, ell, n)?;
            pass &= v.pass;
            detail.push(format!("l = {ell}, n = {n}: {}", v.counterexamples.len()));
        }
    }
    Ok(Claim::check(
        "power-equivalence",
        format!("agreement on the n-th powers of si = l classes implies l-equivalence, length <= {max_len}"),
        pass,
        format!("counterexamples {}", detail.join(", ")),
    ))
}

pub fn triple_claim(max_len: usize) -> Result<Claim> {
    let scan = scan_triples(max_len)?;
    let observed: Vec<String> = scan.observed.iter().map(|o| format!("{}x{}", o.triple, o.count)).collect();
    let mut detail = format!(
        "{} classes; {} ratio violations; {} equality violations; {} odd; missing [{}]; observed {}",
        scan.rows.len(),
        scan.ratio_violations.len(),
        scan.equality_violations.len(),
        scan.odd_rows.len(),
        scan.missing.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" "),
        observed.join(" ")
    );
    if let Some(r) = scan.ratio_violations.first().or(scan.equality_violations.first()) {
        detail.push_str(&format!("; counterexample {} {}", r.class, r.triple));
    }
    Ok(Claim::check(
        "triple-bound",
        format!("max t <= 2 min t, equality only at (q, q, 2q) with q even, length <= {max_len}"),
        scan.pass(),
        detail,
    ))
}

pub fn two_intersection_claim(max_len: usize) -> Result<Claim> {
    let r = classify_two_intersections(max_len)?;
    Ok(Claim::check(
        "two-intersection-forms",
        format!("classes meeting aB twice are of the eight C^m forms, length <= {max_len}"),
        r.pass(),
        format!(
            "{} members, {} non-members {}",
            r.members.len(),
            r.non_members.len(),
            words(&r.non_members)
        )
        .trim_end()
        .to_string(),
    ))
}

pub fn class_222_claim(max_len: usize) -> Result<Claim> {
    let found = equiv_class_222(max_len)?;
    Ok(Claim {
        id: "class-222",
        statement: format!("observed classes with triple (2, 2, 2), length <= {max_len}"),
        status: ClaimStatus::Info,
        detail: format!("{} classes", found.len()),
    })
}

/// Every claim, in a fixed order.
pub fn run_claims(settings: &VerifySettings) -> Result<Vec<Claim>> {
    let mut out = vec![
        si_one_claim()?,
        si_two_claim()?,
        family_claim(settings.family_max_n)?,
        power_claim(PowerSettings {
            max_exp: settings.max_exp,
            ..PowerSettings::default()
        })?,
        agreement_claim(settings.oracle_len)?,
        parity_claim(settings.parity_len)?,
    ];
    out.extend(refinement_claims(settings.refine_len)?);
    out.push(power_equivalence_claim(settings.oracle_len)?);
    out.push(triple_claim(settings.max_len)?);
    out.push(two_intersection_claim(settings.max_len)?);
    out.push(class_222_claim(settings.max_len)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_claims_pass() {
        assert_eq!(si_one_claim().unwrap().status, ClaimStatus::Pass);
        assert_eq!(si_two_claim().unwrap().status, ClaimStatus::Pass);
    }

    #[test]
    fn small_suite_passes() {
        let claims = run_claims(&VerifySettings::with_max_len(4, 2)).unwrap();
        for c in &claims {
            assert_ne!(c.status, ClaimStatus::Fail, "{} {}", c.id, c.detail);
        }
    }
}
