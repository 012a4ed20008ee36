//! Experiments built on the engine: censuses, k-equivalence, power laws,
//! scans and the claim suite.

pub mod census;
pub mod equivalence;
pub mod pairs;
pub mod powers;
pub mod scans;
pub mod verify;

pub use census::{classes_with_si, default_cap, power_probes, si_one_classes, ProbeSet};
pub use equivalence::{
    equivalence_partition, equivalence_report, k_equivalent, oracle_confirms, refinement_check, triple_of, Cell,
    EquivalenceReport, RefinementVerdict, Triple,
};
pub use pairs::{oracle_agreement, parity_scan, AgreementReport, Mismatch, ParityReport};
pub use powers::{
    power_refinement_check, verify_families, verify_power_formulas, LawRow, LengthFamily, PowerReport,
    PowerSettings,
};
pub use scans::{
    classify_two_intersections, equiv_class_222, scan_triples, FormMatch, ObservedTriple, TripleScan, TwoForm,
    TwoIntersectionReport,
};
pub use verify::{run_claims, Claim, ClaimStatus, VerifySettings};
