//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fail.

use std::process::Command;
use std::time::{Duration, Instant};

use pants_core::lab::{self, PowerSettings};
use pants_core::{enumerate_classes, parse_class, CurveClass, EnumFilter, Orientation};
use serde_json::Value;

fn pants(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_pants"))
        .args(args)
        .output()
        .expect("run pants");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn payload_words(args: &[&str]) -> Result<Vec<String>, String> {
    let (code, stdout) = pants(args);
    if code != 0 {
        return Err(format!("exit {code}"));
    }
    let v: Value = serde_json::from_slice(&stdout).map_err(|e| e.to_string())?;
    Ok(v["payload"]
        .as_array()
        .ok_or("payload is not an array")?
        .iter()
        .map(|w| w.as_str().unwrap_or_default().to_string())
        .collect())
}

fn expanded(words: &[&str]) -> Vec<String> {
    let mut v: Vec<CurveClass> = words
        .iter()
        .map(|w| parse_class(w, Orientation::Unoriented).unwrap())
        .collect();
    v.sort();
    v.iter().map(|c| c.to_string()).collect()
}

fn census(k: &str, want: &[&str]) -> Result<String, String> {
    let got = payload_words(&["si-classes", k, "--format", "json"])?;
    let want = expanded(want);
    if got == want {
        Ok(got.join(" "))
    } else {
        Err(format!("got {got:?}, want {want:?}"))
    }
}

fn c1() -> Result<String, String> {
    census("1", &["aB", "aab", "abb"])
}

fn c2() -> Result<String, String> {
    census("2", &["aaB", "aBB", "aaab", "aabab", "abbb", "ababb", "aabb", "abaB", "abAb"])
}

fn c3() -> Result<String, String> {
    let rows = lab::verify_families(8).map_err(|e| e.to_string())?;
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("{} want {} engine {} oracle {:?}", r.class, r.expected, r.engine, r.oracle))
        .collect();
    if bad.is_empty() && rows.len() == 24 {
        Ok(format!("{} family members, engine and oracle", rows.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn c4() -> Result<String, String> {
    let r = lab::verify_power_formulas(PowerSettings {
        max_root_len: 5,
        max_exp: 3,
        probe_len: 4,
        oracle_max_len: 6,
    })
    .map_err(|e| e.to_string())?;
    let bad: Vec<String> = r
        .self_law
        .iter()
        .chain(&r.intersection_law)
        .filter(|x| !x.pass)
        .take(5)
        .map(|x| format!("{:?}", x))
        .collect();
    if r.pass {
        Ok(format!("{} si rows, {} i rows", r.self_law.len(), r.intersection_law.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn c5() -> Result<String, String> {
    let mut notes = Vec::new();
    for o in [Orientation::Unoriented, Orientation::Oriented] {
        let r = lab::pairs::oracle_agreement(6, o).map_err(|e| e.to_string())?;
        if !r.pass() {
            return Err(format!("{o:?}: {} mismatches, first {:?}", r.mismatches.len(), r.mismatches[0]));
        }
        notes.push(format!("{o:?} {} classes {} pairs", r.classes, r.pairs));
    }
    Ok(notes.join(", "))
}

fn c6() -> Result<String, String> {
    let r = lab::pairs::parity_scan(7).map_err(|e| e.to_string())?;
    if r.pass() {
        Ok(format!("{} pairs", r.pairs))
    } else {
        Err(format!("{} odd, first {:?}", r.odd.len(), r.odd[0]))
    }
}

fn c7() -> Result<String, String> {
    let classes = enumerate_classes(7, &EnumFilter::primitive()).map_err(|e| e.to_string())?;
    let mut bad = Vec::new();
    for k in [2, 3, 4] {
        for j in [1, 2] {
            let v = lab::refinement_check(&classes, k, j, false).map_err(|e| e.to_string())?;
            if let Some((x, y)) = v.counterexamples.first() {
                bad.push(format!("k={k} j={j}: {} pairs, e.g. {x} ~ {y}", v.counterexamples.len()));
            }
        }
    }
    if bad.is_empty() {
        Ok(format!("{} classes", classes.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn c8() -> Result<String, String> {
    let scan = lab::scan_triples(8).map_err(|e| e.to_string())?;
    if scan.pass() {
        Ok(format!("{} classes, {} distinct sorted triples", scan.rows.len(), scan.observed.len()))
    } else {
        Err(format!(
            "ratio {:?} equality {:?} odd {:?} missing {:?}",
            scan.ratio_violations.first(),
            scan.equality_violations.first(),
            scan.odd_rows.first(),
            scan.missing
        ))
    }
}

fn c9() -> Result<String, String> {
    let r = lab::classify_two_intersections(8).map_err(|e| e.to_string())?;
    if r.pass() {
        Ok(format!("{} classes meet aB twice", r.members.len()))
    } else {
        let w: Vec<String> = r.non_members.iter().map(|c| c.to_string()).collect();
        Err(format!("non-members {}", w.join(" ")))
    }
}

fn c10() -> Result<String, String> {
    let args = ["verify-paper", "--format", "json"];
    let (_, first) = pants(&args);
    let (_, second) = pants(&args);
    if first.is_empty() {
        return Err("no output".into());
    }
    if first == second {
        Ok(format!("{} bytes, identical", first.len()))
    } else {
        Err("outputs differ".into())
    }
}

type Criterion = (u32, &'static str, Duration, fn() -> Result<String, String>);

fn main() {
    let min = |m: u64| Duration::from_secs(60 * m);
    let criteria: [Criterion; 10] = [
        (1, "si = 1 census", Duration::from_secs(1), c1),
        (2, "si = 2 census", Duration::from_secs(10), c2),
        (3, "family formulas", min(1), c3),
        (4, "power laws", min(5), c4),
        (5, "oracle equivalence", min(10), c5),
        (6, "parity", Duration::MAX, c6),
        (7, "refinement k => j", min(15), c7),
        (8, "triple scan", min(20), c8),
        (9, "two-intersection forms", Duration::MAX, c9),
        (10, "determinism", Duration::MAX, c10),
    ];
    let mut failed = 0;
    for (n, name, limit, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let (status, note) = match result {
            Ok(_) if elapsed > limit => ("FAIL", format!("took {elapsed:.1?}, limit {limit:?}")),
            Ok(note) => ("PASS", note),
            Err(note) => ("FAIL", note),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {n:>2} {status} {name} [{elapsed:.1?}]: {note}");
    }
    println!("{} criteria, {failed} failed", criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
