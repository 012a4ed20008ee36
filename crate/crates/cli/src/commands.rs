use pants_core::hyperbolic::Oracle;
use pants_core::lab::{self, ClaimStatus, ProbeSet, VerifySettings};
use pants_core::{enumerate_classes, parse_class, CurveClass, Engine, EnumFilter, Orientation};
use serde_json::{json, Value};

use crate::output::{Report, Table};
use crate::{Command, Failure};

type Outcome = Result<Report, Failure>;

fn class(op: &'static str, text: &str, orientation: Orientation) -> Result<CurveClass, Failure> {
    parse_class(text, orientation).map_err(|e| Failure::new(op, e))
}

fn orientation_name(o: Orientation) -> &'static str {
    match o {
        Orientation::Oriented => "oriented",
        Orientation::Unoriented => "unoriented",
    }
}

/// The canonical word, then its shorthand spelling with `--pretty`.
fn word_cells(c: &CurveClass, pretty: bool) -> Vec<String> {
    let mut v = vec![c.to_string()];
    if pretty {
        v.push(c.word().pretty());
    }
    v
}

fn with_pretty(header: &[&'static str], pretty: bool) -> Vec<&'static str> {
    let mut h = header.to_vec();
    if pretty {
        h.insert(1, "pretty");
    }
    h
}

fn words_json(classes: &[CurveClass]) -> Value {
    classes.iter().map(|c| Value::from(c.to_string())).collect()
}

fn word_list_text(classes: &[CurveClass], pretty: bool) -> String {
    classes
        .iter()
        .map(|c| word_cells(c, pretty).join("  ") + "\n")
        .collect()
}

pub fn run(command: &Command, pretty: bool) -> Outcome {
    match command {
        Command::Canon { word, oriented } => canon(word, *oriented, pretty),
        Command::Si {
            word,
            oracle,
            max_radius,
        } => si(word, *oracle, *max_radius, pretty),
        Command::Int {
            first,
            second,
            oracle,
            max_radius,
        } => int(first, second, *oracle, *max_radius, pretty),
        Command::Triple { word } => triple(word, pretty),
        Command::Enum {
            max_len,
            oriented,
            powers,
            include_boundary,
            limit,
        } => enumerate(*max_len, *oriented, *powers, *include_boundary, *limit, pretty),
        Command::SiClasses { k, cap } => si_classes(*k, *cap, pretty),
        Command::Kequiv {
            first,
            second,
            k,
            powers,
        } => kequiv(first, second, *k, *powers, pretty),
        Command::ScanTriples { max_len } => scan_triples(*max_len, pretty),
        Command::ClassifyTwo { max_len } => classify_two(*max_len, pretty),
        Command::Class222 { max_len } => class_222(*max_len, pretty),
        Command::VerifyPaper { max_len, max_exp } => verify_paper(*max_len, *max_exp),
    }
}

fn canon(word: &str, oriented: bool, pretty: bool) -> Outcome {
    let o = if oriented {
        Orientation::Oriented
    } else {
        Orientation::Unoriented
    };
    let c = class("canon", word, o)?;
    let mut r = Report::new("canon");
    r.setting("orientation", orientation_name(o));
    r.payload = json!({
        "input": word,
        "canonical": c.to_string(),
        "pretty": c.word().pretty(),
        "length": c.len(),
        "root": c.root().to_string(),
        "exponent": c.exponent(),
        "boundary_parallel": c.is_boundary_parallel(),
    });
    let mut fields = vec![("canonical", c.to_string())];
    if pretty {
        fields.push(("pretty", c.word().pretty()));
    }
    fields.extend([
        ("length", c.len().to_string()),
        ("root", c.root().to_string()),
        ("exponent", c.exponent().to_string()),
        ("boundary_parallel", c.is_boundary_parallel().to_string()),
    ]);
    r.text = fields.iter().map(|(k, v)| format!("{k}: {v}\n")).collect();
    r.table = Table::new(&fields.iter().map(|(k, _)| *k).collect::<Vec<_>>());
    r.table.push(fields.into_iter().map(|(_, v)| v).collect());
    Ok(r)
}

fn oracle_for(max_radius: Option<usize>) -> Oracle {
    Oracle { max_radius }
}

fn si(word: &str, with_oracle: bool, max_radius: Option<usize>, pretty: bool) -> Outcome {
    let c = class("si", word, Orientation::Unoriented)?;
    let value = Engine::default().self_intersection(&c);
    let mut r = Report::new("si");
    let mut payload = json!({ "class": c.to_string(), "si": value });
    let mut header = with_pretty(&["class", "si"], pretty);
    let mut row = word_cells(&c, pretty);
    row.push(value.to_string());
    r.text = format!("{value}\n");
    if with_oracle {
        let count = oracle_for(max_radius)
            .self_intersection_count(&c)
            .map_err(|e| Failure::new("si --oracle", e))?;
        r.setting("max_radius", max_radius.map_or(Value::from("default"), Value::from));
        r.ok = count.value == value;
        payload["oracle"] = json!({ "value": count.value, "radius": count.radius, "agrees": r.ok });
        header.push("oracle");
        row.push(count.value.to_string());
        r.text.push_str(&format!("oracle: {}{}\n", count.value, if r.ok { "" } else { " MISMATCH" }));
    }
    r.payload = payload;
    r.table = Table::new(&header);
    r.table.push(row);
    Ok(r)
}

fn int(first: &str, second: &str, with_oracle: bool, max_radius: Option<usize>, pretty: bool) -> Outcome {
    let c1 = class("int", first, Orientation::Unoriented)?;
    let c2 = class("int", second, Orientation::Unoriented)?;
    let value = Engine::default().intersection(&c1, &c2);
    let mut r = Report::new("int");
    let mut payload = json!({ "first": c1.to_string(), "second": c2.to_string(), "i": value });
    let mut header = vec!["first", "second", "i"];
    let mut row = vec![c1.to_string(), c2.to_string(), value.to_string()];
    if pretty {
        header.splice(2..2, ["first_pretty", "second_pretty"]);
        row.splice(2..2, [c1.word().pretty(), c2.word().pretty()]);
    }
    r.text = format!("{value}\n");
    if with_oracle {
        let count = oracle_for(max_radius)
            .intersection_count(&c1, &c2)
            .map_err(|e| Failure::new("int --oracle", e))?;
        r.setting("max_radius", max_radius.map_or(Value::from("default"), Value::from));
        r.ok = count.value == value;
        payload["oracle"] = json!({ "value": count.value, "radius": count.radius, "agrees": r.ok });
        header.push("oracle");
        row.push(count.value.to_string());
        r.text.push_str(&format!("oracle: {}{}\n", count.value, if r.ok { "" } else { " MISMATCH" }));
    }
    r.payload = payload;
    r.table = Table::new(&header);
    r.table.push(row);
    Ok(r)
}

fn triple(word: &str, pretty: bool) -> Outcome {
    let c = class("triple", word, Orientation::Unoriented)?;
    let t = lab::triple_of(&c);
    let mut r = Report::new("triple");
    r.setting("probes", json!(["aB", "abb", "aab"]));
    r.payload = json!({ "class": c.to_string(), "triple": t });
    r.text = format!("{t}\n");
    r.table = Table::new(&with_pretty(&["class", "aB", "Cb", "aC"], pretty));
    let mut row = word_cells(&c, pretty);
    row.extend(t.0.iter().map(|x| x.to_string()));
    r.table.push(row);
    Ok(r)
}

fn enumerate(max_len: usize, oriented: bool, powers: bool, include_boundary: bool, limit: usize, pretty: bool) -> Outcome {
    let orientation = if oriented {
        Orientation::Oriented
    } else {
        Orientation::Unoriented
    };
    let filter = EnumFilter {
        non_power_only: !powers,
        orientation,
        exclude_boundary_parallel: !include_boundary,
        limit,
    };
    let classes = enumerate_classes(max_len, &filter).map_err(|e| Failure::new("enum", e))?;
    let mut r = Report::new("enum");
    r.setting("max_len", max_len)
        .setting("orientation", orientation_name(orientation))
        .setting("powers", powers)
        .setting("include_boundary", include_boundary)
        .setting("limit", limit);
    r.payload = words_json(&classes);
    r.text = word_list_text(&classes, pretty);
    r.table = Table::new(&with_pretty(&["class", "length", "exponent", "boundary_parallel"], pretty));
    for c in &classes {
        let mut row = word_cells(c, pretty);
        row.extend([c.len().to_string(), c.exponent().to_string(), c.is_boundary_parallel().to_string()]);
        r.table.push(row);
    }
    Ok(r)
}

fn si_classes(k: usize, cap: Option<usize>, pretty: bool) -> Outcome {
    let classes = lab::classes_with_si(k, cap).map_err(|e| Failure::new("si-classes", e))?;
    let mut r = Report::new("si-classes");
    r.setting("k", k)
        .setting("cap", cap.unwrap_or_else(|| lab::default_cap(k)))
        .setting("sweep_lengths", lab::census::SWEEP_LENGTHS)
        .setting("orientation", "unoriented");
    r.payload = words_json(&classes);
    r.text = word_list_text(&classes, pretty);
    r.table = Table::new(&with_pretty(&["class", "length"], pretty));
    for c in &classes {
        let mut row = word_cells(c, pretty);
        row.push(c.len().to_string());
        r.table.push(row);
    }
    Ok(r)
}

fn kequiv(first: &str, second: &str, k: usize, powers: bool, pretty: bool) -> Outcome {
    let c1 = class("kequiv", first, Orientation::Unoriented)?;
    let c2 = class("kequiv", second, Orientation::Unoriented)?;
    let probes = ProbeSet::new(k, powers).map_err(|e| Failure::new("kequiv", e))?;
    let (v1, v2) = (probes.vector(&c1), probes.vector(&c2));
    let equivalent = v1 == v2;
    let mut r = Report::new("kequiv");
    r.setting("k", k)
        .setting("powers", powers)
        .setting("cap", lab::default_cap(k));
    r.payload = json!({
        "first": c1.to_string(),
        "second": c2.to_string(),
        "k": k,
        "equivalent": equivalent,
        "probes": words_json(&probes.probes),
        "first_vector": v1,
        "second_vector": v2,
    });
    r.text = format!("{equivalent}\n");
    r.table = Table::new(&with_pretty(&["probe", "first", "second"], pretty));
    for (i, p) in probes.probes.iter().enumerate() {
        let mut row = word_cells(p, pretty);
        row.extend([v1[i].to_string(), v2[i].to_string()]);
        r.table.push(row);
    }
    Ok(r)
}

fn scan_triples(max_len: usize, pretty: bool) -> Outcome {
    let scan = lab::scan_triples(max_len).map_err(|e| Failure::new("scan-triples", e))?;
    let mut r = Report::new("scan-triples");
    r.setting("max_len", max_len).setting("probes", json!(["aB", "abb", "aab"]));
    r.ok = scan.pass();
    r.payload = json!({
        "rows": scan.rows,
        "observed": scan.observed,
        "ratio_violations": scan.ratio_violations,
        "equality_violations": scan.equality_violations,
        "odd_rows": scan.odd_rows,
        "missing": scan.missing,
        "conjecture_holds": scan.conjecture_holds(),
    });
    r.table = Table::new(&with_pretty(&["class", "aB", "Cb", "aC"], pretty));
    for row in &scan.rows {
        let mut cells = word_cells(&row.class, pretty);
        cells.extend(row.triple.0.iter().map(|x| x.to_string()));
        r.table.push(cells);
    }
    let mut observed = Table::new(&["sorted triple", "classes"]);
    for o in &scan.observed {
        observed.push(vec![o.triple.to_string(), o.count.to_string()]);
    }
    let mut text = format!("{} classes up to length {max_len}\n\n", scan.rows.len());
    text.push_str(&observed.render());
    text.push('\n');
    let counterexamples: Vec<String> = scan
        .ratio_violations
        .iter()
        .chain(&scan.equality_violations)
        .map(|row| format!("counterexample: {} {}\n", row.class, row.triple))
        .collect();
    text.push_str(&counterexamples.concat());
    for row in &scan.odd_rows {
        text.push_str(&format!("odd: {} {}\n", row.class, row.triple));
    }
    if !scan.missing.is_empty() {
        let missing: Vec<String> = scan.missing.iter().map(|t| t.to_string()).collect();
        text.push_str(&format!("not observed: {}\n", missing.join(" ")));
    }
    text.push_str(&format!(
        "max <= 2 min with (q, q, 2q) equality: {}\n",
        if scan.conjecture_holds() { "holds" } else { "FAILS" }
    ));
    r.text = text;
    Ok(r)
}

fn classify_two(max_len: usize, pretty: bool) -> Outcome {
    let report = lab::classify_two_intersections(max_len).map_err(|e| Failure::new("classify-two", e))?;
    let mut r = Report::new("classify-two");
    r.setting("max_len", max_len).setting("orientation", "unoriented");
    r.ok = report.pass();
    let members: Vec<Value> = report
        .members
        .iter()
        .map(|m| {
            let matches: Vec<Value> = m
                .matches
                .iter()
                .map(|f| json!({ "form": f.form, "m": f.m, "n": f.n }))
                .collect();
            json!({ "class": m.class.to_string(), "matches": matches })
        })
        .collect();
    r.payload = json!({
        "members": members,
        "non_members": words_json(&report.non_members),
    });
    r.table = Table::new(&with_pretty(&["class", "form", "m", "n"], pretty));
    let mut text = Table::new(&with_pretty(&["class", "forms"], pretty));
    for m in &report.members {
        let forms: Vec<String> = m
            .matches
            .iter()
            .map(|f| format!("{} (m={}, n={})", f.form, f.m, f.n))
            .collect();
        let mut row = word_cells(&m.class, pretty);
        row.push(forms.join("; "));
        text.push(row);
        for f in &m.matches {
            let mut row = word_cells(&m.class, pretty);
            row.extend([f.form.to_string(), f.m.to_string(), f.n.to_string()]);
            r.table.push(row);
        }
    }
    for c in &report.non_members {
        let mut row = word_cells(c, pretty);
        row.push("NONE".into());
        text.push(row.clone());
        row.extend([String::new(), String::new()]);
        r.table.push(row);
    }
    r.text = text.render();
    r.text.push_str(&format!(
        "\n{} classes meet aB twice, {} fit no form\n",
        report.members.len() + report.non_members.len(),
        report.non_members.len()
    ));
    Ok(r)
}

fn class_222(max_len: usize, pretty: bool) -> Outcome {
    let classes = lab::equiv_class_222(max_len).map_err(|e| Failure::new("class-222", e))?;
    let mut r = Report::new("class-222");
    r.setting("max_len", max_len).setting("orientation", "unoriented");
    r.payload = words_json(&classes);
    r.text = word_list_text(&classes, pretty);
    r.table = Table::new(&with_pretty(&["class", "length"], pretty));
    for c in &classes {
        let mut row = word_cells(c, pretty);
        row.push(c.len().to_string());
        r.table.push(row);
    }
    Ok(r)
}

fn verify_paper(max_len: usize, max_exp: usize) -> Outcome {
    let settings = VerifySettings::with_max_len(max_len, max_exp);
    let claims = lab::run_claims(&settings).map_err(|e| Failure::new("verify-paper", e))?;
    let mut r = Report::new("verify-paper");
    r.setting("max_len", settings.max_len)
        .setting("max_exp", settings.max_exp)
        .setting("family_max_n", settings.family_max_n)
        .setting("oracle_len", settings.oracle_len)
        .setting("parity_len", settings.parity_len)
        .setting("refine_len", settings.refine_len)
        .setting("max_radius", "default");
    r.ok = claims.iter().all(|c| c.status != ClaimStatus::Fail);
    r.payload = json!(claims);
    r.table = Table::new(&["id", "status", "statement", "detail"]);
    let mut text = Table::new(&["id", "status", "statement"]);
    for c in &claims {
        r.table
            .push(vec![c.id.into(), c.status.to_string(), c.statement.clone(), c.detail.clone()]);
        text.push(vec![c.id.into(), c.status.to_string(), c.statement.clone()]);
    }
    r.text = text.render();
    r.text.push('\n');
    for c in &claims {
        r.text.push_str(&format!("{}: {}\n", c.id, c.detail));
    }
    let failed = claims.iter().filter(|c| c.status == ClaimStatus::Fail).count();
    r.text.push_str(&format!("\n{} claims, {failed} failed\n", claims.len()));
    Ok(r)
}
