use fox_coloring::coloring::{
    coloring_smith, count_colorings, enumerate_colorings_with, generating_arcs, Coloring,
    ColoringProfile, EnumerationOptions,
};
use fox_coloring::diagram::{
    apply_move, build_diagram, catalog, catalog_names, detect_sites, reidemeister_variants,
    MoveSite, PlanarDiagram,
};
use fox_coloring::orbits::{build_group, orbit_partition, verify_counts, GroupKind, VerifyOptions};
use fox_coloring::primes::is_odd_prime;
use fox_coloring::Error;
use num_bigint::{BigInt, BigUint};
use serde_json::{json, Value};

use crate::table::Table;
use crate::target::{resolve, Target};

pub struct Report {
    pub text: String,
    pub json: Value,
    /// A verification check failed; the report is still printed.
    pub failed: bool,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            failed: false,
        }
    }
}

/// An error that ends the command, with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(message: String) -> Self {
        Failure { code: 1, message }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_budget() { 2 } else { 1 };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

// integers that fit in u64 stay numbers; larger ones become strings
fn big_json(x: &BigInt) -> Value {
    match u64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn ubig_json(x: &BigUint) -> Value {
    big_json(&BigInt::from(x.clone()))
}

fn arc_ids(d: &PlanarDiagram) -> Vec<u32> {
    (0..d.arc_count()).map(|a| d.arc_id(a)).collect()
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn check_modulus(m: u64, least: u64) -> Result<(), Failure> {
    if m < least {
        return Err(Error::BadModulus(m, least).into());
    }
    Ok(())
}

pub fn analyze(target: &str, modulus: Option<u64>) -> Result<Report, Failure> {
    let Target { name, diagram: d } = resolve(target)?;
    let profile = ColoringProfile::new(&d)?;
    let mut t = Table::new();
    t.row(["knot", &name])
        .row(["crossings".to_string(), d.crossing_count().to_string()])
        .row(["arcs".to_string(), d.arc_count().to_string()])
        .row([
            "invariant factors".to_string(),
            join(&profile.invariant_factors, " "),
        ])
        .row(["determinant".to_string(), profile.determinant.to_string()]);
    let mut j = json!({
        "knot": name,
        "pd": d.pd().to_string(),
        "crossings": d.crossing_count(),
        "arcs": d.arc_count(),
        "invariant_factors": profile.invariant_factors.iter().map(big_json).collect::<Vec<_>>(),
        "determinant": big_json(&profile.determinant),
    });
    if let Some(m) = modulus {
        check_modulus(m, 2)?;
        let count = count_colorings(&coloring_smith(&d), m)?;
        let nullity = profile.nullity(m);
        t.row([format!("nullity mod {m}"), nullity.to_string()])
            .row([format!("colorings mod {m}"), count.to_string()]);
        j["modulus"] = json!(m);
        j["nullity"] = json!(nullity);
        j["colorings"] = ubig_json(&count);
        if is_odd_prime(m) {
            let gens: Vec<u32> = generating_arcs(&d, m)?
                .into_iter()
                .map(|a| d.arc_id(a))
                .collect();
            t.row(["generating arcs".to_string(), join(&gens, " ")]);
            j["generating_arcs"] = json!(gens);
        }
    }
    Ok(Report::ok(t.render(), j))
}

fn coloring_table(d: &PlanarDiagram, header: &str, cs: &[&Coloring]) -> String {
    let mut t = Table::new();
    let mut head = vec![header.to_string()];
    head.extend(arc_ids(d).iter().map(|a| format!("arc {a}")));
    t.row(head);
    for (i, c) in cs.iter().enumerate() {
        let mut r = vec![(i + 1).to_string()];
        r.extend(c.values.iter().map(u64::to_string));
        t.row(r);
    }
    t.render()
}

pub fn classes(target: &str, m: u64, group: GroupKind, budget: u128) -> Result<Report, Failure> {
    let Target { name, diagram: d } = resolve(target)?;
    check_modulus(m, 3)?;
    let opts = EnumerationOptions {
        budget,
        nontrivial_only: true,
        ..Default::default()
    };
    let cs = enumerate_colorings_with(&d, m, &opts)?;
    let g = build_group(group, m)?;
    let part = orbit_partition(&cs, &g)?;
    let reps: Vec<&Coloring> = part.orbits.iter().map(|o| &o.representative).collect();
    let mut text = format!(
        "{name}: {} {group} class(es) of non-trivial {m}-colorings (group order {})\n",
        part.class_count,
        g.order()
    );
    if !reps.is_empty() {
        text.push_str(&format!("orbit sizes: {}\n\n", join(&part.sizes(), " ")));
        text.push_str(&coloring_table(&d, "class", &reps));
    }
    let j = json!({
        "knot": name,
        "modulus": m,
        "group": group.to_string(),
        "group_order": g.order(),
        "nontrivial": cs.len(),
        "class_count": part.class_count,
        "orbit_sizes": part.sizes(),
        "arcs": arc_ids(&d),
        "representatives": reps.iter().map(|c| c.values.clone()).collect::<Vec<_>>(),
    });
    Ok(Report::ok(text, j))
}

pub fn enumerate(target: &str, m: u64, nontrivial: bool, budget: u128) -> Result<Report, Failure> {
    let Target { name, diagram: d } = resolve(target)?;
    check_modulus(m, 2)?;
    let opts = EnumerationOptions {
        budget,
        nontrivial_only: nontrivial,
        ..Default::default()
    };
    let cs = enumerate_colorings_with(&d, m, &opts)?;
    let kind = if nontrivial { "non-trivial " } else { "" };
    let mut text = format!("{name}: {} {kind}{m}-coloring(s)\n", cs.len());
    if !cs.is_empty() {
        text.push('\n');
        text.push_str(&coloring_table(&d, "#", &cs.iter().collect::<Vec<_>>()));
    }
    let j = json!({
        "knot": name,
        "modulus": m,
        "nontrivial_only": nontrivial,
        "count": cs.len(),
        "arcs": arc_ids(&d),
        "colorings": cs.iter().map(|c| c.values.clone()).collect::<Vec<_>>(),
    });
    Ok(Report::ok(text, j))
}

pub fn verify(
    target: &str,
    primes: &[u64],
    moves: usize,
    seed: u64,
    budget: u128,
) -> Result<Report, Failure> {
    let Target { name, diagram: d } = resolve(target)?;
    if primes.is_empty() {
        return Err(Failure::input("no primes given".into()));
    }
    let mut opts = VerifyOptions {
        variants: moves,
        seed,
        ..Default::default()
    };
    opts.enumeration.budget = budget;
    let mut t = Table::new();
    t.row([
        "",
        "p",
        "diagram",
        "crossings",
        "nullity",
        "aut",
        "inn",
        "predicted",
    ]);
    let mut reports = Vec::new();
    let mut failed = false;
    for &p in primes {
        let r = verify_counts(&name, &d, p, &opts)?;
        let predicted = format!(
            "{} / {}",
            r.predicted_aut.unwrap_or(0),
            r.predicted_inn.unwrap_or(0)
        );
        for (i, row) in r.diagrams.iter().enumerate() {
            let which = if i == 0 {
                "input".to_string()
            } else {
                format!("variant {i}")
            };
            t.row([
                if row.passed { "PASS" } else { "FAIL" }.to_string(),
                p.to_string(),
                which,
                row.crossings.to_string(),
                row.nullity.to_string(),
                row.aut_classes.to_string(),
                row.inn_classes.to_string(),
                predicted.clone(),
            ]);
        }
        failed |= !r.passed;
        reports.push(r);
    }
    let mut text = t.render();
    for r in &reports {
        for f in &r.failures {
            text.push_str(&format!("p={}: {f}\n", r.p));
        }
    }
    text.push_str(if failed {
        "verification FAILED\n"
    } else {
        "verification passed\n"
    });
    let j = json!({
        "passed": !failed,
        "reports": reports.iter().map(|r| serde_json::to_value(r).expect("report serializes")).collect::<Vec<_>>(),
    });
    Ok(Report {
        text,
        json: j,
        failed,
    })
}

pub fn catalog_cmd(name: Option<&str>) -> Result<Report, Failure> {
    if let Some(name) = name {
        let d = build_diagram(catalog(name)?);
        let pd = d.pd().to_string();
        return Ok(Report::ok(
            format!("{pd}\n"),
            json!({"name": name, "crossings": d.crossing_count(), "pd": pd}),
        ));
    }
    let mut t = Table::new();
    t.row(["name", "crossings", "determinant", "pd"]);
    let mut entries = Vec::new();
    for name in catalog_names() {
        let d = build_diagram(catalog(name)?);
        let det = ColoringProfile::new(&d)?.determinant;
        let pd = d.pd().to_string();
        t.row([
            name.to_string(),
            d.crossing_count().to_string(),
            det.to_string(),
            pd.clone(),
        ]);
        entries.push(json!({
            "name": name,
            "crossings": d.crossing_count(),
            "determinant": big_json(&det),
            "pd": pd,
        }));
    }
    Ok(Report::ok(t.render(), Value::Array(entries)))
}

pub fn moves(
    target: &str,
    apply: &[MoveSite],
    random: Option<usize>,
    seed: u64,
) -> Result<Report, Failure> {
    let Target {
        name,
        diagram: mut d,
    } = resolve(target)?;
    let mut applied: Vec<String> = Vec::new();
    for &site in apply {
        d = apply_move(&d, site)?;
        applied.push(site.to_string());
    }
    if let Some(k) = random.filter(|&k| k > 0) {
        d = reidemeister_variants(&d, k, seed)
            .pop()
            .expect("k > 0 variants");
        applied.push(format!("{k} random insertion(s), seed {seed}"));
    }
    let sites: Vec<String> = detect_sites(&d).iter().map(MoveSite::to_string).collect();
    let mut text = String::new();
    if !applied.is_empty() {
        text.push_str(&format!("applied: {}\n", applied.join(", ")));
    }
    text.push_str(&format!(
        "{name}: {} crossing(s)\n{}\n",
        d.crossing_count(),
        d.pd()
    ));
    if sites.is_empty() {
        text.push_str("no R1/R2 deletion or R3 sites\n");
    } else {
        text.push_str(&format!("sites: {}\n", sites.join(" ")));
    }
    let j = json!({
        "knot": name,
        "applied": applied,
        "crossings": d.crossing_count(),
        "pd": d.pd().to_string(),
        "sites": sites,
    });
    Ok(Report::ok(text, j))
}
