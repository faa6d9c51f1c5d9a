//! Subcommand implementations. Each returns the text written to stdout.

use std::fmt::Write as _;
use std::path::Path;

use evifuse::entropy::{
    conditional_entropy, entropy_of_combined, generalized_entropy, joint_entropy, shannon, Given,
};
use evifuse::frame::{enumerate_hyper_power_set_with, strength};
use evifuse::fusion::{condition, dempster_combine, dsm_combine, fusion_table, normalize};
use evifuse::interval::{interval_to_bpa, IntervalEvidence};
use evifuse::neutro::{self, classify, NValue};
use evifuse::nfusion::{combine_report, fuse_reports, Options};
use evifuse::{DomainMode, Granule};
use serde_json::{json, Value};

use crate::error::{CliError, Result};
use crate::input::{load_report, Scenario};

/// Fixed four-decimal rendering; values that round to zero print unsigned.
pub fn f4(x: f64) -> String {
    if x.abs() < 5e-5 {
        "0.0000".into()
    } else {
        format!("{x:.4}")
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

/// Rows sorted by mass, largest first.
fn sorted_masses(g: &Granule) -> Vec<(String, f64)> {
    let mut rows: Vec<_> = g.masses().map(|(p, m)| (*p, m)).collect();
    rows.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
    rows.into_iter()
        .map(|(p, m)| (g.frame().describe(&p), m))
        .collect()
}

fn table(out: &mut String, header: [&str; 2], rows: &[(String, String)]) {
    let width = rows
        .iter()
        .map(|r| r.0.chars().count())
        .chain([header[0].len()])
        .max()
        .unwrap_or(0);
    let _ = writeln!(out, "{:<width$}  {}", header[0], header[1]);
    for (a, b) in rows {
        let _ = writeln!(out, "{a:<width$}  {b}");
    }
}

fn mass_table(out: &mut String, g: &Granule) {
    let rows: Vec<_> = sorted_masses(g)
        .into_iter()
        .map(|(p, m)| (p, f4(m)))
        .collect();
    table(out, ["proposition", "mass"], &rows);
}

pub fn hyperset(n: usize, allow_huge: bool, as_json: bool) -> Result<String> {
    let frame = evifuse::Frame::numbered(n)?;
    let elements = enumerate_hyper_power_set_with(&frame, allow_huge)?;
    if as_json {
        let items: Vec<Value> = elements
            .iter()
            .map(|p| json!({"expr": frame.describe(p), "mask": format!("{:#x}", p.mask())}))
            .collect();
        return Ok(pretty(
            &json!({"n": n, "count": elements.len(), "elements": items}),
        ));
    }
    let rows: Vec<_> = elements
        .iter()
        .map(|p| (frame.describe(p), format!("{:#x}", p.mask())))
        .collect();
    let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (e, m) in &rows {
        let _ = writeln!(out, "{e:<width$}  {m}");
    }
    let _ = writeln!(out, "count: {}", elements.len());
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Rule {
    Dempster,
    Dsm,
}

/// Conflict above which a Dempster combination prints a warning.
pub const CONFLICT_WARNING: f64 = 0.5;

struct Fused {
    granule: Granule,
    rule: Rule,
    k: Option<f64>,
    raw_total: f64,
}

fn default_rule(s: &Scenario) -> Rule {
    match s.model {
        crate::input::Model::Dst => Rule::Dempster,
        crate::input::Model::Dsm => Rule::Dsm,
    }
}

fn fuse_all(s: &Scenario, rule: Option<Rule>, normalize_output: bool) -> Result<Fused> {
    let granules = s.granules()?;
    let rule = rule.unwrap_or_else(|| default_rule(s));
    let mut iter = granules.into_iter().map(|(_, g)| g);
    let first = iter
        .next()
        .ok_or_else(|| CliError::Invalid("scenario has no sources".into()))?;
    match rule {
        Rule::Dempster => {
            let mut k = 1.0;
            let mut acc = first;
            for g in iter {
                let (next, report) = dempster_combine(&acc, &g)?;
                k *= report.k;
                acc = next;
            }
            let raw_total = acc.total();
            Ok(Fused {
                granule: acc,
                rule,
                k: Some(k),
                raw_total,
            })
        }
        Rule::Dsm => {
            let mut acc = first;
            for g in iter {
                acc = dsm_combine(&acc, &g)?;
            }
            let raw_total = acc.total();
            let granule = if normalize_output {
                normalize(&acc)?
            } else {
                acc
            };
            Ok(Fused {
                granule,
                rule,
                k: None,
                raw_total,
            })
        }
    }
}

pub fn fuse(
    path: &Path,
    rule: Option<Rule>,
    normalize_output: bool,
    as_json: bool,
) -> Result<String> {
    let s = Scenario::load(path)?;
    if s.sources.len() < 2 {
        return Err(CliError::Invalid(
            "fusion needs at least two sources".into(),
        ));
    }
    let fused = fuse_all(&s, rule, normalize_output)?;
    if let Some(k) = fused.k {
        if 1.0 - k > CONFLICT_WARNING {
            eprintln!(
                "warning: conflict {} between the sources; the normalized result may be misleading",
                f4(1.0 - k)
            );
        }
    }
    let rule_name = match fused.rule {
        Rule::Dempster => "dempster",
        Rule::Dsm => "dsm",
    };
    if as_json {
        let mut v = serde_json::to_value(Scenario::from_granule("fused", &fused.granule))
            .expect("scenario serializes");
        let obj = v.as_object_mut().expect("object");
        obj.insert("rule".into(), json!(rule_name));
        obj.insert("total_before_normalization".into(), json!(fused.raw_total));
        if let Some(k) = fused.k {
            obj.insert("k".into(), json!(k));
            obj.insert("weight_of_conflict".into(), json!((1.0 / k).ln()));
        }
        return Ok(pretty(&v));
    }
    let mut out = format!("rule: {rule_name}\n");
    mass_table(&mut out, &fused.granule);
    match fused.k {
        Some(k) => {
            let _ = writeln!(out, "K = {}", f4(k));
            let _ = writeln!(out, "weight of conflict = {}", f4((1.0 / k).ln()));
        }
        None => {
            let _ = writeln!(out, "total before normalization = {}", f4(fused.raw_total));
        }
    }
    Ok(out)
}

pub fn entropy(path: &Path, generalized: bool, as_json: bool) -> Result<String> {
    let s = Scenario::load(path)?;
    let granules = s.granules()?;
    if !(1..=2).contains(&granules.len()) {
        return Err(CliError::Invalid("entropy takes one or two sources".into()));
    }
    let mut values: Vec<(String, f64)> = granules
        .iter()
        .map(|(name, g)| (format!("H({name})"), shannon(g)))
        .collect();
    if let [(a, m1), (b, m2)] = granules.as_slice() {
        let t = fusion_table(m1, m2)?;
        let joint = joint_entropy(&t);
        let a_given_b = conditional_entropy(&t, Given::Rows);
        let b_given_a = conditional_entropy(&t, Given::Cols);
        values.push((format!("H({a}, {b})"), joint));
        values.push((format!("H({a} | {b})"), a_given_b));
        values.push((format!("H({b} | {a})"), b_given_a));
        values.push((
            "chain-rule residual".into(),
            joint - shannon(m2) - a_given_b,
        ));
        values.push(("H(combined)".into(), entropy_of_combined(&t.collapse())));
    }
    let mut strengths = Vec::new();
    if generalized {
        for (name, g) in &granules {
            let mut rows = Vec::new();
            for (p, m) in g.masses() {
                rows.push((g.frame().describe(p), strength(p, g.frame())?, m));
            }
            values.push((format!("H_g({name})"), generalized_entropy(g)?));
            strengths.push((name.clone(), rows));
        }
    }
    if as_json {
        let mut obj = serde_json::Map::new();
        for (k, v) in &values {
            obj.insert(k.clone(), json!(v));
        }
        for (name, rows) in &strengths {
            let list: Vec<Value> = rows
                .iter()
                .map(|(e, s, m)| json!({"expr": e, "strength": s.to_string(), "mass": m}))
                .collect();
            obj.insert(format!("strengths({name})"), json!(list));
        }
        return Ok(pretty(&Value::Object(obj)));
    }
    let mut out = String::new();
    for (name, rows) in &strengths {
        let _ = writeln!(out, "source {name}");
        let width = rows
            .iter()
            .map(|r| r.0.len())
            .chain([11])
            .max()
            .unwrap_or(0);
        let _ = writeln!(out, "{:<width$}  {:>6}  mass", "proposition", "s(A)");
        for (e, st, m) in rows {
            let _ = writeln!(out, "{e:<width$}  {:>6}  {}", st.to_string(), f4(*m));
        }
    }
    for (k, v) in &values {
        if k == "chain-rule residual" {
            let _ = writeln!(out, "{k} = {v:.1e}");
        } else {
            let _ = writeln!(out, "{k} = {}", f4(*v));
        }
    }
    Ok(out)
}

pub fn pignistic(path: &Path, as_json: bool) -> Result<String> {
    let s = Scenario::load(path)?;
    let frame = s.frame()?;
    let mut results = Vec::new();
    for (name, g) in s.granules()? {
        let p = match g.mode() {
            DomainMode::PowerSet => g.pignistic_classical()?,
            DomainMode::HyperPowerSet => g.pignistic_general()?,
        };
        results.push((name, p));
    }
    if as_json {
        let obj: serde_json::Map<String, Value> = results
            .iter()
            .map(|(name, p)| {
                let inner: serde_json::Map<String, Value> = frame
                    .labels()
                    .iter()
                    .zip(p)
                    .map(|(l, x)| (l.clone(), json!(x)))
                    .collect();
                (name.clone(), Value::Object(inner))
            })
            .collect();
        return Ok(pretty(&Value::Object(obj)));
    }
    let mut out = String::new();
    for (name, p) in &results {
        let _ = writeln!(out, "source {name}");
        let rows: Vec<_> = frame
            .labels()
            .iter()
            .zip(p)
            .map(|(l, x)| (l.clone(), f4(*x)))
            .collect();
        table(&mut out, ["hypothesis", "probability"], &rows);
    }
    Ok(out)
}

pub struct Query<'a> {
    pub bel: &'a [String],
    pub pl: &'a [String],
    pub given: Option<&'a str>,
    pub rule: Option<Rule>,
}

pub fn query(path: &Path, q: Query<'_>, as_json: bool) -> Result<String> {
    let s = Scenario::load(path)?;
    let g = if s.sources.len() > 1 {
        fuse_all(&s, q.rule, false)?.granule
    } else {
        s.granules()?
            .pop()
            .ok_or_else(|| CliError::Invalid("scenario has no sources".into()))?
            .1
    };
    let frame = g.frame().clone();
    let cond = match q.given {
        Some(b) => Some(condition(&g, &frame.prop(b)?)?),
        None => None,
    };
    let suffix = q.given.map(|b| format!(" given {b}")).unwrap_or_default();
    let mut out = String::new();
    let mut answers = Vec::new();
    for (kind, exprs) in [("Bel", q.bel), ("Pl", q.pl)] {
        for e in exprs {
            let a = frame.prop(e)?;
            let (value, contributors) = match (&cond, kind) {
                (Some(c), "Bel") => (c.bel(&a)?, Vec::new()),
                (Some(c), _) => (c.pl(&a)?, Vec::new()),
                (None, "Bel") => (g.belief(&a)?, g.belief_contributors(&a)?),
                (None, _) => (g.plausibility(&a)?, g.plausibility_contributors(&a)?),
            };
            let _ = writeln!(out, "{kind}({e}){suffix} = {}", f4(value));
            for (p, m) in &contributors {
                let _ = writeln!(out, "  + m({}) = {}", frame.describe(p), f4(*m));
            }
            answers.push(json!({
                "kind": kind,
                "expr": e,
                "given": q.given,
                "value": value,
                "contributors": contributors
                    .iter()
                    .map(|(p, m)| json!({"expr": frame.describe(p), "mass": m}))
                    .collect::<Vec<_>>(),
            }));
        }
    }
    if as_json {
        return Ok(pretty(&json!(answers)));
    }
    Ok(out)
}

pub fn interval2bpa(lo: f64, hi: f64, as_json: bool) -> Result<String> {
    let g = interval_to_bpa(&IntervalEvidence::new(lo, hi)?);
    let rows = [
        ("m*", g.inter),
        ("m(A)", g.a),
        ("m(A^c)", g.ac),
        ("m(A | A^c)", g.union),
        ("m(A & A^c)", g.inter),
    ];
    if as_json {
        return Ok(pretty(&json!({
            "lo": lo, "hi": hi, "mstar": g.inter,
            "a": g.a, "ac": g.ac, "union": g.union, "inter": g.inter,
        })));
    }
    let mut out = String::new();
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<10} = {}", f4(v));
    }
    Ok(out)
}

pub fn nfuse(
    first: &Path,
    second: Option<&Path>,
    opts: Options,
    normalize_output: bool,
    as_json: bool,
) -> Result<String> {
    let r1 = load_report(first)?;
    let raw = match second {
        Some(p) => fuse_reports(&r1, &load_report(p)?, opts)?,
        None => combine_report(&r1, opts)?,
    };
    let g = if normalize_output {
        normalize(&raw)?
    } else {
        raw.clone()
    };
    if as_json {
        let mut v = serde_json::to_value(Scenario::from_granule("fused", &g)).expect("serializes");
        v.as_object_mut()
            .expect("object")
            .insert("total_before_normalization".into(), json!(raw.total()));
        return Ok(pretty(&v));
    }
    let mut out = String::new();
    mass_table(&mut out, &g);
    let _ = writeln!(out, "total = {}", f4(raw.total()));
    Ok(out)
}

pub fn classify_value(text: &str, as_json: bool) -> Result<String> {
    let v: NValue = text.parse()?;
    let labels: Vec<&str> = classify(&v).into_iter().map(|l| l.as_str()).collect();
    if as_json {
        return Ok(pretty(&json!({
            "value": v.to_string(), "n_sup": v.n_sup(), "n_inf": v.n_inf(), "labels": labels,
        })));
    }
    Ok(format!(
        "value: {v}\nn_sup = {}\nn_inf = {}\nlabels: {}\n",
        f4(v.n_sup()),
        f4(v.n_inf()),
        labels.join(", ")
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum NOp {
    Not,
    And,
    Or,
    Xor,
    Implies,
    Iff,
    Sheffer,
    Peirce,
    Complement,
    Intersect,
    Union,
    Difference,
    Subset,
    Padd,
    Psub,
    Pmul,
    Pnot,
    Punion,
}

pub struct NopFlags {
    pub legacy_difference: bool,
    pub swap_negation: bool,
}

pub fn nop(op: NOp, a: &str, b: Option<&str>, flags: NopFlags) -> Result<String> {
    use neutro::*;
    let x: NValue = a.parse()?;
    let unary = matches!(op, NOp::Not | NOp::Complement | NOp::Pnot);
    let y: Option<NValue> = b.map(str::parse).transpose()?;
    let y = match (unary, y) {
        (true, None) => None,
        (true, Some(_)) => return Err(CliError::Invalid(format!("`{op:?}` takes one operand"))),
        (false, Some(y)) => Some(y),
        (false, None) => return Err(CliError::Invalid(format!("`{op:?}` takes two operands"))),
    };
    let y = y.as_ref();
    let two = |f: fn(&NValue, &NValue) -> NValue| f(&x, y.expect("checked"));
    let result = match op {
        NOp::Not => nl_not(&x),
        NOp::Complement => ns_complement(&x),
        NOp::Pnot => np_not_with(
            &x,
            if flags.swap_negation {
                Negation::Swap
            } else {
                Negation::Complement
            },
        ),
        NOp::Subset => {
            return Ok(format!("{}\n", ns_is_subset(&x, y.expect("checked"))));
        }
        NOp::Difference => ns_difference_with(
            &x,
            y.expect("checked"),
            if flags.legacy_difference {
                Difference::Legacy
            } else {
                Difference::Product
            },
        ),
        NOp::And => two(nl_and),
        NOp::Or => two(nl_or),
        NOp::Xor => two(nl_xor),
        NOp::Implies => two(nl_implies),
        NOp::Iff => two(nl_iff),
        NOp::Sheffer => two(nl_sheffer),
        NOp::Peirce => two(nl_peirce),
        NOp::Intersect => two(ns_intersect),
        NOp::Union => two(ns_union),
        NOp::Padd => two(np_add),
        NOp::Psub => two(np_sub),
        NOp::Pmul => two(np_mul),
        NOp::Punion => two(np_union),
    };
    Ok(format!("{result}\n"))
}
