//! Two-level fusion of neutrosophic reports.
//!
//! Each `(T, I, F)` value about a proposition `A` becomes elementary
//! granules on `{A, A^c, A∪A^c, A∩A^c}` through the maximum-entropy interval
//! model. The granules of a report are then combined on the hyper-power set
//! of the report's generators, and two reports are combined with each other.
//! `A` and its complement are independent generators, so the paradox
//! `A∩A^c` is an ordinary proposition.

use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::fusion::{dsm_combine, dsm_combine_n};
use crate::interval::{
    interval_to_bpa, solve_mstar, solve_mstar_with_constant, BinaryGranule, IntervalEvidence,
};
use crate::mass::{DomainMode, Granule};
use crate::neutro::NValue;

/// Most generators a report may use; keeps `|D^Θ|` at 7580 or below.
pub const MAX_GENERATORS: usize = 5;

/// Prefix marking the formal complement of a generator.
pub const COMPLEMENT_PREFIX: char = '~';

/// Options of the value-to-granule mapping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Options {
    /// Solve the falsity granule's quartic with the indeterminacy bounds in
    /// its constant term, as printed in the original mapping table, instead
    /// of the falsity bounds.
    pub strict_paper: bool,
}

/// One report entry: the value of a generator.
#[derive(Debug, Clone, PartialEq)]
pub struct NItem {
    pub prop: String,
    pub value: NValue,
}

/// A neutrosophic report over an ordered list of generators.
#[derive(Debug, Clone, PartialEq)]
pub struct NReport {
    frame: Frame,
    items: Vec<NItem>,
}

/// Label of the formal complement: `X` ↔ `~X`.
pub fn complement_label(label: &str) -> String {
    match label.strip_prefix(COMPLEMENT_PREFIX) {
        Some(rest) => rest.to_string(),
        None => format!("{COMPLEMENT_PREFIX}{label}"),
    }
}

impl NReport {
    pub fn new(generators: Vec<String>, items: Vec<NItem>) -> Result<Self> {
        if generators.len() > MAX_GENERATORS {
            return Err(Error::GeneratorBudget(generators.len()));
        }
        let frame = Frame::new(generators)?;
        for item in &items {
            for label in [item.prop.clone(), complement_label(&item.prop)] {
                if frame.index_of(&label).is_none() {
                    return Err(Error::InvalidReport(format!(
                        "item `{}` needs generator `{label}`",
                        item.prop
                    )));
                }
            }
        }
        Ok(Self { frame, items })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn generators(&self) -> &[String] {
        self.frame.labels()
    }

    pub fn items(&self) -> &[NItem] {
        &self.items
    }
}

fn evidence(lo: f64, hi: f64) -> Result<IntervalEvidence> {
    IntervalEvidence::new(lo.clamp(0.0, 1.0), hi.clamp(0.0, 1.0))
}

/// Granules for a value with single-number components.
pub fn case1(v: &NValue) -> Result<[BinaryGranule; 3]> {
    if !v.clamp01().is_point() {
        return Err(Error::ComponentShape("a single number"));
    }
    case2(v, Options::default())
}

/// Granules for a value whose components are single intervals.
pub fn case2(v: &NValue, opts: Options) -> Result<[BinaryGranule; 3]> {
    let v = v.clamp01();
    if !v.is_interval() {
        return Err(Error::ComponentShape("a single interval"));
    }
    let (lt, ut) = (v.t.inf(), v.t.sup());
    let (li, ui) = (v.i.inf(), v.i.sup());
    let (lf, uf) = (v.f.inf(), v.f.sup());

    let m1 = interval_to_bpa(&evidence(lt, ut)?);

    let ev2 = evidence(1.0 - uf, 1.0 - lf)?;
    let m2star = if opts.strict_paper {
        solve_mstar_with_constant(&ev2, 4.0 * (1.0 - ui) * li)
    } else {
        solve_mstar(&ev2)
    };
    let m2 = BinaryGranule {
        a: (ev2.lo() - m2star / 2.0).max(0.0),
        ac: (1.0 - ev2.hi() - m2star / 2.0).max(0.0),
        union: ev2.hi() - ev2.lo(),
        inter: m2star,
    };

    let spread = (ui - li) / 2.0;
    let m3 = BinaryGranule {
        a: spread,
        ac: spread,
        union: li,
        inter: 1.0 - ui,
    };
    Ok([m1, m2, m3])
}

/// Conjunctive combination on the two-generator lattice.
pub fn combine_binary(x: &BinaryGranule, y: &BinaryGranule) -> BinaryGranule {
    let xs = [x.a, x.ac, x.union, x.inter];
    let ys = [y.a, y.ac, y.union, y.inter];
    // Index 0: A, 1: A^c, 2: A∪A^c, 3: A∩A^c.
    let meet = |i: usize, j: usize| match (i, j) {
        (3, _) | (_, 3) => 3,
        (2, k) | (k, 2) => k,
        (i, j) if i == j => i,
        _ => 3,
    };
    let mut out = [0.0; 4];
    for (i, a) in xs.iter().enumerate() {
        for (j, b) in ys.iter().enumerate() {
            out[meet(i, j)] += a * b;
        }
    }
    BinaryGranule {
        a: out[0],
        ac: out[1],
        union: out[2],
        inter: out[3],
    }
}

fn normalized(g: BinaryGranule) -> Result<BinaryGranule> {
    let s = g.total();
    if s <= 0.0 {
        return Err(Error::ZeroTotal);
    }
    Ok(BinaryGranule {
        a: g.a / s,
        ac: g.ac / s,
        union: g.union / s,
        inter: g.inter / s,
    })
}

/// Granule for a value whose components are unions of intervals: every
/// choice of one interval per component is mapped as a single-interval
/// value, and all resulting granules are combined and normalized.
pub fn case3(v: &NValue, opts: Options) -> Result<BinaryGranule> {
    let v = v.clamp01();
    let mut acc: Option<BinaryGranule> = None;
    for t in v.t.parts() {
        for i in v.i.parts() {
            for f in v.f.parts() {
                let triple = NValue::new(
                    crate::neutro::SubsetU::interval(t.lo, t.hi)?,
                    crate::neutro::SubsetU::interval(i.lo, i.hi)?,
                    crate::neutro::SubsetU::interval(f.lo, f.hi)?,
                );
                for g in case2(&triple, opts)? {
                    acc = Some(match acc {
                        Some(a) => combine_binary(&a, &g),
                        None => g,
                    });
                }
            }
        }
    }
    normalized(acc.ok_or(Error::Empty("component"))?)
}

/// The plain evidential reading `m(A) = T/c`, `m(A^c) = F/c`,
/// `m(A∪A^c) = I/c` with `c = T + I + F`.
pub fn dst_shortcut(v: &NValue) -> Result<BinaryGranule> {
    let v = v.clamp01();
    if !v.is_point() {
        return Err(Error::ComponentShape("a single number"));
    }
    let (t, i, f) = (v.t.inf(), v.i.inf(), v.f.inf());
    let c = t + i + f;
    if c <= 0.0 {
        return Err(Error::ZeroTotal);
    }
    Ok(BinaryGranule {
        a: t / c,
        ac: f / c,
        union: i / c,
        inter: 0.0,
    })
}

/// Elementary granules of one value: three for single-interval components,
/// one combined granule otherwise.
pub fn value_granules(v: &NValue, opts: Options) -> Result<Vec<BinaryGranule>> {
    if v.clamp01().is_interval() {
        Ok(case2(v, opts)?.to_vec())
    } else {
        Ok(vec![case3(v, opts)?])
    }
}

/// Places a binary granule about `prop` on the report's generator frame.
pub fn lift(g: &BinaryGranule, prop: &str, frame: &Frame) -> Result<Granule> {
    let index = |label: &str| {
        frame
            .index_of(label)
            .ok_or_else(|| Error::InvalidReport(format!("unknown generator `{label}`")))
    };
    let a = frame.singleton(index(prop)?);
    let ac = frame.singleton(index(&complement_label(prop))?);
    Granule::new(
        frame,
        [
            (a, g.a),
            (ac, g.ac),
            (a.union(&ac)?, g.union),
            (a.inter(&ac)?, g.inter),
        ],
        DomainMode::HyperPowerSet,
        true,
    )
}

/// Every elementary granule of a report, lifted to its generator frame.
pub fn report_granules(r: &NReport, opts: Options) -> Result<Vec<Granule>> {
    let mut out = Vec::new();
    for item in &r.items {
        for g in value_granules(&item.value, opts)? {
            out.push(lift(&g, &item.prop, &r.frame)?);
        }
    }
    Ok(out)
}

/// First level: combination of a report's elementary granules.
pub fn combine_report(r: &NReport, opts: Options) -> Result<Granule> {
    let granules = report_granules(r, opts)?;
    if granules.is_empty() {
        return Err(Error::Empty("report items"));
    }
    dsm_combine_n(&granules)
}

/// Second level: combination of two reports over the same generators.
pub fn fuse_reports(r1: &NReport, r2: &NReport, opts: Options) -> Result<Granule> {
    if r1.generators() != r2.generators() {
        return Err(Error::FrameMismatch(format!(
            "reports use generators {:?} and {:?}",
            r1.generators(),
            r2.generators()
        )));
    }
    dsm_combine(&combine_report(r1, opts)?, &combine_report(r2, opts)?)
}
