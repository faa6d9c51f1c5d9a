//! Combination rules: Dempster's orthogonal sum on the power set, the
//! conjunctive rule on the hyper-power set, Bayesian fusion of probability
//! vectors, conditioning, and the fusion table of two granules.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::frame::Proposition;
use crate::mass::{classical_set, DomainMode, Granule, NORMALIZATION_TOLERANCE};

/// Normalization constants at or below this are total contradiction.
pub const CONTRADICTION_THRESHOLD: f64 = 1e-12;

/// Normalization data of a Dempster combination.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConflictReport {
    /// `K`, the mass of the non-conflicting products.
    pub k: f64,
    /// Mass of the products with empty intersection.
    pub conflict: f64,
    /// `ln(1/K)`.
    pub weight_of_conflict: f64,
}

fn same_frame(m1: &Granule, m2: &Granule) -> Result<()> {
    if m1.frame() != m2.frame() {
        return Err(Error::FrameMismatch(format!(
            "granules over {:?} and {:?}",
            m1.frame().labels(),
            m2.frame().labels()
        )));
    }
    Ok(())
}

/// Intersection of two focal elements; exclusive hypotheses in power-set mode.
fn meet(a: &Proposition, b: &Proposition, mode: DomainMode) -> Proposition {
    match mode {
        DomainMode::PowerSet => {
            Proposition::from_singletons(a.n(), classical_set(a) & classical_set(b))
        }
        DomainMode::HyperPowerSet => a.inter(b).expect("same frame"),
    }
}

fn combined_mode(m1: &Granule, m2: &Granule) -> DomainMode {
    if m1.mode() == DomainMode::PowerSet && m2.mode() == DomainMode::PowerSet {
        DomainMode::PowerSet
    } else {
        DomainMode::HyperPowerSet
    }
}

/// Dempster's rule of combination.
pub fn dempster_combine(m1: &Granule, m2: &Granule) -> Result<(Granule, ConflictReport)> {
    same_frame(m1, m2)?;
    for g in [m1, m2] {
        if g.mode() != DomainMode::PowerSet {
            return Err(Error::DomainMode {
                expected: "power-set",
            });
        }
        if !g.is_normalized() {
            return Err(Error::NotNormalized(g.total()));
        }
    }
    let mut acc: BTreeMap<Proposition, f64> = BTreeMap::new();
    let mut conflict = 0.0;
    for (a, x) in m1.masses() {
        for (b, y) in m2.masses() {
            let c = meet(a, b, DomainMode::PowerSet);
            if c.is_empty() {
                conflict += x * y;
            } else {
                *acc.entry(c).or_insert(0.0) += x * y;
            }
        }
    }
    let k: f64 = acc.values().sum();
    if k <= CONTRADICTION_THRESHOLD {
        return Err(Error::TotalContradiction { k: k.abs() });
    }
    for m in acc.values_mut() {
        *m /= k;
    }
    let report = ConflictReport {
        k,
        conflict,
        weight_of_conflict: (1.0 / k).ln(),
    };
    Ok((
        Granule::from_parts(m1.frame(), acc, DomainMode::PowerSet),
        report,
    ))
}

/// Conjunctive combination on `D^Θ`; never renormalizes and never fails on
/// conflict. Power-set granules are promoted.
pub fn dsm_combine(m1: &Granule, m2: &Granule) -> Result<Granule> {
    same_frame(m1, m2)?;
    let mut acc: BTreeMap<Proposition, f64> = BTreeMap::new();
    for (a, x) in m1.masses() {
        for (b, y) in m2.masses() {
            let c = a.inter(b)?;
            debug_assert!(!c.is_empty(), "non-empty elements always meet");
            *acc.entry(c).or_insert(0.0) += x * y;
        }
    }
    Ok(Granule::from_parts(
        m1.frame(),
        acc,
        DomainMode::HyperPowerSet,
    ))
}

/// Left fold of [`dsm_combine`].
pub fn dsm_combine_n(granules: &[Granule]) -> Result<Granule> {
    let (first, rest) = granules.split_first().ok_or(Error::Empty("granule list"))?;
    rest.iter()
        .try_fold(first.promoted(), |acc, g| dsm_combine(&acc, g))
}

/// Divides every mass by the total.
pub fn normalize(g: &Granule) -> Result<Granule> {
    g.normalized()
}

fn check_distribution(p: &[f64], n: usize, what: &str) -> Result<()> {
    if p.len() != n {
        return Err(Error::InvalidDistribution(format!(
            "{what} has {} entries, expected {n}",
            p.len()
        )));
    }
    if p.iter().any(|x| !x.is_finite() || *x < 0.0) {
        return Err(Error::InvalidDistribution(format!(
            "{what} has a negative entry"
        )));
    }
    Ok(())
}

/// Optimal Bayesian fusion of independent sources' posteriors.
///
/// With priors `p_i`, `P{θ_i} ∝ p_i^{1-M} Π_m P_m{θ_i}`; without, the prior
/// factor is dropped.
pub fn bayes_fuse(dists: &[Vec<f64>], priors: Option<&[f64]>) -> Result<Vec<f64>> {
    let first = dists.first().ok_or(Error::Empty("distribution list"))?;
    let n = first.len();
    for (k, d) in dists.iter().enumerate() {
        check_distribution(d, n, &format!("source {}", k + 1))?;
        let s: f64 = d.iter().sum();
        if (s - 1.0).abs() > NORMALIZATION_TOLERANCE {
            return Err(Error::InvalidDistribution(format!(
                "source {} sums to {s}",
                k + 1
            )));
        }
    }
    if let Some(p) = priors {
        check_distribution(p, n, "prior")?;
        if p.iter().any(|x| *x <= 0.0) {
            return Err(Error::InvalidDistribution("prior must be positive".into()));
        }
    }
    let exponent = 1 - dists.len() as i32;
    let mut out: Vec<f64> = (0..n)
        .map(|i| {
            let prior = priors.map_or(1.0, |p| p[i].powi(exponent));
            prior * dists.iter().map(|d| d[i]).product::<f64>()
        })
        .collect();
    let z: f64 = out.iter().sum();
    if z <= 0.0 {
        return Err(Error::FullConflict);
    }
    for x in &mut out {
        *x /= z;
    }
    Ok(out)
}

/// A granule conditioned on a proposition `B`.
#[derive(Debug, Clone)]
pub struct Conditioning<'a> {
    g: &'a Granule,
    b: Proposition,
    b_complement: Proposition,
    bel_bc: f64,
    pl_b: f64,
}

/// Prepares `Bel(·|B)` and `Pl(·|B)` for a power-set granule.
pub fn condition<'a>(g: &'a Granule, b: &Proposition) -> Result<Conditioning<'a>> {
    if g.mode() != DomainMode::PowerSet {
        return Err(Error::DomainMode {
            expected: "power-set",
        });
    }
    let n = g.frame().len();
    let full = (1u64 << n) - 1;
    let b_complement = Proposition::from_singletons(n, full & !classical_set(b));
    let bel_bc = g.belief(&b_complement)?;
    let pl_b = g.plausibility(b)?;
    if pl_b <= CONTRADICTION_THRESHOLD || 1.0 - bel_bc <= CONTRADICTION_THRESHOLD {
        return Err(Error::ConditioningImpossible(format!(
            "`{}` has zero plausibility",
            g.frame().describe(b)
        )));
    }
    Ok(Conditioning {
        g,
        b: *b,
        b_complement,
        bel_bc,
        pl_b,
    })
}

impl Conditioning<'_> {
    /// `Bel(A|B) = (Bel(A ∪ B^c) - Bel(B^c)) / (1 - Bel(B^c))`.
    pub fn bel(&self, a: &Proposition) -> Result<f64> {
        let num = self.g.belief(&a.union(&self.b_complement)?)? - self.bel_bc;
        Ok(num / (1.0 - self.bel_bc))
    }

    /// `Pl(A|B) = Pl(A ∩ B) / Pl(B)`.
    pub fn pl(&self, a: &Proposition) -> Result<f64> {
        let ab = meet(a, &self.b, DomainMode::PowerSet);
        Ok(self.g.plausibility(&ab)? / self.pl_b)
    }
}

/// One cell of a fusion table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cell {
    pub mass: f64,
    pub prop: Proposition,
}

/// Grid of products `m1(col) · m2(row)` with the intersection each lands on.
#[derive(Debug, Clone, PartialEq)]
pub struct FusionTable {
    pub row_focals: Vec<(Proposition, f64)>,
    pub col_focals: Vec<(Proposition, f64)>,
    pub cells: Vec<Vec<Cell>>,
    mode: DomainMode,
    frame: crate::frame::Frame,
}

/// Builds the fusion table; rows follow `m2`'s focal elements, columns `m1`'s.
pub fn fusion_table(m1: &Granule, m2: &Granule) -> Result<FusionTable> {
    same_frame(m1, m2)?;
    let mode = combined_mode(m1, m2);
    let col_focals: Vec<_> = m1.masses().map(|(p, m)| (*p, m)).collect();
    let row_focals: Vec<_> = m2.masses().map(|(p, m)| (*p, m)).collect();
    let cells = row_focals
        .iter()
        .map(|(r, y)| {
            col_focals
                .iter()
                .map(|(c, x)| Cell {
                    mass: x * y,
                    prop: meet(c, r, mode),
                })
                .collect()
        })
        .collect();
    Ok(FusionTable {
        row_focals,
        col_focals,
        cells,
        mode,
        frame: m1.frame().clone(),
    })
}

impl FusionTable {
    pub fn total(&self) -> f64 {
        self.cells.iter().flatten().map(|c| c.mass).sum()
    }

    /// Row sums, which reproduce `m2`.
    pub fn row_marginals(&self) -> Vec<f64> {
        self.cells
            .iter()
            .map(|row| row.iter().map(|c| c.mass).sum())
            .collect()
    }

    /// Column sums, which reproduce `m1`.
    pub fn col_marginals(&self) -> Vec<f64> {
        (0..self.col_focals.len())
            .map(|j| self.cells.iter().map(|row| row[j].mass).sum())
            .collect()
    }

    /// Merges cells landing on the same proposition into a granule (the
    /// unnormalized conjunctive combination). Cells on `∅` are dropped.
    pub fn collapse(&self) -> Granule {
        let mut acc: BTreeMap<Proposition, f64> = BTreeMap::new();
        for c in self.cells.iter().flatten() {
            if !c.prop.is_empty() && c.mass > 0.0 {
                *acc.entry(c.prop).or_insert(0.0) += c.mass;
            }
        }
        Granule::from_parts(&self.frame, acc, self.mode)
    }
}
