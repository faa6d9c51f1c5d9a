//! Mass assignments (information granules) with belief, plausibility,
//! Möbius inversion and pignistic transformations.

use std::collections::{BTreeMap, HashMap};

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::frame::{to_canonical, Frame, PropExpr, Proposition};

/// Tolerance on `Σ m = 1` for normalized granules.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-9;

/// Which lattice the focal elements live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomainMode {
    /// Classical `2^Θ`: hypotheses are exclusive, focal elements are unions of
    /// singletons.
    PowerSet,
    /// The free distributive lattice `D^Θ`.
    HyperPowerSet,
}

/// Sparse mass assignment over a frame.
#[derive(Debug, Clone, PartialEq)]
pub struct Granule {
    frame: Frame,
    masses: BTreeMap<Proposition, f64>,
    mode: DomainMode,
    normalized: bool,
}

/// Singleton indices whose own atom lies in `p`: the set `p` denotes once all
/// intersections of distinct hypotheses are taken to be empty.
pub(crate) fn classical_set(p: &Proposition) -> u64 {
    (0..p.n())
        .filter(|&i| p.mask() >> ((1u64 << i) - 1) & 1 == 1)
        .fold(0, |s, i| s | 1 << i)
}

impl Granule {
    /// Validates and collects `(proposition, mass)` pairs; repeated
    /// propositions are summed and zero masses dropped.
    pub fn new(
        frame: &Frame,
        entries: impl IntoIterator<Item = (Proposition, f64)>,
        mode: DomainMode,
        allow_unnormalized: bool,
    ) -> Result<Self> {
        let mut masses = BTreeMap::new();
        for (p, m) in entries {
            frame.check(&p)?;
            if !m.is_finite() {
                return Err(Error::InvalidDistribution(format!(
                    "mass {m} on `{}`",
                    frame.describe(&p)
                )));
            }
            if m < 0.0 {
                return Err(Error::NegativeMass {
                    prop: frame.describe(&p),
                    mass: m,
                });
            }
            if m == 0.0 {
                continue;
            }
            if p.is_empty() {
                return Err(Error::MassOnEmpty(m));
            }
            if mode == DomainMode::PowerSet && p.singleton_set().is_none() {
                return Err(Error::NotInPowerSet(frame.describe(&p)));
            }
            *masses.entry(p).or_insert(0.0) += m;
        }
        let total: f64 = masses.values().sum();
        let normalized = (total - 1.0).abs() <= NORMALIZATION_TOLERANCE;
        if !normalized && !allow_unnormalized {
            return Err(Error::NotNormalized(total));
        }
        Ok(Self {
            frame: frame.clone(),
            masses,
            mode,
            normalized,
        })
    }

    /// Builds a granule from expressions, canonicalizing each.
    pub fn from_exprs(
        frame: &Frame,
        entries: &[(PropExpr, f64)],
        mode: DomainMode,
        allow_unnormalized: bool,
    ) -> Result<Self> {
        let props = entries
            .iter()
            .map(|(e, m)| (to_canonical(e, frame), *m))
            .collect::<Vec<_>>();
        Self::new(frame, props, mode, allow_unnormalized)
    }

    /// Builds a granule from textual expressions such as `"t1 | t2"`.
    pub fn parse(
        frame: &Frame,
        entries: &[(&str, f64)],
        mode: DomainMode,
        allow_unnormalized: bool,
    ) -> Result<Self> {
        let props = entries
            .iter()
            .map(|(t, m)| Ok((frame.prop(t)?, *m)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(frame, props, mode, allow_unnormalized)
    }

    /// Total ignorance: all mass on the union of every hypothesis.
    pub fn vacuous(frame: &Frame, mode: DomainMode) -> Result<Self> {
        if frame.is_empty() {
            return Err(Error::Empty("frame"));
        }
        Self::new(frame, [(frame.full(), 1.0)], mode, false)
    }

    /// All mass on `p`.
    pub fn categorical(frame: &Frame, p: Proposition, mode: DomainMode) -> Result<Self> {
        Self::new(frame, [(p, 1.0)], mode, false)
    }

    pub(crate) fn from_parts(
        frame: &Frame,
        masses: BTreeMap<Proposition, f64>,
        mode: DomainMode,
    ) -> Self {
        let total: f64 = masses.values().sum();
        Self {
            frame: frame.clone(),
            masses,
            mode,
            normalized: (total - 1.0).abs() <= NORMALIZATION_TOLERANCE,
        }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn mode(&self) -> DomainMode {
        self.mode
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// Focal elements with their masses, in canonical order.
    pub fn masses(&self) -> impl Iterator<Item = (&Proposition, f64)> + '_ {
        self.masses.iter().map(|(p, m)| (p, *m))
    }

    pub fn mass(&self, p: &Proposition) -> f64 {
        self.masses.get(p).copied().unwrap_or(0.0)
    }

    pub fn total(&self) -> f64 {
        self.masses.values().sum()
    }

    /// The core `K(m)`: every focal element.
    pub fn core(&self) -> Vec<Proposition> {
        self.masses.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.masses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masses.is_empty()
    }

    /// Every focal element is a single hypothesis.
    pub fn is_bayesian(&self) -> bool {
        self.masses
            .keys()
            .all(|p| p.singleton_set().is_some_and(|s| s.count_ones() == 1))
    }

    /// Same masses viewed in the hyper-power set.
    pub fn promoted(&self) -> Self {
        Self {
            mode: DomainMode::HyperPowerSet,
            ..self.clone()
        }
    }

    /// Masses divided by their total.
    pub fn normalized(&self) -> Result<Self> {
        let total = self.total();
        if total <= 0.0 {
            return Err(Error::ZeroTotal);
        }
        let masses = self.masses.iter().map(|(p, m)| (*p, m / total)).collect();
        Ok(Self {
            frame: self.frame.clone(),
            masses,
            mode: self.mode,
            normalized: true,
        })
    }

    /// `Bel(A)`: mass of the focal elements included in `a`.
    pub fn belief(&self, a: &Proposition) -> Result<f64> {
        self.frame.check(a)?;
        Ok(match self.mode {
            DomainMode::PowerSet => {
                let sa = classical_set(a);
                self.sum_where(|b| classical_set(b) & !sa == 0)
            }
            DomainMode::HyperPowerSet => self.sum_where(|b| a.includes(b)),
        })
    }

    /// `Pl(A)`: mass of the focal elements meeting `a`.
    pub fn plausibility(&self, a: &Proposition) -> Result<f64> {
        self.frame.check(a)?;
        Ok(match self.mode {
            DomainMode::PowerSet => {
                let sa = classical_set(a);
                self.sum_where(|b| classical_set(b) & sa != 0)
            }
            DomainMode::HyperPowerSet => self.sum_where(|b| b.meets(a)),
        })
    }

    /// Focal elements counted by `Bel(a)`, with their masses.
    pub fn belief_contributors(&self, a: &Proposition) -> Result<Vec<(Proposition, f64)>> {
        self.contributors(a, true)
    }

    /// Focal elements counted by `Pl(a)`, with their masses.
    pub fn plausibility_contributors(&self, a: &Proposition) -> Result<Vec<(Proposition, f64)>> {
        self.contributors(a, false)
    }

    fn contributors(&self, a: &Proposition, bel: bool) -> Result<Vec<(Proposition, f64)>> {
        self.frame.check(a)?;
        let sa = classical_set(a);
        Ok(self
            .masses
            .iter()
            .filter(|(b, _)| match (self.mode, bel) {
                (DomainMode::PowerSet, true) => classical_set(b) & !sa == 0,
                (DomainMode::PowerSet, false) => classical_set(b) & sa != 0,
                (DomainMode::HyperPowerSet, true) => a.includes(b),
                (DomainMode::HyperPowerSet, false) => b.meets(a),
            })
            .map(|(b, m)| (*b, *m))
            .collect())
    }

    fn sum_where(&self, keep: impl Fn(&Proposition) -> bool) -> f64 {
        self.masses
            .iter()
            .filter(|(b, _)| keep(b))
            .map(|(_, m)| m)
            .sum()
    }

    /// `Bel` on every subset of the frame, keyed by proposition.
    pub fn belief_table(&self) -> Result<HashMap<Proposition, f64>> {
        let n = self.frame.len();
        (0..1u64 << n)
            .map(|set| {
                let p = Proposition::from_singletons(n, set);
                Ok((p, self.belief(&p)?))
            })
            .collect()
    }

    /// Classical pignistic probability `P{θ_i} = Σ_{B∋θ_i} m(B)/|B|`.
    pub fn pignistic_classical(&self) -> Result<Vec<f64>> {
        if self.mode != DomainMode::PowerSet {
            return Err(Error::DomainMode {
                expected: "power-set",
            });
        }
        let mut p = vec![0.0; self.frame.len()];
        for (b, m) in &self.masses {
            let set = classical_set(b);
            let size = f64::from(set.count_ones());
            for (i, pi) in p.iter_mut().enumerate() {
                if set >> i & 1 == 1 {
                    *pi += m / size;
                }
            }
        }
        Ok(p)
    }

    /// Generalized pignistic probability `P{θ_i} = Σ_A α_{θ_i}(A) m(A)`, with
    /// weights from [`pignistic_weights`].
    pub fn pignistic_general(&self) -> Result<Vec<f64>> {
        let mut p = vec![0.0; self.frame.len()];
        for (a, m) in &self.masses {
            for (pi, w) in p.iter_mut().zip(pignistic_weights(a)?) {
                *pi += ratio_to_f64(w) * m;
            }
        }
        Ok(p)
    }
}

/// Hypotheses whose plain intersection is `a`, if it is one.
fn intersection_set(a: &Proposition) -> Option<u64> {
    let set = a.atoms().into_iter().fold(u64::MAX, |acc, s| acc & s);
    let inter = (0..a.n())
        .filter(|i| set >> i & 1 == 1)
        .map(|i| Proposition::singleton(a.n(), i))
        .reduce(|x, y| x.inter(&y).expect("same frame"))?;
    (inter == *a).then_some(set)
}

pub(crate) fn ratio_to_f64(r: Ratio<i64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Weights `α_{θ_i}(A)` sharing a proposition's mass among the hypotheses.
///
/// A plain union or a plain intersection of `k` singletons gives `1/k` to
/// each of them. Any other proposition shares equally among its atoms, and
/// each atom shares equally among the hypotheses containing it. The weights
/// always sum to one.
pub fn pignistic_weights(a: &Proposition) -> Result<Vec<Ratio<i64>>> {
    if a.is_empty() {
        return Err(Error::EmptyProposition);
    }
    let n = a.n();
    let zero = Ratio::from_integer(0);
    if let Some(set) = a.singleton_set().or_else(|| intersection_set(a)) {
        let k = i64::from(set.count_ones());
        return Ok((0..n)
            .map(|i| {
                if set >> i & 1 == 1 {
                    Ratio::new(1, k)
                } else {
                    zero
                }
            })
            .collect());
    }
    let atoms = a.atoms();
    let count = atoms.len() as i64;
    Ok((0..n)
        .map(|i| {
            atoms
                .iter()
                .filter(|s| *s >> i & 1 == 1)
                .map(|s| Ratio::new(1, i64::from(s.count_ones())))
                .sum::<Ratio<i64>>()
                / count
        })
        .collect())
}

/// Möbius inversion of a belief function given on every subset of the frame.
pub fn mass_from_belief(frame: &Frame, bel: &HashMap<Proposition, f64>) -> Result<Granule> {
    let n = frame.len();
    let full = 1u64 << n;
    let values = (0..full)
        .map(|set| {
            let p = Proposition::from_singletons(n, set);
            bel.get(&p)
                .copied()
                .ok_or_else(|| Error::MissingSubset(frame.describe(&p)))
        })
        .collect::<Result<Vec<f64>>>()?;
    let mut entries = Vec::new();
    for a in 1..full {
        let mut m = 0.0;
        // Walk every subset `b` of `a`, including the empty one.
        let mut b = a;
        loop {
            let sign = if (a & !b).count_ones() % 2 == 0 {
                1.0
            } else {
                -1.0
            };
            m += sign * values[b as usize];
            if b == 0 {
                break;
            }
            b = (b - 1) & a;
        }
        let p = Proposition::from_singletons(n, a);
        if m < -NORMALIZATION_TOLERANCE {
            return Err(Error::NotABeliefFunction {
                prop: frame.describe(&p),
                mass: m,
            });
        }
        entries.push((p, m.max(0.0)));
    }
    Granule::new(frame, entries, DomainMode::PowerSet, false)
}
