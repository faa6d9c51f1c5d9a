//! Interval evidence `[ε_*, ε^*]` turned into masses on the local lattice
//! `{A, A^c, A∪A^c, A∩A^c}`: the classical model, and the maximum
//! generalized-entropy model that also commits mass to the paradox `A∩A^c`.

use std::f64::consts::E;

use crate::error::{Error, Result};

/// `64 e²`, the leading coefficient of the stationarity quartic.
pub const QUARTIC_LEAD: f64 = 64.0 * E * E;

const GRID: usize = 4096;
const MASS_CLAMP: f64 = 1e-12;

/// Interval `[lo, hi] ⊆ [0, 1]` of support for a proposition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalEvidence {
    lo: f64,
    hi: f64,
}

impl IntervalEvidence {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&lo) || !(0.0..=1.0).contains(&hi) || lo > hi {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    /// Largest paradox mass keeping `m(A)` and `m(A^c)` non-negative.
    pub fn feasible_max(&self) -> f64 {
        (2.0 * self.lo).min(2.0 * (1.0 - self.hi)).max(0.0)
    }
}

/// Masses on `A`, `A^c`, `A∪A^c` and `A∩A^c`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BinaryGranule {
    pub a: f64,
    pub ac: f64,
    pub union: f64,
    pub inter: f64,
}

fn xlnx(x: f64) -> f64 {
    if x > 0.0 {
        x * x.ln()
    } else {
        0.0
    }
}

impl BinaryGranule {
    pub fn total(&self) -> f64 {
        self.a + self.ac + self.union + self.inter
    }

    /// Recovers `[ε_*, ε^*]`: `m(A) + m(A∩A^c)/2` and `1 - m(A^c) - m(A∩A^c)/2`.
    pub fn interval(&self) -> (f64, f64) {
        (self.a + self.inter / 2.0, 1.0 - self.ac - self.inter / 2.0)
    }

    /// Generalized entropy, with strengths 1, 1, 2 and 1/2.
    pub fn generalized_entropy(&self) -> f64 {
        -xlnx(self.a) - xlnx(self.ac) - xlnx(self.union / 2.0) - xlnx(2.0 * self.inter)
    }
}

/// Classical model: `m(A) = ε_*`, `m(A^c) = 1 - ε^*`, rest on `A∪A^c`.
pub fn appriou_dst(ev: &IntervalEvidence) -> BinaryGranule {
    BinaryGranule {
        a: ev.lo,
        ac: 1.0 - ev.hi,
        union: ev.hi - ev.lo,
        inter: 0.0,
    }
}

fn with_paradox(ev: &IntervalEvidence, m: f64) -> BinaryGranule {
    let clamp = |x: f64| {
        debug_assert!(x >= -MASS_CLAMP, "mass {x} below clamp tolerance");
        x.max(0.0)
    };
    BinaryGranule {
        a: clamp(ev.lo - m / 2.0),
        ac: clamp(1.0 - ev.hi - m / 2.0),
        union: ev.hi - ev.lo,
        inter: m,
    }
}

/// Generalized entropy of the granule with paradox mass `m`.
pub fn entropy_at(ev: &IntervalEvidence, m: f64) -> f64 {
    with_paradox(ev, m).generalized_entropy()
}

fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Roots in `[0, upper]` of `64e² m⁴ - m² + linear·m - constant`.
fn quartic_roots(linear: f64, constant: f64, upper: f64) -> Vec<f64> {
    let q = |m: f64| QUARTIC_LEAD * m.powi(4) - m * m + linear * m - constant;
    let mut roots = Vec::new();
    if upper <= 0.0 {
        return if q(0.0) == 0.0 { vec![0.0] } else { roots };
    }
    let step = upper / GRID as f64;
    let mut x0 = 0.0;
    let mut q0 = q(x0);
    for k in 1..=GRID {
        let x1 = if k == GRID { upper } else { k as f64 * step };
        let q1 = q(x1);
        if q0 == 0.0 {
            roots.push(x0);
        } else if (q0 < 0.0) != (q1 < 0.0) && q1 != 0.0 {
            roots.push(bisect(q, x0, x1));
        }
        x0 = x1;
        q0 = q1;
    }
    if q0 == 0.0 {
        roots.push(x0);
    }
    roots
}

/// Paradox mass maximizing the generalized entropy: the feasible root of
/// `64e² m⁴ - m² + 2(1 - ε^* + ε_*) m - 4(1 - ε^*) ε_* = 0` with the largest
/// entropy (the interval end points compete as a fallback).
pub fn solve_mstar(ev: &IntervalEvidence) -> f64 {
    solve_mstar_with_constant(ev, 4.0 * (1.0 - ev.hi) * ev.lo)
}

/// As [`solve_mstar`] with the quartic's constant term replaced.
pub fn solve_mstar_with_constant(ev: &IntervalEvidence, constant: f64) -> f64 {
    let upper = ev.feasible_max();
    let linear = 2.0 * (1.0 - ev.hi + ev.lo);
    let mut candidates = quartic_roots(linear, constant, upper);
    candidates.extend([0.0, upper]);
    candidates
        .into_iter()
        .map(|m| (m, entropy_at(ev, m)))
        .fold((0.0, f64::NEG_INFINITY), |best, c| {
            if c.1 > best.1 {
                c
            } else {
                best
            }
        })
        .0
}

/// Maximum-entropy granule for `[ε_*, ε^*]`.
pub fn interval_to_bpa(ev: &IntervalEvidence) -> BinaryGranule {
    with_paradox(ev, solve_mstar(ev))
}
