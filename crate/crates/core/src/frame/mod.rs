//! Frames of discernment and the elements of their hyper-power set.
//!
//! A proposition built from the hypotheses of a frame with `∪` and `∩` is
//! stored as the set of Venn-diagram regions ("atoms") it covers. With `n`
//! hypotheses the generic diagram has `2^n - 1` atoms, one per non-empty
//! subset `S` of hypotheses: the region lying inside exactly the `θ_i` with
//! `i ∈ S`. Atom `S` is kept in bit `S - 1` of a `u64`, so `n ≤ 6`.
//!
//! Every element of the hyper-power set is an up-closed atom set, union and
//! intersection are bitwise OR and AND, and two expressions denote the same
//! proposition exactly when their masks are equal.

mod expr;
mod lattice;
mod minimal;

pub use expr::{parse_expr, to_canonical, PropExpr};
pub use lattice::{
    dedekind_minus_one, enumerate_hyper_power_set, enumerate_hyper_power_set_with,
    DEFAULT_ENUMERATION_LIMIT,
};
pub use minimal::{iis, irreducible_form, strength, Op};

use std::fmt;

use crate::error::{Error, Result};

/// Largest frame whose atoms fit in a `u64` mask.
pub const MAX_HYPOTHESES: usize = 6;

/// Ordered list of distinct hypothesis labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Frame {
    labels: Vec<String>,
}

impl Frame {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_HYPOTHESES {
            return Err(Error::FrameTooLarge {
                n: labels.len(),
                limit: MAX_HYPOTHESES,
            });
        }
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::InvalidFrame("empty label".into()));
            }
            if label
                .chars()
                .any(|c| c.is_whitespace() || matches!(c, '&' | '|' | '(' | ')'))
            {
                return Err(Error::InvalidFrame(format!(
                    "label `{label}` contains a reserved character"
                )));
            }
            if labels[..i].contains(label) {
                return Err(Error::InvalidFrame(format!("duplicate label `{label}`")));
            }
        }
        Ok(Self { labels })
    }

    /// Frame `t1, …, tn`.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("t{i}")))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn singleton(&self, i: usize) -> Proposition {
        Proposition::singleton(self.len(), i)
    }

    /// `θ_1 ∪ … ∪ θ_n`, every atom.
    pub fn full(&self) -> Proposition {
        Proposition::full(self.len())
    }

    pub fn empty_prop(&self) -> Proposition {
        Proposition::empty(self.len())
    }

    /// Parses `text` and returns its canonical proposition.
    pub fn prop(&self, text: &str) -> Result<Proposition> {
        Ok(to_canonical(&parse_expr(text, self)?, self))
    }

    /// Human-readable form: the irreducible expression when one is available.
    pub fn describe(&self, p: &Proposition) -> String {
        if p.is_empty() {
            return "{}".into();
        }
        match irreducible_form(p, self) {
            Ok(e) => e.display(self).to_string(),
            Err(_) => format!("atoms:{:#x}", p.mask()),
        }
    }

    pub(crate) fn check(&self, p: &Proposition) -> Result<()> {
        if p.n() != self.len() {
            return Err(Error::FrameMismatch(format!(
                "proposition over {} hypotheses used with a frame of {}",
                p.n(),
                self.len()
            )));
        }
        Ok(())
    }
}

/// Canonical element of the hyper-power set: an up-closed set of Venn atoms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Proposition {
    n: u8,
    mask: u64,
}

/// Mask with every atom of an `n`-hypothesis diagram.
fn all_atoms(n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        u64::MAX >> (64 - ((1u32 << n) - 1))
    }
}

fn singleton_mask(n: usize, i: usize) -> u64 {
    (1u64..1 << n)
        .filter(|s| s >> i & 1 == 1)
        .fold(0, |m, s| m | 1 << (s - 1))
}

impl Proposition {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_HYPOTHESES);
        Self {
            n: n as u8,
            mask: 0,
        }
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_HYPOTHESES);
        Self {
            n: n as u8,
            mask: all_atoms(n),
        }
    }

    pub fn singleton(n: usize, i: usize) -> Self {
        assert!(
            n <= MAX_HYPOTHESES && i < n,
            "singleton {i} outside frame of {n}"
        );
        Self {
            n: n as u8,
            mask: singleton_mask(n, i),
        }
    }

    /// Union of the singletons whose indices are set in `set`.
    pub fn from_singletons(n: usize, set: u64) -> Self {
        (0..n)
            .filter(|i| set >> i & 1 == 1)
            .fold(Self::empty(n), |acc, i| Self {
                n: acc.n,
                mask: acc.mask | singleton_mask(n, i),
            })
    }

    /// Builds a proposition from a raw atom mask, rejecting masks that are
    /// not up-closed or that use atoms outside the frame.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        if n > MAX_HYPOTHESES {
            return Err(Error::FrameTooLarge {
                n,
                limit: MAX_HYPOTHESES,
            });
        }
        if mask & !all_atoms(n) != 0 {
            return Err(Error::InvalidFrame(format!(
                "mask {mask:#x} has atoms outside a frame of {n}"
            )));
        }
        let p = Self { n: n as u8, mask };
        if !p.is_up_closed() {
            return Err(Error::InvalidFrame(format!(
                "mask {mask:#x} is not up-closed"
            )));
        }
        Ok(p)
    }

    pub(crate) fn from_mask_unchecked(n: usize, mask: u64) -> Self {
        Self { n: n as u8, mask }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_full(&self) -> bool {
        self.mask == all_atoms(self.n())
    }

    pub fn is_up_closed(&self) -> bool {
        let n = self.n();
        self.atoms()
            .into_iter()
            .all(|s| (0..n).all(|j| self.mask >> ((s | 1 << j) - 1) & 1 == 1))
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.same_frame(other)?;
        Ok(Self {
            n: self.n,
            mask: self.mask | other.mask,
        })
    }

    pub fn inter(&self, other: &Self) -> Result<Self> {
        self.same_frame(other)?;
        Ok(Self {
            n: self.n,
            mask: self.mask & other.mask,
        })
    }

    /// `other ⊆ self` in the atom sense.
    pub fn includes(&self, other: &Self) -> bool {
        other.mask & !self.mask == 0
    }

    /// Whether the two propositions share at least one atom.
    pub fn meets(&self, other: &Self) -> bool {
        self.mask & other.mask != 0
    }

    /// Atoms in ascending subset order; each atom is the bitset `S` of the
    /// hypotheses containing it.
    pub fn atoms(&self) -> Vec<u64> {
        (0..64)
            .filter(|b| self.mask >> b & 1 == 1)
            .map(|b| b + 1)
            .collect()
    }

    pub fn atom_count(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// If the proposition is a plain union of singletons `∪_{i∈I} θ_i`,
    /// returns the bitset `I` (0 for `∅`).
    pub fn singleton_set(&self) -> Option<u64> {
        let n = self.n();
        let set = (0..n)
            .filter(|&i| self.mask >> ((1u64 << i) - 1) & 1 == 1)
            .fold(0u64, |s, i| s | 1 << i);
        (Self::from_singletons(n, set).mask == self.mask).then_some(set)
    }

    fn same_frame(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::FrameMismatch(format!(
                "propositions over {} and {} hypotheses",
                self.n, other.n
            )));
        }
        Ok(())
    }
}

/// Free-standing union, for symmetry with the expression builders.
pub fn prop_union(a: &Proposition, b: &Proposition) -> Result<Proposition> {
    a.union(b)
}

pub fn prop_inter(a: &Proposition, b: &Proposition) -> Result<Proposition> {
    a.inter(b)
}

/// Atom list of `p` (see [`Proposition::atoms`]).
pub fn atoms(p: &Proposition) -> Vec<u64> {
    p.atoms()
}

impl fmt::Display for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, s) in self.atoms().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            for i in 0..self.n() {
                if s >> i & 1 == 1 {
                    write!(f, "{}", i + 1)?;
                }
            }
        }
        write!(f, "}}")
    }
}
