use std::fmt;
use std::str::FromStr;

use super::subset::{Interval, SubsetU};
use crate::error::{Error, Result};

/// Neutrosophic value `(T, I, F)`.
#[derive(Debug, Clone, PartialEq)]
pub struct NValue {
    pub t: SubsetU,
    pub i: SubsetU,
    pub f: SubsetU,
}

impl NValue {
    pub fn new(t: SubsetU, i: SubsetU, f: SubsetU) -> Self {
        Self { t, i, f }
    }

    /// Value whose three components are single numbers.
    pub fn crisp(t: f64, i: f64, f: f64) -> Self {
        Self::new(SubsetU::point(t), SubsetU::point(i), SubsetU::point(f))
    }

    pub fn n_sup(&self) -> f64 {
        self.t.sup() + self.i.sup() + self.f.sup()
    }

    pub fn n_inf(&self) -> f64 {
        self.t.inf() + self.i.inf() + self.f.inf()
    }

    pub fn components(&self) -> [&SubsetU; 3] {
        [&self.t, &self.i, &self.f]
    }

    pub fn map(&self, op: impl Fn(&SubsetU) -> SubsetU) -> Self {
        Self::new(op(&self.t), op(&self.i), op(&self.f))
    }

    pub fn zip(&self, other: &Self, op: impl Fn(&SubsetU, &SubsetU) -> SubsetU) -> Self {
        Self::new(
            op(&self.t, &other.t),
            op(&self.i, &other.i),
            op(&self.f, &other.f),
        )
    }

    pub fn clamp01(&self) -> Self {
        self.map(SubsetU::clamp01)
    }

    pub fn is_point(&self) -> bool {
        self.components().iter().all(|c| c.is_point())
    }

    pub fn is_interval(&self) -> bool {
        self.components().iter().all(|c| c.is_interval())
    }
}

impl fmt::Display for NValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}; {})", self.t, self.i, self.f)
    }
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        pos,
        msg: msg.into(),
    }
}

/// A number, optionally followed by `%`.
fn number(text: &str, pos: usize) -> Result<f64> {
    let t = text.trim();
    let (digits, scale) = match t.strip_suffix('%') {
        Some(d) => (d.trim_end(), 100.0),
        None => (t, 1.0),
    };
    let x: f64 = digits
        .parse()
        .map_err(|_| syntax(pos, format!("`{t}` is not a number")))?;
    if !x.is_finite() {
        return Err(syntax(pos, format!("`{t}` is not finite")));
    }
    Ok(x / scale)
}

/// Parses a comma list of `[lo,hi]` intervals and bare numbers.
pub fn parse_component(text: &str, offset: usize) -> Result<SubsetU> {
    let mut parts = Vec::new();
    let bytes = text.as_bytes();
    let mut k = 0;
    loop {
        while k < bytes.len() && bytes[k].is_ascii_whitespace() {
            k += 1;
        }
        if k >= bytes.len() {
            return Err(syntax(offset + k, "expected a number or interval"));
        }
        if bytes[k] == b'[' {
            let close = text[k..]
                .find(']')
                .map(|c| c + k)
                .ok_or_else(|| syntax(offset + k, "unclosed `[`"))?;
            let inner = &text[k + 1..close];
            let (lo, hi) = inner
                .split_once(',')
                .ok_or_else(|| syntax(offset + k, "interval needs `lo,hi`"))?;
            let lo = number(lo, offset + k + 1)?;
            let hi = number(hi, offset + k + 1)?;
            parts.push(Interval::new(lo, hi)?);
            k = close + 1;
        } else {
            let end = text[k..].find(',').map_or(text.len(), |c| c + k);
            parts.push(Interval::point(number(&text[k..end], offset + k)?));
            k = end;
        }
        while k < bytes.len() && bytes[k].is_ascii_whitespace() {
            k += 1;
        }
        if k >= bytes.len() {
            break;
        }
        if bytes[k] != b',' {
            return Err(syntax(offset + k, "expected `,`"));
        }
        k += 1;
    }
    SubsetU::new(parts)
}

impl FromStr for NValue {
    type Err = Error;

    /// `(T; I; F)`, each component as accepted by [`parse_component`].
    fn from_str(text: &str) -> Result<Self> {
        let start = text.find('(').ok_or_else(|| syntax(0, "expected `(`"))?;
        if !text[..start].trim().is_empty() {
            return Err(syntax(0, "expected `(`"));
        }
        let end = text
            .rfind(')')
            .ok_or_else(|| syntax(text.len(), "expected `)`"))?;
        if !text[end + 1..].trim().is_empty() || end < start {
            return Err(syntax(end + 1, "trailing input"));
        }
        let body = &text[start + 1..end];
        let pieces: Vec<&str> = body.split(';').collect();
        if pieces.len() != 3 {
            return Err(syntax(start + 1, "expected three `;`-separated components"));
        }
        let mut offset = start + 1;
        let mut comps = Vec::with_capacity(3);
        for p in pieces {
            comps.push(parse_component(p, offset)?);
            offset += p.len() + 1;
        }
        let f = comps.pop().unwrap();
        let i = comps.pop().unwrap();
        let t = comps.pop().unwrap();
        Ok(Self::new(t, i, f))
    }
}
