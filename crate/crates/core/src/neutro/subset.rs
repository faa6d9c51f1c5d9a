use std::fmt;

use crate::error::{Error, Result};

/// Closed real interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() || lo > hi {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    pub fn point(x: f64) -> Self {
        Self { lo: x, hi: x }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }
}

/// Finite union of closed intervals, kept sorted and merged.
#[derive(Debug, Clone, PartialEq)]
pub struct SubsetU {
    parts: Vec<Interval>,
}

fn merged(mut parts: Vec<Interval>) -> Vec<Interval> {
    parts.sort_by(|a, b| a.lo.total_cmp(&b.lo).then(a.hi.total_cmp(&b.hi)));
    let mut out: Vec<Interval> = Vec::with_capacity(parts.len());
    for p in parts {
        match out.last_mut() {
            Some(last) if p.lo <= last.hi => last.hi = last.hi.max(p.hi),
            _ => out.push(p),
        }
    }
    out
}

impl SubsetU {
    pub fn new(parts: impl IntoIterator<Item = Interval>) -> Result<Self> {
        let parts: Vec<Interval> = parts.into_iter().collect();
        if parts.is_empty() {
            return Err(Error::Empty("interval union"));
        }
        for p in &parts {
            Interval::new(p.lo, p.hi)?;
        }
        Ok(Self {
            parts: merged(parts),
        })
    }

    pub fn point(x: f64) -> Self {
        Self {
            parts: vec![Interval::point(x)],
        }
    }

    pub fn interval(lo: f64, hi: f64) -> Result<Self> {
        Self::new([Interval::new(lo, hi)?])
    }

    /// The finite set `{x_1, …, x_k}`.
    pub fn points(xs: &[f64]) -> Result<Self> {
        Self::new(xs.iter().map(|&x| Interval::point(x)))
    }

    pub fn parts(&self) -> &[Interval] {
        &self.parts
    }

    pub fn inf(&self) -> f64 {
        self.parts[0].lo
    }

    pub fn sup(&self) -> f64 {
        self.parts[self.parts.len() - 1].hi
    }

    pub fn is_point(&self) -> bool {
        self.parts.len() == 1 && self.parts[0].is_point()
    }

    /// Single interval, possibly degenerate.
    pub fn is_interval(&self) -> bool {
        self.parts.len() == 1
    }

    pub fn contains(&self, x: f64) -> bool {
        self.parts.iter().any(|p| p.contains(x))
    }

    /// `other ⊆ self`.
    pub fn includes(&self, other: &Self) -> bool {
        other
            .parts
            .iter()
            .all(|q| self.parts.iter().any(|p| p.lo <= q.lo && q.hi <= p.hi))
    }

    fn pairwise(&self, other: &Self, op: impl Fn(&Interval, &Interval) -> Interval) -> Self {
        let parts = self
            .parts
            .iter()
            .flat_map(|a| other.parts.iter().map(move |b| (a, b)))
            .map(|(a, b)| op(a, b))
            .collect();
        Self {
            parts: merged(parts),
        }
    }

    /// `{a + b}`.
    pub fn add(&self, other: &Self) -> Self {
        self.pairwise(other, |a, b| Interval {
            lo: a.lo + b.lo,
            hi: a.hi + b.hi,
        })
    }

    /// `{a - b}`.
    pub fn sub(&self, other: &Self) -> Self {
        self.pairwise(other, |a, b| Interval {
            lo: a.lo - b.hi,
            hi: a.hi - b.lo,
        })
    }

    /// `{a · b}`.
    pub fn mul(&self, other: &Self) -> Self {
        self.pairwise(other, |a, b| {
            let p = [a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi];
            Interval {
                lo: p.iter().copied().fold(f64::INFINITY, f64::min),
                hi: p.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            }
        })
    }

    /// `{a / k}`.
    pub fn div_scalar(&self, k: f64) -> Result<Self> {
        if k == 0.0 || !k.is_finite() {
            return Err(Error::DivisionByZero);
        }
        let parts = self
            .parts
            .iter()
            .map(|p| {
                let (x, y) = (p.lo / k, p.hi / k);
                Interval {
                    lo: x.min(y),
                    hi: x.max(y),
                }
            })
            .collect();
        Ok(Self {
            parts: merged(parts),
        })
    }

    /// Values below 0 become 0 and values above 1 become 1.
    pub fn clamp01(&self) -> Self {
        let parts = self
            .parts
            .iter()
            .map(|p| Interval {
                lo: p.lo.clamp(0.0, 1.0),
                hi: p.hi.clamp(0.0, 1.0),
            })
            .collect();
        Self {
            parts: merged(parts),
        }
    }

    pub fn within_unit(&self) -> bool {
        self.inf() >= 0.0 && self.sup() <= 1.0
    }
}

impl fmt::Display for SubsetU {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            if p.is_point() {
                write!(f, "{}", p.lo)?;
            } else {
                write!(f, "[{},{}]", p.lo, p.hi)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: f64, hi: f64) -> Interval {
        Interval::new(lo, hi).unwrap()
    }

    fn close(a: &SubsetU, want: &[(f64, f64)]) -> bool {
        a.parts().len() == want.len()
            && a.parts()
                .iter()
                .zip(want)
                .all(|(p, (lo, hi))| (p.lo - lo).abs() < 1e-12 && (p.hi - hi).abs() < 1e-12)
    }

    #[test]
    fn merges_overlaps_and_touching() {
        let s = SubsetU::new([iv(0.3, 0.5), iv(0.1, 0.2), iv(0.2, 0.25), iv(0.45, 0.6)]).unwrap();
        assert!(close(&s, &[(0.1, 0.25), (0.3, 0.6)]));
        assert!(SubsetU::new([]).is_err());
        assert!(Interval::new(0.5, 0.2).is_err());
    }

    #[test]
    fn shift_by_point() {
        let s = SubsetU::new([iv(0.1, 0.2), iv(0.8, 0.9)]).unwrap();
        let r = s.add(&SubsetU::point(0.05));
        assert!(close(&r, &[(0.15, 0.25), (0.85, 0.95)]));
        let r = SubsetU::point(0.5).add(&s);
        assert!((r.inf() - (0.5 + s.inf())).abs() < 1e-15);
    }

    #[test]
    fn positive_products_and_differences() {
        let a = SubsetU::interval(0.3, 0.4).unwrap();
        let b = SubsetU::point(0.5);
        assert!(close(&a.mul(&b), &[(0.15, 0.2)]));
        let c = SubsetU::interval(0.1, 0.2).unwrap();
        let d = a.sub(&c);
        assert!((d.inf() - (a.inf() - c.sup())).abs() < 1e-15);
        assert!((d.sup() - (a.sup() - c.inf())).abs() < 1e-15);
    }

    #[test]
    fn signed_product_uses_all_corners() {
        let a = SubsetU::interval(-1.0, 2.0).unwrap();
        let b = SubsetU::interval(-3.0, 1.0).unwrap();
        assert!(close(&a.mul(&b), &[(-6.0, 3.0)]));
    }

    #[test]
    fn division() {
        let a = SubsetU::interval(0.2, 0.4).unwrap();
        assert!(close(&a.div_scalar(2.0).unwrap(), &[(0.1, 0.2)]));
        assert!(close(&a.div_scalar(-2.0).unwrap(), &[(-0.2, -0.1)]));
        assert_eq!(a.div_scalar(0.0), Err(Error::DivisionByZero));
    }

    #[test]
    fn clamping() {
        let s = SubsetU::interval(-0.2, 0.3).unwrap().clamp01();
        assert!(close(&s, &[(0.0, 0.3)]));
        let s = SubsetU::interval(1.1, 1.4).unwrap().clamp01();
        assert!(close(&s, &[(1.0, 1.0)]));
        let s = SubsetU::interval(0.2, 0.5).unwrap();
        assert_eq!(s.clamp01(), s);
    }

    #[test]
    fn inclusion() {
        let big = SubsetU::interval(0.05, 0.3).unwrap();
        let small = SubsetU::interval(0.1, 0.2).unwrap();
        assert!(big.includes(&small));
        assert!(!small.includes(&big));
    }

    #[test]
    fn display() {
        let s = SubsetU::new([iv(0.2, 0.25), iv(0.3, 0.3)]).unwrap();
        assert_eq!(s.to_string(), "[0.2,0.25],0.3");
    }
}
