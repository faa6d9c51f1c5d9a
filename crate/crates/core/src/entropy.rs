//! Shannon, joint, conditional and generalized entropies, in nats.

use crate::error::{Error, Result};
use crate::frame::{strength, Frame};
use crate::fusion::FusionTable;
use crate::mass::{ratio_to_f64, DomainMode, Granule};

fn h(x: f64) -> f64 {
    if x > 0.0 {
        -x * x.ln()
    } else {
        0.0
    }
}

/// `-Σ m(A) ln m(A)` with `0 ln 0 = 0`.
pub fn shannon(g: &Granule) -> f64 {
    g.masses().map(|(_, m)| h(m)).sum()
}

/// Entropy of a plain list of masses.
pub fn shannon_of(masses: &[f64]) -> f64 {
    masses.iter().copied().map(h).sum()
}

/// `H(M1, M2)` over every cell of a fusion table.
pub fn joint_entropy(t: &FusionTable) -> f64 {
    t.cells.iter().flatten().map(|c| h(c.mass)).sum()
}

/// Which source a conditional entropy conditions on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Given {
    /// `H(M1 | M2)`: condition on the rows (`m2`).
    Rows,
    /// `H(M2 | M1)`: condition on the columns (`m1`).
    Cols,
}

/// Weighted entropy of the row- or column-normalized cell distributions.
pub fn conditional_entropy(t: &FusionTable, given: Given) -> f64 {
    let lines: Vec<Vec<f64>> = match given {
        Given::Rows => t
            .cells
            .iter()
            .map(|row| row.iter().map(|c| c.mass).collect())
            .collect(),
        Given::Cols => (0..t.col_focals.len())
            .map(|j| t.cells.iter().map(|row| row[j].mass).collect())
            .collect(),
    };
    lines
        .iter()
        .map(|line| {
            let w: f64 = line.iter().sum();
            if w > 0.0 {
                w * line.iter().map(|x| h(x / w)).sum::<f64>()
            } else {
                0.0
            }
        })
        .sum()
}

/// Entropy of a combined granule, whose merged cells make it at most the
/// joint entropy of the table it came from.
pub fn entropy_of_combined(g: &Granule) -> f64 {
    shannon(g)
}

/// `H_g(m) = -Σ (m(A)/s(A)) ln(m(A)/s(A))` with `s` the intrinsic strength.
pub fn generalized_entropy(g: &Granule) -> Result<f64> {
    let mut total = 0.0;
    for (a, m) in g.masses() {
        let s = ratio_to_f64(strength(a, g.frame())?);
        total += h(m / s);
    }
    Ok(total)
}

/// Coarse search for the two-hypothesis granule `(θ1, θ2, θ1∪θ2, θ1∩θ2)`
/// with the largest generalized entropy, on a simplex grid of `steps`
/// divisions.
pub fn whitening_grid_search(steps: usize) -> Result<([f64; 4], f64)> {
    if steps == 0 {
        return Err(Error::Empty("grid"));
    }
    let f = Frame::numbered(2)?;
    let props = [f.singleton(0), f.singleton(1), f.full(), f.prop("t1 & t2")?];
    let mut best = ([0.0; 4], f64::NEG_INFINITY);
    let d = steps as f64;
    for a in 0..=steps {
        for b in 0..=steps - a {
            for c in 0..=steps - a - b {
                let m = [
                    a as f64 / d,
                    b as f64 / d,
                    c as f64 / d,
                    (steps - a - b - c) as f64 / d,
                ];
                let g = Granule::new(
                    &f,
                    props.into_iter().zip(m),
                    DomainMode::HyperPowerSet,
                    true,
                )?;
                let v = generalized_entropy(&g)?;
                if v > best.1 {
                    best = (m, v);
                }
            }
        }
    }
    Ok(best)
}
