use super::{Frame, Proposition, MAX_HYPOTHESES};
use crate::error::{Error, Result};

/// Largest frame enumerated without an explicit opt-in.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 5;

const DEDEKIND_MINUS_ONE: [u64; 7] = [1, 2, 5, 19, 167, 7580, 7_828_353];

/// Known `|D^Θ|` for `n ≤ 6` (Dedekind number of `n` minus one).
pub fn dedekind_minus_one(n: usize) -> Option<u64> {
    DEDEKIND_MINUS_ONE.get(n).copied()
}

/// All monotone Boolean functions of `n` variables as truth tables, bit `s`
/// holding the value at the point whose true variables form the bitset `s`.
fn monotone_functions(n: usize) -> Vec<u64> {
    let mut level = vec![0u64, 1];
    for k in 1..=n {
        let half = 1u32 << (k - 1);
        let mut next = Vec::new();
        for &hi in &level {
            for &lo in &level {
                if lo & !hi == 0 {
                    next.push(lo | hi << half);
                }
            }
        }
        level = next;
    }
    level
}

/// Every element of `D^Θ`, including `∅`, in ascending mask order.
///
/// Frames larger than five hypotheses are refused; see
/// [`enumerate_hyper_power_set_with`].
pub fn enumerate_hyper_power_set(frame: &Frame) -> Result<Vec<Proposition>> {
    enumerate_hyper_power_set_with(frame, false)
}

/// As [`enumerate_hyper_power_set`]; `allow_huge` lifts the limit to six
/// hypotheses (7 828 353 elements).
pub fn enumerate_hyper_power_set_with(frame: &Frame, allow_huge: bool) -> Result<Vec<Proposition>> {
    let n = frame.len();
    let limit = if allow_huge {
        MAX_HYPOTHESES
    } else {
        DEFAULT_ENUMERATION_LIMIT
    };
    if n > limit {
        return Err(Error::FrameTooLarge { n, limit });
    }
    // A table true at the empty point is the constant-true function, which
    // has no counterpart among the atoms.
    let mut masks: Vec<u64> = monotone_functions(n)
        .into_iter()
        .filter(|tt| tt & 1 == 0)
        .map(|tt| tt >> 1)
        .collect();
    masks.sort_unstable();
    Ok(masks
        .into_iter()
        .map(|m| Proposition::from_mask_unchecked(n, m))
        .collect())
}
