use std::collections::HashMap;
use std::sync::OnceLock;

use num_rational::Ratio;

use super::lattice::DEFAULT_ENUMERATION_LIMIT;
use super::{enumerate_hyper_power_set, Frame, PropExpr, Proposition};
use crate::error::{Error, Result};

/// Binary operator of a minimal-form node. `Union` sorts before `Inter`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Op {
    Union,
    Inter,
}

#[derive(Debug, Clone, Copy)]
enum Build {
    Leaf(usize),
    Node(Op, u64, u64),
}

type Table = HashMap<u64, Build>;

static TABLES: [OnceLock<Table>; DEFAULT_ENUMERATION_LIMIT + 1] =
    [const { OnceLock::new() }; DEFAULT_ENUMERATION_LIMIT + 1];

/// Cheapest construction of every non-empty element of `D^Θ`.
///
/// Expressions with `L` leaves cost `2L - 1` whatever their shape, so
/// elements are settled in order of leaf count. Within a level the winner is
/// the smallest `(left, right, op)` triple with `left ≤ right`.
fn build_table(n: usize) -> Table {
    let frame = Frame::numbered(n).expect("n within limit");
    let total = enumerate_hyper_power_set(&frame)
        .expect("n within limit")
        .len()
        - 1;
    let mut table = Table::with_capacity(total);
    let mut buckets: Vec<Vec<u64>> = vec![Vec::new(), Vec::new()];
    for i in 0..n {
        let m = frame.singleton(i).mask();
        table.insert(m, Build::Leaf(i));
        buckets[1].push(m);
    }
    buckets[1].sort_unstable();

    let mut leaves = 1;
    while table.len() < total {
        leaves += 1;
        let mut found: HashMap<u64, (u64, u64, Op)> = HashMap::new();
        for i in 1..=leaves / 2 {
            let j = leaves - i;
            for (ai, &a) in buckets[i].iter().enumerate() {
                let start = if i == j { ai } else { 0 };
                for &b in &buckets[j][start..] {
                    if a & !b == 0 || b & !a == 0 {
                        continue;
                    }
                    let (l, r) = if a < b { (a, b) } else { (b, a) };
                    for (op, c) in [(Op::Union, a | b), (Op::Inter, a & b)] {
                        if table.contains_key(&c) {
                            continue;
                        }
                        let cand = (l, r, op);
                        found
                            .entry(c)
                            .and_modify(|best| *best = (*best).min(cand))
                            .or_insert(cand);
                    }
                }
            }
        }
        let mut bucket: Vec<u64> = found.keys().copied().collect();
        bucket.sort_unstable();
        for (c, (l, r, op)) in found {
            table.insert(c, Build::Node(op, l, r));
        }
        buckets.push(bucket);
    }
    table
}

fn table(n: usize) -> &'static Table {
    TABLES[n].get_or_init(|| build_table(n))
}

fn rebuild(table: &Table, mask: u64) -> PropExpr {
    match table[&mask] {
        Build::Leaf(i) => PropExpr::Singleton(i),
        Build::Node(op, l, r) => {
            let children = vec![rebuild(table, l), rebuild(table, r)];
            match op {
                Op::Union => PropExpr::Union(children),
                Op::Inter => PropExpr::Inter(children),
            }
        }
    }
}

/// Minimum-cost `∪`/`∩` expression denoting `p`, with same-operator chains
/// flattened into n-ary nodes.
pub fn irreducible_form(p: &Proposition, frame: &Frame) -> Result<PropExpr> {
    frame.check(p)?;
    if p.is_empty() {
        return Err(Error::EmptyProposition);
    }
    let n = frame.len();
    if n > DEFAULT_ENUMERATION_LIMIT {
        return Err(Error::FrameTooLarge {
            n,
            limit: DEFAULT_ENUMERATION_LIMIT,
        });
    }
    Ok(rebuild(table(n), p.mask()).flatten())
}

/// Intrinsic informational strength of an irreducible expression.
///
/// A singleton has strength 1; a union adds strengths and an intersection
/// adds their reciprocals, so both are evaluated as left folds.
pub fn iis(e: &PropExpr) -> Ratio<i64> {
    match e {
        PropExpr::Singleton(_) => Ratio::from_integer(1),
        PropExpr::Union(c) => fold(c, |a, b| (a.recip() + b.recip()) / (a.recip() * b.recip())),
        PropExpr::Inter(c) => fold(c, |a, b| a * b / (a + b)),
    }
}

fn fold(children: &[PropExpr], op: impl Fn(Ratio<i64>, Ratio<i64>) -> Ratio<i64>) -> Ratio<i64> {
    let mut it = children.iter().map(iis);
    let first = it.next().unwrap_or(Ratio::from_integer(1));
    it.fold(first, op)
}

/// `s(A)` of a proposition, via its irreducible form.
pub fn strength(p: &Proposition, frame: &Frame) -> Result<Ratio<i64>> {
    Ok(iis(&irreducible_form(p, frame)?))
}
