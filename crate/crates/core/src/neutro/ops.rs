use super::subset::SubsetU;
use super::value::NValue;

fn one() -> SubsetU {
    SubsetU::point(1.0)
}

/// `{1} ⊖ x`.
fn not(x: &SubsetU) -> SubsetU {
    one().sub(x)
}

/// `a ⊕ b ⊖ a ⊙ b`.
fn or(a: &SubsetU, b: &SubsetU) -> SubsetU {
    a.add(b).sub(&a.mul(b))
}

/// `{1} ⊖ a ⊕ a ⊙ b`.
fn implies(a: &SubsetU, b: &SubsetU) -> SubsetU {
    not(a).add(&a.mul(b))
}

fn unary(x: &NValue, op: impl Fn(&SubsetU) -> SubsetU) -> NValue {
    x.clamp01().map(op).clamp01()
}

fn binary(x: &NValue, y: &NValue, op: impl Fn(&SubsetU, &SubsetU) -> SubsetU) -> NValue {
    x.clamp01().zip(&y.clamp01(), op).clamp01()
}

pub fn nl_not(a: &NValue) -> NValue {
    unary(a, not)
}

pub fn nl_and(a: &NValue, b: &NValue) -> NValue {
    binary(a, b, SubsetU::mul)
}

pub fn nl_or(a: &NValue, b: &NValue) -> NValue {
    binary(a, b, or)
}

/// `T1⊙(1⊖T2) ⊕ T2⊙(1⊖T1) ⊖ T1⊙T2⊙(1⊖T1)⊙(1⊖T2)` per component.
pub fn nl_xor(a: &NValue, b: &NValue) -> NValue {
    binary(a, b, |x, y| {
        let (nx, ny) = (not(x), not(y));
        x.mul(&ny).add(&y.mul(&nx)).sub(&x.mul(y).mul(&nx).mul(&ny))
    })
}

pub fn nl_implies(a: &NValue, b: &NValue) -> NValue {
    binary(a, b, implies)
}

pub fn nl_iff(a: &NValue, b: &NValue) -> NValue {
    binary(a, b, |x, y| implies(x, y).mul(&implies(y, x)))
}

/// Alternative denial, `{1} ⊖ T1⊙T2` per component.
pub fn nl_sheffer(a: &NValue, b: &NValue) -> NValue {
    binary(a, b, |x, y| not(&x.mul(y)))
}

/// Joint denial, `(1⊖T1)⊙(1⊖T2)` per component.
pub fn nl_peirce(a: &NValue, b: &NValue) -> NValue {
    binary(a, b, |x, y| not(x).mul(&not(y)))
}

pub fn ns_complement(x: &NValue) -> NValue {
    nl_not(x)
}

pub fn ns_intersect(x: &NValue, y: &NValue) -> NValue {
    nl_and(x, y)
}

pub fn ns_union(x: &NValue, y: &NValue) -> NValue {
    nl_or(x, y)
}

/// How the set difference is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Difference {
    /// `T_M ⊖ T_M⊙T_N`, consistent with `M ∖ N = M ∩ C(N)`.
    #[default]
    Product,
    /// `T_M ⊖ T_N`, the older componentwise subtraction.
    Legacy,
}

pub fn ns_difference(x: &NValue, y: &NValue) -> NValue {
    ns_difference_with(x, y, Difference::Product)
}

pub fn ns_difference_with(x: &NValue, y: &NValue, variant: Difference) -> NValue {
    match variant {
        Difference::Product => binary(x, y, |a, b| a.sub(&a.mul(b))),
        Difference::Legacy => binary(x, y, SubsetU::sub),
    }
}

/// Componentwise set containment `T_M ⊆ T_N`, `I_M ⊆ I_N`, `F_M ⊆ F_N`.
pub fn ns_is_subset(x: &NValue, y: &NValue) -> bool {
    y.t.includes(&x.t) && y.i.includes(&x.i) && y.f.includes(&x.f)
}

pub fn np_add(x: &NValue, y: &NValue) -> NValue {
    binary(x, y, SubsetU::add)
}

pub fn np_sub(x: &NValue, y: &NValue) -> NValue {
    binary(x, y, SubsetU::sub)
}

pub fn np_mul(x: &NValue, y: &NValue) -> NValue {
    binary(x, y, SubsetU::mul)
}

/// How the probability of a negated event is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Negation {
    /// `{1} ⊟ NP(A)`.
    #[default]
    Complement,
    /// `(F, I, T)`.
    Swap,
}

pub fn np_not(x: &NValue) -> NValue {
    np_not_with(x, Negation::Complement)
}

pub fn np_not_with(x: &NValue, variant: Negation) -> NValue {
    match variant {
        Negation::Complement => unary(x, not),
        Negation::Swap => {
            let c = x.clamp01();
            NValue::new(c.f, c.i, c.t)
        }
    }
}

/// `NP(A) ⊞ NP(B) ⊟ NP(A) ⊠ NP(B)`.
pub fn np_union(x: &NValue, y: &NValue) -> NValue {
    np_sub(&np_add(x, y), &np_mul(x, y))
}
