//! Neutrosophic components as finite unions of closed intervals, with the
//! logical connectives, set operations and probability operators built on
//! set arithmetic.
//!
//! Infinitesimal bounds are not represented: every result is clamped to the
//! real unit interval and `{1}` stands for `{1^+}`.

mod classify;
mod ops;
mod subset;
mod value;

pub use classify::{classify, Label};
pub use ops::{
    nl_and, nl_iff, nl_implies, nl_not, nl_or, nl_peirce, nl_sheffer, nl_xor, np_add, np_mul,
    np_not, np_not_with, np_sub, np_union, ns_complement, ns_difference, ns_difference_with,
    ns_intersect, ns_is_subset, ns_union, Difference, Negation,
};
pub use subset::{Interval, SubsetU};
pub use value::{parse_component, NValue};
