use std::collections::BTreeSet;
use std::fmt;

use super::value::NValue;

const TOL: f64 = 1e-12;

/// Classical logics a neutrosophic value specializes to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Boolean,
    FuzzyCompatible,
    Intuitionistic,
    Paraconsistent,
    Dialetheist,
    Faillibilist,
    Paradoxist,
    Pseudoparadoxist,
    Tautologic,
    /// Superior sum above one with some indeterminacy.
    ParaconsistentRange,
}

impl Label {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Boolean => "boolean",
            Self::FuzzyCompatible => "fuzzy-compatible",
            Self::Intuitionistic => "intuitionistic",
            Self::Paraconsistent => "paraconsistent",
            Self::Dialetheist => "dialetheist",
            Self::Faillibilist => "faillibilist",
            Self::Paradoxist => "paradoxist",
            Self::Pseudoparadoxist => "pseudoparadoxist",
            Self::Tautologic => "tautologic",
            Self::ParaconsistentRange => "paraconsistent-range",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= TOL
}

/// Every matching label, judged on the superior limits `t`, `i`, `f` of the
/// components and `n = t + i + f`. Raw values outside `[0, 1]` are allowed.
pub fn classify(x: &NValue) -> BTreeSet<Label> {
    let (t, i, f) = (x.t.sup(), x.i.sup(), x.f.sup());
    let n = t + i + f;
    let unit = |v: f64| (-TOL..=1.0 + TOL).contains(&v);
    let zero_i = eq(i, 0.0);
    let mut out = BTreeSet::new();
    let mut add = |cond: bool, l: Label| {
        if cond {
            out.insert(l);
        }
    };
    add(
        eq(n, 1.0) && zero_i && [t, f].iter().all(|v| eq(*v, 0.0) || eq(*v, 1.0)),
        Label::Boolean,
    );
    add(
        eq(n, 1.0) && zero_i && unit(t) && unit(f),
        Label::FuzzyCompatible,
    );
    add(
        n > TOL && n < 1.0 - TOL && zero_i && unit(t) && unit(f),
        Label::Intuitionistic,
    );
    add(
        n > 1.0 + TOL && zero_i && t < 1.0 && f < 1.0,
        Label::Paraconsistent,
    );
    add(eq(t, 1.0) && eq(f, 1.0) && zero_i, Label::Dialetheist);
    add(i > TOL, Label::Faillibilist);
    add(i > 1.0 + TOL, Label::Paradoxist);
    add(
        i > TOL && i < 1.0 - TOL && t + f > 1.0 + TOL,
        Label::Pseudoparadoxist,
    );
    add(i < -TOL && t > 1.0 + TOL, Label::Tautologic);
    add(n > 1.0 + TOL && i > TOL, Label::ParaconsistentRange);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(text: &str) -> Vec<Label> {
        classify(&text.parse().unwrap()).into_iter().collect()
    }

    #[test]
    fn crisp_truth() {
        assert_eq!(labels("(1;0;0)"), [Label::Boolean, Label::FuzzyCompatible]);
    }

    #[test]
    fn true_contradiction() {
        assert_eq!(labels("(1;0;1)"), [Label::Dialetheist]);
    }

    #[test]
    fn overflowing_sum() {
        let l = labels("([0.4,0.6]; [0.2,0.25],[0.3,0.35]; 0.1,0.2,0.3)");
        assert!(l.contains(&Label::ParaconsistentRange));
        assert!(l.contains(&Label::Faillibilist));
    }

    #[test]
    fn remaining_families() {
        assert_eq!(labels("(0.3;0;0.7)"), [Label::FuzzyCompatible]);
        assert_eq!(labels("(0.3;0;0.2)"), [Label::Intuitionistic]);
        assert_eq!(labels("(0.6;0;0.7)"), [Label::Paraconsistent]);
        assert_eq!(
            labels("(0.2;1.5;0.1)"),
            [
                Label::Faillibilist,
                Label::Paradoxist,
                Label::ParaconsistentRange
            ]
        );
        assert!(labels("(0.6;0.3;0.5)").contains(&Label::Pseudoparadoxist));
        assert_eq!(labels("(1.2;-0.1;0)"), [Label::Tautologic]);
    }
}
