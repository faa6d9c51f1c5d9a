use evifuse::interval::BinaryGranule;
use evifuse::neutro::NValue;
use evifuse::nfusion::{
    case1, case2, case3, combine_report, fuse_reports, NItem, NReport, Options,
};
use evifuse::Error;

fn report(generators: &[&str], items: &[(&str, &str)]) -> NReport {
    NReport::new(
        generators.iter().map(|g| g.to_string()).collect(),
        items
            .iter()
            .map(|(p, v)| NItem {
                prop: p.to_string(),
                value: v.parse().unwrap(),
            })
            .collect(),
    )
    .unwrap()
}

/// Conjunctive product on `{A, A^c, A∪A^c, A∩A^c}`, written out by hand.
fn product(x: [f64; 4], y: [f64; 4]) -> [f64; 4] {
    let [xa, xc, xu, xi] = x;
    let [ya, yc, yu, yi] = y;
    let a = xa * ya + xa * yu + xu * ya;
    let c = xc * yc + xc * yu + xu * yc;
    let u = xu * yu;
    let total = (xa + xc + xu + xi) * (ya + yc + yu + yi);
    [a, c, u, total - a - c - u]
}

fn arr(g: &BinaryGranule) -> [f64; 4] {
    [g.a, g.ac, g.union, g.inter]
}

fn assert_close(x: [f64; 4], y: [f64; 4], tol: f64) {
    for (a, b) in x.iter().zip(&y) {
        assert!((a - b).abs() <= tol, "{x:?} vs {y:?}");
    }
}

#[test]
fn case_two_matches_interval_table_row() {
    let v: NValue = "([0.2,0.4]; 0; 0)".parse().unwrap();
    let [m1, ..] = case2(&v, Options::default()).unwrap();
    assert_close(arr(&m1), [0.124, 0.524, 0.2, 0.152], 5e-3);
}

#[test]
fn falsity_granule_mirrors_truth_granule() {
    let [m1, m2, _] = case1(&NValue::crisp(0.2, 0.0, 0.8)).unwrap();
    assert_close(arr(&m1), arr(&m2), 1e-12);
}

#[test]
fn two_triple_union_folds_both_triples() {
    let v: NValue = "(0.2,0.8; 0; 0.2)".parse().unwrap();
    let got = arr(&case3(&v, Options::default()).unwrap());

    let granules: Vec<[f64; 4]> = [0.2, 0.8]
        .iter()
        .flat_map(|&t| case1(&NValue::crisp(t, 0.0, 0.2)).unwrap().map(|g| arr(&g)))
        .collect();
    for order in [[0, 1, 2, 3, 4, 5], [5, 3, 1, 0, 2, 4]] {
        let folded = order[1..]
            .iter()
            .fold(granules[order[0]], |acc, &k| product(acc, granules[k]));
        let s: f64 = folded.iter().sum();
        assert_close(got, folded.map(|x| x / s), 1e-12);
    }
}

#[test]
fn balanced_item_collapses_onto_paradox() {
    let r = report(&["A", "~A"], &[("A", "(0.5; 0; 0.5)")]);
    let g = combine_report(&r, Options::default()).unwrap();
    let paradox = r.frame().prop("A & ~A").unwrap();
    assert!((g.mass(&paradox) - 1.0).abs() < 1e-12);
    assert_eq!(g.len(), 1);
}

#[test]
fn two_items_live_on_four_generators() {
    let r = report(
        &["A", "~A", "B", "~B"],
        &[
            ("A", "(0.7; 0.2; 0.1)"),
            ("B", "([0.3,0.5]; [0.1,0.2]; 0.4)"),
        ],
    );
    let g = combine_report(&r, Options::default()).unwrap();
    assert_eq!(g.frame().len(), 4);
    assert!(g.len() <= 167);
    assert!((g.total() - 1.0).abs() < 1e-12);
}

#[test]
fn vacuous_report_changes_nothing() {
    let gens = ["A", "~A"];
    let r1 = report(&gens, &[("A", "([0.3,0.6]; [0.1,0.3]; 0.2)")]);
    let r2 = report(&gens, &[("A", "([0,1]; 1; [0,1])")]);
    let alone = combine_report(&r1, Options::default()).unwrap();
    let fused = fuse_reports(&r1, &r2, Options::default()).unwrap();
    for (p, m) in alone.masses() {
        assert!((fused.mass(p) - m).abs() < 1e-12);
    }
    assert!((fused.total() - 1.0).abs() < 1e-12);
}

#[test]
fn fusion_is_symmetric_and_contradiction_is_paradox() {
    let gens = ["A", "~A"];
    let yes = report(&gens, &[("A", "(1; 0; 0)")]);
    let no = report(&gens, &[("A", "(0; 0; 1)")]);
    let ab = fuse_reports(&yes, &no, Options::default()).unwrap();
    let ba = fuse_reports(&no, &yes, Options::default()).unwrap();
    for (p, m) in ab.masses() {
        assert!((ba.mass(p) - m).abs() < 1e-12);
    }
    let paradox = yes.frame().prop("A & ~A").unwrap();
    let top = ab.masses().map(|(_, m)| m).fold(0.0, f64::max);
    assert_eq!(ab.mass(&paradox), top);
}

#[test]
fn strict_option_only_changes_the_falsity_granule() {
    let v: NValue = "([0.2,0.3]; [0.1,0.4]; [0.3,0.5])".parse().unwrap();
    let plain = case2(&v, Options::default()).unwrap();
    let strict = case2(&v, Options { strict_paper: true }).unwrap();
    assert_eq!(plain[0], strict[0]);
    assert_eq!(plain[2], strict[2]);
    assert!((strict[1].total() - 1.0).abs() < 1e-9);
}

#[test]
fn mismatched_generators_are_rejected() {
    let r1 = report(&["A", "~A"], &[("A", "(1; 0; 0)")]);
    let r2 = report(&["B", "~B"], &[("B", "(1; 0; 0)")]);
    assert!(matches!(
        fuse_reports(&r1, &r2, Options::default()),
        Err(Error::FrameMismatch(_))
    ));
}
