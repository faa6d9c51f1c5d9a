use evifuse::frame::enumerate_hyper_power_set;
use evifuse::fusion::{dempster_combine, dsm_combine, normalize};
use evifuse::interval::{interval_to_bpa, IntervalEvidence};
use evifuse::neutro::{classify, NValue, SubsetU};
use evifuse::nfusion::{case2, Options};
use evifuse::{DomainMode, Frame, Granule, Proposition};
use proptest::prelude::*;

fn hyper_granule(n: usize) -> impl Strategy<Value = Granule> {
    let f = Frame::numbered(n).unwrap();
    let d: Vec<Proposition> = enumerate_hyper_power_set(&f)
        .unwrap()
        .into_iter()
        .filter(|p| !p.is_empty())
        .collect();
    let len = d.len();
    prop::collection::vec((0..len, 0.01f64..1.0), 1..6).prop_map(move |picks| {
        let s: f64 = picks.iter().map(|p| p.1).sum();
        let entries = picks.iter().map(|&(i, w)| (d[i], w / s));
        Granule::new(&f, entries, DomainMode::HyperPowerSet, false).unwrap()
    })
}

fn power_set_granule(n: usize) -> impl Strategy<Value = Granule> {
    let f = Frame::numbered(n).unwrap();
    prop::collection::vec((1u64..1 << n, 0.01f64..1.0), 1..6).prop_map(move |picks| {
        let s: f64 = picks.iter().map(|p| p.1).sum();
        let entries = picks
            .iter()
            .map(|&(set, w)| (Proposition::from_singletons(n, set), w / s));
        Granule::new(&f, entries, DomainMode::PowerSet, false).unwrap()
    })
}

fn unit_interval() -> impl Strategy<Value = (f64, f64)> {
    (0.0f64..=1.0, 0.0f64..=1.0).prop_map(|(a, b)| (a.min(b), a.max(b)))
}

proptest! {
    #[test]
    fn belief_never_exceeds_plausibility(g in hyper_granule(3)) {
        for a in enumerate_hyper_power_set(g.frame()).unwrap() {
            prop_assert!(g.belief(&a).unwrap() <= g.plausibility(&a).unwrap() + 1e-12);
        }
        prop_assert!((g.belief(&g.frame().full()).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pignistic_lies_between_belief_and_plausibility(g in power_set_granule(3)) {
        let p = g.pignistic_classical().unwrap();
        prop_assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        for set in 1u64..8 {
            let a = Proposition::from_singletons(3, set);
            let pa: f64 = (0..3).filter(|i| set >> i & 1 == 1).map(|i| p[i]).sum();
            prop_assert!(g.belief(&a).unwrap() <= pa + 1e-12);
            prop_assert!(pa <= g.plausibility(&a).unwrap() + 1e-12);
        }
        let general = g.promoted().pignistic_general().unwrap();
        for (x, y) in p.iter().zip(&general) {
            prop_assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn general_pignistic_is_a_distribution(g in hyper_granule(4)) {
        let p = g.pignistic_general().unwrap();
        prop_assert!(p.iter().all(|&x| x >= 0.0));
        prop_assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn dsm_is_commutative(a in hyper_granule(3), b in hyper_granule(3)) {
        let ab = dsm_combine(&a, &b).unwrap();
        let ba = dsm_combine(&b, &a).unwrap();
        prop_assert_eq!(ab.len(), ba.len());
        for (p, m) in ab.masses() {
            prop_assert!((ba.mass(p) - m).abs() < 1e-12);
        }
        prop_assert!((ab.total() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn vacuous_granule_is_neutral_for_dempster(g in power_set_granule(3)) {
        let v = Granule::vacuous(g.frame(), DomainMode::PowerSet).unwrap();
        let (out, report) = dempster_combine(&g, &v).unwrap();
        prop_assert!((report.k - 1.0).abs() < 1e-12);
        for (p, m) in g.masses() {
            prop_assert!((out.mass(p) - m).abs() < 1e-12);
        }
    }

    #[test]
    fn normalization_is_idempotent(g in hyper_granule(3), scale in 0.2f64..3.0) {
        let scaled = Granule::new(
            g.frame(),
            g.masses().map(|(p, m)| (*p, m * scale)),
            DomainMode::HyperPowerSet,
            true,
        ).unwrap();
        let once = normalize(&scaled).unwrap();
        prop_assert!((once.total() - 1.0).abs() < 1e-12);
        for (p, m) in g.masses() {
            prop_assert!((once.mass(p) - m).abs() < 1e-12);
        }
    }

    #[test]
    fn interval_granules_reproduce_their_interval((lo, hi) in unit_interval()) {
        let g = interval_to_bpa(&IntervalEvidence::new(lo, hi).unwrap());
        prop_assert!(g.a >= 0.0 && g.ac >= 0.0 && g.union >= 0.0 && g.inter >= 0.0);
        prop_assert!((g.total() - 1.0).abs() < 1e-12);
        let (l, h) = g.interval();
        prop_assert!((l - lo).abs() < 1e-12 && (h - hi).abs() < 1e-12);
    }

    #[test]
    fn case_two_granules_are_normalized(
        t in unit_interval(), i in unit_interval(), f in unit_interval(), strict in any::<bool>()
    ) {
        let v = NValue::new(
            SubsetU::interval(t.0, t.1).unwrap(),
            SubsetU::interval(i.0, i.1).unwrap(),
            SubsetU::interval(f.0, f.1).unwrap(),
        );
        for g in case2(&v, Options { strict_paper: strict }).unwrap() {
            prop_assert!(g.a >= 0.0 && g.ac >= 0.0 && g.union >= 0.0 && g.inter >= 0.0);
            prop_assert!((g.total() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn nvalue_text_round_trips(
        t in unit_interval(), i in 0.0f64..=1.0, f in unit_interval(), g in unit_interval()
    ) {
        let v = NValue::new(
            SubsetU::interval(t.0, t.1).unwrap(),
            SubsetU::point(i),
            SubsetU::new([
                evifuse::neutro::Interval::new(f.0, f.1).unwrap(),
                evifuse::neutro::Interval::new(g.0, g.1).unwrap(),
            ]).unwrap(),
        );
        let back: NValue = v.to_string().parse().unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn subset_addition_commutes(a in unit_interval(), b in unit_interval(), c in 0.0f64..1.0) {
        let x = SubsetU::new([
            evifuse::neutro::Interval::new(a.0, a.1).unwrap(),
            evifuse::neutro::Interval::point(c),
        ]).unwrap();
        let y = SubsetU::interval(b.0, b.1).unwrap();
        prop_assert_eq!(x.add(&y), y.add(&x));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert!(x.add(&y).clamp01().within_unit());
    }

    #[test]
    fn classification_is_total_on_the_unit_cube(t in 0.0f64..=1.0, i in 0.0f64..=1.0, f in 0.0f64..=1.0) {
        let labels = classify(&NValue::crisp(t, i, f));
        let n = t + i + f;
        if n > 1.0 + 1e-9 && i > 1e-9 {
            prop_assert!(labels.iter().any(|l| l.as_str() == "paraconsistent-range"));
        }
    }
}
