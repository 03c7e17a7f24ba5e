//! Property tests over randomized summand families.

use ordsum::analysis::AnalysisBudget;
use ordsum::config::{expr_from_json, expr_to_json};
use ordsum::natural_negation::SupInfOracleConfig;
use ordsum::ordinal_sum::{
    ordinal_sum_negation, ordinal_sum_tconorm, ordinal_sum_tnorm, Summand, SummandFamily,
    SumVariant,
};
use ordsum::{make_connective, unit_grid, ConnectiveExpr, ConnectiveKind};
use proptest::prelude::*;

fn negation_from_pick(pick: u8) -> ConnectiveExpr {
    let k = 1.5 + f64::from(pick % 6) * 0.5;
    match pick % 5 {
        0 => make_connective(ConnectiveKind::Negation, "standard", &[]),
        1 => make_connective(ConnectiveKind::Negation, "power_complement", &[k]),
        2 => make_connective(ConnectiveKind::Negation, "root_complement", &[k]),
        3 => make_connective(ConnectiveKind::Negation, "least", &[]),
        _ => make_connective(ConnectiveKind::Negation, "greatest", &[]),
    }
    .unwrap()
}

fn binary_from_pick(kind: ConnectiveKind, pick: u8) -> ConnectiveExpr {
    let names: &[&str] = match kind {
        ConnectiveKind::TNorm => &["godel", "product", "lukasiewicz", "drastic"],
        _ => &["godel", "probabilistic_sum", "lukasiewicz", "drastic"],
    };
    make_connective(kind, names[usize::from(pick) % names.len()], &[]).unwrap()
}

/// Disjoint intervals from distinct cuts on the 1/128 lattice.
fn family_strategy(
    variant: SumVariant,
) -> impl Strategy<Value = SummandFamily> {
    (
        prop::collection::btree_set(0u32..=128, 2..=8),
        prop::collection::vec(any::<u8>(), 4),
    )
        .prop_map(move |(cuts, picks)| {
            let cuts: Vec<u32> = cuts.into_iter().collect();
            let summands = cuts
                .chunks_exact(2)
                .enumerate()
                .map(|(i, pair)| {
                    let connective = match variant.kind() {
                        ConnectiveKind::Negation => negation_from_pick(picks[i % picks.len()]),
                        kind => binary_from_pick(kind, picks[i % picks.len()]),
                    };
                    Summand::new(
                        f64::from(pair[0]) / 128.0,
                        f64::from(pair[1]) / 128.0,
                        connective,
                    )
                    .unwrap()
                })
                .collect();
            SummandFamily::new(variant, summands).unwrap()
        })
}

proptest! {
    #[test]
    fn negation_sums_satisfy_n1_n2_and_confinement(family in family_strategy(SumVariant::Negation)) {
        let n = ordinal_sum_negation(family.clone()).unwrap();
        prop_assert_eq!(n.eval1(0.0).unwrap(), 1.0);
        prop_assert_eq!(n.eval1(1.0).unwrap(), 0.0);
        let mut prev = f64::INFINITY;
        for x in unit_grid(201) {
            let v = n.eval1(x).unwrap();
            prop_assert!(v <= prev + 1e-12, "monotonicity at {}", x);
            prev = v;
            match family.summands().iter().find(|s| s.a() <= x && x <= s.b()) {
                Some(s) => {
                    prop_assert!(v >= 1.0 - s.b() && v <= 1.0 - s.a());
                }
                None => {
                    for s in family.summands() {
                        prop_assert!(!(1.0 - s.b() < v && v < 1.0 - s.a()));
                    }
                }
            }
        }
    }

    #[test]
    fn negation_sum_anchors_exactly(family in family_strategy(SumVariant::Negation)) {
        let n = ordinal_sum_negation(family.clone()).unwrap();
        for s in family.summands() {
            prop_assert_eq!(n.eval1(s.a()).unwrap(), 1.0 - s.a());
            prop_assert_eq!(n.eval1(s.b()).unwrap(), 1.0 - s.b());
        }
    }

    #[test]
    fn binary_sums_commute_and_stay_bounded(
        tn in family_strategy(SumVariant::TNorm),
        sn in family_strategy(SumVariant::TConorm),
        x in 0.0f64..=1.0,
        y in 0.0f64..=1.0,
    ) {
        let t = ordinal_sum_tnorm(tn).unwrap();
        let s = ordinal_sum_tconorm(sn).unwrap();
        let txy = t.eval2(x, y).unwrap();
        prop_assert_eq!(txy, t.eval2(y, x).unwrap());
        prop_assert!((0.0..=1.0).contains(&txy));
        // every t-norm is dominated by min, every t-conorm dominates max
        prop_assert!(txy <= x.min(y) + 1e-12);
        let sxy = s.eval2(x, y).unwrap();
        prop_assert_eq!(sxy, s.eval2(y, x).unwrap());
        prop_assert!(sxy >= x.max(y) - 1e-12);
        prop_assert!(txy <= sxy + 1e-12);
    }

    #[test]
    fn config_roundtrip_is_bit_identical(family in family_strategy(SumVariant::Negation)) {
        let n = ordinal_sum_negation(family).unwrap();
        let json = expr_to_json(&n);
        let back = expr_from_json(&json, &AnalysisBudget::default(), &SupInfOracleConfig::default()).unwrap();
        for x in unit_grid(101) {
            prop_assert_eq!(n.eval1(x).unwrap(), back.eval1(x).unwrap());
        }
    }
}
