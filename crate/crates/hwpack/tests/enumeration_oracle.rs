//! Enumeration against the brute-force oracle in `common`.

mod common;

use common::brute;
use hwpack::arthur_params::{enumerate_params, ArthurParameter};
use hwpack::membership::{pi_inf_char, sigma_inf_char};
use hwpack::weights::InfinitesimalCharacter;
use proptest::prelude::*;
use std::collections::BTreeSet;

fn check(chi: &InfinitesimalCharacter, n: usize) {
    let fast: Vec<ArthurParameter> = enumerate_params(chi, n).unwrap();
    let fast_set: BTreeSet<ArthurParameter> = fast.iter().cloned().collect();
    assert_eq!(fast.len(), fast_set.len(), "duplicates for {chi:?}");
    assert_eq!(fast_set, brute(chi, n), "χ = {chi:?}");
}

#[test]
fn matches_brute_force_for_highest_weight_characters() {
    for n in 1..=5usize {
        for m in 0..=n as i64 {
            check(&pi_inf_char(n, m), n);
        }
        for k in 1..=(n as i64 / 2) {
            check(&sigma_inf_char(n, k), n);
        }
    }
}

#[test]
fn worked_character_has_six_parameters() {
    let chi = InfinitesimalCharacter::new(vec![1, 0, 0, 0, -1]).unwrap();
    assert_eq!(brute(&chi, 2).len(), 6);
    assert_eq!(enumerate_params(&chi, 2).unwrap().len(), 6);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matches_brute_force_for_random_characters(half in proptest::collection::vec(0i64..5, 1..=4)) {
        let chi = InfinitesimalCharacter::from_half(&half);
        check(&chi, half.len());
    }

    #[test]
    fn enumeration_round_trips(half in proptest::collection::vec(0i64..6, 1..=5)) {
        let chi = InfinitesimalCharacter::from_half(&half);
        for p in enumerate_params(&chi, half.len()).unwrap() {
            prop_assert!(p.validate().is_ok());
            prop_assert_eq!(p.inf_char(), chi.clone());
            prop_assert_eq!(p.clone().canonicalize(), p);
        }
    }

    #[test]
    fn remove_then_insert_recovers(half in proptest::collection::vec(0i64..6, 1..=5)) {
        let chi = InfinitesimalCharacter::from_half(&half);
        for p in enumerate_params(&chi, half.len()).unwrap() {
            for j in 0..p.discrete.len() {
                let d = p.discrete[j];
                let q = p.remove_block(j).unwrap();
                prop_assert!(q.validate().is_ok());
                prop_assert_eq!(q.n, p.n - d.a as usize);
                prop_assert_eq!(q.insert_block(d), p.clone());
            }
        }
    }

    #[test]
    fn wire_format_round_trips(half in proptest::collection::vec(0i64..5, 1..=4)) {
        let chi = InfinitesimalCharacter::from_half(&half);
        for p in enumerate_params(&chi, half.len()).unwrap() {
            prop_assert_eq!(ArthurParameter::from_json(&p.to_json()).unwrap(), p);
        }
    }
}
