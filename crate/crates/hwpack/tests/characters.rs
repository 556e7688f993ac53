use hwpack::arthur_params::{enumerate_params, Block};
use hwpack::component_chars::{
    char_equivalent, cross_check_table, is_documented_discrepancy, rho_pi_general, rho_pi_general_roles,
    rho_sigma_general, rho_theta, rho_theta_character, rho_unipotent_table, table_parameter, Column, Form, Module,
    Roles, Side, ThetaSigns, signs_agree,
};
use hwpack::membership::{enumerate_packets_pi, enumerate_packets_sigma, pi_inf_char, Route};
use proptest::prelude::*;
use std::collections::BTreeSet;

type Key = (&'static str, Form, Column, usize, i64, i8);

fn theta_vs_table(n_max: usize) -> (BTreeSet<Key>, BTreeSet<Key>) {
    let (mut all, mut bad) = (BTreeSet::new(), BTreeSet::new());
    for n in 1..=n_max {
        for m in 1..=n as i64 {
            for form in [Form::First, Form::Second] {
                for col in Column::ALL {
                    for d in [1i8, -1] {
                        let Ok(table) = rho_unipotent_table(form, n, m, col, d) else { continue };
                        let psi = table_parameter(form, n, m).unwrap();
                        let theta = rho_theta_character(form, n, m, col, d).unwrap().unwrap();
                        let key = ("theta", form, col, n, m, d);
                        all.insert(key);
                        if !signs_agree(&theta, &table, &psi) {
                            bad.insert(key);
                        }
                    }
                }
            }
        }
    }
    (all, bad)
}

#[test]
fn theta_formula_disagrees_with_table_exactly_on_first_form_sigma_rows() {
    let (all, bad) = theta_vs_table(8);
    let expected: BTreeSet<Key> = all.iter().copied().filter(|k| is_documented_discrepancy(k.1, k.2)).collect();
    assert!(!expected.is_empty());
    assert_eq!(bad, expected);
}

#[test]
fn general_formulas_reproduce_table_on_unipotent_members() {
    let mut checked = 0;
    for n in 1..=8usize {
        for m in 1..=n as i64 {
            for e in enumerate_packets_pi(n, m).unwrap() {
                for d in [1i8, -1] {
                    let c = rho_pi_general(&e.psi, n, m, d).unwrap();
                    if let Some(cmp) = cross_check_table(&e.psi, n, Module::Pi, m, &c).unwrap() {
                        checked += 1;
                        assert_eq!(cmp.agrees, !is_documented_discrepancy(cmp.form, cmp.column), "{} {cmp:?}", e.psi);
                    }
                }
            }
        }
        for k in 1..=(n as i64 / 2) {
            for e in enumerate_packets_sigma(n, k).unwrap() {
                for d in [1i8, -1] {
                    let c = rho_sigma_general(&e.psi, n, k, d).unwrap();
                    if let Some(cmp) = cross_check_table(&e.psi, n, Module::Sigma, k, &c).unwrap() {
                        checked += 1;
                        assert_eq!(cmp.agrees, !is_documented_discrepancy(cmp.form, cmp.column), "{} {cmp:?}", e.psi);
                    }
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn theta_triples_have_product_one() {
    for n in 1..=10usize {
        for m in 1..=n as i64 {
            for tp in 0..=1u8 {
                for t in 0..=1u8 {
                    for d in [1i8, -1] {
                        for side in [Side::Positive, Side::Negative] {
                            match rho_theta(n, m, tp, t, d, side) {
                                Ok(ThetaSigns::Signs(s)) => assert_eq!(s.iter().product::<i8>(), 1),
                                Ok(ThetaSigns::Degenerate(s)) => {
                                    assert_eq!(s.iter().product::<i8>(), 1);
                                    assert_eq!((n, m, tp, t, side), (1, 1, 1, 0, Side::Negative));
                                }
                                _ => {}
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn characters_are_constant_on_equal_blocks() {
    for n in 1..=7usize {
        for m in 0..=n as i64 {
            for e in enumerate_packets_pi(n, m).unwrap() {
                for d in [1i8, -1] {
                    let c = rho_pi_general(&e.psi, n, m, d).unwrap();
                    assert!(c.is_constant_on_equal_blocks());
                    assert_eq!(c.listed_product(), 1);
                }
            }
        }
    }
}

#[test]
fn discrete_signs_depend_on_delta_only_for_odd_a() {
    for n in 1..=7usize {
        for m in 0..=n as i64 {
            for e in enumerate_packets_pi(n, m).unwrap() {
                let cp = rho_pi_general(&e.psi, n, m, 1).unwrap();
                let cm = rho_pi_general(&e.psi, n, m, -1).unwrap();
                for (i, b) in cp.blocks.iter().enumerate() {
                    if let Block::Discrete(d) = b {
                        assert_eq!(cp.signs[i] != cm.signs[i], d.a % 2 == 1, "{} {d}", e.psi);
                    }
                }
            }
        }
    }
}

#[test]
fn small_block_roles_are_interchangeable() {
    for n in 1..=8usize {
        for m in 1..=n as i64 {
            for e in enumerate_packets_pi(n, m).unwrap() {
                let small = e.psi.unipotent.iter().filter(|b| b.dim == 1).count();
                let route = e.verdict.route.unwrap();
                let two_small = e.psi.unipotent.len() == 3
                    && match route {
                        Route::Thm71IIA1 => small >= 2 + usize::from(n as i64 == m),
                        Route::Thm71IIA3 => small >= 2,
                        _ => false,
                    };
                if !two_small {
                    continue;
                }
                for d in [1i8, -1] {
                    let a = rho_pi_general_roles(&e.psi, n, m, d, Roles::Canonical).unwrap();
                    let b = rho_pi_general_roles(&e.psi, n, m, d, Roles::Swapped).unwrap();
                    assert!(char_equivalent(&a, &b, &e.psi).unwrap(), "{}", e.psi);
                }
            }
        }
    }
}

#[test]
fn delta_prime_relation() {
    // δ′ = (−1)^{m−a}δ in case (2), (−1)^{m−a−1}δ in case (3)
    for n in 1..=8usize {
        for m in 1..=n as i64 {
            for e in enumerate_packets_pi(n, m).unwrap() {
                if e.psi.unipotent.len() != 3 {
                    continue;
                }
                let total: i64 = e.psi.discrete.iter().map(|d| d.a as i64).sum();
                let (big_dim, shift) = match e.verdict.route.unwrap() {
                    Route::Thm71IIA1 => (2 * (n as i64 - m) + 1, 0),
                    Route::Thm71IIA3 => (2 * (n as i64 - m) + 3, 1),
                    _ => continue,
                };
                let mut rest: Vec<u32> = e.psi.unipotent.iter().map(|b| b.dim).collect();
                let i = rest.iter().position(|&x| x as i64 == big_dim).unwrap();
                rest.remove(i);
                let a = (rest[0] as i64 + 1) / 2;
                assert_eq!((total - (m - a - shift)).rem_euclid(2), 0, "{}", e.psi);
            }
        }
    }
}

proptest! {
    #[test]
    fn enumerated_members_never_fail_formulas(n in 1usize..=7, m_frac in 0.0f64..=1.0, d in prop_oneof![Just(1i8), Just(-1i8)]) {
        let m = (m_frac * n as f64).round() as i64;
        for psi in enumerate_params(&pi_inf_char(n, m), n).unwrap() {
            if hwpack::membership::decide_pi(&psi, n, m).unwrap().member {
                let c = rho_pi_general(&psi, n, m, d).unwrap();
                prop_assert!(c.is_constant_on_equal_blocks());
                prop_assert!(c.signs.iter().all(|s| *s == 1 || *s == -1));
            }
        }
    }
}
