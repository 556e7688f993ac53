use hwpack::orbit_tableaux::*;
use proptest::prelude::*;

#[test]
fn associated_varieties_sit_on_the_chain() {
    for n in 1..=12usize {
        let mut prev = None;
        for m in 0..=n as i64 {
            let t = av_scalar(n, m).unwrap();
            assert!(validate_tableau(&t, n).is_ok());
            assert_eq!(t.total_boxes(), 2 * n);
            assert_eq!(pminus_rank(&t), Some((2 * m as usize).min(n)));
            if let Some(p) = prev {
                assert!(closure_leq(&p, &t).unwrap());
            }
            prev = Some(t);
        }
    }
}

#[test]
fn chain_is_strictly_increasing() {
    for n in 1..=10 {
        let c = pminus_orbits(n);
        assert_eq!(c.len(), n + 1);
        for (r, t) in c.iter().enumerate() {
            assert_eq!(pminus_rank(t), Some(r));
            for (s, u) in c.iter().enumerate() {
                assert_eq!(closure_leq(t, u).unwrap(), r <= s);
            }
        }
    }
}

#[test]
fn minus_led_pairs_are_off_the_chain() {
    for n in 1..=6 {
        let t: SignedTableau = vec!["-+"; n].join(" ").parse().unwrap();
        assert!(validate_tableau(&t, n).is_ok());
        assert_eq!(pminus_rank(&t), None);
    }
}

proptest! {
    #[test]
    fn rows_round_trip_through_json(lens in proptest::collection::vec((1usize..5, any::<bool>()), 1..8)) {
        let rows: Vec<Row> = lens
            .iter()
            .map(|&(l, p)| Row::new(l, if p { Sign::Plus } else { Sign::Minus }))
            .collect();
        let t = SignedTableau::new(rows);
        let s = serde_json::to_string(&t).unwrap();
        prop_assert_eq!(serde_json::from_str::<SignedTableau>(&s).unwrap(), t.clone());
        prop_assert_eq!(t.to_string().parse::<SignedTableau>().unwrap(), t);
    }
}
