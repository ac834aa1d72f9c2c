mod common;

use frobenius3::two_var::{
    closed_form_p12, count_bcs_table, count_binner, count_window, enumerate_nonneg, first_nonneg,
    frobenius_two, particular_solution,
};
use frobenius3::{Error, TwoVarEquation};
use proptest::prelude::*;
use rayon::prelude::*;

fn eq(a: i64, b: i64, m: i64) -> TwoVarEquation {
    TwoVarEquation::new(a, b, m).unwrap()
}

#[test]
fn four_counts_agree_on_coprime_grid() {
    let pairs: Vec<(i64, i64)> = (1..=30)
        .flat_map(|a| (1..=30).map(move |b| (a, b)))
        .filter(|&(a, b)| common::gcd(a, b) == 1)
        .collect();
    pairs.par_iter().for_each(|&(a, b)| {
        for m in 0..=600 {
            let e = eq(a, b, m);
            let direct = common::pairs(a, b, m).len() as u128;
            let (binner, data) = count_binner(&e).unwrap();
            assert_eq!(binner, direct, "binner {a}x + {b}y = {m}");
            assert_eq!(
                count_bcs_table(&e).unwrap(),
                direct,
                "table {a}x + {b}y = {m}"
            );
            assert_eq!(
                enumerate_nonneg(&e).len() as u128,
                direct,
                "enum {a}x + {b}y = {m}"
            );
            assert!((0..b as i128).contains(&data.a1));
            assert!((0..a as i128).contains(&data.b1));
            assert_eq!((a as i128 * data.a1 - m as i128).rem_euclid(b as i128), 0);
            assert_eq!((b as i128 * data.b1 - m as i128).rem_euclid(a as i128), 0);
        }
    });
}

#[test]
fn enumeration_matches_scan_for_any_gcd() {
    for a in 1..=24 {
        for b in 1..=24 {
            for m in 0..=150 {
                let e = eq(a, b, m);
                let got = enumerate_nonneg(&e);
                assert_eq!(got, common::pairs(a, b, m), "{a}x + {b}y = {m}");
                assert_eq!(count_window(&e), got.len() as u128);
                match first_nonneg(&e) {
                    Ok(first) => assert_eq!(Some(&first), got.iter().min_by_key(|p| p.1)),
                    Err(Error::NoNonnegative) => {
                        assert!(got.is_empty());
                        assert_eq!(m % common::gcd(a, b), 0);
                    }
                    Err(Error::NoSolution) => assert_ne!(m % common::gcd(a, b), 0),
                    Err(e) => panic!("unexpected {e:?}"),
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn solution_lines_and_closure(a in 1i64..200, b in 1i64..200, m in 0i64..20_000) {
        let e = eq(a, b, m);
        let d = common::gcd(a, b);
        if let Ok(line) = particular_solution(&e) {
            prop_assert_eq!(line.d, d as i128);
            for k in -5..=5 {
                let (x, y) = line.point(k);
                prop_assert_eq!(a as i128 * x + b as i128 * y, m as i128);
            }
        } else {
            prop_assert_ne!(m % d, 0);
        }
        let sols = enumerate_nonneg(&e);
        for w in sols.windows(2) {
            prop_assert!(w[0].0 < w[1].0);
        }
        for &(x, y) in &sols {
            prop_assert!(x >= 0 && y >= 0);
            prop_assert_eq!(a * x + b * y, m);
        }
        if let (Some(first), Some(last)) = (sols.first(), sols.last()) {
            let (dx, dy) = (last.0 - first.0, last.1 - first.1);
            let (sx, sy) = (b / d, a / d);
            prop_assert_eq!(dx % sx, 0);
            prop_assert_eq!(dy, -(dx / sx) * sy);
        }
    }
}

#[test]
fn frobenius_against_scan() {
    for a in 2..=25 {
        for b in 2..=25 {
            if common::gcd(a, b) != 1 {
                continue;
            }
            let f = frobenius_two(a, b).unwrap();
            let g = f.frobenius as i64;
            assert_eq!(g, a * b - a - b);
            assert!(!common::representable(a, b, g), "g({a}, {b})");
            assert!((g + 1..=g + a * b).all(|n| common::representable(a, b, n)));
            let gaps = (1..=g).filter(|&n| !common::representable(a, b, n)).count();
            assert_eq!(f.non_representable_count, gaps as u128, "gaps({a}, {b})");
        }
    }
}

#[test]
fn frobenius_derived_values() {
    // scan of [1, 180] for (9, 20) and [1, 10] for (2, 5)
    let gaps_9_20: Vec<i64> = (1..=180)
        .filter(|&n| !common::representable(9, 20, n))
        .collect();
    assert_eq!(gaps_9_20.len(), 76);
    assert_eq!(gaps_9_20.last(), Some(&151));
    let gaps_2_5: Vec<i64> = (1..=10)
        .filter(|&n| !common::representable(2, 5, n))
        .collect();
    assert_eq!(gaps_2_5, vec![1, 3]);

    let f = frobenius_two(9, 20).unwrap();
    assert_eq!((f.frobenius, f.non_representable_count), (151, 76));
    let f = frobenius_two(2, 5).unwrap();
    assert_eq!((f.frobenius, f.non_representable_count), (3, 2));
}

#[test]
fn pairing_property() {
    for a in 2..=15 {
        for b in 2..=15 {
            if common::gcd(a, b) != 1 {
                continue;
            }
            let c = (a - 1) * (b - 1);
            for k in 0..c {
                let partner = c - 1 - k;
                assert!(
                    common::representable(a, b, k) != common::representable(a, b, partner),
                    "({a}, {b}): {k} and {partner}"
                );
            }
        }
    }
}

#[test]
fn p12_closed_form_matches_binner() {
    for n in 0..=10_000u64 {
        let (count, _) = count_binner(&eq(1, 2, n as i64)).unwrap();
        assert_eq!(closed_form_p12(n), count, "n = {n}");
    }
}
