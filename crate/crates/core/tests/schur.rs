use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use partition_verify::schur::{
    bialternant_eval, green_parafermi_det, green_parafermi_sum, littlewood_check, littlewood_product,
    parabose_sum, partitions_in_box, random_point, schur_poly, IntegerPartition,
};
use partition_verify::Error;
use proptest::prelude::*;

fn lam(parts: &[u32]) -> IntegerPartition {
    IntegerPartition::new(parts.to_vec()).unwrap()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Shapes of weight at most 6 with at most `m` rows.
fn small_shapes(m: usize) -> Vec<IntegerPartition> {
    partitions_in_box(6, m, 6)
}

#[test]
fn schur_examples() {
    assert_eq!(schur_poly(&lam(&[1]), 2).to_string(), "x1 + x2");
    assert_eq!(schur_poly(&lam(&[2, 1]), 2).to_string(), "x1^2*x2 + x1*x2^2");
    assert!(schur_poly(&lam(&[1, 1, 1]), 2).is_zero());
}

#[test]
fn schur_coefficients_are_kostka_numbers() {
    // s_(2,1)(x1,x2,x3) = m_(2,1) + 2 m_(1,1,1)
    let s = schur_poly(&lam(&[2, 1]), 3);
    assert_eq!(s.coeff(&[1, 1, 1]), BigInt::from(2));
    assert_eq!(s.coeff(&[2, 1, 0]), BigInt::from(1));
    assert_eq!(s.coeff(&[3, 0, 0]), BigInt::from(0));
    // Total tableau count of shape (2,1) with entries ≤ 3 is 8.
    assert_eq!(s.coefficient_sum(), BigInt::from(8));
}

#[test]
fn bialternant_examples() {
    assert_eq!(bialternant_eval(&lam(&[1]), &[q(2, 1), q(3, 1)]).unwrap(), q(5, 1));
    assert_eq!(bialternant_eval(&lam(&[2, 1]), &[q(1, 1), q(2, 1)]).unwrap(), q(6, 1));
    assert!(bialternant_eval(&IntegerPartition::empty(), &[q(3, 7), q(-5, 2), q(4, 1)]).unwrap().is_one());
    assert!(matches!(bialternant_eval(&lam(&[1]), &[q(1, 2), q(1, 2)]), Err(Error::RepeatedCoordinates)));
}

#[test]
fn tableaux_agree_with_bialternants_at_random_points() {
    for m in [2, 3] {
        for lambda in small_shapes(m) {
            let poly = schur_poly(&lambda, m);
            for seed in 0..20 {
                let point = random_point(m, seed);
                assert_eq!(poly.eval(&point).unwrap(), bialternant_eval(&lambda, &point).unwrap(), "{lambda} at {seed}");
            }
        }
    }
}

#[test]
fn green_parafermi_examples() {
    assert_eq!(green_parafermi_sum(1, 2).unwrap().to_string(), "1 + x1 + x2 + x1*x2");
    assert_eq!(green_parafermi_sum(1, 1).unwrap().to_string(), "1 + x1");
    assert_eq!(partitions_in_box(2, 2, 4).len(), 6);
    assert_eq!(green_parafermi_det(1, &[q(1, 2)]).unwrap(), q(3, 2));
}

#[test]
fn single_variable_determinant_is_a_geometric_sum() {
    for s in 1..=6u32 {
        for x in [q(1, 3), q(-2, 5), q(7, 2)] {
            let geometric: BigRational = (0..=s).map(|j| num_traits::pow(x.clone(), j as usize)).sum();
            assert_eq!(green_parafermi_det(s, std::slice::from_ref(&x)).unwrap(), geometric);
        }
    }
}

#[test]
fn determinant_agrees_with_box_sum() {
    for s in 1..=3 {
        for m in [2, 3] {
            let sum = green_parafermi_sum(s, m).unwrap();
            let mut checked = 0;
            let mut seed = 0;
            while checked < 20 {
                let point = random_point(m, 1000 + seed);
                seed += 1;
                match green_parafermi_det(s, &point) {
                    Err(Error::SingularDenominator) => continue,
                    other => assert_eq!(other.unwrap(), sum.eval(&point).unwrap(), "s={s}, M={m}"),
                }
                checked += 1;
            }
        }
    }
}

#[test]
fn box_sums_have_nonnegative_coefficients_and_unit_constant() {
    for s in 1..=4 {
        for m in 1..=4 {
            let p = green_parafermi_sum(s, m).unwrap();
            assert!(p.coeff(&vec![0; m]).is_one(), "s={s}, M={m}");
            assert!(p.terms().values().all(|c| !c.is_negative()), "s={s}, M={m}");
            assert!(p.is_symmetric());
            // At x = 1 every tableau counts once; the box sum at M = 1 is s + 1.
            if m == 1 {
                assert_eq!(p.coefficient_sum(), BigInt::from(s + 1));
            }
        }
    }
}

#[test]
fn littlewood_examples() {
    assert!(littlewood_check(2, 6, 2).unwrap().is_match());
    assert!(littlewood_check(3, 5, 3).unwrap().is_match());
    let single = littlewood_product(1, 5);
    assert_eq!(single.to_string(), "1 + x1 + x1^2 + x1^3 + x1^4 + x1^5");
    assert_eq!(parabose_sum(1, 1, 5).unwrap(), single);
    assert!(littlewood_check(3, 4, 2).is_err());
}

#[test]
fn littlewood_holds_for_all_small_sizes() {
    for m in 1..=4 {
        for d in 0..=6 {
            for s in m as u32..=m as u32 + 1 {
                assert!(littlewood_check(m, d, s).unwrap().is_match(), "M={m}, D={d}, s={s}");
            }
        }
    }
}

#[test]
fn parafermi_sums_reach_the_littlewood_product_once_rows_are_long_enough() {
    // A row of length D appears below degree D, so the box sum only covers
    // the truncated Littlewood sum when s ≥ D as well as s ≥ M.
    for m in 1..=3 {
        for d in 0..=5u32 {
            let s = d.max(m as u32).max(1);
            let truncated = green_parafermi_sum(s, m).unwrap().truncate(d);
            assert_eq!(truncated, littlewood_product(m, d), "M={m}, D={d}");
        }
    }
    let short_rows = green_parafermi_sum(2, 2).unwrap().truncate(3);
    assert_ne!(short_rows, littlewood_product(2, 3));
}

#[test]
fn parabose_and_parafermi_sums_are_conjugate() {
    // Transposing shapes swaps the row and column bounds.
    for m in 1..=3usize {
        for s in 1..=3u32 {
            let fermi: Vec<IntegerPartition> = partitions_in_box(s, m, 6);
            let bose: Vec<IntegerPartition> = partitions_in_box(m as u32, s as usize, 6);
            let mut conj: Vec<IntegerPartition> = fermi.iter().map(IntegerPartition::conjugate).collect();
            conj.sort();
            assert_eq!(conj, bose);
        }
    }
}

#[test]
fn bounds_are_enforced() {
    assert!(green_parafermi_sum(0, 2).is_err());
    assert!(green_parafermi_sum(2, 7).is_err());
    assert!(parabose_sum(2, 2, 11).is_err());
    assert!(matches!(green_parafermi_det(2, &[q(2, 1), q(1, 2)]), Err(Error::SingularDenominator)));
    assert!(green_parafermi_det(2, &[]).is_err());
}

fn shape() -> impl Strategy<Value = IntegerPartition> {
    prop::collection::vec(1u32..5, 0..4).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntegerPartition::new(parts).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn schur_polynomials_are_symmetric(lambda in shape(), m in 1usize..5) {
        let p = schur_poly(&lambda, m);
        prop_assert!(p.is_symmetric());
        if lambda.len() > m {
            prop_assert!(p.is_zero());
        }
        prop_assert!(p.terms().keys().all(|e| e.iter().sum::<u32>() == lambda.weight()));
    }

    #[test]
    fn schur_evaluation_matches_bialternant(lambda in shape(), m in 1usize..4, seed in 0u64..1000) {
        let point = random_point(m, seed);
        prop_assert_eq!(schur_poly(&lambda, m).eval(&point).unwrap(), bialternant_eval(&lambda, &point).unwrap());
    }

    #[test]
    fn conjugation_is_an_involution(lambda in shape()) {
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().weight(), lambda.weight());
        prop_assert_eq!(lambda.conjugate().len(), lambda.largest() as usize);
    }

    #[test]
    fn random_points_avoid_degenerate_values(m in 1usize..6, seed in any::<u64>()) {
        let p = random_point(m, seed);
        for (i, x) in p.iter().enumerate() {
            prop_assert!(!x.is_zero() && !x.abs().is_one());
            for y in &p[i + 1..] {
                prop_assert!(x != y && !(x * y).is_one());
            }
        }
    }
}
