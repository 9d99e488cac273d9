use num_bigint::BigInt;
use partition_verify::partitions::{
    distinct_profile, overpartition_count, polygonal, registry, ENUMERATION_LIMIT,
};
use partition_verify::{
    count_restricted, enumerate_restricted, expand_product, gen_series, named_constraint, parse_product,
    Error, Multiplicity, PartFilter, PartitionConstraint,
};
use proptest::prelude::*;

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Every registered constraint, at its default parameter and at 2..=5 when
/// it takes one.
fn all_registered() -> Vec<(String, PartitionConstraint)> {
    let mut out = Vec::new();
    for nc in registry() {
        if nc.takes_param() {
            for p in 2..=5 {
                out.push((format!("{}:{p}", nc.name), nc.build(Some(p)).unwrap()));
            }
        } else {
            out.push((nc.name.to_string(), nc.build(None).unwrap()));
        }
    }
    out
}

#[test]
fn counter_enumerator_and_series_agree_for_every_registered_constraint() {
    const N: u64 = 30;
    for (name, c) in all_registered() {
        let series = gen_series(&c, N as usize);
        for n in 0..=N {
            let count = count_restricted(n, &c);
            let listed = enumerate_restricted(n, &c).unwrap();
            assert_eq!(count, BigInt::from(listed.len()), "{name}: counter vs enumeration at n={n}");
            assert_eq!(&count, series.coeff(n as usize), "{name}: counter vs series at n={n}");
            for p in &listed {
                assert_eq!(p.iter().sum::<u64>(), n);
                assert!(c.accepts(p), "{name}: {p:?}");
            }
        }
    }
}

#[test]
fn enumeration_is_decreasing_lexicographic() {
    for (name, c) in all_registered().into_iter().take(12) {
        let listed = enumerate_restricted(12, &c).unwrap();
        assert!(listed.windows(2).all(|w| w[0] > w[1]), "{name}");
        assert!(listed.iter().all(|p| p.windows(2).all(|w| w[0] >= w[1])), "{name}");
    }
}

#[test]
fn polygonal_examples() {
    assert_eq!(polygonal(3, 4).unwrap(), 9);
    assert_eq!(polygonal(2, 5).unwrap(), 5);
    for g in 3..20 {
        assert_eq!(polygonal(1, g).unwrap(), 1);
    }
    assert!(polygonal(0, 4).is_err());
    assert!(polygonal(2, 2).is_err());
}

#[test]
fn counting_examples() {
    let prime_to_3 = PartitionConstraint::parts(PartFilter::NotDivisibleBy(3));
    assert_eq!(count_restricted(7, &prime_to_3), big(9));
    assert_eq!(count_restricted(6, &named_constraint("odd-even-mult").unwrap()), big(8));
    for (_, c) in all_registered() {
        assert_eq!(count_restricted(0, &c), big(1));
    }
    let residues = PartitionConstraint::parts(PartFilter::Residues { modulus: 6, residues: vec![0, 1, 3, 5] });
    assert_eq!(count_restricted(11, &residues), big(15));
}

#[test]
fn enumeration_examples() {
    let all = enumerate_restricted(3, &PartitionConstraint::unrestricted()).unwrap();
    assert_eq!(all, vec![vec![3], vec![2, 1], vec![1, 1, 1]]);

    // Nine is prime to five, so [9] is among the six partitions.
    let fifth = enumerate_restricted(9, &named_constraint("distinct-not-div:5").unwrap()).unwrap();
    assert_eq!(fifth, vec![vec![9], vec![8, 1], vec![7, 2], vec![6, 3], vec![6, 2, 1], vec![4, 3, 2]]);

    let tenth = enumerate_restricted(10, &named_constraint("distinct-not-div:3").unwrap()).unwrap();
    assert_eq!(tenth, vec![vec![10], vec![8, 2], vec![7, 2, 1], vec![5, 4, 1]]);

    assert!(matches!(
        enumerate_restricted(ENUMERATION_LIMIT + 1, &PartitionConstraint::unrestricted()),
        Err(Error::EnumerationGuard { .. })
    ));
}

#[test]
fn generating_series_examples() {
    let p = gen_series(&PartitionConstraint::unrestricted(), 10);
    let expected: Vec<BigInt> = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42].iter().map(|&v| big(v)).collect();
    assert_eq!(p.coeffs(), expected.as_slice());

    let below_value = PartitionConstraint::new(PartFilter::All, Multiplicity::AtMostScaled { num: 1, den: 1 });
    let squares = partition_verify::identities::find("thm_squares").unwrap().builders[0].build(30);
    assert_eq!(gen_series(&below_value, 30), squares);

    let none = PartitionConstraint::parts(PartFilter::Nothing);
    assert!(gen_series(&none, 5).is_one());
}

#[test]
fn overpartition_examples() {
    assert_eq!(overpartition_count(3, None), big(8));
    assert_eq!(overpartition_count(4, None), big(14));
    assert_eq!(overpartition_count(4, Some(2)), big(6));
    assert_eq!(overpartition_count(3, Some(2)), big(4));
    assert_eq!(distinct_profile(4, 1, None).unwrap(), big(3));
    assert_eq!(distinct_profile(4, 2, None).unwrap(), big(2));
    assert_eq!(distinct_profile(4, 1, Some(2)).unwrap(), big(1));
    assert_eq!(distinct_profile(4, 2, Some(2)).unwrap(), big(1));
}

#[test]
fn overpartitions_match_their_product() {
    let product = expand_product(&parse_product("(1+x^k)(1-x^k)^-1").unwrap(), 60);
    for n in 0..=60u64 {
        assert_eq!(&overpartition_count(n, None), product.coeff(n as usize), "n={n}");
    }
}

#[test]
fn overpartitions_weight_distinct_profiles() {
    for s in [None, Some(2), Some(3), Some(4), Some(5)] {
        for n in 1..=30u64 {
            let weighted: BigInt = (1..=n)
                .map(|i| distinct_profile(n, i, s).unwrap() * BigInt::from(2u8).pow(i as u32))
                .sum();
            assert_eq!(overpartition_count(n, s), weighted, "n={n}, s={s:?}");
        }
    }
}

/// Literal overlining: a set of distinct overlined parts plus an ordinary
/// partition of the rest.
#[test]
fn overpartitions_match_literal_overlining() {
    let distinct = PartitionConstraint::distinct();
    let plain = PartitionConstraint::unrestricted();
    for n in 0..=12u64 {
        let literal: BigInt = (0..=n)
            .map(|k| {
                BigInt::from(enumerate_restricted(k, &distinct).unwrap().len())
                    * BigInt::from(enumerate_restricted(n - k, &plain).unwrap().len())
            })
            .sum();
        assert_eq!(overpartition_count(n, None), literal, "n={n}");
    }
}

#[test]
fn euler_distinct_equals_odd_through_200() {
    let distinct = gen_series(&PartitionConstraint::distinct(), 200);
    let odd = gen_series(&PartitionConstraint::parts(PartFilter::Odd), 200);
    assert_eq!(distinct, odd);
}

#[test]
fn unknown_constraints_are_rejected() {
    assert!(matches!(named_constraint("no-such"), Err(Error::UnknownConstraint(_))));
    assert!(named_constraint("not-div:1").is_err());
    assert!(named_constraint("distinct:3").is_err());
}

proptest! {
    #[test]
    fn unrestricted_counts_match_the_euler_product(n in 0u64..150) {
        let product = expand_product(&parse_product("(1-x^k)^-1").unwrap(), n as usize);
        prop_assert_eq!(&count_restricted(n, &PartitionConstraint::unrestricted()), product.coeff(n as usize));
    }

    #[test]
    fn not_divisible_equals_bounded_multiplicity(s in 2u64..8, n in 0u64..120) {
        let by_parts = PartitionConstraint::parts(PartFilter::NotDivisibleBy(s));
        let by_mult = PartitionConstraint::new(PartFilter::All, Multiplicity::AtMost(s - 1));
        prop_assert_eq!(count_restricted(n, &by_parts), count_restricted(n, &by_mult));
    }

    #[test]
    fn residue_filters_enumerate_consistently(modulus in 2u64..7, mask in 1u32..64, n in 0u64..25) {
        let residues: Vec<u64> = (0..modulus).filter(|r| mask & (1 << r) != 0).collect();
        prop_assume!(!residues.is_empty());
        let c = PartitionConstraint::parts(PartFilter::Residues { modulus, residues });
        let listed = enumerate_restricted(n, &c).unwrap();
        prop_assert_eq!(count_restricted(n, &c), BigInt::from(listed.len()));
    }
}
