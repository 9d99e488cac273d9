//! Sum-side q-series: basic hypergeometric sums and multisums whose
//! product forms appear in the catalog.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::qseries::{Sign, TruncatedSeries};

/// Adds `2·term·x^shift` into `acc`.
fn add_doubled(acc: &mut TruncatedSeries, term: &TruncatedSeries, shift: usize) {
    acc.add_shifted(&term.scale(&BigInt::from(2)), shift);
}

/// Shared driver for sums `1 + Σ_{k≥1} 2·(−x;x)_{k−1}/D_k · x^{e(k)}`, where
/// `D_k` is `(x;x)_k` times whatever `extra_den(k)` contributes.
fn single_sum(
    order: usize,
    exponent: impl Fn(usize) -> usize,
    extra_den: impl Fn(usize) -> Option<usize>,
) -> TruncatedSeries {
    let mut out = TruncatedSeries::one(order);
    // ratio = (−x;x)_{k−1} / D_k, maintained incrementally.
    let mut ratio = TruncatedSeries::one(order);
    for k in 1.. {
        let e = exponent(k);
        if e > order {
            break;
        }
        if k > 1 {
            ratio.mul_binomial(Sign::Plus, k - 1);
        }
        ratio.div_binomial(Sign::Minus, k);
        if let Some(d) = extra_den(k) {
            ratio.div_binomial(Sign::Minus, d);
        }
        add_doubled(&mut out, &ratio, e);
    }
    out
}

/// `1 + Σ_{k≥1} 2(−x;x)_{k−1} x^k / (x;x)_k`, the `a = 1` Cauchy sum.
pub fn gauss_cauchy_sum(order: usize) -> TruncatedSeries {
    single_sum(order, |k| k, |_| None)
}

/// `1 + Σ_{k≥1} 2(−x;x)_{k−1} x^(k(k+1)/2) / (x;x)_k`.
pub fn lebesgue_sum(order: usize) -> TruncatedSeries {
    single_sum(order, |k| k * (k + 1) / 2, |_| None)
}

/// `1 + Σ_{k≥1} 2(−x;x)_{k−1} x^(k²) / ((x;x)_k (x;x²)_k)`.
pub fn slater6_sum(order: usize) -> TruncatedSeries {
    single_sum(order, |k| k * k, |k| Some(2 * k - 1))
}

fn divide_pochhammer(series: &mut TruncatedSeries, d: usize) {
    for j in 1..=d {
        series.div_binomial(Sign::Minus, j);
    }
}

/// The `(s−1)`-fold sum over chains `n_{s−1} ≥ … ≥ n_1 ≥ 0` of
/// `∏_{j<n_{s−1}}(1+x^j) · x^(n_{s−1}(n_{s−1}+1)/2 + n_{s−2}² + … + n_1²)`
/// divided by `(x;x)_{n_{s−1}−n_{s−2}} ⋯ (x;x)_{n_2−n_1} (x;x)_{n_1}`.
///
/// The `j = 0` numerator factor is `1 + x⁰ = 2`.
pub fn andrews_multisum(s: usize, order: usize) -> TruncatedSeries {
    assert!(s >= 2, "andrews_multisum needs s ≥ 2");
    let mut out = TruncatedSeries::zero(order);
    let mut numerator = TruncatedSeries::one(order);
    // Chains are indexed by their top entry n_{s−1}.
    for top in 0usize.. {
        let e = top * (top + 1) / 2;
        if e > order {
            break;
        }
        if top > 0 {
            numerator.mul_binomial(Sign::Plus, top - 1);
        }
        let work = numerator.truncate(order - e);
        chain_rec(s - 2, top, e, work, &mut out);
    }
    out
}

/// Chooses the remaining `levels` chain entries below `prev`; `acc` is the
/// partial term at order `N − e`.
fn chain_rec(levels: usize, prev: usize, e: usize, acc: TruncatedSeries, out: &mut TruncatedSeries) {
    let order = out.order();
    if levels == 0 {
        let mut acc = acc;
        divide_pochhammer(&mut acc, prev);
        out.add_shifted(&acc, e);
        return;
    }
    for next in (0..=prev).rev() {
        let e2 = e + next * next;
        if e2 > order {
            continue;
        }
        let mut child = acc.truncate(order - e2);
        divide_pochhammer(&mut child, prev - next);
        chain_rec(levels - 1, next, e2, child, out);
    }
}

/// `1 + Σ 2^i x^n / ∏_j (1 − x^(n_j))` over strict chains
/// `n_1 > … > n_i > 0` with `n_1 + … + n_i = n`.
pub fn overpartition_double_sum(order: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(order);
    let start = TruncatedSeries::one(order);
    strict_chain_rec(order, 0, &start, &mut out);
    out
}

/// Extends a strict chain whose parts all exceed `below`.
fn strict_chain_rec(order: usize, below: usize, acc: &TruncatedSeries, out: &mut TruncatedSeries) {
    let used = order - acc.order();
    out.add_shifted(acc, used);
    for part in below + 1..=acc.order() {
        let mut child = acc.truncate(acc.order() - part).scale(&BigInt::from(2));
        child.div_binomial(Sign::Minus, part);
        strict_chain_rec(order, part, &child, out);
    }
}

/// How the unquantified `m` of the 2-modular sum is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum TwoModularReading {
    /// Sum over every admissible `m` for each `n`.
    #[default]
    AllM,
    /// Only the smallest admissible `m` that has solutions.
    MinM,
    /// Only the largest admissible `m` that has solutions.
    MaxM,
}

/// Sets of `m` distinct even parts, each at most `max_part`, summing to `total`.
fn distinct_even_parts(total: usize, m: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if m == 0 {
        if total == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    let mut p = max_part.min(total);
    if p % 2 == 1 {
        p -= 1;
    }
    while p >= 2 {
        prefix.push(p);
        distinct_even_parts(total - p, m - 1, p - 2, prefix, out);
        prefix.pop();
        p -= 2;
    }
}

/// `1 + Σ_{n≥1, n≠2} Σ_m Σ_{n_1,…,n_m} x^n (1+x)^m / ∏(1 − x^(n_j))`, where
/// `n + m` is even, `n > m` unless `n = m = 1`, and the `n_j` are distinct
/// even parts summing to `n + m`.
pub fn two_modular_sum(order: usize, reading: TwoModularReading) -> TruncatedSeries {
    let mut out = TruncatedSeries::one(order);
    for n in 1..=order {
        if n == 2 {
            continue;
        }
        let mut groups = Vec::new();
        for m in 1..=n {
            if (n + m) % 2 == 1 || !(n > m || (n == 1 && m == 1)) {
                continue;
            }
            let mut sols = Vec::new();
            distinct_even_parts(n + m, m, n + m, &mut Vec::new(), &mut sols);
            if !sols.is_empty() {
                groups.push((m, sols));
            }
        }
        let chosen: Vec<_> = match reading {
            TwoModularReading::AllM => groups,
            TwoModularReading::MinM => groups.into_iter().take(1).collect(),
            TwoModularReading::MaxM => groups.into_iter().last().into_iter().collect(),
        };
        for (m, sols) in chosen {
            for sol in sols {
                let mut term = TruncatedSeries::one(order - n);
                for _ in 0..m {
                    term.mul_binomial(Sign::Plus, 1);
                }
                for e in sol {
                    term.div_binomial(Sign::Minus, e);
                }
                out.add_shifted(&term, n);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_orders() {
        for f in [gauss_cauchy_sum, lebesgue_sum, slater6_sum, overpartition_double_sum] {
            assert!(f(0).is_one());
        }
        assert!(two_modular_sum(0, TwoModularReading::AllM).is_one());
        for s in 2..6 {
            assert!(andrews_multisum(s, 0).is_one());
        }
    }

    #[test]
    fn published_prefixes() {
        assert_eq!(gauss_cauchy_sum(9).to_csv(), "1,2,4,8,14,24,40,64,100,154");
        assert_eq!(lebesgue_sum(5).to_csv(), "1,2,2,4,6,8");
        assert_eq!(slater6_sum(14).to_csv(), "1,2,4,6,10,16,24,36,52,74,104,144,198,268,360");
        assert_eq!(overpartition_double_sum(4).coeff(4), &BigInt::from(14));
    }

    #[test]
    fn andrews_two_is_lebesgue() {
        assert_eq!(andrews_multisum(2, 40), lebesgue_sum(40));
    }

    #[test]
    fn distinct_even_enumeration() {
        let mut out = Vec::new();
        distinct_even_parts(12, 2, 12, &mut Vec::new(), &mut out);
        assert_eq!(out, vec![vec![10, 2], vec![8, 4]]);
    }
}
