//! Restricted integer partitions: counting, enumeration and generating series.
//!
//! A [`PartitionConstraint`] pairs a filter on admissible part values with a
//! rule giving the allowed multiplicities of each part. The same constraint
//! drives three independent routes: a scalar dynamic-programming counter
//! ([`count_restricted`]), explicit enumeration ([`enumerate_restricted`]) and
//! a product of per-part factor series ([`gen_series`]).

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qseries::TruncatedSeries;

/// Largest `n` accepted by [`enumerate_restricted`].
pub const ENUMERATION_LIMIT: u64 = 40;

/// `½k[(g−2)k − (g−4)]`, the k-th g-gonal number.
pub fn polygonal(k: u64, g: u64) -> Result<u64> {
    if k < 1 || g < 3 {
        return Err(Error::InvalidArgument(format!("polygonal({k}, {g}) needs k ≥ 1, g ≥ 3")));
    }
    let twice = k as i128 * ((g as i128 - 2) * k as i128 - (g as i128 - 4));
    Ok((twice / 2) as u64)
}

/// Which part values are admitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PartFilter {
    All,
    Odd,
    Even,
    /// Parts whose residue modulo `modulus` lies in `residues`.
    Residues { modulus: u64, residues: Vec<u64> },
    NotDivisibleBy(u64),
    DivisibleBy(u64),
    /// Excludes g-gonal numbers `polygonal(j, sides)`; with `odd_index_only`
    /// only the odd-subscripted ones `j = 1, 3, 5, …` are excluded.
    ExcludePolygonal { sides: u64, odd_index_only: bool },
    /// Exactly one admitted part value.
    Only(u64),
    /// Admits no part at all.
    Nothing,
}

impl PartFilter {
    /// Admitted part values in `1..=max`.
    pub fn admitted(&self, max: u64) -> Vec<u64> {
        let excluded: BTreeSet<u64> = match self {
            PartFilter::ExcludePolygonal { sides, odd_index_only } => {
                let mut set = BTreeSet::new();
                let stride = if *odd_index_only { 2 } else { 1 };
                let mut j = 1;
                loop {
                    let p = polygonal(j, *sides).expect("valid polygonal arguments");
                    if p > max {
                        break;
                    }
                    set.insert(p);
                    j += stride;
                }
                set
            }
            _ => BTreeSet::new(),
        };
        (1..=max)
            .filter(|&k| match self {
                PartFilter::All => true,
                PartFilter::Odd => k % 2 == 1,
                PartFilter::Even => k % 2 == 0,
                PartFilter::Residues { modulus, residues } => residues.contains(&(k % modulus)),
                PartFilter::NotDivisibleBy(s) => k % s != 0,
                PartFilter::DivisibleBy(s) => k % s == 0,
                PartFilter::ExcludePolygonal { .. } => !excluded.contains(&k),
                PartFilter::Only(v) => k == *v,
                PartFilter::Nothing => false,
            })
            .collect()
    }
}

/// Allowed multiplicities of a part, possibly depending on its value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Multiplicity {
    /// `{0, 1, 2, …}`
    Any,
    /// `{0, 1}`
    Distinct,
    /// `{0, …, t}`
    AtMost(u64),
    /// `{0, …, ⌊num·(k−1)/den⌋}` for part value `k`.
    AtMostScaled { num: u64, den: u64 },
    /// `{0, 2, 4, …}`
    Even,
    /// `{0, 2, 4, …, 2t}`
    EvenUpTo(u64),
    /// `{0, q, 2q, …}`
    MultipleOf(u64),
    /// `{0} ∪ {s, s+1, …}`
    ZeroOrAtLeast(u64),
    ByParity { odd: Box<Multiplicity>, even: Box<Multiplicity> },
    ByDivisibility { modulus: u64, divisible: Box<Multiplicity>, other: Box<Multiplicity> },
}

impl Multiplicity {
    /// The rule that applies to part value `k`, with value-dependent bounds
    /// resolved to constants.
    fn resolve(&self, k: u64) -> Multiplicity {
        match self {
            Multiplicity::ByParity { odd, even } => {
                if k % 2 == 1 { odd.resolve(k) } else { even.resolve(k) }
            }
            Multiplicity::ByDivisibility { modulus, divisible, other } => {
                if k.is_multiple_of(*modulus) { divisible.resolve(k) } else { other.resolve(k) }
            }
            Multiplicity::AtMostScaled { num, den } => Multiplicity::AtMost(num * (k - 1) / den),
            m => m.clone(),
        }
    }

    pub fn allows(&self, k: u64, m: u64) -> bool {
        match self.resolve(k) {
            Multiplicity::Any => true,
            Multiplicity::Distinct => m <= 1,
            Multiplicity::AtMost(t) => m <= t,
            Multiplicity::Even => m.is_multiple_of(2),
            Multiplicity::EvenUpTo(t) => m.is_multiple_of(2) && m <= 2 * t,
            Multiplicity::MultipleOf(q) => m.is_multiple_of(q),
            Multiplicity::ZeroOrAtLeast(s) => m == 0 || m >= s,
            _ => unreachable!("resolved rule"),
        }
    }

    /// Allowed multiplicities `m ≤ max_m`, ascending; always starts with 0.
    pub fn allowed(&self, k: u64, max_m: u64) -> Vec<u64> {
        (0..=max_m).filter(|&m| self.allows(k, m)).collect()
    }
}

/// A declarative partition restriction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionConstraint {
    pub filter: PartFilter,
    pub multiplicity: Multiplicity,
}

impl PartitionConstraint {
    pub fn new(filter: PartFilter, multiplicity: Multiplicity) -> Self {
        PartitionConstraint { filter, multiplicity }
    }

    pub fn unrestricted() -> Self {
        Self::new(PartFilter::All, Multiplicity::Any)
    }

    pub fn distinct() -> Self {
        Self::new(PartFilter::All, Multiplicity::Distinct)
    }

    pub fn parts(filter: PartFilter) -> Self {
        Self::new(filter, Multiplicity::Any)
    }

    /// Whether a weakly decreasing list of parts satisfies the constraint.
    pub fn accepts(&self, parts: &[u64]) -> bool {
        let max = parts.iter().copied().max().unwrap_or(0);
        let admitted: BTreeSet<u64> = self.filter.admitted(max).into_iter().collect();
        let mut i = 0;
        while i < parts.len() {
            let k = parts[i];
            let m = parts[i..].iter().take_while(|&&p| p == k).count() as u64;
            if !admitted.contains(&k) || !self.multiplicity.allows(k, m) {
                return false;
            }
            i += m as usize;
        }
        true
    }
}

/// Outcome of comparing two constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Mismatch,
}

/// Smallest index at which two constructions disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FirstDiff {
    pub index: usize,
    #[serde(with = "bigint_string")]
    pub left: BigInt,
    #[serde(with = "bigint_string")]
    pub right: BigInt,
    /// Which pair of builders (or which monomial) disagreed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Match, or mismatch with the first differing index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_diff: Option<FirstDiff>,
}

impl Verdict {
    pub fn matched() -> Self {
        Verdict { status: Status::Match, first_diff: None }
    }

    pub fn mismatch(diff: FirstDiff) -> Self {
        Verdict { status: Status::Mismatch, first_diff: Some(diff) }
    }

    pub fn is_match(&self) -> bool {
        self.status == Status::Match
    }

    /// Compares two series coefficient-wise.
    pub fn compare(left: &TruncatedSeries, right: &TruncatedSeries) -> Self {
        match left.first_difference(right) {
            None => Verdict::matched(),
            Some((index, l, r)) => {
                Verdict::mismatch(FirstDiff { index, left: l, right: r, detail: None })
            }
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_diff {
            None => write!(f, "match"),
            Some(d) => {
                write!(f, "mismatch at n={}: {} vs {}", d.index, d.left, d.right)?;
                if let Some(detail) = &d.detail {
                    write!(f, " ({detail})")?;
                }
                Ok(())
            }
        }
    }
}

pub(crate) mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Applies one part's factor `Σ_{m allowed} x^(k·m)` to a DP table.
fn dp_apply_part(table: &mut [BigInt], k: usize, rule: Multiplicity) {
    let n = table.len() - 1;
    match rule {
        Multiplicity::Any => {
            for i in k..=n {
                let (lo, hi) = table.split_at_mut(i);
                hi[0] += &lo[i - k];
            }
        }
        Multiplicity::Distinct => {
            for i in (k..=n).rev() {
                let (lo, hi) = table.split_at_mut(i);
                hi[0] += &lo[i - k];
            }
        }
        Multiplicity::MultipleOf(q) => {
            let step = k * q as usize;
            for i in step..=n {
                let (lo, hi) = table.split_at_mut(i);
                hi[0] += &lo[i - step];
            }
        }
        Multiplicity::AtMost(t) => {
            let old = table.to_vec();
            let cut = k * (t as usize + 1);
            for i in k..=n {
                let (lo, hi) = table.split_at_mut(i);
                hi[0] += &lo[i - k];
                if i >= cut {
                    hi[0] -= &old[i - cut];
                }
            }
        }
        other => {
            let old = table.to_vec();
            let ms: Vec<usize> = other
                .allowed(k as u64, (n / k) as u64)
                .into_iter()
                .skip(1)
                .map(|m| m as usize)
                .collect();
            for i in k..=n {
                for &m in &ms {
                    if m * k > i {
                        break;
                    }
                    table[i] += &old[i - m * k];
                }
            }
        }
    }
}

/// Number of partitions of `n` satisfying `c`.
pub fn count_restricted(n: u64, c: &PartitionConstraint) -> BigInt {
    count_table(n, c).swap_remove(n as usize)
}

/// Counts for every `0 ≤ m ≤ n` in one DP pass.
pub fn count_table(n: u64, c: &PartitionConstraint) -> Vec<BigInt> {
    let mut table = vec![BigInt::zero(); n as usize + 1];
    table[0] = BigInt::one();
    for k in c.filter.admitted(n) {
        dp_apply_part(&mut table, k as usize, c.multiplicity.resolve(k));
    }
    table
}

/// All partitions of `n` satisfying `c`, each weakly decreasing, listed in
/// decreasing lexicographic order.
pub fn enumerate_restricted(n: u64, c: &PartitionConstraint) -> Result<Vec<Vec<u64>>> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::EnumerationGuard { n, limit: ENUMERATION_LIMIT });
    }
    let admitted = c.filter.admitted(n);
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    enumerate_rec(n, admitted.len(), &admitted, c, &mut prefix, &mut out);
    Ok(out)
}

fn enumerate_rec(
    rem: u64,
    upto: usize,
    admitted: &[u64],
    c: &PartitionConstraint,
    prefix: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if rem == 0 {
        out.push(prefix.clone());
        return;
    }
    for idx in (0..upto).rev() {
        let v = admitted[idx];
        if v > rem {
            continue;
        }
        for m in c.multiplicity.allowed(v, rem / v).into_iter().rev() {
            if m == 0 {
                continue;
            }
            let len = prefix.len();
            prefix.extend(std::iter::repeat_n(v, m as usize));
            enumerate_rec(rem - m * v, idx, admitted, c, prefix, out);
            prefix.truncate(len);
        }
    }
}

fn part_factor(order: usize, k: u64, c: &PartitionConstraint, graded: bool) -> TruncatedSeries {
    let mut coeffs = vec![BigInt::zero(); order + 1];
    for m in c.multiplicity.allowed(k, order as u64 / k) {
        let sign = if graded && m % 2 == 1 { -1 } else { 1 };
        coeffs[(k * m) as usize] = BigInt::from(sign);
    }
    TruncatedSeries::from_coeffs(coeffs, order).expect("sized to order")
}

/// `∏_{admitted k ≤ N} Σ_{m ∈ mult(k)} x^(k·m)`, built as a product of
/// explicit per-part factor series.
pub fn gen_series(c: &PartitionConstraint, order: usize) -> TruncatedSeries {
    product_of_parts(c, order, false)
}

/// The same product with every part weighted by `−1`, i.e. the per-factor
/// substitution `x^k → −x^k` (grading by the number of parts).
pub fn graded_gen_series(c: &PartitionConstraint, order: usize) -> TruncatedSeries {
    product_of_parts(c, order, true)
}

fn product_of_parts(c: &PartitionConstraint, order: usize, graded: bool) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(order);
    for k in c.filter.admitted(order as u64) {
        let f = part_factor(order, k, c, graded);
        acc = acc.mul(&f).expect("equal orders");
    }
    acc
}

fn overpartition_filter(exclude_div: Option<u64>) -> PartFilter {
    match exclude_div {
        Some(s) => PartFilter::NotDivisibleBy(s),
        None => PartFilter::All,
    }
}

/// Overpartitions of every `m ≤ n`: each admitted partition weighted by
/// `2^(number of distinct part sizes)`.
pub fn overpartition_table(n: u64, exclude_div: Option<u64>) -> Vec<BigInt> {
    let n_us = n as usize;
    let mut table = vec![BigInt::zero(); n_us + 1];
    table[0] = BigInt::one();
    for k in overpartition_filter(exclude_div).admitted(n) {
        let k = k as usize;
        // tail[i] = Σ_{m≥1} old[i − m·k]
        let old = table.clone();
        let mut tail = vec![BigInt::zero(); n_us + 1];
        for i in k..=n_us {
            tail[i] = &old[i - k] + &tail[i - k];
            table[i] += &tail[i] * 2u32;
        }
    }
    table
}

pub fn overpartition_count(n: u64, exclude_div: Option<u64>) -> BigInt {
    overpartition_table(n, exclude_div).swap_remove(n as usize)
}

/// `profile[i]` = number of admitted partitions of `n` with exactly `i`
/// distinct part sizes.
pub fn distinct_profile_table(n: u64, exclude_div: Option<u64>) -> Vec<BigInt> {
    let n_us = n as usize;
    // dp[total][i]
    let mut dp = vec![vec![BigInt::zero(); 1]; n_us + 1];
    dp[0][0] = BigInt::one();
    for k in overpartition_filter(exclude_div).admitted(n) {
        let k = k as usize;
        let old = dp.clone();
        for total in k..=n_us {
            let mut m = 1;
            while m * k <= total {
                let src = &old[total - m * k];
                if dp[total].len() < src.len() + 1 {
                    dp[total].resize(src.len() + 1, BigInt::zero());
                }
                for (i, v) in src.iter().enumerate() {
                    if !v.is_zero() {
                        dp[total][i + 1] += v;
                    }
                }
                m += 1;
            }
        }
    }
    dp.swap_remove(n_us)
}

pub fn distinct_profile(n: u64, i: u64, exclude_div: Option<u64>) -> Result<BigInt> {
    if i == 0 {
        return Err(Error::InvalidArgument("distinct-part count i must be ≥ 1".into()));
    }
    Ok(distinct_profile_table(n, exclude_div).get(i as usize).cloned().unwrap_or_default())
}

/// A constraint registered under a stable name, shared by the identity
/// catalog and the command line.
pub struct NamedConstraint {
    pub name: &'static str,
    /// Parameter used when none is given (and for catalog-wide checks).
    pub default_param: Option<u64>,
    pub description: &'static str,
    build: fn(u64) -> PartitionConstraint,
}

impl NamedConstraint {
    pub fn build(&self, param: Option<u64>) -> Result<PartitionConstraint> {
        match (param.or(self.default_param), self.default_param) {
            (Some(p), Some(_)) => {
                if p < 2 {
                    return Err(Error::InvalidArgument(format!(
                        "constraint `{}` needs a parameter ≥ 2",
                        self.name
                    )));
                }
                Ok((self.build)(p))
            }
            (_, None) if param.is_some() => Err(Error::InvalidArgument(format!(
                "constraint `{}` takes no parameter",
                self.name
            ))),
            _ => Ok((self.build)(0)),
        }
    }

    pub fn takes_param(&self) -> bool {
        self.default_param.is_some()
    }
}

fn boxed(m: Multiplicity) -> Box<Multiplicity> {
    Box::new(m)
}

fn odd_residues_except(s: u64) -> PartFilter {
    PartFilter::Residues { modulus: 2 * s, residues: (1..2 * s).step_by(2).filter(|&r| r != s).collect() }
}

fn even_sm_residues(s: u64) -> PartFilter {
    let mut residues = vec![0];
    residues.extend((1..s).step_by(2));
    PartFilter::Residues { modulus: s, residues }
}

static REGISTRY: &[NamedConstraint] = &[
    NamedConstraint {
        name: "unrestricted",
        default_param: None,
        description: "all partitions",
        build: |_| PartitionConstraint::unrestricted(),
    },
    NamedConstraint {
        name: "distinct",
        default_param: None,
        description: "distinct parts",
        build: |_| PartitionConstraint::distinct(),
    },
    NamedConstraint {
        name: "odd",
        default_param: None,
        description: "odd parts only",
        build: |_| PartitionConstraint::parts(PartFilter::Odd),
    },
    NamedConstraint {
        name: "prime-to-3",
        default_param: None,
        description: "parts not divisible by 3",
        build: |_| PartitionConstraint::parts(PartFilter::NotDivisibleBy(3)),
    },
    NamedConstraint {
        name: "not-div",
        default_param: Some(3),
        description: "parts not divisible by s",
        build: |s| PartitionConstraint::parts(PartFilter::NotDivisibleBy(s)),
    },
    NamedConstraint {
        name: "mult-lt",
        default_param: Some(3),
        description: "each part at most s-1 times",
        build: |s| PartitionConstraint::new(PartFilter::All, Multiplicity::AtMost(s - 1)),
    },
    NamedConstraint {
        name: "distinct-not-div",
        default_param: Some(3),
        description: "distinct parts not divisible by s",
        build: |s| PartitionConstraint::new(PartFilter::NotDivisibleBy(s), Multiplicity::Distinct),
    },
    NamedConstraint {
        name: "mod6-1-5",
        default_param: None,
        description: "parts congruent to 1 or 5 mod 6",
        build: |_| PartitionConstraint::parts(PartFilter::Residues { modulus: 6, residues: vec![1, 5] }),
    },
    NamedConstraint {
        name: "odd-not-s-mod-2s",
        default_param: Some(5),
        description: "parts congruent to 1,3,…,2s-1 mod 2s except s",
        build: |s| PartitionConstraint::parts(odd_residues_except(s)),
    },
    NamedConstraint {
        name: "mod-s-0-odd",
        default_param: Some(6),
        description: "parts congruent to 0,1,3,5,…,s-1 mod s (s even)",
        build: |s| PartitionConstraint::parts(even_sm_residues(s)),
    },
    NamedConstraint {
        name: "not-2-mod-4",
        default_param: None,
        description: "parts not congruent to 2 mod 4",
        build: |_| {
            PartitionConstraint::parts(PartFilter::Residues { modulus: 4, residues: vec![0, 1, 3] })
        },
    },
    NamedConstraint {
        name: "even-mult-multiple",
        default_param: Some(2),
        description: "even parts with multiplicity a multiple of q, odd parts free",
        build: |q| {
            PartitionConstraint::new(
                PartFilter::All,
                Multiplicity::ByParity { odd: boxed(Multiplicity::Any), even: boxed(Multiplicity::MultipleOf(q)) },
            )
        },
    },
    NamedConstraint {
        name: "odd-distinct",
        default_param: None,
        description: "odd parts distinct, even parts free",
        build: |_| {
            PartitionConstraint::new(
                PartFilter::All,
                Multiplicity::ByParity { odd: boxed(Multiplicity::Distinct), even: boxed(Multiplicity::Any) },
            )
        },
    },
    NamedConstraint {
        name: "odd-even-mult",
        default_param: None,
        description: "odd parts with even multiplicity, even parts free",
        build: |_| {
            PartitionConstraint::new(
                PartFilter::All,
                Multiplicity::ByParity { odd: boxed(Multiplicity::Even), even: boxed(Multiplicity::Any) },
            )
        },
    },
    NamedConstraint {
        name: "odd-even-mult-not-div",
        default_param: Some(3),
        description: "parts prime to s, odd parts with even multiplicity",
        build: |s| {
            PartitionConstraint::new(
                PartFilter::NotDivisibleBy(s),
                Multiplicity::ByParity { odd: boxed(Multiplicity::Even), even: boxed(Multiplicity::Any) },
            )
        },
    },
    NamedConstraint {
        name: "odd-2-to-2s-even-lt-s",
        default_param: Some(3),
        description: "odd parts with multiplicity in {0,2,…,2(s-1)}, even parts at most s-1 times",
        build: |s| {
            PartitionConstraint::new(
                PartFilter::All,
                Multiplicity::ByParity {
                    odd: boxed(Multiplicity::EvenUpTo(s - 1)),
                    even: boxed(Multiplicity::AtMost(s - 1)),
                },
            )
        },
    },
    NamedConstraint {
        name: "odd-twice-even-once",
        default_param: None,
        description: "odd parts with multiplicity 0 or 2, even parts distinct",
        build: |_| {
            PartitionConstraint::new(
                PartFilter::All,
                Multiplicity::ByParity { odd: boxed(Multiplicity::EvenUpTo(1)), even: boxed(Multiplicity::Distinct) },
            )
        },
    },
    NamedConstraint {
        name: "mult-below-value",
        default_param: None,
        description: "each part k at most k-1 times",
        build: |_| PartitionConstraint::new(PartFilter::All, Multiplicity::AtMostScaled { num: 1, den: 1 }),
    },
    NamedConstraint {
        name: "no-squares",
        default_param: None,
        description: "no square parts",
        build: |_| {
            PartitionConstraint::parts(PartFilter::ExcludePolygonal { sides: 4, odd_index_only: false })
        },
    },
    NamedConstraint {
        name: "mult-2r-gon",
        default_param: Some(3),
        description: "each part k at most (r-1)(k-1) times",
        build: |r| PartitionConstraint::new(PartFilter::All, Multiplicity::AtMostScaled { num: r - 1, den: 1 }),
    },
    NamedConstraint {
        name: "no-2r-gons",
        default_param: Some(3),
        description: "no 2r-gonal parts",
        build: |r| {
            PartitionConstraint::parts(PartFilter::ExcludePolygonal { sides: 2 * r, odd_index_only: false })
        },
    },
    NamedConstraint {
        name: "mult-2r1-gon",
        default_param: Some(3),
        description: "odd part 2k-1 at most (2r-1)(k-1) times, even parts free",
        build: |r| {
            PartitionConstraint::new(
                PartFilter::All,
                Multiplicity::ByParity {
                    odd: boxed(Multiplicity::AtMostScaled { num: 2 * r - 1, den: 2 }),
                    even: boxed(Multiplicity::Any),
                },
            )
        },
    },
    NamedConstraint {
        name: "no-odd-2r1-gons",
        default_param: Some(3),
        description: "no odd-subscripted (2r+1)-gonal parts",
        build: |r| {
            PartitionConstraint::parts(PartFilter::ExcludePolygonal { sides: 2 * r + 1, odd_index_only: true })
        },
    },
    NamedConstraint {
        name: "fermion-trunc",
        default_param: Some(2),
        description: "parts divisible by q free, other parts distinct",
        build: |q| {
            PartitionConstraint::new(
                PartFilter::All,
                Multiplicity::ByDivisibility {
                    modulus: q,
                    divisible: boxed(Multiplicity::Any),
                    other: boxed(Multiplicity::Distinct),
                },
            )
        },
    },
    NamedConstraint {
        name: "mult-multiple",
        default_param: Some(2),
        description: "every multiplicity a multiple of s",
        build: |s| PartitionConstraint::new(PartFilter::All, Multiplicity::MultipleOf(s)),
    },
    NamedConstraint {
        name: "div-by",
        default_param: Some(2),
        description: "parts divisible by q",
        build: |q| PartitionConstraint::parts(PartFilter::DivisibleBy(q)),
    },
    NamedConstraint {
        name: "parabose",
        default_param: Some(3),
        description: "multiplicities 0 or at least s",
        build: |s| PartitionConstraint::new(PartFilter::All, Multiplicity::ZeroOrAtLeast(s)),
    },
];

/// Every named constraint.
pub fn registry() -> &'static [NamedConstraint] {
    REGISTRY
}

/// Looks up `name` or `name:param`.
pub fn named_constraint(spec: &str) -> Result<PartitionConstraint> {
    let (name, param) = match spec.split_once(':') {
        Some((n, p)) => {
            let p: u64 = p.parse().map_err(|_| Error::UnknownConstraint(spec.to_string()))?;
            (n, Some(p))
        }
        None => (spec, None),
    };
    REGISTRY
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownConstraint(spec.to_string()))?
        .build(param)
}

/// Shorthand for registry lookups with a known-good name.
pub(crate) fn nc(spec: &str) -> PartitionConstraint {
    named_constraint(spec).unwrap_or_else(|e| panic!("registry lookup `{spec}`: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
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
    fn count_examples() {
        assert_eq!(count_restricted(7, &nc("prime-to-3")), big(9));
        assert_eq!(count_restricted(6, &nc("odd-even-mult")), big(8));
        assert_eq!(count_restricted(11, &nc("mod-s-0-odd:6")), big(15));
        for entry in registry() {
            let c = entry.build(None).unwrap();
            assert_eq!(count_restricted(0, &c), big(1), "{}", entry.name);
        }
    }

    #[test]
    fn enumerate_examples() {
        let u = enumerate_restricted(3, &PartitionConstraint::unrestricted()).unwrap();
        assert_eq!(u, vec![vec![3], vec![2, 1], vec![1, 1, 1]]);

        let fifth = enumerate_restricted(9, &nc("distinct-not-div:5")).unwrap();
        assert_eq!(
            fifth,
            vec![vec![9], vec![8, 1], vec![7, 2], vec![6, 3], vec![6, 2, 1], vec![4, 3, 2]]
        );

        let third = enumerate_restricted(10, &nc("distinct-not-div:3")).unwrap();
        assert_eq!(third, vec![vec![10], vec![8, 2], vec![7, 2, 1], vec![5, 4, 1]]);

        assert!(matches!(
            enumerate_restricted(41, &PartitionConstraint::unrestricted()),
            Err(Error::EnumerationGuard { .. })
        ));
    }

    #[test]
    fn enumeration_order_is_decreasing_lexicographic() {
        let all = enumerate_restricted(8, &PartitionConstraint::unrestricted()).unwrap();
        for w in all.windows(2) {
            assert!(w[0] > w[1]);
        }
        assert_eq!(all.len(), 22);
    }

    #[test]
    fn gen_series_examples() {
        let p = gen_series(&PartitionConstraint::unrestricted(), 10);
        assert_eq!(p.to_csv(), "1,1,2,3,5,7,11,15,22,30,42");
        let none = PartitionConstraint::parts(PartFilter::Nothing);
        assert!(gen_series(&none, 5).is_one());
    }

    #[test]
    fn overpartition_examples() {
        assert_eq!(overpartition_count(3, None), big(8));
        assert_eq!(overpartition_count(4, None), big(14));
        assert_eq!(overpartition_count(4, Some(2)), big(6));
        assert_eq!(overpartition_count(3, Some(2)), big(4));
        assert_eq!(overpartition_count(0, None), big(1));
    }

    #[test]
    fn overpartitions_match_literal_overlined_enumeration() {
        // Each partition with d distinct sizes yields 2^d overlinings.
        for n in 0..=12u64 {
            let mut literal = 0u64;
            for p in enumerate_restricted(n, &PartitionConstraint::unrestricted()).unwrap() {
                let sizes: BTreeSet<u64> = p.iter().copied().collect();
                literal += 1u64 << sizes.len();
            }
            assert_eq!(overpartition_count(n, None), big(literal as i64));
        }
    }

    #[test]
    fn distinct_profile_examples() {
        assert_eq!(distinct_profile(4, 1, None).unwrap(), big(3));
        assert_eq!(distinct_profile(4, 2, None).unwrap(), big(2));
        assert_eq!(distinct_profile(4, 1, Some(2)).unwrap(), big(1));
        assert_eq!(distinct_profile(4, 2, Some(2)).unwrap(), big(1));
        assert_eq!(distinct_profile(4, 3, None).unwrap(), big(0));
        assert!(distinct_profile(4, 0, None).is_err());
    }

    #[test]
    fn accepts_agrees_with_enumeration() {
        let c = nc("mult-2r1-gon:2");
        let all = enumerate_restricted(15, &PartitionConstraint::unrestricted()).unwrap();
        let kept: Vec<_> = all.into_iter().filter(|p| c.accepts(p)).collect();
        assert_eq!(kept, enumerate_restricted(15, &c).unwrap());
    }

    #[test]
    fn named_constraint_errors() {
        assert!(matches!(named_constraint("bogus"), Err(Error::UnknownConstraint(_))));
        assert!(named_constraint("distinct:3").is_err());
        assert!(named_constraint("not-div:1").is_err());
        assert!(named_constraint("not-div:x").is_err());
    }

    #[test]
    fn verdict_serialises_bigints_as_strings() {
        let v = Verdict::mismatch(FirstDiff { index: 3, left: big(5), right: big(-7), detail: None });
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"{"status":"mismatch","first_diff":{"index":3,"left":"5","right":"-7"}}"#);
        let back: Verdict = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }
}
