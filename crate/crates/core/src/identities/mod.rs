//! Catalog of generating-function identities.
//!
//! Each [`IdentityRecord`] holds two or more series builders that reach the
//! same series by different routes (product expansion, constraint-driven
//! generating function, hypergeometric sum, theta quotient). Verification
//! expands every builder to a common order and compares coefficients.

pub mod sums;

use std::fmt;
use std::sync::{Arc, OnceLock};
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{
    gen_series, graded_gen_series, nc, overpartition_table, FirstDiff, Multiplicity, PartFilter,
    PartitionConstraint, Verdict,
};
use crate::qseries::{expand_product, parse_product, theta4_series, Sign, TruncatedSeries};

pub use sums::{
    andrews_multisum, gauss_cauchy_sum, lebesgue_sum, overpartition_double_sum, slater6_sum,
    two_modular_sum, TwoModularReading,
};

/// Builds a series truncated at the given order.
pub type Builder = Arc<dyn Fn(usize) -> TruncatedSeries + Send + Sync>;

/// One labelled construction of a series.
#[derive(Clone)]
pub struct SeriesBuilder {
    pub label: String,
    build: Builder,
}

impl SeriesBuilder {
    pub fn new(label: impl Into<String>, f: impl Fn(usize) -> TruncatedSeries + Send + Sync + 'static) -> Self {
        SeriesBuilder { label: label.into(), build: Arc::new(f) }
    }

    pub fn build(&self, order: usize) -> TruncatedSeries {
        (self.build)(order)
    }
}

impl fmt::Debug for SeriesBuilder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SeriesBuilder").field("label", &self.label).finish()
    }
}

/// A named identity with its independent constructions.
#[derive(Debug, Clone)]
pub struct IdentityRecord {
    /// Stable id; parametrized families use `name@s`.
    pub id: String,
    pub description: String,
    /// Short subject label (the classical result or physical system).
    pub topic: &'static str,
    pub builders: Vec<SeriesBuilder>,
    pub default_order: usize,
    /// Proposed rather than established: mismatches are reported as findings.
    pub claim: bool,
}

impl IdentityRecord {
    pub fn new(
        id: impl Into<String>,
        description: impl Into<String>,
        topic: &'static str,
        default_order: usize,
        builders: Vec<SeriesBuilder>,
    ) -> Self {
        assert!(builders.len() >= 2, "an identity needs at least two builders");
        IdentityRecord {
            id: id.into(),
            description: description.into(),
            topic,
            builders,
            default_order,
            claim: false,
        }
    }

    fn into_claim(mut self) -> Self {
        self.claim = true;
        self
    }

    /// Base name without the `@param` suffix.
    pub fn family(&self) -> &str {
        self.id.split('@').next().unwrap_or(&self.id)
    }
}

/// Compares every builder against the first one at `order`; on mismatch the
/// smallest differing index over all pairs is reported.
pub fn verify_record(record: &IdentityRecord, order: usize) -> Verdict {
    let reference = record.builders[0].build(order);
    let mut worst: Option<FirstDiff> = None;
    for other in &record.builders[1..] {
        let series = other.build(order);
        if let Some((index, left, right)) = reference.first_difference(&series) {
            if worst.as_ref().is_none_or(|w| index < w.index) {
                worst = Some(FirstDiff {
                    index,
                    left,
                    right,
                    detail: Some(format!("{} vs {}", record.builders[0].label, other.label)),
                });
            }
        }
    }
    match worst {
        None => Verdict::matched(),
        Some(d) => Verdict::mismatch(d),
    }
}

/// Verification outcome for one catalog record.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyOutcome {
    pub id: String,
    pub order: usize,
    pub claim: bool,
    pub verdict: Verdict,
    pub elapsed_ms: u128,
}

/// Looks up a catalog record.
pub fn find(id: &str) -> Result<&'static IdentityRecord> {
    catalog().iter().find(|r| r.id == id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Verifies a catalog identity at `order` (default order when `None`).
pub fn verify(id: &str, order: Option<usize>) -> Result<Verdict> {
    let record = find(id)?;
    Ok(verify_record(record, order.unwrap_or(record.default_order)))
}

/// Sequence names accepted alongside catalog ids.
pub const SEQUENCE_ALIASES: &[(&str, &str)] = &[
    ("A000726", "s3_prime_to_3"),
    ("A003105", "schur_1926"),
    ("A006950", "igppf4"),
    ("A015128", "theta4_inv_def"),
    ("A080054", "a080054"),
    ("fifth-order", "igppf5"),
    ("sixth-order", "igppf6"),
    ("parafermion3", "parafermion_multiplicity@3"),
];

/// The first `len` coefficients of a catalog series, by record id or alias;
/// taken from the record's first builder.
pub fn sequence(id: &str, len: usize) -> Result<Vec<BigInt>> {
    if len == 0 {
        return Ok(Vec::new());
    }
    let target = SEQUENCE_ALIASES
        .iter()
        .find(|(alias, _)| alias.eq_ignore_ascii_case(id))
        .map_or(id, |&(_, target)| target);
    Ok(find(target)?.builders[0].build(len - 1).into_coeffs())
}

/// Verifies every record, each at `scale × default_order` (at least 1),
/// concurrently; results keep catalog order.
pub fn verify_all(scale: f64) -> Vec<VerifyOutcome> {
    catalog()
        .par_iter()
        .map(|r| {
            let order = ((r.default_order as f64 * scale).round() as usize).max(1);
            let start = Instant::now();
            let verdict = verify_record(r, order);
            VerifyOutcome {
                id: r.id.clone(),
                order,
                claim: r.claim,
                verdict,
                elapsed_ms: start.elapsed().as_millis(),
            }
        })
        .collect()
}

fn product(spec: impl Into<String>) -> SeriesBuilder {
    let spec = spec.into();
    let families = parse_product(&spec).unwrap_or_else(|e| panic!("catalog product `{spec}`: {e}"));
    SeriesBuilder::new(spec, move |n| expand_product(&families, n))
}

fn constrained(label: impl Into<String>, c: PartitionConstraint) -> SeriesBuilder {
    SeriesBuilder::new(label, move |n| gen_series(&c, n))
}

/// Counts partitions of `2n` under `c` and keeps the even-indexed terms.
fn constrained_doubled(label: impl Into<String>, c: PartitionConstraint) -> SeriesBuilder {
    SeriesBuilder::new(label, move |n| gen_series(&c, 2 * n).decimate(2))
}

/// `θ₄(x^s)/θ₄(x)` from the theta series itself.
pub fn theta_ratio(s: usize, order: usize) -> TruncatedSeries {
    let t = theta4_series(order);
    let num = t.substitute(Sign::Plus, s).expect("positive multiplier");
    num.mul(&t.invert().expect("unit constant term")).expect("equal orders")
}

fn theta_ratio_builder(s: usize) -> SeriesBuilder {
    SeriesBuilder::new(format!("theta4(x^{s})/theta4(x)"), move |n| theta_ratio(s, n))
}

fn overpartitions(exclude_div: Option<u64>) -> SeriesBuilder {
    let label = match exclude_div {
        Some(s) => format!("overpartitions, no part divisible by {s}"),
        None => "overpartitions".to_string(),
    };
    SeriesBuilder::new(label, move |n| {
        TruncatedSeries::from_coeffs(overpartition_table(n as u64, exclude_div), n).expect("sized")
    })
}

/// Inverse of the graded parafermion series, built from the grading itself.
fn inverse_graded(s: u64) -> SeriesBuilder {
    SeriesBuilder::new(format!("1/graded parafermion (s={s})"), move |n| {
        graded_gen_series(&nc(&format!("mult-lt:{s}")), n).invert().expect("unit constant term")
    })
}

/// `∏ (1 − x^(e(k))) / (1 − x^k)` for an arbitrary exponent sequence.
fn excluded_product(label: impl Into<String>, exponent: fn(u64, u64) -> u64, param: u64) -> SeriesBuilder {
    SeriesBuilder::new(label, move |n| {
        let mut s = expand_product(&parse_product("(1-x^k)^-1").expect("valid"), n);
        for k in 1u64.. {
            let e = exponent(k, param);
            if e > n as u64 {
                break;
            }
            s.mul_binomial(Sign::Minus, e as usize);
        }
        s
    })
}

fn mul_builders(label: impl Into<String>, a: SeriesBuilder, b: SeriesBuilder) -> SeriesBuilder {
    SeriesBuilder::new(label, move |n| a.build(n).mul(&b.build(n)).expect("equal orders"))
}

fn by_parity(odd: Multiplicity, even: Multiplicity) -> Multiplicity {
    Multiplicity::ByParity { odd: Box::new(odd), even: Box::new(even) }
}

fn graded_sign(s: u64) -> char {
    if s % 2 == 1 { '+' } else { '-' }
}

/// Every instantiated identity, in a fixed order.
pub fn catalog() -> &'static [IdentityRecord] {
    static CATALOG: OnceLock<Vec<IdentityRecord>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

fn build_catalog() -> Vec<IdentityRecord> {
    let mut out = Vec::new();

    out.push(IdentityRecord::new(
        "euler_distinct_odd",
        "partitions into distinct parts equal partitions into odd parts",
        "Euler's theorem",
        200,
        vec![
            product("(1+x^k)"),
            product("(1-x^(2k-1))^-1"),
            constrained("distinct parts", nc("distinct")),
            constrained("odd parts", nc("odd")),
        ],
    ));

    out.push(IdentityRecord::new(
        "witten_cancellation",
        "the fermionic graded product cancels the bosonic partition function",
        "Witten index",
        300,
        vec![
            mul_builders(
                "(1-x^k) * partitions",
                product("(1-x^k)"),
                constrained("partitions", PartitionConstraint::unrestricted()),
            ),
            SeriesBuilder::new("1", TruncatedSeries::one),
        ],
    ));

    for s in 2..=8u64 {
        out.push(IdentityRecord::new(
            format!("parafermion_multiplicity@{s}"),
            format!("no part more than {} times equals parts not divisible by {s}", s - 1),
            "parafermions",
            200,
            vec![
                product(format!("(1-x^({s}k))(1-x^k)^-1")),
                constrained(format!("multiplicity < {s}"), nc(&format!("mult-lt:{s}"))),
                constrained(format!("parts not divisible by {s}"), nc(&format!("not-div:{s}"))),
            ],
        ));
    }

    out.push(IdentityRecord::new(
        "s3_prime_to_3",
        "order-3 parafermions count partitions into parts prime to 3",
        "parafermions",
        200,
        vec![
            product("(1-x^(3k))(1-x^k)^-1"),
            product("(1-x^(3k-1))^-1(1-x^(3k-2))^-1"),
            constrained("parts prime to 3", nc("prime-to-3")),
        ],
    ));

    out.push(IdentityRecord::new(
        "thm_squares",
        "each part k at most k-1 times equals partitions with no square part",
        "polygonal exclusions",
        200,
        vec![
            constrained("part k at most k-1 times", nc("mult-below-value")),
            excluded_product("prod (1-x^(k^2))/(1-x^k)", |k, _| k * k, 0),
            constrained("no square parts", nc("no-squares")),
        ],
    ));

    for r in 2..=8u64 {
        out.push(IdentityRecord::new(
            format!("thm_2r_gons@{r}"),
            format!("each part k at most {}(k-1) times equals partitions with no {}-gonal part", r - 1, 2 * r),
            "polygonal exclusions",
            200,
            vec![
                constrained("part k at most (r-1)(k-1) times", nc(&format!("mult-2r-gon:{r}"))),
                excluded_product(
                    "prod (1-x^(k[(r-1)(k-1)+1]))/(1-x^k)",
                    |k, r| k * ((r - 1) * (k - 1) + 1),
                    r,
                ),
                constrained("no 2r-gonal parts", nc(&format!("no-2r-gons:{r}"))),
            ],
        ));
    }

    for r in 2..=8u64 {
        out.push(IdentityRecord::new(
            format!("thm_2r1_gons@{r}"),
            format!(
                "odd part 2k-1 at most {}(k-1) times equals partitions with no odd-indexed {}-gonal part",
                2 * r - 1,
                2 * r + 1
            ),
            "polygonal exclusions",
            200,
            vec![
                constrained("odd part 2k-1 at most (2r-1)(k-1) times", nc(&format!("mult-2r1-gon:{r}"))),
                excluded_product(
                    "prod (1-x^((2k-1)[(2r-1)(k-1)+1]))/(1-x^k)",
                    |k, r| (2 * k - 1) * ((2 * r - 1) * (k - 1) + 1),
                    r,
                ),
                constrained("no odd-indexed (2r+1)-gonal parts", nc(&format!("no-odd-2r1-gons:{r}"))),
            ],
        ));
    }

    for s in 2..=8u64 {
        let sign = graded_sign(s);
        out.push(IdentityRecord::new(
            format!("graded_parafermion@{s}"),
            format!("order-{s} parafermions graded by (-1)^(number of parts)"),
            "graded parafermions",
            200,
            vec![
                SeriesBuilder::new(format!("graded multiplicity < {s}"), move |n| {
                    graded_gen_series(&nc(&format!("mult-lt:{s}")), n)
                }),
                product(format!("(1{sign}x^({s}k))(1+x^k)^-1")),
            ],
        ));
    }

    out.push(IdentityRecord::new(
        "schur_1926",
        "distinct parts congruent to 1 or 2 mod 3 equal parts congruent to 1 or 5 mod 6",
        "Schur's theorem",
        200,
        vec![
            product("(1+x^(3k-2))(1+x^(3k-1))"),
            product("(1-x^(6k-3))(1-x^(2k-1))^-1"),
            product("(1-x^(6k-5))^-1(1-x^(6k-1))^-1"),
            constrained(
                "distinct parts = 1,2 mod 3",
                PartitionConstraint::new(
                    PartFilter::Residues { modulus: 3, residues: vec![1, 2] },
                    Multiplicity::Distinct,
                ),
            ),
            constrained("parts = 1,5 mod 6", nc("mod6-1-5")),
        ],
    ));

    out.push(IdentityRecord::new(
        "igppf4",
        "inverse graded parafermions of order 4",
        "inverse graded parafermions",
        200,
        vec![
            product("(1+x^k)(1-x^(4k))^-1"),
            product("(1+x^(2k-1))(1-x^(2k))^-1"),
            inverse_graded(4),
            constrained("even parts with even multiplicity", nc("even-mult-multiple:2")),
            constrained("odd parts distinct", nc("odd-distinct")),
            constrained("no part = 2 mod 4", nc("not-2-mod-4")),
        ],
    ));

    out.push(IdentityRecord::new(
        "igppf5",
        "inverse graded parafermions of order 5: distinct parts prime to 5",
        "inverse graded parafermions",
        200,
        vec![
            product("(1+x^k)(1+x^(5k))^-1"),
            product("(1-x^(10k-1))^-1(1-x^(10k-3))^-1(1-x^(10k-7))^-1(1-x^(10k-9))^-1"),
            inverse_graded(5),
            constrained("distinct parts prime to 5", nc("distinct-not-div:5")),
            constrained("parts = 1,3,7,9 mod 10", nc("odd-not-s-mod-2s:5")),
        ],
    ));

    out.push(IdentityRecord::new(
        "igppf6",
        "inverse graded parafermions of order 6: parts = 0,1,3,5 mod 6 (every factor of the residue form is a denominator)",
        "inverse graded parafermions",
        200,
        vec![
            product("(1+x^k)(1-x^(6k))^-1"),
            product("(1+x^(3k-1))(1+x^(3k-2))(1-x^(3k))^-1"),
            product("(1-x^(6k))^-1(1-x^(6k-5))^-1(1-x^(6k-3))^-1(1-x^(6k-1))^-1"),
            inverse_graded(6),
            constrained("parts = 0,1,3,5 mod 6", nc("mod-s-0-odd:6")),
        ],
    ));

    for s in (2..=8u64).step_by(2) {
        let half = s / 2;
        out.push(IdentityRecord::new(
            format!("prop1_even@{s}"),
            format!("inverse graded parafermions of even order {s}"),
            "inverse graded parafermions",
            200,
            vec![
                product(format!("(1+x^k)(1-x^({s}k))^-1")),
                product(format!("(1-x^(2k-1))^-1(1-x^({s}k))^-1")),
                inverse_graded(s),
                constrained(
                    format!("even parts with multiplicity divisible by {half}"),
                    PartitionConstraint::new(
                        PartFilter::All,
                        by_parity(Multiplicity::Any, Multiplicity::MultipleOf(half)),
                    ),
                ),
                constrained(format!("parts = 0,1,3,..,{} mod {s}", s - 1), nc(&format!("mod-s-0-odd:{s}"))),
            ],
        ));
    }

    for s in (3..=7u64).step_by(2) {
        out.push(IdentityRecord::new(
            format!("prop1_odd@{s}"),
            format!("inverse graded parafermions of odd order {s}: distinct parts prime to {s}"),
            "inverse graded parafermions",
            200,
            vec![
                product(format!("(1+x^k)(1+x^({s}k))^-1")),
                inverse_graded(s),
                constrained(format!("distinct parts prime to {s}"), nc(&format!("distinct-not-div:{s}"))),
                constrained(format!("odd parts other than {s} mod {}", 2 * s), nc(&format!("odd-not-s-mod-2s:{s}"))),
            ],
        ));
    }

    for s in 2..=8u64 {
        let record = if s % 2 == 0 {
            let q = s / 2;
            IdentityRecord::new(
                format!("fermion_truncation@{s}"),
                format!("fermions at levels divisible by {q} replaced by bosons"),
                "fermion truncation",
                200,
                vec![
                    product(format!("(1+x^k)(1-x^({q}k))^-1(1+x^({q}k))^-1")),
                    constrained(
                        format!("parts divisible by {q} free, others distinct"),
                        PartitionConstraint::new(
                            PartFilter::All,
                            Multiplicity::ByDivisibility {
                                modulus: q,
                                divisible: Box::new(Multiplicity::Any),
                                other: Box::new(Multiplicity::Distinct),
                            },
                        ),
                    ),
                ],
            )
        } else {
            IdentityRecord::new(
                format!("fermion_truncation@{s}"),
                format!("fermions at levels divisible by {s} removed"),
                "fermion truncation",
                200,
                vec![
                    product(format!("(1+x^k)(1+x^({s}k))^-1")),
                    constrained(format!("distinct parts prime to {s}"), nc(&format!("distinct-not-div:{s}"))),
                ],
            )
        };
        out.push(record);
    }

    for s in (2..=8u64).step_by(2) {
        out.push(IdentityRecord::new(
            format!("mixed_even@{s}"),
            format!("order-{s} parafermions mixed with inverse graded parafermions give 1/theta4"),
            "theta quotients",
            200,
            vec![
                mul_builders(
                    "parafermions * inverse graded parafermions",
                    product(format!("(1-x^({s}k))(1-x^k)^-1")),
                    product(format!("(1+x^k)(1-x^({s}k))^-1")),
                ),
                product("(1+x^k)(1-x^k)^-1"),
                SeriesBuilder::new("1/theta4(x)", |n| theta4_series(n).invert().expect("unit")),
            ],
        ));
    }

    for s in (3..=7usize).step_by(2) {
        out.push(IdentityRecord::new(
            format!("mixed_odd@{s}"),
            format!("order-{s} parafermions mixed with inverse graded parafermions give theta4(x^{s})/theta4(x)"),
            "theta quotients",
            200,
            vec![
                mul_builders(
                    "parafermions * inverse graded parafermions",
                    product(format!("(1-x^({s}k))(1-x^k)^-1")),
                    product(format!("(1+x^k)(1+x^({s}k))^-1")),
                ),
                theta_ratio_builder(s),
                overpartitions(Some(s as u64)),
            ],
        ));
    }

    out.push(IdentityRecord::new(
        "theta4_gauss",
        "the a = 1 Cauchy sum equals 1/theta4",
        "theta quotients",
        200,
        vec![
            SeriesBuilder::new("Cauchy sum", gauss_cauchy_sum),
            SeriesBuilder::new("1/theta4(x)", |n| theta4_series(n).invert().expect("unit")),
            product("(1+x^k)(1-x^k)^-1"),
        ],
    ));

    out.push(IdentityRecord::new(
        "theta4_inv_def",
        "1/theta4 counts partitions of 2n whose odd parts have even multiplicity",
        "theta quotients",
        200,
        vec![
            SeriesBuilder::new("1/theta4(x)", |n| theta4_series(n).invert().expect("unit")),
            product("(1-x^(2k-1))^-1(1-x^k)^-1"),
            constrained_doubled("partitions of 2n, odd parts even multiplicity", nc("odd-even-mult")),
        ],
    ));

    out.push(IdentityRecord::new(
        "slater6",
        "a Rogers-Ramanujan type sum for theta4(x^3)/theta4(x)",
        "theta quotients",
        120,
        vec![
            SeriesBuilder::new("Slater sum", slater6_sum),
            product("(1+x^(3k-1))(1+x^(3k-2))(1-x^(3k-1))^-1(1-x^(3k-2))^-1"),
            theta_ratio_builder(3),
        ],
    ));

    for s in 2..=8u64 {
        out.push(IdentityRecord::new(
            format!("prop2@{s}"),
            format!(
                "theta4(x^{s})/theta4(x) counts partitions of 2n with odd multiplicities in {{0,2,..,{}}} and even parts at most {} times",
                2 * (s - 1),
                s - 1
            ),
            "theta quotients",
            200,
            vec![
                theta_ratio_builder(s as usize),
                product(format!("(1+x^k)(1-x^({s}k))(1-x^k)^-1(1+x^({s}k))^-1")),
                constrained_doubled(
                    "partitions of 2n, odd multiplicity even <= 2(s-1), even multiplicity < s",
                    nc(&format!("odd-2-to-2s-even-lt-s:{s}")),
                ),
                overpartitions(Some(s)),
            ],
        ));
    }

    out.push(IdentityRecord::new(
        "a080054",
        "odd parts with multiplicity 0 or 2 and distinct even parts, halved",
        "theta quotients",
        200,
        vec![
            product("(1+x^(2k-1))(1-x^(2k-1))^-1"),
            product("(1+x^(2k-1))(1+x^k)"),
            constrained_doubled("partitions of 2n, odd parts twice, even parts distinct", nc("odd-twice-even-once")),
        ],
    ));

    out.push(IdentityRecord::new(
        "lebesgue",
        "Lebesgue's sum equals theta4(x^2)/theta4(x)",
        "theta quotients",
        200,
        vec![
            SeriesBuilder::new("Lebesgue sum", lebesgue_sum),
            product("(1+x^(2k-1))(1-x^(2k-1))^-1"),
            theta_ratio_builder(2),
        ],
    ));

    out.push(IdentityRecord::new(
        "overpartition_series",
        "overpartitions are generated by (1+x^k)/(1-x^k)",
        "overpartitions",
        200,
        vec![overpartitions(None), product("(1+x^k)(1-x^k)^-1")],
    ));

    out.push(IdentityRecord::new(
        "theta_ratio_s2",
        "theta4(x^2)/theta4(x) generates overpartitions with no even part",
        "overpartitions",
        200,
        vec![
            theta_ratio_builder(2),
            product("(1+x^k)(1-x^(2k))(1-x^k)^-1(1+x^(2k))^-1"),
            overpartitions(Some(2)),
        ],
    ));

    for s in 2..=8usize {
        out.push(IdentityRecord::new(
            format!("andrews_multi@{s}"),
            format!("a {}-fold sum for theta4(x^{s})/theta4(x)", s - 1),
            "theta quotients",
            60,
            vec![
                SeriesBuilder::new(format!("multisum (s={s})"), move |n| andrews_multisum(s, n)),
                theta_ratio_builder(s),
            ],
        ));
    }

    for s in (2..=8u64).step_by(2) {
        let q = s / 2;
        out.push(IdentityRecord::new(
            format!("restricted_over@{s}"),
            format!("overpartitions whose non-overlined parts repeat a multiple of {s} times"),
            "overpartitions",
            200,
            vec![
                product(format!("(1+x^k)(1-x^({s}k))^-1")),
                mul_builders(
                    "distinct parts * multiplicities divisible by s",
                    constrained("distinct parts", nc("distinct")),
                    constrained(
                        format!("multiplicity divisible by {s}"),
                        PartitionConstraint::new(PartFilter::All, Multiplicity::MultipleOf(s)),
                    ),
                ),
                mul_builders(
                    "distinct parts prime to s/2 * parts divisible by s/2",
                    constrained(
                        format!("distinct parts not divisible by {q}"),
                        PartitionConstraint::new(PartFilter::NotDivisibleBy(q), Multiplicity::Distinct),
                    ),
                    constrained(format!("parts divisible by {q}"), PartitionConstraint::parts(PartFilter::DivisibleBy(q))),
                ),
            ],
        ));
    }

    for s in 2..=8usize {
        out.push(IdentityRecord::new(
            format!("parabose_complement@{s}"),
            format!("per mode, parafermionic (n < {s}) plus parabosonic (n = 0 or n >= {s}) occupations give a boson"),
            "parastatistics",
            200,
            vec![
                SeriesBuilder::new("prod_k (sum_{j<s} x^(jk) + x^(sk)/(1-x^k))", move |n| {
                    let mut acc = TruncatedSeries::one(n);
                    for k in 1..=n {
                        acc = acc.mul(&mode_split(s, k, n)).expect("equal orders");
                    }
                    acc
                }),
                product("(1-x^k)^-1"),
            ],
        ));
    }

    for s in 2..=8usize {
        out.push(IdentityRecord::new(
            format!("paraboson_product@{s}"),
            format!("parabosons: occupation numbers 0 or at least {s}"),
            "parastatistics",
            200,
            vec![
                SeriesBuilder::new("prod_k (1 + x^(sk)/(1-x^k))", move |n| {
                    let mut acc = TruncatedSeries::one(n);
                    for k in 1..=n {
                        if s * k > n {
                            break;
                        }
                        acc = acc.mul(&parabose_mode(s, k, n)).expect("equal orders");
                    }
                    acc
                }),
                constrained(format!("multiplicity 0 or >= {s}"), nc(&format!("parabose:{s}"))),
            ],
        ));
    }

    out.push(IdentityRecord::new(
        "over_double_sum",
        "overpartitions as a sum over sets of distinct part sizes",
        "overpartitions",
        60,
        vec![
            SeriesBuilder::new("sum over strict chains", overpartition_double_sum),
            product("(1+x^k)(1-x^k)^-1"),
            overpartitions(None),
        ],
    ));

    out.push(
        IdentityRecord::new(
            "two_modular",
            "proposed 2-modular sum for (1+x^(2k-1))/(1-x^(2k)), summing over every admissible m",
            "2-modular diagrams",
            40,
            vec![
                product("(1+x^(2k-1))(1-x^(2k))^-1"),
                constrained("odd parts distinct", nc("odd-distinct")),
                SeriesBuilder::new("2-modular sum (all m)", |n| two_modular_sum(n, TwoModularReading::AllM)),
            ],
        )
        .into_claim(),
    );

    out
}

/// `x^(sk)/(1 − x^k)` built by inverting the series `1 − x^k`.
fn parabose_tail(s: usize, k: usize, order: usize) -> TruncatedSeries {
    let mut den = TruncatedSeries::one(order);
    den.mul_binomial(Sign::Minus, k);
    let inv = den.invert().expect("unit constant term");
    let mut out = TruncatedSeries::zero(order);
    out.add_shifted(&inv, s * k);
    out
}

/// `1 + x^(sk)/(1 − x^k)`, one parabosonic mode.
pub fn parabose_mode(s: usize, k: usize, order: usize) -> TruncatedSeries {
    parabose_tail(s, k, order).add(&TruncatedSeries::one(order)).expect("equal orders")
}

/// `Σ_{j<s} x^(jk)`, one parafermionic mode.
pub fn parafermion_mode(s: usize, k: usize, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_fn(order, |n| {
        BigInt::from(u8::from(n % k == 0 && n / k < s))
    })
}

/// Parafermionic plus parabosonic occupations of one mode.
pub fn mode_split(s: usize, k: usize, order: usize) -> TruncatedSeries {
    parafermion_mode(s, k, order).add(&parabose_tail(s, k, order)).expect("equal orders")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_ids_are_unique() {
        let mut ids: Vec<_> = catalog().iter().map(|r| r.id.as_str()).collect();
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
        assert!(n >= 30);
    }

    #[test]
    fn unknown_id_is_rejected() {
        assert!(matches!(verify("nope", None), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn small_order_smoke() {
        for r in catalog() {
            assert!(verify_record(r, 12).is_match(), "{}", r.id);
        }
    }

    #[test]
    fn mode_split_is_geometric() {
        let mut geo = TruncatedSeries::one(20);
        geo.div_binomial(Sign::Minus, 3);
        assert_eq!(mode_split(4, 3, 20), geo);
    }
}
