//! Dirichlet coefficients of zeta quotients `∏ ζ(m·t)^e` and the arithmetic
//! functions they are claimed to generate.
//!
//! Coefficients come from Euler products: at each prime the local factor
//! `∏ (1 − y^m)^(−e)`, `y = p^(−t)`, is expanded as a power series and the
//! sequence is assembled multiplicatively. Arithmetic functions are evaluated
//! independently from a trial-division factorization.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{FirstDiff, Verdict};
use crate::qseries::{Sign, TruncatedSeries};

/// Largest argument accepted by [`factorize`].
pub const FACTORIZE_LIMIT: u64 = 10_000_000;
/// Largest length accepted by [`zeta_quotient_coeffs`].
pub const COEFF_LIMIT: usize = 1_000_000;

/// Prime factorization by trial division, primes ascending.
pub fn factorize(n: u64) -> Result<Vec<(u64, u32)>> {
    if n == 0 || n > FACTORIZE_LIMIT {
        return Err(Error::OutOfRange { value: n.to_string(), range: format!("1..={FACTORIZE_LIMIT}") });
    }
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    Ok(out)
}

/// Primes up to `n` by the sieve of Eratosthenes.
pub fn primes_up_to(n: usize) -> Vec<usize> {
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// `∏ ζ(m·t)^e` over the listed `(m, e)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerProductSpec {
    pub factors: Vec<(u64, i64)>,
}

impl EulerProductSpec {
    pub fn new(factors: Vec<(u64, i64)>) -> Result<Self> {
        if factors.iter().any(|&(m, _)| m == 0) {
            return Err(Error::InvalidArgument("zeta multipliers must be positive".into()));
        }
        Ok(EulerProductSpec { factors })
    }

    /// Local factor `∏ (1 − y^m)^(−e)` truncated at `y^order`.
    pub fn local_series(&self, order: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::one(order);
        for &(m, e) in &self.factors {
            let m = m as usize;
            for _ in 0..e.unsigned_abs() {
                if e > 0 {
                    s.div_binomial(Sign::Minus, m);
                } else {
                    s.mul_binomial(Sign::Minus, m);
                }
            }
        }
        s
    }
}

impl fmt::Display for EulerProductSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &(m, e) in &self.factors {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let arg = if m == 1 { "t".to_string() } else { format!("{m}t") };
            write!(f, "zeta({arg})")?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl FromStr for EulerProductSpec {
    type Err = Error;

    /// Parses `m:e,m:e,…`, e.g. `1:2,2:-1` for `ζ(t)²/ζ(2t)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("cannot parse zeta product `{s}`"));
        let mut factors = Vec::new();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (m, e) = item.split_once(':').ok_or_else(bad)?;
            factors.push((m.trim().parse().map_err(|_| bad())?, e.trim().parse().map_err(|_| bad())?));
        }
        EulerProductSpec::new(factors)
    }
}

/// Coefficients `a(1), …, a(N)` of a Dirichlet series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArithmeticSequence {
    values: Vec<BigInt>,
}

impl ArithmeticSequence {
    pub fn limit(&self) -> usize {
        self.values.len()
    }

    /// `a(n)` for `1 ≤ n ≤ limit`.
    pub fn get(&self, n: usize) -> &BigInt {
        &self.values[n - 1]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// Expands `spec` into `a(1), …, a(N)` through its Euler product.
pub fn zeta_quotient_coeffs(spec: &EulerProductSpec, limit: usize) -> Result<ArithmeticSequence> {
    if limit > COEFF_LIMIT {
        return Err(Error::OutOfRange { value: limit.to_string(), range: format!("0..={COEFF_LIMIT}") });
    }
    let primes = primes_up_to(limit);
    let locals: Vec<(usize, TruncatedSeries)> = primes
        .par_iter()
        .map(|&p| {
            let mut k = 0;
            let mut q = 1usize;
            while q <= limit / p {
                q *= p;
                k += 1;
            }
            (p, spec.local_series(k))
        })
        .collect();

    let mut values = vec![BigInt::one(); limit + 1];
    for (p, local) in &locals {
        let mut n = *p;
        while n <= limit {
            let mut v = 0;
            let mut m = n;
            while m % p == 0 {
                m /= p;
                v += 1;
            }
            let c = local.coeff(v);
            if c.is_zero() {
                values[n].set_zero();
            } else if !c.is_one() {
                values[n] *= c;
            }
            n += p;
        }
    }
    values.remove(0);
    Ok(ArithmeticSequence { values })
}

/// Arithmetic functions evaluated from the factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArithFn {
    Mobius,
    /// `|μ(n)|`
    Squarefree,
    /// 1 if no prime exponent reaches `s`.
    QS,
    /// `λ(n)` on `s`-power-free `n`, else 0.
    MuS,
    Liouville,
    /// Number of distinct prime factors.
    Nu,
    /// Number of prime exponents `≥ s`.
    NuS,
    /// 1 if every exponent is `≡ 0, 1 (mod s)`.
    APlus,
    /// `(−1)^(Σ ⌊r_i/s⌋)` if every exponent is `≡ 0, 1 (mod s)`, else 0.
    AMinus,
    TwoNu,
    Tau,
    SquarefreeDivisorCount,
    UnitaryDivisorCount,
    /// `2^(ν_s(n)) λ(n)`
    TwoNuSLambda,
    /// `2^(ν(n)) λ(n)`
    TwoNuLambda,
    /// `(−1)^(Σ ⌊r_i/s⌋) 2^(ν(n))` if no exponent is divisible by `s`, else 0.
    SignedTwoNuS,
}

const ARITH_NAMES: &[(&str, ArithFn)] = &[
    ("mobius", ArithFn::Mobius),
    ("squarefree", ArithFn::Squarefree),
    ("q_s", ArithFn::QS),
    ("mu_s", ArithFn::MuS),
    ("liouville", ArithFn::Liouville),
    ("nu", ArithFn::Nu),
    ("nu_s", ArithFn::NuS),
    ("a_plus", ArithFn::APlus),
    ("a_minus", ArithFn::AMinus),
    ("two_nu", ArithFn::TwoNu),
    ("tau", ArithFn::Tau),
    ("squarefree_divisor_count", ArithFn::SquarefreeDivisorCount),
    ("unitary_divisor_count", ArithFn::UnitaryDivisorCount),
    ("two_nu_s_lambda", ArithFn::TwoNuSLambda),
    ("two_nu_lambda", ArithFn::TwoNuLambda),
    ("signed_two_nu_s", ArithFn::SignedTwoNuS),
];

impl ArithFn {
    pub fn all() -> impl Iterator<Item = ArithFn> {
        ARITH_NAMES.iter().map(|&(_, f)| f)
    }

    pub fn name(self) -> &'static str {
        ARITH_NAMES.iter().find(|&&(_, f)| f == self).map(|&(n, _)| n).expect("every function is named")
    }

    pub fn needs_s(self) -> bool {
        matches!(
            self,
            ArithFn::QS
                | ArithFn::MuS
                | ArithFn::NuS
                | ArithFn::APlus
                | ArithFn::AMinus
                | ArithFn::TwoNuSLambda
                | ArithFn::SignedTwoNuS
        )
    }
}

impl fmt::Display for ArithFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ArithFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ARITH_NAMES
            .iter()
            .find(|&&(n, _)| n == s)
            .map(|&(_, f)| f)
            .ok_or_else(|| Error::UnknownFunction(s.to_string()))
    }
}

fn parity_sign(k: u64) -> i64 {
    if k.is_multiple_of(2) { 1 } else { -1 }
}

/// Value of `f` at `n` given its factorization.
pub fn arith_from_factors(f: ArithFn, factors: &[(u64, u32)], s: Option<u64>) -> Result<i64> {
    let s = if f.needs_s() {
        let s = s.ok_or_else(|| Error::MissingParameter(f.name().to_string()))?;
        if s < 2 {
            return Err(Error::InvalidArgument(format!("`{}` needs s ≥ 2", f.name())));
        }
        s as u32
    } else {
        0
    };
    let nu = factors.len() as u32;
    let omega: u64 = factors.iter().map(|&(_, r)| r as u64).sum();
    let lambda = parity_sign(omega);
    let value = match f {
        ArithFn::Mobius => {
            if factors.iter().any(|&(_, r)| r > 1) { 0 } else { parity_sign(nu as u64) }
        }
        ArithFn::Squarefree => i64::from(factors.iter().all(|&(_, r)| r == 1)),
        ArithFn::QS => i64::from(factors.iter().all(|&(_, r)| r < s)),
        ArithFn::MuS => {
            if factors.iter().all(|&(_, r)| r < s) { lambda } else { 0 }
        }
        ArithFn::Liouville => lambda,
        ArithFn::Nu => nu as i64,
        ArithFn::NuS => factors.iter().filter(|&&(_, r)| r >= s).count() as i64,
        ArithFn::APlus => i64::from(factors.iter().all(|&(_, r)| r % s <= 1)),
        ArithFn::AMinus => {
            if factors.iter().all(|&(_, r)| r % s <= 1) {
                parity_sign(factors.iter().map(|&(_, r)| (r / s) as u64).sum())
            } else {
                0
            }
        }
        ArithFn::TwoNu | ArithFn::SquarefreeDivisorCount | ArithFn::UnitaryDivisorCount => 1 << nu,
        ArithFn::Tau => factors.iter().map(|&(_, r)| r as i64 + 1).product(),
        ArithFn::TwoNuSLambda => (1i64 << factors.iter().filter(|&&(_, r)| r >= s).count()) * lambda,
        ArithFn::TwoNuLambda => (1i64 << nu) * lambda,
        ArithFn::SignedTwoNuS => {
            if factors.iter().any(|&(_, r)| r % s == 0) {
                0
            } else {
                parity_sign(factors.iter().map(|&(_, r)| (r / s) as u64).sum()) * (1 << nu)
            }
        }
    };
    Ok(value)
}

/// Value of `f` at `n`; `s` is required for the `s`-parametrized functions.
pub fn arith_value(f: ArithFn, n: u64, s: Option<u64>) -> Result<i64> {
    arith_from_factors(f, &factorize(n)?, s)
}

/// Divisors of `n` from its factorization, unsorted.
pub fn divisors(factors: &[(u64, u32)]) -> Vec<u64> {
    let mut out = vec![1u64];
    for &(p, r) in factors {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..r {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out
}

/// Unitary divisors `d | n` with `gcd(d, n/d) = 1`, counted directly.
pub fn unitary_divisor_count_direct(n: u64) -> Result<u64> {
    let factors = factorize(n)?;
    Ok(divisors(&factors).into_iter().filter(|&d| num_integer::gcd(d, n / d) == 1).count() as u64)
}

/// Squarefree divisors of `n`, counted directly.
pub fn squarefree_divisor_count_direct(n: u64) -> Result<u64> {
    let factors = factorize(n)?;
    let mut count = 0;
    for d in divisors(&factors) {
        if arith_value(ArithFn::Squarefree, d, None)? == 1 {
            count += 1;
        }
    }
    Ok(count)
}

/// The series side of a coefficient claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimSource {
    Quotient(EulerProductSpec),
    /// `Σ_{d|n} f(d)`
    DivisorSum(ArithFn),
}

/// A claimed identification of Dirichlet coefficients with a function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirichletClaim {
    pub id: String,
    pub description: String,
    pub source: ClaimSource,
    pub function: ArithFn,
    pub s: Option<u64>,
}

fn spec(factors: &[(u64, i64)]) -> EulerProductSpec {
    EulerProductSpec::new(factors.to_vec()).expect("positive multipliers")
}

/// Base claim names and the parity of `s` they require (`None` = no `s`).
const CLAIM_FAMILIES: &[(&str, Option<Parity>)] = &[
    ("d56", None),
    ("d57", Some(Parity::Any)),
    ("d58", Some(Parity::Even)),
    ("d59", Some(Parity::Odd)),
    ("d60", Some(Parity::Even)),
    ("d62", Some(Parity::Odd)),
    ("d64", None),
    ("d65", None),
    ("d68", Some(Parity::Odd)),
    ("d69", Some(Parity::Odd)),
    ("d70", Some(Parity::Even)),
    ("d_s1", None),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Parity {
    Any,
    Even,
    Odd,
}

impl Parity {
    fn admits(self, s: u64) -> bool {
        match self {
            Parity::Any => true,
            Parity::Even => s.is_multiple_of(2),
            Parity::Odd => s % 2 == 1,
        }
    }
}

/// Builds the claim `name` or `name@s`.
pub fn claim(id: &str) -> Result<DirichletClaim> {
    let unknown = || Error::UnknownClaim(id.to_string());
    let (name, s) = match id.split_once('@') {
        Some((n, p)) => (n, Some(p.parse::<u64>().map_err(|_| unknown())?)),
        None => (id, None),
    };
    let &(_, parity) = CLAIM_FAMILIES.iter().find(|(n, _)| *n == name).ok_or_else(unknown)?;
    match (parity, s) {
        (None, Some(_)) => return Err(unknown()),
        (Some(_), None) => return Err(Error::MissingParameter(name.to_string())),
        (Some(p), Some(s)) if s < 2 || !p.admits(s) => {
            return Err(Error::InvalidArgument(format!("claim `{name}` does not apply to s = {s}")))
        }
        _ => {}
    }
    let sv = s.unwrap_or(0);
    let (description, source, function) = match name {
        "d56" => ("zeta(t)/zeta(2t) generates |mu(n)|", ClaimSource::Quotient(spec(&[(1, 1), (2, -1)])), ArithFn::Squarefree),
        "d57" => ("zeta(t)/zeta(st) generates the s-power-free indicator", ClaimSource::Quotient(spec(&[(1, 1), (sv, -1)])), ArithFn::QS),
        "d58" => (
            "zeta(2t)/(zeta(t)zeta(st)) generates the truncated Moebius function (s even)",
            ClaimSource::Quotient(spec(&[(2, 1), (1, -1), (sv, -1)])),
            ArithFn::MuS,
        ),
        "d59" => (
            "zeta(2t)zeta(st)/(zeta(t)zeta(2st)) generates the truncated Moebius function (s odd)",
            ClaimSource::Quotient(spec(&[(2, 1), (sv, 1), (1, -1), (2 * sv, -1)])),
            ArithFn::MuS,
        ),
        "d60" => (
            "zeta(t)zeta(st)/zeta(2t) generates the indicator of exponents = 0,1 mod s",
            ClaimSource::Quotient(spec(&[(1, 1), (sv, 1), (2, -1)])),
            ArithFn::APlus,
        ),
        "d62" => (
            "zeta(t)zeta(2st)/(zeta(2t)zeta(st)) generates the signed indicator of exponents = 0,1 mod s",
            ClaimSource::Quotient(spec(&[(1, 1), (2 * sv, 1), (2, -1), (sv, -1)])),
            ArithFn::AMinus,
        ),
        "d64" => ("zeta(t)^2/zeta(2t) generates 2^nu(n)", ClaimSource::Quotient(spec(&[(1, 2), (2, -1)])), ArithFn::TwoNu),
        "d65" => ("the squarefree divisors of n number 2^nu(n)", ClaimSource::DivisorSum(ArithFn::Squarefree), ArithFn::TwoNu),
        "d68" => (
            "zeta(t)^2 zeta(2st)/(zeta(2t) zeta(st)^2) generates signed 2^nu(n) on n with no exponent divisible by s",
            ClaimSource::Quotient(spec(&[(1, 2), (2 * sv, 1), (2, -1), (sv, -2)])),
            ArithFn::SignedTwoNuS,
        ),
        "d69" => (
            "zeta(2t)/(zeta(t)zeta(st)) generates 2^nu_s(n) lambda(n) (s odd)",
            ClaimSource::Quotient(spec(&[(2, 1), (1, -1), (sv, -1)])),
            ArithFn::TwoNuSLambda,
        ),
        "d70" => (
            "zeta(2t)zeta(st)/(zeta(t)zeta(2st)) generates 2^nu_s(n) lambda(n) (s even)",
            ClaimSource::Quotient(spec(&[(2, 1), (sv, 1), (1, -1), (2 * sv, -1)])),
            ArithFn::TwoNuSLambda,
        ),
        "d_s1" => ("zeta(2t)/zeta(t)^2 generates 2^nu(n) lambda(n)", ClaimSource::Quotient(spec(&[(2, 1), (1, -2)])), ArithFn::TwoNuLambda),
        _ => unreachable!("listed in CLAIM_FAMILIES"),
    };
    Ok(DirichletClaim { id: id.to_string(), description: description.to_string(), source, function, s })
}

/// Every claim instantiated for `s` in `2..=7` where it applies.
pub fn claim_catalog() -> Vec<DirichletClaim> {
    let mut out = Vec::new();
    for &(name, parity) in CLAIM_FAMILIES {
        match parity {
            None => out.push(claim(name).expect("listed claim")),
            Some(p) => {
                for s in (2..=7).filter(|&s| p.admits(s)) {
                    out.push(claim(&format!("{name}@{s}")).expect("listed claim"));
                }
            }
        }
    }
    out
}

/// The series-side sequence of a claim.
pub fn claim_source_values(c: &DirichletClaim, limit: usize) -> Result<Vec<BigInt>> {
    match &c.source {
        ClaimSource::Quotient(spec) => Ok(zeta_quotient_coeffs(spec, limit)?.values),
        ClaimSource::DivisorSum(f) => {
            let mut sums = vec![0i64; limit + 1];
            for d in 1..=limit {
                let v = arith_value(*f, d as u64, c.s)?;
                if v != 0 {
                    for n in (d..=limit).step_by(d) {
                        sums[n] += v;
                    }
                }
            }
            Ok(sums.into_iter().skip(1).map(BigInt::from).collect())
        }
    }
}

/// Compares a claim's series side with direct evaluation for `n ≤ limit`.
pub fn verify_claim(c: &DirichletClaim, limit: usize) -> Result<Verdict> {
    let left = claim_source_values(c, limit)?;
    for n in 1..=limit {
        let right = BigInt::from(arith_value(c.function, n as u64, c.s)?);
        if left[n - 1] != right {
            return Ok(Verdict::mismatch(FirstDiff {
                index: n,
                left: left[n - 1].clone(),
                right,
                detail: Some(format!("coefficient vs {}", c.function)),
            }));
        }
    }
    Ok(Verdict::matched())
}

/// Verifies the claim `id` (`name` or `name@s`) for `n ≤ limit`.
pub fn verify_dirichlet(id: &str, limit: usize) -> Result<Verdict> {
    verify_claim(&claim(id)?, limit)
}
