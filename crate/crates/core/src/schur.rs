//! Schur polynomials and the Green-parastatistics partition functions built
//! from them.
//!
//! Schur polynomials are expanded from semistandard tableaux, aggregated
//! through the branching rule: removing the boxes that hold the largest
//! entry `M` leaves a tableau of a shape differing by a horizontal strip.
//! Determinant formulas are only ever evaluated at rational points.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{FirstDiff, Verdict};

/// Largest number of variables accepted by the bounded sums.
pub const MAX_VARIABLES: usize = 6;
/// Largest box width accepted by [`green_parafermi_sum`].
pub const MAX_ORDER: u32 = 6;
/// Largest total degree accepted by the truncated sums.
pub const MAX_DEGREE: u32 = 10;

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IntegerPartition {
    parts: Vec<u32>,
}

impl IntegerPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("{parts:?} is not a partition")));
        }
        Ok(IntegerPartition { parts })
    }

    pub fn empty() -> Self {
        IntegerPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Self {
        let parts = (1..=self.largest())
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        IntegerPartition { parts }
    }

    /// `λ_i` with zero padding.
    fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", items.join(","))
    }
}

/// Partitions with at most `max_len` parts, each at most `max_part`, and
/// weight at most `max_weight`.
pub fn partitions_in_box(max_part: u32, max_len: usize, max_weight: u32) -> Vec<IntegerPartition> {
    fn rec(max_part: u32, slots: usize, budget: u32, prefix: &mut Vec<u32>, out: &mut Vec<IntegerPartition>) {
        out.push(IntegerPartition { parts: prefix.clone() });
        if slots == 0 {
            return;
        }
        for p in 1..=max_part.min(budget) {
            prefix.push(p);
            rec(p, slots - 1, budget - p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(max_part, max_len, max_weight, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Integer polynomial in `M` variables, optionally truncated above a total
/// degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultivariatePolynomial {
    nvars: usize,
    cap: Option<u32>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultivariatePolynomial {
    pub fn zero(nvars: usize, cap: Option<u32>) -> Self {
        MultivariatePolynomial { nvars, cap, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize, cap: Option<u32>) -> Self {
        let mut p = Self::zero(nvars, cap);
        p.add_term(vec![0; nvars], BigInt::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn cap(&self) -> Option<u32> {
        self.cap
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Adds `c·x^exps`, dropping it if it exceeds the cap.
    pub fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if c.is_zero() || self.cap.is_some_and(|d| exps.iter().sum::<u32>() > d) {
            return;
        }
        let entry = self.terms.entry(exps).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add_assign(&mut self, rhs: &Self) {
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "variable counts differ");
        let cap = match (self.cap, rhs.cap) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let mut out = Self::zero(self.nvars, cap);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Drops every term of total degree above `d` and records the cap.
    pub fn truncate(&self, d: u32) -> Self {
        let mut out = Self::zero(self.nvars, Some(d));
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.nvars {
            return Err(Error::InvalidArgument(format!(
                "point has {} coordinates, polynomial has {} variables",
                point.len(),
                self.nvars
            )));
        }
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (x, &k) in point.iter().zip(e) {
                term *= num_traits::pow(x.clone(), k as usize);
            }
            total += term;
        }
        Ok(total)
    }

    /// Invariance under every transposition of adjacent variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(e, c)| {
                let mut swapped = e.clone();
                swapped.swap(i, i + 1);
                self.terms.get(&swapped) == Some(c)
            })
        })
    }

    /// Sum of all coefficients, i.e. the value at `(1, …, 1)`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Smallest monomial (by total degree, then exponent vector) where the
    /// two polynomials differ.
    pub fn first_difference(&self, rhs: &Self) -> Option<(Vec<u32>, BigInt, BigInt)> {
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().chain(rhs.terms.keys()).collect();
        keys.sort_by_key(|e| (e.iter().sum::<u32>(), (*e).clone()));
        keys.dedup();
        keys.into_iter().find_map(|e| {
            let (a, b) = (self.coeff(e), rhs.coeff(e));
            (a != b).then(|| (e.clone(), a, b))
        })
    }
}

/// Renders an exponent vector as `x1^2*x3`.
pub fn monomial_string(exps: &[u32]) -> String {
    let parts: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
        .collect();
    if parts.is_empty() { "1".to_string() } else { parts.join("*") }
}

impl fmt::Display for MultivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by_key(|e| (e.iter().sum::<u32>(), std::cmp::Reverse((*e).clone())));
        for (i, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let sign = if c.is_negative() { "-" } else { "+" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            let mono = monomial_string(e);
            match (mag.is_one(), mono.as_str()) {
                (_, "1") => write!(f, "{mag}")?,
                (true, m) => write!(f, "{m}")?,
                (false, m) => write!(f, "{mag}*{m}")?,
            }
        }
        Ok(())
    }
}

/// Memoized Schur polynomials, keyed by shape and variable count.
#[derive(Default)]
pub struct SchurCache {
    memo: HashMap<(Vec<u32>, usize), MultivariatePolynomial>,
}

impl SchurCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `s_λ(x_1, …, x_m)`.
    pub fn get(&mut self, lambda: &IntegerPartition, m: usize) -> MultivariatePolynomial {
        if lambda.len() > m {
            return MultivariatePolynomial::zero(m, None);
        }
        if m == 0 {
            return MultivariatePolynomial::one(0, None);
        }
        let key = (lambda.parts.clone(), m);
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        // Entries equal to m form a horizontal strip λ/μ with
        // λ_{i+1} ≤ μ_i ≤ λ_i.
        let mut out = MultivariatePolynomial::zero(m, None);
        for mu in horizontal_strip_removals(lambda) {
            if mu.len() > m - 1 {
                continue;
            }
            let strip = lambda.weight() - mu.weight();
            let sub = self.get(&mu, m - 1);
            for (e, c) in &sub.terms {
                let mut ext = e.clone();
                ext.push(strip);
                out.add_term(ext, c.clone());
            }
        }
        self.memo.insert(key, out.clone());
        out
    }
}

/// Every `μ` with `λ/μ` a horizontal strip.
fn horizontal_strip_removals(lambda: &IntegerPartition) -> Vec<IntegerPartition> {
    fn rec(lambda: &IntegerPartition, i: usize, prefix: &mut Vec<u32>, out: &mut Vec<IntegerPartition>) {
        if i == lambda.len() {
            let parts: Vec<u32> = prefix.iter().copied().filter(|&p| p > 0).collect();
            out.push(IntegerPartition { parts });
            return;
        }
        for v in lambda.part(i + 1)..=lambda.part(i) {
            prefix.push(v);
            rec(lambda, i + 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 0, &mut Vec::new(), &mut out);
    out
}

/// `s_λ(x_1, …, x_M)` as a sum over semistandard tableaux.
pub fn schur_poly(lambda: &IntegerPartition, m: usize) -> MultivariatePolynomial {
    SchurCache::new().get(lambda, m)
}

/// Exact determinant by fraction-valued Gaussian elimination.
pub fn determinant(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let n = a.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &p;
            let (top, bottom) = a.split_at_mut(r);
            for (x, y) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= &factor * y;
            }
        }
    }
    det
}

fn check_distinct(point: &[BigRational]) -> Result<()> {
    for i in 0..point.len() {
        for j in i + 1..point.len() {
            if point[i] == point[j] {
                return Err(Error::RepeatedCoordinates);
            }
        }
    }
    Ok(())
}

fn rpow(x: &BigRational, k: u32) -> BigRational {
    num_traits::pow(x.clone(), k as usize)
}

/// `det(x_i^(λ_j + M − j)) / det(x_i^(M − j))` with `M` the point length.
pub fn bialternant_eval(lambda: &IntegerPartition, point: &[BigRational]) -> Result<BigRational> {
    check_distinct(point)?;
    let m = point.len();
    if lambda.len() > m {
        return Ok(BigRational::zero());
    }
    let matrix = |shift: &dyn Fn(usize) -> u32| -> Vec<Vec<BigRational>> {
        point.iter().map(|x| (0..m).map(|j| rpow(x, shift(j))).collect()).collect()
    };
    let num = determinant(matrix(&|j| lambda.part(j) + (m - 1 - j) as u32));
    let den = determinant(matrix(&|j| (m - 1 - j) as u32));
    Ok(num / den)
}

fn check_bounds(name: &str, value: u64, max: u64) -> Result<()> {
    if value == 0 || value > max {
        return Err(Error::OutOfRange { value: format!("{name} = {value}"), range: format!("1..={max}") });
    }
    Ok(())
}

/// `Σ_{λ_1 ≤ s, l(λ) ≤ M} s_λ(x_1, …, x_M)`.
pub fn green_parafermi_sum(s: u32, m: usize) -> Result<MultivariatePolynomial> {
    check_bounds("s", s as u64, MAX_ORDER as u64)?;
    check_bounds("M", m as u64, MAX_VARIABLES as u64)?;
    let mut cache = SchurCache::new();
    let mut out = MultivariatePolynomial::zero(m, None);
    for lambda in partitions_in_box(s, m, s * m as u32) {
        out.add_assign(&cache.get(&lambda, m));
    }
    Ok(out)
}

/// `det(x_i^(s+2M−j) − x_i^(j−1)) / det(x_i^(2M−j) − x_i^(j−1))`.
pub fn green_parafermi_det(s: u32, point: &[BigRational]) -> Result<BigRational> {
    let m = point.len();
    if m == 0 {
        return Err(Error::InvalidArgument("point must have at least one coordinate".into()));
    }
    check_distinct(point)?;
    let matrix = |top: u32| -> Vec<Vec<BigRational>> {
        point
            .iter()
            .map(|x| (1..=m as u32).map(|j| rpow(x, top - j) - rpow(x, j - 1)).collect())
            .collect()
    };
    let den = determinant(matrix(2 * m as u32));
    if den.is_zero() {
        return Err(Error::SingularDenominator);
    }
    Ok(determinant(matrix(s + 2 * m as u32)) / den)
}

/// `Σ_{l(λ) ≤ s, |λ| ≤ D} s_λ(x_1, …, x_M)`, the parabose sum truncated at
/// total degree `D`.
pub fn parabose_sum(s: u32, m: usize, degree: u32) -> Result<MultivariatePolynomial> {
    check_bounds("M", m as u64, MAX_VARIABLES as u64)?;
    if degree > MAX_DEGREE {
        return Err(Error::OutOfRange { value: format!("D = {degree}"), range: format!("0..={MAX_DEGREE}") });
    }
    let mut cache = SchurCache::new();
    let mut out = MultivariatePolynomial::zero(m, Some(degree));
    for lambda in partitions_in_box(degree, m.min(s as usize), degree) {
        out.add_assign(&cache.get(&lambda, m));
    }
    Ok(out)
}

/// `∏_i 1/(1 − x_i) ∏_{i<j} 1/(1 − x_i x_j)` truncated at total degree `D`.
pub fn littlewood_product(m: usize, degree: u32) -> MultivariatePolynomial {
    let geometric = |exps: Vec<u32>| {
        let mut g = MultivariatePolynomial::zero(m, Some(degree));
        let step: u32 = exps.iter().sum();
        for k in 0..=degree / step {
            g.add_term(exps.iter().map(|e| e * k).collect(), BigInt::one());
        }
        g
    };
    let mut out = MultivariatePolynomial::one(m, Some(degree));
    for i in 0..m {
        let mut e = vec![0; m];
        e[i] = 1;
        out = out.mul(&geometric(e));
    }
    for i in 0..m {
        for j in i + 1..m {
            let mut e = vec![0; m];
            e[i] = 1;
            e[j] = 1;
            out = out.mul(&geometric(e));
        }
    }
    out
}

/// For `s ≥ M` the length bound is vacuous and the parabose sum is the full
/// Littlewood sum; compares it with the product up to degree `D`.
pub fn littlewood_check(m: usize, degree: u32, s: u32) -> Result<Verdict> {
    if (s as usize) < m {
        return Err(Error::InvalidArgument(format!("need s ≥ M, got s = {s}, M = {m}")));
    }
    let sum = parabose_sum(s, m, degree)?;
    let product = littlewood_product(m, degree);
    Ok(match sum.first_difference(&product) {
        None => Verdict::matched(),
        Some((e, left, right)) => Verdict::mismatch(FirstDiff {
            index: e.iter().sum::<u32>() as usize,
            left,
            right,
            detail: Some(monomial_string(&e)),
        }),
    })
}

/// A reproducible random rational point with pairwise distinct coordinates
/// avoiding `0`, `±1` and `x_i x_j = 1`, where the determinant formulas
/// degenerate.
pub fn random_point(m: usize, seed: u64) -> Vec<BigRational> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut point: Vec<BigRational> = Vec::with_capacity(m);
    while point.len() < m {
        let num: i64 = rng.gen_range(-12..=12);
        let den: i64 = rng.gen_range(1..=7);
        let x = BigRational::new(num.into(), den.into());
        let bad = x.is_zero()
            || x.abs().is_one()
            || point.iter().any(|y| *y == x || (y * &x).is_one());
        if !bad {
            point.push(x);
        }
    }
    point
}
