//! Exact truncated power series over arbitrary-precision integers.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of `x^0 … x^N`
//! and every operation works modulo `x^(N+1)`. Infinite products are described
//! symbolically by [`FactorFamily`] values and expanded with [`expand_product`].

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The `±` in a binomial factor `1 ± x^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `sign^n`.
    pub fn pow(self, n: usize) -> Sign {
        if self == Sign::Minus && n % 2 == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

/// Power series truncated after `x^order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

/// Builds a series from a coefficient prefix, zero-padded up to `order`.
pub fn make_series(coeffs: &[i64], order: i64) -> Result<TruncatedSeries> {
    if order < 0 {
        return Err(Error::NegativeOrder(order));
    }
    TruncatedSeries::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect(), order as usize)
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![BigInt::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, BigInt::one())
    }

    /// `coeff · x^exp`, or zero when `exp > order`.
    pub fn monomial(order: usize, exp: usize, coeff: BigInt) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = coeff;
        }
        s
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>, order: usize) -> Result<Self> {
        if coeffs.len() > order + 1 {
            return Err(Error::TooManyCoefficients { len: coeffs.len(), order });
        }
        coeffs.resize(order + 1, BigInt::zero());
        Ok(TruncatedSeries { coeffs })
    }

    /// Builds a series from exactly `order + 1` coefficients produced by `f`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> BigInt) -> Self {
        TruncatedSeries { coeffs: (0..=order).map(f).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn check_order(&self, rhs: &Self) -> Result<()> {
        if self.order() != rhs.order() {
            return Err(Error::OrderMismatch(self.order(), rhs.order()));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// Adds `x^shift · rhs` into `self`, dropping terms beyond the order.
    pub fn add_shifted(&mut self, rhs: &Self, shift: usize) {
        let n = self.order();
        if shift > n {
            return;
        }
        for (i, c) in rhs.coeffs.iter().take(n - shift + 1).enumerate() {
            if !c.is_zero() {
                self.coeffs[i + shift] += c;
            }
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        let n = self.order();
        let mut out = vec![BigInt::zero(); n + 1];
        let rhs_nz: Vec<(usize, &BigInt)> =
            rhs.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(j, b) in &rhs_nz {
                if i + j > n {
                    break;
                }
                out[i + j] += a * b;
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Multiplicative inverse by recursive division: coefficient `n` of the
    /// inverse is determined by the coefficients below `n`.
    pub fn invert(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstant(self.coeffs[0].to_string()));
        }
        let n = self.order();
        let nz: Vec<(usize, &BigInt)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut inv = vec![BigInt::zero(); n + 1];
        inv[0] = BigInt::one();
        for m in 1..=n {
            let mut acc = BigInt::zero();
            for &(k, a) in &nz {
                if k > m {
                    break;
                }
                acc -= a * &inv[m - k];
            }
            inv[m] = acc;
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    /// Replaces `x` by `sign · x^m`.
    pub fn substitute(&self, sign: Sign, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroMultiplier);
        }
        let order = self.order();
        let mut out = Self::zero(order);
        for (n, c) in self.coeffs.iter().enumerate() {
            let e = n * m;
            if e > order {
                break;
            }
            out.coeffs[e] = match sign.pow(n) {
                Sign::Plus => c.clone(),
                Sign::Minus => -c,
            };
        }
        Ok(out)
    }

    /// Multiplies in place by `1 + sign·x^e`.
    pub fn mul_binomial(&mut self, sign: Sign, e: usize) {
        if e == 0 {
            // 1 ± x^0 is the constant 2 or 0.
            match sign {
                Sign::Plus => self.coeffs.iter_mut().for_each(|c| *c *= 2),
                Sign::Minus => self.coeffs.iter_mut().for_each(|c| c.set_zero()),
            }
            return;
        }
        for n in (e..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            match sign {
                Sign::Plus => hi[0] += &lo[n - e],
                Sign::Minus => hi[0] -= &lo[n - e],
            }
        }
    }

    /// Divides in place by `1 + sign·x^e` (`e ≥ 1`); this is the recursive
    /// inverse specialised to a binomial, applied without materialising it.
    pub fn div_binomial(&mut self, sign: Sign, e: usize) {
        assert!(e >= 1, "cannot divide by 1 ± x^0");
        for n in e..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            match sign {
                Sign::Plus => hi[0] -= &lo[n - e],
                Sign::Minus => hi[0] += &lo[n - e],
            }
        }
    }

    /// Keeps only the coefficients of `x^0 … x^order`.
    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs: Vec<BigInt> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, BigInt::zero());
        TruncatedSeries { coeffs }
    }

    /// The series `Σ c(step·n) x^n`, truncated at `⌊order/step⌋`.
    pub fn decimate(&self, step: usize) -> Self {
        assert!(step >= 1);
        TruncatedSeries { coeffs: self.coeffs.iter().step_by(step).cloned().collect() }
    }

    /// Smallest index where the two series disagree, with both values.
    pub fn first_difference(&self, rhs: &Self) -> Option<(usize, BigInt, BigInt)> {
        let n = self.order().min(rhs.order());
        (0..=n)
            .find(|&i| self.coeffs[i] != rhs.coeffs[i])
            .map(|i| (i, self.coeffs[i].clone(), rhs.coeffs[i].clone()))
    }

    /// Comma-separated coefficient list.
    pub fn to_csv(&self) -> String {
        self.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = n == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match n {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

/// Whether a factor family sits in the numerator or denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Power {
    Numerator,
    Denominator,
}

/// The infinite product `∏_{k≥1} (1 + sign·x^(step·k + offset))^power`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FactorFamily {
    pub sign: Sign,
    pub step: u64,
    pub offset: i64,
    pub power: Power,
}

impl FactorFamily {
    pub fn new(sign: Sign, step: u64, offset: i64, power: Power) -> Result<Self> {
        let fam = FactorFamily { sign, step, offset, power };
        fam.validate()?;
        Ok(fam)
    }

    /// `∏ (1 + sign·x^(step·k+offset))`.
    pub fn num(sign: Sign, step: u64, offset: i64) -> Self {
        Self::new(sign, step, offset, Power::Numerator).expect("invalid factor family")
    }

    /// `∏ 1/(1 + sign·x^(step·k+offset))`.
    pub fn den(sign: Sign, step: u64, offset: i64) -> Self {
        Self::new(sign, step, offset, Power::Denominator).expect("invalid factor family")
    }

    pub fn validate(&self) -> Result<()> {
        if self.step == 0 {
            return Err(Error::InvalidFamily("step must be positive".into()));
        }
        if self.step as i64 + self.offset < 1 {
            return Err(Error::InvalidFamily(format!(
                "first exponent {}k{:+} is below 1",
                self.step, self.offset
            )));
        }
        Ok(())
    }

    /// Exponents `step·k + offset ≤ order` for `k = 1, 2, …`.
    pub fn exponents(&self, order: usize) -> impl Iterator<Item = usize> + '_ {
        (1u64..)
            .map(move |k| (self.step * k) as i64 + self.offset)
            .take_while(move |&e| e <= order as i64)
            .map(|e| e as usize)
    }

    /// Multiplies `series` in place by this family's factors.
    pub fn apply(&self, series: &mut TruncatedSeries) {
        let order = series.order();
        for e in self.exponents(order) {
            match self.power {
                Power::Numerator => series.mul_binomial(self.sign, e),
                Power::Denominator => series.div_binomial(self.sign, e),
            }
        }
    }
}

impl fmt::Display for FactorFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.sign {
            Sign::Plus => '+',
            Sign::Minus => '-',
        };
        let step = if self.step == 1 { String::new() } else { self.step.to_string() };
        let exp = match self.offset {
            0 if self.step == 1 => "k".to_string(),
            0 => format!("({step}k)"),
            o => format!("({step}k{o:+})"),
        };
        write!(f, "(1{sign}x^{exp})")?;
        if self.power == Power::Denominator {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

fn factor_regex() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| {
        Regex::new(
            r"^\(1([+-])x\^[({]?(\d*)k([+-]\d+)?[)}]?\)(?:\^\(?(-?\d+)\)?)?$",
        )
        .unwrap()
    })
}

/// Parses a product such as `(1+x^k)(1-x^(2k-1))^-1` or
/// `(1-x^{2k}) * (1-x^(2k-1))^2` into factor families. Integer powers
/// other than ±1 repeat the family.
pub fn parse_product(spec: &str) -> Result<Vec<FactorFamily>> {
    let mut families = Vec::new();
    let compact: String = spec.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    if compact.is_empty() || compact == "1" {
        return Ok(families);
    }
    // Split at each "(1" that opens a new factor.
    let mut starts: Vec<usize> = compact
        .match_indices("(1")
        .filter(|(i, _)| matches!(compact.as_bytes().get(i + 2), Some(b'+' | b'-')))
        .map(|(i, _)| i)
        .collect();
    starts.push(compact.len());
    if starts[0] != 0 {
        return Err(Error::InvalidFamily(format!("cannot parse `{spec}`")));
    }
    for w in starts.windows(2) {
        let token = &compact[w[0]..w[1]];
        let caps = factor_regex()
            .captures(token)
            .ok_or_else(|| Error::InvalidFamily(format!("cannot parse factor `{token}`")))?;
        let sign = if &caps[1] == "+" { Sign::Plus } else { Sign::Minus };
        let step: u64 = if caps[2].is_empty() { 1 } else { caps[2].parse().unwrap() };
        let offset: i64 = caps.get(3).map_or(0, |m| m.as_str().parse().unwrap());
        let pow: i64 = caps.get(4).map_or(1, |m| m.as_str().parse().unwrap());
        if pow == 0 {
            continue;
        }
        let power = if pow > 0 { Power::Numerator } else { Power::Denominator };
        let fam = FactorFamily::new(sign, step, offset, power)?;
        families.extend(std::iter::repeat_n(fam, pow.unsigned_abs() as usize));
    }
    Ok(families)
}

impl FromStr for FactorFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut fams = parse_product(s)?;
        if fams.len() != 1 {
            return Err(Error::InvalidFamily(format!("`{s}` is not a single factor family")));
        }
        Ok(fams.pop().unwrap())
    }
}

/// Expands `∏ families` modulo `x^(order+1)`.
pub fn expand_product(families: &[FactorFamily], order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for fam in families {
        fam.apply(&mut s);
    }
    s
}

/// `θ₄(0,x) = 1 + 2 Σ_{n≥1} (−1)^n x^(n²)`.
pub fn theta4_series(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for n in 1usize.. {
        let e = n * n;
        if e > order {
            break;
        }
        s.coeffs[e] = BigInt::from(if n % 2 == 0 { 2 } else { -2 });
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn make_series_pads_and_validates() {
        assert_eq!(ints(&make_series(&[1], 3).unwrap()), vec![1, 0, 0, 0]);
        assert_eq!(ints(&make_series(&[0, 1], 2).unwrap()), vec![0, 1, 0]);
        assert_eq!(make_series(&[1, 1, 2, 3, 5], 4).unwrap().coeff(4), &BigInt::from(5));
        assert_eq!(make_series(&[1], -1), Err(Error::NegativeOrder(-1)));
        assert!(matches!(make_series(&[1, 2, 3], 1), Err(Error::TooManyCoefficients { .. })));
    }

    #[test]
    fn mul_examples() {
        let n = 6;
        let a = make_series(&[1, -1], n).unwrap();
        let b = make_series(&[1; 7], n).unwrap();
        assert!(a.mul(&b).unwrap().is_one());
        let c = make_series(&[1, 1], 2).unwrap();
        assert_eq!(ints(&c.mul(&c).unwrap()), vec![1, 2, 1]);
        assert!(matches!(a.mul(&c), Err(Error::OrderMismatch(6, 2))));
    }

    #[test]
    fn mul_partition_product_by_euler_function() {
        // Both sides expanded one binomial at a time, then convolved.
        let n = 10;
        let mut p = TruncatedSeries::one(n);
        let mut e = TruncatedSeries::one(n);
        for k in 1..=10 {
            let mut geo = TruncatedSeries::zero(n);
            for j in (0..=n).step_by(k) {
                geo.coeffs[j] = BigInt::one();
            }
            p = p.mul(&geo).unwrap();
            let mut bin = TruncatedSeries::one(n);
            bin.coeffs[k] = BigInt::from(-1);
            e = e.mul(&bin).unwrap();
        }
        assert!(p.mul(&e).unwrap().is_one());
    }

    #[test]
    fn invert_examples() {
        let a = make_series(&[1, -1], 5).unwrap();
        assert_eq!(ints(&a.invert().unwrap()), vec![1; 6]);
        assert!(TruncatedSeries::one(4).invert().unwrap().is_one());
        assert_eq!(
            ints(&theta4_series(9).invert().unwrap()),
            vec![1, 2, 4, 8, 14, 24, 40, 64, 100, 154]
        );
        let bad = make_series(&[2, 1], 3).unwrap();
        assert!(matches!(bad.invert(), Err(Error::NonUnitConstant(_))));
    }

    #[test]
    fn substitute_examples() {
        let a = make_series(&[1, 1, 1], 4).unwrap();
        assert_eq!(ints(&a.substitute(Sign::Plus, 2).unwrap()), vec![1, 0, 1, 0, 1]);
        assert_eq!(a.substitute(Sign::Plus, 1).unwrap(), a);
        assert_eq!(a.substitute(Sign::Plus, 0), Err(Error::ZeroMultiplier));

        // x -> -x sends ∏(1+x^k) to ∏(1-x^(2k-1))(1+x^(2k)), not to ∏(1-x^k).
        let n = 30;
        let distinct = expand_product(&[FactorFamily::num(Sign::Plus, 1, 0)], n);
        let image = distinct.substitute(Sign::Minus, 1).unwrap();
        let expected = expand_product(
            &[FactorFamily::num(Sign::Minus, 2, -1), FactorFamily::num(Sign::Plus, 2, 0)],
            n,
        );
        assert_eq!(image, expected);
        let euler = expand_product(&[FactorFamily::num(Sign::Minus, 1, 0)], n);
        assert_eq!(image.first_difference(&euler).map(|d| d.0), Some(2));
    }

    #[test]
    fn expand_product_examples() {
        let p = expand_product(&[FactorFamily::den(Sign::Minus, 1, 0)], 10);
        assert_eq!(ints(&p), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let s3 = expand_product(
            &[FactorFamily::num(Sign::Minus, 3, 0), FactorFamily::den(Sign::Minus, 1, 0)],
            8,
        );
        assert_eq!(ints(&s3), vec![1, 1, 2, 2, 4, 5, 7, 9, 13]);
        assert!(expand_product(&[], 5).is_one());
    }

    #[test]
    fn theta4_examples() {
        assert_eq!(ints(&theta4_series(5)), vec![1, -2, 0, 0, 2, 0]);
        let triple = parse_product("(1-x^(2k))(1-x^(2k-1))^2").unwrap();
        assert_eq!(theta4_series(50), expand_product(&triple, 50));
    }

    #[test]
    fn factor_family_validation_and_parsing() {
        assert!(FactorFamily::new(Sign::Minus, 0, 1, Power::Numerator).is_err());
        assert!(FactorFamily::new(Sign::Minus, 2, -2, Power::Numerator).is_err());
        let fam: FactorFamily = "(1-x^(6k-5))^-1".parse().unwrap();
        assert_eq!(fam, FactorFamily::den(Sign::Minus, 6, -5));
        assert_eq!(fam.to_string(), "(1-x^(6k-5))^-1");
        assert_eq!(fam.exponents(20).collect::<Vec<_>>(), vec![1, 7, 13, 19]);
        let fams = parse_product("(1+x^k) * (1-x^{2k})^-2").unwrap();
        assert_eq!(fams.len(), 3);
        assert!(parse_product("(1+y^k)").is_err());
        assert!(parse_product("").unwrap().is_empty());
        for f in &fams {
            assert_eq!(f.to_string().parse::<FactorFamily>().unwrap(), *f);
        }
    }

    #[test]
    fn display_is_readable() {
        let s = make_series(&[1, -2, 0, 3], 3).unwrap();
        assert_eq!(s.to_string(), "1 - 2x + 3x^3 + O(x^4)");
        assert_eq!(s.to_csv(), "1,-2,0,3");
    }
}
