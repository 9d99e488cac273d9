//! Floating-point checks: theta functional equations, the Mellin transform of
//! θ₄, hyperbolic products, the p = 1/2, 3/2 parastatistics split and the
//! growth rate of parafermion partition counts.

use std::f64::consts::PI;

use num_bigint::BigInt;
use serde::Serialize;
use statrs::function::gamma::gamma;

use crate::error::{Error, Result};
use crate::partitions::{count_table, PartFilter, PartitionConstraint};

/// Which theta function [`theta_value`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ThetaVariant {
    /// `θ(t) = Σ_{n∈ℤ} e^(−n²πt)`
    Theta,
    /// `θ₄(t) = Σ_{n∈ℤ} (−1)^n e^(−n²πt)`
    Theta4,
}

/// `Σ_{n≥1} sign(n) e^(−n²πt)` for `t ≥ 1`, stopping once terms vanish.
fn tail_sum(t: f64, alternating: bool) -> f64 {
    let mut sum = 0.0;
    for n in 1.. {
        let term = (-(n * n) as f64 * PI * t).exp();
        if term < 1e-18 {
            break;
        }
        sum += if alternating && n % 2 == 1 { -term } else { term };
    }
    sum
}

/// `θ₂(u) = 2 Σ_{n≥0} e^(−(n+½)²πu)`.
fn theta2(u: f64) -> f64 {
    let mut sum = 0.0;
    for n in 0.. {
        let h = n as f64 + 0.5;
        let term = (-h * h * PI * u).exp();
        sum += term;
        if term < 1e-18 * sum.max(1e-300) {
            break;
        }
    }
    2.0 * sum
}

/// `θ(t)` or `θ₄(t)` for `t > 0`; arguments below 1 go through the
/// functional equation first.
pub fn theta_value(t: f64, variant: ThetaVariant) -> Result<f64> {
    if t.is_nan() || t <= 0.0 || t.is_infinite() {
        return Err(Error::OutOfRange { value: t.to_string(), range: "(0, ∞)".into() });
    }
    Ok(match variant {
        ThetaVariant::Theta if t >= 1.0 => 1.0 + 2.0 * tail_sum(t, false),
        ThetaVariant::Theta => (1.0 + 2.0 * tail_sum(1.0 / t, false)) / t.sqrt(),
        ThetaVariant::Theta4 if t >= 1.0 => 1.0 + 2.0 * tail_sum(t, true),
        ThetaVariant::Theta4 => theta2(1.0 / t) / t.sqrt(),
    })
}

/// Plain summation of `θ` or `θ₄` with no functional equation, for any
/// `t > 0`; slow for small `t` but independent of [`theta_value`].
pub fn theta_direct(t: f64, variant: ThetaVariant) -> Result<f64> {
    if t.is_nan() || t <= 0.0 || t.is_infinite() {
        return Err(Error::OutOfRange { value: t.to_string(), range: "(0, ∞)".into() });
    }
    Ok(1.0 + 2.0 * tail_sum(t, variant == ThetaVariant::Theta4))
}

/// Residuals of the two theta relations at one argument.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThetaResiduals {
    pub t: f64,
    /// `|θ₄(t) − (2θ(4t) − θ(t))|`
    pub rearrangement: f64,
    /// `|θ(t) − t^(−1/2) θ(1/t)|`, both sides summed directly
    pub functional_equation: f64,
}

pub fn theta_residuals(t: f64) -> Result<ThetaResiduals> {
    let th = |u| theta_value(u, ThetaVariant::Theta);
    let rearrangement = (theta_value(t, ThetaVariant::Theta4)? - (2.0 * th(4.0 * t)? - th(t)?)).abs();
    let direct = |u| theta_direct(u, ThetaVariant::Theta);
    let functional_equation = (direct(t)? - direct(1.0 / t)? / t.sqrt()).abs();
    Ok(ThetaResiduals { t, rearrangement, functional_equation })
}

/// The grid `t = 0.1, 0.2, …, 3.0`.
pub fn theta_grid() -> Vec<f64> {
    (1..=30).map(|k| k as f64 / 10.0).collect()
}

/// Dirichlet eta `η(s) = Σ (−1)^(n−1) n^(−s)` by Cohen–Rodriguez Villegas–Zagier
/// acceleration of the alternating series.
pub fn eta(s: f64) -> f64 {
    const TERMS: i32 = 40;
    let n = TERMS as f64;
    let mut d = (3.0 + 8f64.sqrt()).powi(TERMS);
    d = (d + 1.0 / d) / 2.0;
    let mut b = -1.0;
    let mut c = -d;
    let mut sum = 0.0;
    for k in 0..TERMS {
        let kf = k as f64;
        c = b - c;
        sum += c / (kf + 1.0).powf(s);
        b = (kf + n) * (kf - n) * b / ((kf + 0.5) * (kf + 1.0));
    }
    sum / d
}

/// Riemann zeta for real `s > 1` by Euler–Maclaurin summation.
pub fn zeta(s: f64) -> f64 {
    assert!(s > 1.0, "zeta needs s > 1");
    // B_{2k}/(2k)! for k = 1..7
    const B: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 720.0,
        1.0 / 30240.0,
        -1.0 / 1209600.0,
        1.0 / 47900160.0,
        -691.0 / 1307674368000.0,
        1.0 / 74724249600.0,
    ];
    let n = 20.0f64;
    let mut sum: f64 = (1..20).map(|k| (k as f64).powf(-s)).sum();
    sum += n.powf(1.0 - s) / (s - 1.0) + 0.5 * n.powf(-s);
    // rising factorial s(s+1)…(s+2k−2) times N^(−s−2k+1)
    let mut rising = s;
    let mut power = n.powf(-s - 1.0);
    for (k, b) in B.iter().enumerate() {
        sum += b * rising * power;
        let m = 2.0 * k as f64;
        rising *= (s + m + 1.0) * (s + m + 2.0);
        power /= n * n;
    }
    sum
}

/// Quadrature against the closed form of the θ₄ Mellin transform.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MellinCheckResult {
    pub s: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_err: f64,
}

/// Default absolute tolerance for each quadrature piece.
pub const MELLIN_TOLERANCE: f64 = 1e-9;

/// `−2 π^(−s/2) Γ(s/2) η(s) + 2/s`.
pub fn mellin_closed_form(s: f64) -> f64 {
    -2.0 * PI.powf(-s / 2.0) * gamma(s / 2.0) * eta(s) + 2.0 / s
}

/// Compares `∫₁^∞ t^(s/2−1)(θ₄(t)−1) dt + ∫₀¹ t^(s/2−1) θ₄(t) dt` with
/// its closed form, for `s ∈ (0, 4]`.
pub fn mellin_theta4(s: f64) -> Result<MellinCheckResult> {
    mellin_theta4_with_tolerance(s, MELLIN_TOLERANCE)
}

pub fn mellin_theta4_with_tolerance(s: f64, tol: f64) -> Result<MellinCheckResult> {
    if !(s > 0.0 && s <= 4.0) {
        return Err(Error::OutOfRange { value: s.to_string(), range: "(0, 4]".into() });
    }
    // θ₄(t) − 1 ~ −2e^(−πt): negligible beyond t = 40.
    let upper = quadrature::integrate(
        |t: f64| t.powf(s / 2.0 - 1.0) * 2.0 * tail_sum(t, true),
        1.0,
        40.0,
        tol,
    )
    .integral;
    // On (0, 1) substitute u = 1/t: θ₄(1/u) = √u θ₂(u) ~ 2√u e^(−πu/4).
    let lower = quadrature::integrate(|u: f64| u.powf(-s / 2.0 - 0.5) * theta2(u), 1.0, 80.0, tol).integral;
    let lhs = upper + lower;
    let rhs = mellin_closed_form(s);
    Ok(MellinCheckResult { s, lhs, rhs, abs_err: (lhs - rhs).abs() })
}

/// Residuals of the hyperbolic identities at one argument.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HyperbolicCheck {
    pub t: f64,
    pub terms: usize,
    /// `|2cosh(t/2) − sinh(t)/sinh(t/2)|`
    pub identity_residual: f64,
    /// `|2cosh(t/2) − 2∏_{k<K}(1 + t²/((2k+1)²π²))|`
    pub product_residual: f64,
}

pub fn hyperbolic_product_check(t: f64, terms: usize) -> Result<HyperbolicCheck> {
    if t.is_nan() || t <= 0.0 || terms == 0 {
        return Err(Error::InvalidArgument("need t > 0 and at least one product term".into()));
    }
    let lhs = 2.0 * (t / 2.0).cosh();
    let identity_residual = (lhs - t.sinh() / (t / 2.0).sinh()).abs();
    let mut log_prod = 0.0;
    for k in 0..terms {
        let odd = (2 * k + 1) as f64 * PI;
        log_prod += (t * t / (odd * odd)).ln_1p();
    }
    let product_residual = (lhs - 2.0 * log_prod.exp()).abs();
    Ok(HyperbolicCheck { t, terms, identity_residual, product_residual })
}

/// `Z_{1/2}(t) = e^(−t/2) / (1 − e^(−2t))`, `t = βω`.
pub fn z_half(t: f64) -> f64 {
    (-t / 2.0).exp() / -(-2.0 * t).exp_m1()
}

/// `Z_{3/2}(t) = e^(−3t/2) / (1 − e^(−2t))`.
pub fn z_three_half(t: f64) -> f64 {
    (-1.5 * t).exp() / -(-2.0 * t).exp_m1()
}

/// `Σ_{n≥0} e^(−t(2n + offset))`, summed term by term.
pub fn geometric_level_sum(t: f64, offset: f64) -> f64 {
    let mut sum = 0.0;
    for n in 0.. {
        let term = (-t * (2.0 * n as f64 + offset)).exp();
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
    }
    sum
}

/// Residuals of `Z_{1/2} + Z_{3/2} = Z_B(β) = Z_B(2β) Z_F(β)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParastatCheck {
    pub t: f64,
    pub z_half: f64,
    pub z_three_half: f64,
    /// Against the oscillator `Z_B = e^(−t/2)/(1 − e^(−t))`.
    pub boson_residual: f64,
    /// Against `Z_B(2β) Z_F(β)` with `Z_F = 2cosh(t/2)`.
    pub product_residual: f64,
}

impl ParastatCheck {
    pub fn max_residual(&self) -> f64 {
        self.boson_residual.max(self.product_residual)
    }
}

pub fn parastat_half_check(t: f64) -> Result<ParastatCheck> {
    if t.is_nan() || t <= 0.0 {
        return Err(Error::InvalidArgument("need t > 0".into()));
    }
    let half = z_half(t);
    let three_half = z_three_half(t);
    let sum = half + three_half;
    let boson = (-t / 2.0).exp() / -(-t).exp_m1();
    let boson_2b = (-t).exp() / -(-2.0 * t).exp_m1();
    let fermion = 2.0 * (t / 2.0).cosh();
    Ok(ParastatCheck {
        t,
        z_half: half,
        z_three_half: three_half,
        boson_residual: (sum - boson).abs(),
        product_residual: (sum - boson_2b * fermion).abs(),
    })
}

/// Empirical exponential growth of parafermion partition counts against
/// two candidate constants.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HagisRecord {
    pub s: u64,
    pub n: u64,
    /// `ln p(n, s) / √n`
    pub empirical: f64,
    /// `π √(2s / (3(1+s)))`
    pub paper_candidate: f64,
    /// `π √(2(s−1) / (3s))`
    pub standard_candidate: f64,
}

/// Natural logarithm of a positive big integer.
pub fn ln_bigint(v: &BigInt) -> f64 {
    let bits = v.bits();
    if bits <= 1000 {
        let f: f64 = v.to_string().parse().expect("decimal digits");
        return f.ln();
    }
    let shift = bits - 64;
    let top: BigInt = v >> shift;
    let f: f64 = top.to_string().parse().expect("decimal digits");
    f.ln() + shift as f64 * std::f64::consts::LN_2
}

pub const HAGIS_MAX_N: u64 = 10_000;

/// Counts partitions of `n` with every multiplicity below `s` (equinumerous
/// with parts not divisible by `s`, which the counter handles faster).
pub fn hagis_check(s: u64, n: u64) -> Result<HagisRecord> {
    if !(2..=10).contains(&s) {
        return Err(Error::OutOfRange { value: s.to_string(), range: "2..=10".into() });
    }
    if n == 0 || n > HAGIS_MAX_N {
        return Err(Error::OutOfRange { value: n.to_string(), range: format!("1..={HAGIS_MAX_N}") });
    }
    let c = PartitionConstraint::parts(PartFilter::NotDivisibleBy(s));
    let count = count_table(n, &c).swap_remove(n as usize);
    let sf = s as f64;
    Ok(HagisRecord {
        s,
        n,
        empirical: ln_bigint(&count) / (n as f64).sqrt(),
        paper_candidate: PI * (2.0 * sf / (3.0 * (1.0 + sf))).sqrt(),
        standard_candidate: PI * (2.0 * (sf - 1.0) / (3.0 * sf)).sqrt(),
    })
}
