//! Runs verifications from the core library and turns them into checks.

use std::time::Instant;

use partition_verify::analytic::{
    hagis_check, hyperbolic_product_check, mellin_theta4, parastat_half_check, theta_grid, theta_residuals,
    MELLIN_TOLERANCE,
};
use partition_verify::dirichlet::{claim, claim_catalog, verify_claim, DirichletClaim};
use partition_verify::identities::{self, find, verify_record};
use partition_verify::schur::{
    bialternant_eval, green_parafermi_det, green_parafermi_sum, littlewood_check, partitions_in_box,
    random_point, schur_poly,
};
use partition_verify::{Error, FirstDiff, Result, Verdict};

use crate::report::{Check, CheckStatus};

/// Mellin closed form vs quadrature.
pub const MELLIN_TOL: f64 = 1e-6;
/// Theta relations on the grid.
pub const THETA_TOL: f64 = 1e-10;
/// Exact hyperbolic identity.
pub const HYPERBOLIC_TOL: f64 = 1e-12;
/// Parastatistics decomposition.
pub const PARASTAT_TOL: f64 = 1e-10;

fn timed<T>(f: impl FnOnce() -> T) -> (T, u128) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_millis())
}

pub fn identity(id: &str, order: Option<usize>) -> Result<Check> {
    let record = find(id)?;
    let order = order.unwrap_or(record.default_order);
    let (verdict, ms) = timed(|| verify_record(record, order));
    let mut check = Check::from_verdict("identities", id, verdict).param("order", order).elapsed(ms);
    check.claim = record.claim;
    Ok(check)
}

pub fn all_identities(scale: f64) -> Vec<Check> {
    identities::verify_all(scale)
        .into_iter()
        .map(|o| {
            let mut check =
                Check::from_verdict("identities", o.id, o.verdict).param("order", o.order).elapsed(o.elapsed_ms);
            check.claim = o.claim;
            check
        })
        .collect()
}

fn dirichlet_check(c: &DirichletClaim, limit: usize) -> Result<Check> {
    let (verdict, ms) = timed(|| verify_claim(c, limit));
    Ok(Check::from_verdict("dirichlet", c.id.clone(), verdict?).param("limit", limit).elapsed(ms))
}

/// One claim, or the whole claim catalog when `id` is `None`.
pub fn dirichlet(id: Option<&str>, limit: usize) -> Result<Vec<Check>> {
    match id {
        Some(id) => Ok(vec![dirichlet_check(&claim(id)?, limit)?]),
        None => claim_catalog().iter().map(|c| dirichlet_check(c, limit)).collect(),
    }
}

pub fn mellin(s: f64) -> Result<Check> {
    let (r, ms) = timed(|| mellin_theta4(s));
    let r = r?;
    Ok(Check::tolerance("analytic", "mellin", r.abs_err, MELLIN_TOL)
        .param("s", s)
        .param("quadrature_tolerance", MELLIN_TOLERANCE)
        .value("quadrature", r.lhs)
        .value("closed_form", r.rhs)
        .elapsed(ms))
}

/// Theta relations at `t`, or the worst residual over the grid.
pub fn theta(t: Option<f64>) -> Result<Check> {
    let points = t.map_or_else(theta_grid, |t| vec![t]);
    let start = Instant::now();
    let (mut rearrangement, mut functional): (f64, f64) = (0.0, 0.0);
    for &t in &points {
        let r = theta_residuals(t)?;
        rearrangement = rearrangement.max(r.rearrangement);
        functional = functional.max(r.functional_equation);
    }
    let check = Check::tolerance("analytic", "theta", rearrangement.max(functional), THETA_TOL)
        .value("rearrangement", rearrangement)
        .value("functional_equation", functional)
        .elapsed(start.elapsed().as_millis());
    Ok(match t {
        Some(t) => check.param("t", t),
        None => check.param("grid", "0.1..3.0"),
    })
}

/// The record is reported as computed; which candidate it favours is read
/// from the values.
pub fn hagis(s: u64, n: u64) -> Result<Check> {
    let (r, ms) = timed(|| hagis_check(s, n));
    let r = r?;
    Ok(Check::new("analytic", "hagis", CheckStatus::Pass)
        .param("s", s)
        .param("n", n)
        .value("empirical", r.empirical)
        .value("paper_candidate", r.paper_candidate)
        .value("standard_candidate", r.standard_candidate)
        .elapsed(ms))
}

/// The identity residual must vanish and the product residual must shrink
/// when the number of factors grows tenfold.
pub fn hyperbolic(t: f64, terms: usize) -> Result<Check> {
    let start = Instant::now();
    let fine = hyperbolic_product_check(t, terms)?;
    let coarse = hyperbolic_product_check(t, (terms / 10).max(1))?;
    let shrinking = terms < 10 || fine.product_residual < coarse.product_residual || fine.product_residual == 0.0;
    let mut check = Check::tolerance("analytic", "hyperbolic", fine.identity_residual, HYPERBOLIC_TOL)
        .param("t", t)
        .param("terms", terms)
        .value("product_residual", fine.product_residual)
        .value("coarse_product_residual", coarse.product_residual)
        .elapsed(start.elapsed().as_millis());
    if !shrinking {
        check.status = CheckStatus::Fail;
    }
    Ok(check)
}

pub fn parastat(t: f64) -> Result<Check> {
    let (r, ms) = timed(|| parastat_half_check(t));
    let r = r?;
    Ok(Check::tolerance("analytic", "parastat", r.max_residual(), PARASTAT_TOL)
        .param("t", t)
        .value("z_half", r.z_half)
        .value("z_three_half", r.z_three_half)
        .elapsed(ms))
}

fn exact_mismatch(index: usize, detail: String) -> Verdict {
    Verdict::mismatch(FirstDiff { index, left: 0.into(), right: 0.into(), detail: Some(detail) })
}

/// Tableau sums against determinant ratios at `points` random rational
/// points: every Schur polynomial in the `s × M` box against its
/// bialternant, then the box sum against the parafermion determinant.
pub fn schur_det(s: u32, m: usize, points: u64, seed: u64) -> Result<Check> {
    let start = Instant::now();
    let sum = green_parafermi_sum(s, m)?;
    let mut verdict = Verdict::matched();
    'shapes: for lambda in partitions_in_box(s, m, s * m as u32) {
        let poly = schur_poly(&lambda, m);
        for k in 0..points {
            let point = random_point(m, seed + k);
            if poly.eval(&point)? != bialternant_eval(&lambda, &point)? {
                verdict = exact_mismatch(k as usize, format!("s_{lambda} vs bialternant"));
                break 'shapes;
            }
        }
    }
    if verdict.is_match() {
        let (mut checked, mut k) = (0, 0);
        while checked < points {
            let point = random_point(m, seed + points + k);
            k += 1;
            let det = match green_parafermi_det(s, &point) {
                Err(Error::SingularDenominator) => continue,
                other => other?,
            };
            if sum.eval(&point)? != det {
                verdict = exact_mismatch(checked as usize, "box sum vs determinant".into());
                break;
            }
            checked += 1;
        }
    }
    Ok(Check::from_verdict("schur", "det-vs-ssyt", verdict)
        .param("s", s)
        .param("m", m)
        .param("points", points)
        .param("seed", seed)
        .elapsed(start.elapsed().as_millis()))
}

pub fn schur_littlewood(m: usize, d: u32, s: u32) -> Result<Check> {
    let (verdict, ms) = timed(|| littlewood_check(m, d, s));
    Ok(Check::from_verdict("schur", "littlewood", verdict?).param("m", m).param("d", d).param("s", s).elapsed(ms))
}
