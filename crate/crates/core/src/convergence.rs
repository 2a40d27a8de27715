//! Radius of convergence of the series solution, analytically and
//! empirically.
//!
//! The coefficient of `w^{2n+1}` is `c_n A^{n+1} B^n`, whose n-th root
//! tends to `4|AB|`; the series in `w` therefore converges inside
//! `1 / (2 sqrt(|AB|))`. The empirical route recovers that value from
//! the exact big-integer coefficients via the root test, entirely in
//! log space: `c_1000` has almost 600 decimal digits, far past f64
//! range, so magnitudes are carried as logarithms from the start.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

use crate::catalan::catalan_number;
use crate::solver::QuadraticParams;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConvergenceError {
    #[error("root-test estimate is undefined when A = 0 or B = 0")]
    DegenerateParams,
}

/// Analytic radius of convergence: `1 / (2 sqrt(|AB|))`.
///
/// When `A = 0` the series is identically zero and when `B = 0` it is
/// the polynomial `A w`; both converge everywhere, so the radius is
/// reported as `+inf` in those regimes.
pub fn analytic_radius(params: QuadraticParams) -> f64 {
    if params.a_is_zero() || params.b_is_zero() {
        f64::INFINITY
    } else {
        1.0 / (2.0 * (params.a * params.b).abs().sqrt())
    }
}

/// Root-test estimate of the radius from the exact degree-`2n+1`
/// coefficient.
///
/// Computes `rho_n = |c_n A^{n+1} B^n|^{1/n}` in log space and returns
/// `1 / sqrt(rho_n)`: the even-degree subseries in `w^2` has radius
/// `1 / (4|AB|)`, and the radius in `w` is its square root. Tends to
/// the analytic radius as `n` grows.
pub fn hadamard_estimate(params: QuadraticParams, n: usize) -> Result<f64, ConvergenceError> {
    if params.a_is_zero() || params.b_is_zero() {
        return Err(ConvergenceError::DegenerateParams);
    }
    assert!(n >= 1, "root test needs n >= 1");
    let ln_coeff = ln_bigint(&catalan_number(n))
        + (n as f64 + 1.0) * params.a.abs().ln()
        + n as f64 * params.b.abs().ln();
    let ln_rho = ln_coeff / n as f64;
    Ok((-0.5 * ln_rho).exp())
}

/// Ratio of the exact `c_n` to its estimate `4^n / (sqrt(pi) n^{3/2})`,
/// computed in log space.
pub fn asymptotic_ratio(n: usize) -> f64 {
    assert!(n >= 1, "asymptotic ratio needs n >= 1");
    let ln_estimate =
        n as f64 * 4f64.ln() - 0.5 * std::f64::consts::PI.ln() - 1.5 * (n as f64).ln();
    (ln_bigint(&catalan_number(n)) - ln_estimate).exp()
}

/// Analytic radius next to its root-test estimate, with diagnostics.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConvergenceReport {
    pub analytic_radius: f64,
    pub hadamard_estimate: f64,
    /// Highest coefficient index used for the estimate.
    pub n_used: usize,
    /// `c_n` over its asymptotic estimate at `n_used`.
    pub asymptotic_ratio: f64,
    /// `|estimate - analytic| / analytic`.
    pub relative_gap: f64,
}

/// Assemble a [`ConvergenceReport`] using the coefficient at index `n`.
pub fn convergence_report(
    params: QuadraticParams,
    n: usize,
) -> Result<ConvergenceReport, ConvergenceError> {
    let estimate = hadamard_estimate(params, n)?;
    let radius = analytic_radius(params);
    Ok(ConvergenceReport {
        analytic_radius: radius,
        hadamard_estimate: estimate,
        n_used: n,
        asymptotic_ratio: asymptotic_ratio(n),
        relative_gap: (estimate - radius).abs() / radius,
    })
}

/// What the magnitudes of the series terms do at a fixed `w > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TermTrend {
    TermsVanish,
    TermsBlowUp,
    Inconclusive,
}

/// Empirical convergence witness: examine `|c_n A^{n+1} B^n w^{2n+1}|`
/// for `n = 0 ..= max_terms`.
///
/// Classifies `TermsVanish` when the last 10 terms decrease and the
/// final term has dropped below `10^-3` of the first, `TermsBlowUp`
/// when they increase and it has grown past `10^3` of the first, and
/// `Inconclusive` otherwise. The thresholds are desk-scale heuristics,
/// not a sharp test.
///
/// At `|w|` equal to the analytic radius the terms decay only
/// polynomially, which the magnitude thresholds cannot tell apart from
/// genuine convergence at any practical `max_terms`; the boundary is
/// therefore always reported `Inconclusive`.
pub fn divergence_probe(params: QuadraticParams, w: f64, max_terms: usize) -> TermTrend {
    let ln_terms = term_magnitudes_ln(params, w, max_terms);

    let radius = analytic_radius(params);
    if (w - radius).abs() <= 1e-9 * radius {
        return TermTrend::Inconclusive;
    }
    if max_terms < 10 {
        return TermTrend::Inconclusive;
    }

    let first = ln_terms[0];
    let last = ln_terms[max_terms];
    let window = &ln_terms[max_terms - 9..];
    let decreasing = window.windows(2).all(|p| p[1] < p[0]);
    let increasing = window.windows(2).all(|p| p[1] > p[0]);
    let cutoff = 1e3f64.ln();

    if decreasing && last < first - cutoff {
        TermTrend::TermsVanish
    } else if increasing && last > first + cutoff {
        TermTrend::TermsBlowUp
    } else {
        TermTrend::Inconclusive
    }
}

/// `ln |c_n A^{n+1} B^n w^{2n+1}|` for `n = 0 ..= max_terms`, the raw
/// data behind [`divergence_probe`].
pub fn term_magnitudes_ln(params: QuadraticParams, w: f64, max_terms: usize) -> Vec<f64> {
    assert!(
        !params.a_is_zero() && !params.b_is_zero(),
        "term magnitudes require A, B != 0"
    );
    assert!(w > 0.0, "term magnitudes require w > 0");
    let ln_a = params.a.abs().ln();
    let ln_b = params.b.abs().ln();
    let ln_w = w.ln();
    (0..=max_terms)
        .map(|n| {
            ln_bigint(&catalan_number(n))
                + (n as f64 + 1.0) * ln_a
                + n as f64 * ln_b
                + (2.0 * n as f64 + 1.0) * ln_w
        })
        .collect()
}

/// Natural log of a positive big integer, via bit length plus a 53-bit
/// leading mantissa. Exact conversion to f64 would overflow long before
/// the sizes reached here.
pub(crate) fn ln_bigint(x: &BigInt) -> f64 {
    assert!(x.is_positive(), "ln of a non-positive integer");
    let magnitude = x.magnitude();
    let bits = magnitude.bits();
    if bits <= 53 {
        return magnitude.to_f64().unwrap().ln();
    }
    let shift = bits - 53;
    let mantissa = (magnitude >> shift).to_f64().unwrap();
    mantissa.ln() + shift as f64 * std::f64::consts::LN_2
}
