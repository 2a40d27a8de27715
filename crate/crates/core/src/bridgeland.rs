//! Dictionary from elliptic-surface ray parameters to the quadratic's
//! constants, and the solvability threshold.
//!
//! The triple `(m, alpha, e)` fixes the constants
//!
//! - `A = m + alpha - e`
//! - `B = -(m - e/2)`
//!
//! and the series solution converges for `w < 1 / (2 sqrt(|AB|))`.
//! In the reciprocal variable `v = 1/w`, solvability therefore requires
//! `v > 2 sqrt(|AB|)`, which is the threshold reported here.

use thiserror::Error;

use crate::convergence::analytic_radius;
use crate::solver::QuadraticParams;

#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    #[error("ray-direction constants must be positive: m = {m}, alpha = {alpha}")]
    NonPositiveRay { m: f64, alpha: f64 },
}

/// Ray-direction constants `m, alpha > 0` and `e`, the negative of the
/// self-intersection number of the section.
///
/// `e` is an integer for an actual surface but nothing downstream needs
/// that, so any real is accepted.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BridgelandParams {
    pub m: f64,
    pub alpha: f64,
    pub e: f64,
}

/// Which degeneracy, if any, the derived `(A, B)` landed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegimeNote {
    Generic,
    /// `A = 0` (i.e. `m + alpha = e`): the series is identically zero.
    AZero,
    /// `B = 0` (i.e. `m = e/2`): the series is the polynomial `A w`.
    BZero,
}

/// Derived constants and the solvability threshold in `v = 1/w`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThresholdReport {
    pub a: f64,
    pub b: f64,
    /// Radius of convergence in `w`; `+inf` in degenerate regimes.
    pub radius: f64,
    /// `2 sqrt(|AB|)` generically; `0` in degenerate regimes, where any
    /// `v` works.
    pub v_threshold: f64,
    pub regime_note: RegimeNote,
}

/// Map `(m, alpha, e)` to `(A, B)`.
pub fn ab_from_geometry(params: BridgelandParams) -> Result<QuadraticParams, GeometryError> {
    if params.m <= 0.0 || params.alpha <= 0.0 {
        return Err(GeometryError::NonPositiveRay {
            m: params.m,
            alpha: params.alpha,
        });
    }
    Ok(QuadraticParams::new(
        params.m + params.alpha - params.e,
        -(params.m - params.e / 2.0),
    ))
}

/// Full threshold pipeline: derive `(A, B)`, compute the radius, and
/// report the `v` threshold.
///
/// Degenerate regimes (`A = 0` or `B = 0`) get a note and
/// `v_threshold = 0` rather than an error: the series is a polynomial
/// or zero there, so every `v` admits a solution. When both vanish the
/// `A = 0` note wins, since it already forces the zero series.
pub fn threshold(params: BridgelandParams) -> Result<ThresholdReport, GeometryError> {
    let quad = ab_from_geometry(params)?;
    let radius = analytic_radius(quad);
    let regime_note = if quad.a_is_zero() {
        RegimeNote::AZero
    } else if quad.b_is_zero() {
        RegimeNote::BZero
    } else {
        RegimeNote::Generic
    };
    let v_threshold = if radius.is_finite() { 1.0 / radius } else { 0.0 };
    Ok(ThresholdReport {
        a: quad.a,
        b: quad.b,
        radius,
        v_threshold,
        regime_note,
    })
}

/// True in the preferred regime `A > 0` and `B < 0`, i.e.
/// `m + alpha > e` and `m > e/2`.
pub fn sign_regime_check(params: BridgelandParams) -> bool {
    let a = params.m + params.alpha - params.e;
    let b = -(params.m - params.e / 2.0);
    a > 0.0 && b < 0.0
}
