//! Numerical evaluation of the solution branch and comparison against
//! truncated series partial sums.
//!
//! The equation `u = (A + B u^2) w` rearranges to
//! `B w u^2 - u + A w = 0`; of its two roots, the one continuing the
//! series solution is the root with `u -> 0` as `w -> 0`. Writing it as
//!
//! `u = 2 A w / (1 + sqrt(1 - 4 A B w^2))`
//!
//! selects that branch automatically and avoids the catastrophic
//! cancellation the textbook quadratic formula suffers near `w = 0`.

use thiserror::Error;

use crate::convergence::analytic_radius;
use crate::series::{evaluate, TruncatedSeries};
use crate::solver::{closed_form_series, QuadraticParams};

#[derive(Debug, Error, PartialEq)]
pub enum EvalError {
    #[error(
        "no real branch at w = {w}: discriminant 1 - 4ABw^2 < 0 past the branch point {branch_point}"
    )]
    ComplexBranch { w: f64, branch_point: f64 },
}

/// The root of `B w u^2 - u + A w = 0` with `u -> 0` as `w -> 0`.
///
/// Degenerate regimes fall out of the same formula: `B = 0` or `w = 0`
/// gives `A w` exactly. When `A B > 0` and `|w|` exceeds the branch
/// point `1 / (2 sqrt(AB))` the root turns complex and an error is
/// returned instead.
pub fn closed_form_branch(params: QuadraticParams, w: f64) -> Result<f64, EvalError> {
    assert!(w.is_finite(), "w must be finite");
    if params.b_is_zero() || w == 0.0 {
        return Ok(params.a * w);
    }
    let discriminant = 1.0 - 4.0 * params.a * params.b * w * w;
    if discriminant < 0.0 {
        return Err(EvalError::ComplexBranch {
            w,
            branch_point: 1.0 / (2.0 * (params.a * params.b).sqrt()),
        });
    }
    Ok(2.0 * params.a * w / (1.0 + discriminant.sqrt()))
}

/// Truncated-series value against the closed-form branch at one `w`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalReport {
    pub w: f64,
    pub series_value: f64,
    pub closed_value: f64,
    pub abs_error: f64,
    pub order_used: usize,
    pub inside_radius: bool,
}

/// Evaluate the order-`order` series solution at `w` (float Horner) and
/// compare against [`closed_form_branch`].
///
/// Outside the radius of convergence the comparison is still performed
/// and reported, with `inside_radius` flagging that the partial sum no
/// longer approximates anything.
pub fn compare_series_to_closed(
    params: QuadraticParams,
    w: f64,
    order: usize,
) -> Result<EvalReport, EvalError> {
    let closed_value = closed_form_branch(params, w)?;
    let series: TruncatedSeries<f64> = closed_form_series(params.a, params.b, order);
    let (series_value, _) = evaluate(&series, w);
    Ok(EvalReport {
        w,
        series_value,
        closed_value,
        abs_error: (series_value - closed_value).abs(),
        order_used: order,
        inside_radius: w.abs() < analytic_radius(params),
    })
}
