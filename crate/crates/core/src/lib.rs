//! Series solutions of the quadratic functional equation
//! `u = (A + B u^2) w`.
//!
//! Solving the equation as a formal power series in `w` produces
//! Catalan numbers: the coefficient of `w^{2n+1}` is `c_n A^{n+1} B^n`.
//! This crate computes that series by three mutually checking routes
//! (explicit Catalan coefficients, exact fixed-point iteration, and the
//! closed-form quadratic branch), derives its radius of convergence
//! `1 / (2 sqrt(|AB|))` both analytically and empirically from exact
//! coefficients, and maps elliptic-surface ray parameters `(m, alpha, e)`
//! to the `v = 1/w` threshold past which the series solution exists.
//!
//! Exactness is the organizing principle: everything feeding a
//! cross-check runs over big integers or big rationals, and floats only
//! appear at the evaluation and diagnostics layer.

pub mod bridgeland;
pub mod catalan;
pub mod convergence;
pub mod evaluation;
pub mod rational;
pub mod series;
pub mod solver;

pub use bridgeland::{
    ab_from_geometry, sign_regime_check, threshold, BridgelandParams, GeometryError, RegimeNote,
    ThresholdReport,
};
pub use catalan::{catalan_number, CatalanSource, CatalanTable};
pub use convergence::{
    analytic_radius, asymptotic_ratio, convergence_report, divergence_probe, hadamard_estimate,
    term_magnitudes_ln, ConvergenceError, ConvergenceReport, TermTrend,
};
pub use evaluation::{closed_form_branch, compare_series_to_closed, EvalError, EvalReport};
pub use rational::{format_rational, parse_rational, rational_to_f64, ParseRationalError};
pub use series::{evaluate, fixed_point_solve, Coeff, TruncatedSeries};
pub use solver::{
    closed_form_series, residual, verify_equivalence, EquivalenceReport, QuadraticParams,
};
