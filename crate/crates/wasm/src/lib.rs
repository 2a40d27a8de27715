//! Browser bindings for the series explorer page.
//!
//! Three operations, each taking plain numbers from the page's sliders
//! and returning a JSON string the page plots on a canvas. Non-finite
//! floats serialize as `null`, which keeps `JSON.parse` happy on the
//! JS side.
//!
//! Build (requires the `wasm32-unknown-unknown` target and
//! `wasm-bindgen-cli`):
//!
//! ```sh
//! cargo build -p catalan-series-wasm --target wasm32-unknown-unknown --release
//! wasm-bindgen --target web --out-dir crates/wasm/www/pkg \
//!   target/wasm32-unknown-unknown/release/catalan_series_wasm.wasm
//! ```
//!
//! then serve `crates/wasm/www/` statically.

use serde_json::json;
use wasm_bindgen::prelude::*;

use catalan_series::series::evaluate;
use catalan_series::{
    bridgeland, convergence, evaluation, rational, solver, QuadraticParams, RegimeNote, TermTrend,
};

/// Partial sums of the series solution against the closed-form branch
/// on a `w` grid over `[0, w_max]`.
#[wasm_bindgen]
pub fn series_sweep(
    a: f64,
    b: f64,
    order: usize,
    w_max: f64,
    samples: usize,
) -> Result<String, JsValue> {
    sweep_impl(a, b, order, w_max, samples).map_err(|e| JsValue::from_str(&e))
}

/// Magnitude profile of the series terms at a fixed `w`, with the
/// vanish/blow-up classification.
#[wasm_bindgen]
pub fn term_profile(a: f64, b: f64, w: f64, max_terms: usize) -> Result<String, JsValue> {
    profile_impl(a, b, w, max_terms).map_err(|e| JsValue::from_str(&e))
}

/// The solvability threshold `v = 2 sqrt(|AB|)` as a function of `e`
/// for fixed ray direction `(m, alpha)`.
#[wasm_bindgen]
pub fn threshold_sweep(
    m: f64,
    alpha: f64,
    e_min: f64,
    e_max: f64,
    samples: usize,
) -> Result<String, JsValue> {
    threshold_impl(m, alpha, e_min, e_max, samples).map_err(|e| JsValue::from_str(&e))
}

/// Exact series coefficients as `p/q` strings, for the table under the
/// sweep plot. `a` and `b` arrive as strings so the exact pipeline
/// never sees a float.
#[wasm_bindgen]
pub fn exact_coefficients(a: &str, b: &str, order: usize) -> Result<String, JsValue> {
    coefficients_impl(a, b, order).map_err(|e| JsValue::from_str(&e))
}

fn check(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

fn sweep_impl(a: f64, b: f64, order: usize, w_max: f64, samples: usize) -> Result<String, String> {
    check(a.is_finite() && b.is_finite(), "A and B must be finite")?;
    check(w_max > 0.0, "w_max must be positive")?;
    check((2..=4096).contains(&samples), "samples must be in 2..=4096")?;
    check(order <= 2048, "order must be at most 2048")?;

    let params = QuadraticParams::new(a, b);
    let series: catalan_series::TruncatedSeries<f64> = solver::closed_form_series(a, b, order);
    let radius = convergence::analytic_radius(params);
    // Real branch point only exists for AB > 0.
    let branch_point = if a * b > 0.0 {
        Some(1.0 / (2.0 * (a * b).sqrt()))
    } else {
        None
    };

    let mut ws = Vec::with_capacity(samples);
    let mut partial = Vec::with_capacity(samples);
    let mut closed = Vec::with_capacity(samples);
    for i in 0..samples {
        let w = w_max * i as f64 / (samples - 1) as f64;
        ws.push(w);
        partial.push(evaluate(&series, w).0);
        closed.push(evaluation::closed_form_branch(params, w).ok());
    }

    Ok(json!({
        "radius": finite_or_null(radius),
        "branch_point": branch_point,
        "order": order as u64,
        "ws": ws,
        "partial_sum": partial,
        "closed_branch": closed,
    })
    .to_string())
}

fn profile_impl(a: f64, b: f64, w: f64, max_terms: usize) -> Result<String, String> {
    check(a.is_finite() && b.is_finite(), "A and B must be finite")?;
    check(a != 0.0 && b != 0.0, "term profile needs A, B != 0")?;
    check(w > 0.0, "w must be positive")?;
    check((10..=2000).contains(&max_terms), "max_terms must be in 10..=2000")?;

    let params = QuadraticParams::new(a, b);
    let log10_terms: Vec<f64> = convergence::term_magnitudes_ln(params, w, max_terms)
        .into_iter()
        .map(|ln| ln / std::f64::consts::LN_10)
        .collect();
    let trend = match convergence::divergence_probe(params, w, max_terms) {
        TermTrend::TermsVanish => "terms_vanish",
        TermTrend::TermsBlowUp => "terms_blow_up",
        TermTrend::Inconclusive => "inconclusive",
    };

    Ok(json!({
        "radius": finite_or_null(convergence::analytic_radius(params)),
        "w": w,
        "classification": trend,
        "log10_terms": log10_terms,
    })
    .to_string())
}

fn threshold_impl(
    m: f64,
    alpha: f64,
    e_min: f64,
    e_max: f64,
    samples: usize,
) -> Result<String, String> {
    check(m > 0.0 && alpha > 0.0, "m and alpha must be positive")?;
    check(e_min < e_max, "e range must be nonempty")?;
    check((2..=4096).contains(&samples), "samples must be in 2..=4096")?;

    let mut es = Vec::with_capacity(samples);
    let mut v_thresholds = Vec::with_capacity(samples);
    let mut a_values = Vec::with_capacity(samples);
    let mut b_values = Vec::with_capacity(samples);
    let mut regimes = Vec::with_capacity(samples);
    for i in 0..samples {
        let e = e_min + (e_max - e_min) * i as f64 / (samples - 1) as f64;
        let report = bridgeland::threshold(bridgeland::BridgelandParams { m, alpha, e })
            .map_err(|err| err.to_string())?;
        es.push(e);
        v_thresholds.push(report.v_threshold);
        a_values.push(report.a);
        b_values.push(report.b);
        regimes.push(match report.regime_note {
            RegimeNote::Generic => "generic",
            RegimeNote::AZero => "A_zero",
            RegimeNote::BZero => "B_zero",
        });
    }

    Ok(json!({
        "m": m,
        "alpha": alpha,
        "es": es,
        "v_thresholds": v_thresholds,
        "a_values": a_values,
        "b_values": b_values,
        "regimes": regimes,
    })
    .to_string())
}

fn coefficients_impl(a: &str, b: &str, order: usize) -> Result<String, String> {
    check(order <= 512, "order must be at most 512")?;
    let a = rational::parse_rational(a).map_err(|e| e.to_string())?;
    let b = rational::parse_rational(b).map_err(|e| e.to_string())?;
    let series = solver::closed_form_series(a, b, order);
    let coefficients: Vec<String> = series
        .coeffs()
        .iter()
        .map(rational::format_rational)
        .collect();
    Ok(json!({ "coefficients": coefficients }).to_string())
}

// JSON.parse rejects Infinity; map it to null.
fn finite_or_null(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}
