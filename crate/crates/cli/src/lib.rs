//! Command-line front end: four subcommands over the series library,
//! each emitting a machine-readable envelope.
//!
//! Envelope shape: `{"command", "inputs", "results", "exact"}`. Exact
//! values (big integers, rationals) are strings; floats are JSON
//! numbers with 17 significant digits; an infinite radius is the
//! string `"inf"`. Exit codes: 0 success, 2 usage or parse error,
//! 3 domain error.

pub mod json;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use catalan_series::series::fixed_point_solve;
use catalan_series::{
    bridgeland, catalan, convergence, evaluation, rational, solver, QuadraticParams, RegimeNote,
};

#[derive(Parser, Debug)]
#[command(name = "catalan-series", version, about = "Series solutions of u = (A + B u^2) w: coefficients, convergence radius, and surface-parameter thresholds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Catalan numbers c_n, exactly
    Catalan {
        /// First index to emit
        n: u64,
        /// How many consecutive values to emit
        #[arg(long, default_value_t = 1)]
        count: u64,
        /// recurrence, closed, or both (cross-checked)
        #[arg(long, value_enum, default_value_t = CatalanMode::Recurrence)]
        mode: CatalanMode,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Coefficients of the series solving u = (A + B u^2) w
    Series {
        /// A as `p/q`, integer, or decimal
        #[arg(long = "A", allow_hyphen_values = true)]
        a: String,
        /// B as `p/q`, integer, or decimal
        #[arg(long = "B", allow_hyphen_values = true)]
        b: String,
        /// Truncation order (highest retained degree)
        #[arg(long)]
        order: u64,
        /// closed-form, fixed-point, or both (cross-checked)
        #[arg(long, value_enum, default_value_t = SeriesSource::ClosedForm)]
        source: SeriesSource,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Radius of convergence, analytic and root-test empirical
    Radius {
        #[arg(long = "A", allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long = "B", allow_hyphen_values = true)]
        b: Option<String>,
        /// Ray-direction constant m > 0
        #[arg(long, allow_hyphen_values = true)]
        m: Option<f64>,
        /// Ray-direction constant alpha > 0
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<f64>,
        /// Negative of the section self-intersection
        #[arg(long, allow_hyphen_values = true)]
        e: Option<f64>,
        /// Coefficient index for the root-test estimate
        #[arg(long, default_value_t = 1000)]
        n: u64,
    },
    /// Series partial sum vs the closed-form branch at one w
    Eval {
        #[arg(long = "A", allow_hyphen_values = true)]
        a: f64,
        #[arg(long = "B", allow_hyphen_values = true)]
        b: f64,
        #[arg(long, allow_hyphen_values = true)]
        w: f64,
        #[arg(long)]
        order: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalanMode {
    Recurrence,
    Closed,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesSource {
    ClosedForm,
    FixedPoint,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
}

/// Errors mapped to exit codes by `main`: usage -> 2, domain -> 3.
#[derive(Debug, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Domain(msg) => write!(f, "{msg}"),
        }
    }
}

fn value_name(v: impl ValueEnum) -> String {
    v.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn envelope(command: &str, inputs: Value, results: Value, exact: bool) -> String {
    json::to_canonical_string(&json!({
        "command": command,
        "inputs": inputs,
        "results": results,
        "exact": exact,
    }))
}

/// Run a parsed command to its stdout payload.
pub fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Catalan {
            n,
            count,
            mode,
            format,
        } => cmd_catalan(n, count, mode, format),
        Command::Series {
            a,
            b,
            order,
            source,
            format,
        } => cmd_series(&a, &b, order as usize, source, format),
        Command::Radius {
            a,
            b,
            m,
            alpha,
            e,
            n,
        } => cmd_radius(a, b, m, alpha, e, n as usize),
        Command::Eval { a, b, w, order } => cmd_eval(a, b, w, order as usize),
    }
}

fn cmd_catalan(
    n: u64,
    count: u64,
    mode: CatalanMode,
    format: OutputFormat,
) -> Result<String, CliError> {
    if count == 0 {
        return Err(CliError::Usage("--count must be at least 1".into()));
    }
    let first = n as usize;
    let last = first + count as usize - 1;
    let by_recurrence = || (first..=last).map(catalan::catalan_number).collect::<Vec<_>>();
    let by_closed = || (first..=last).map(catalan::closed_form).collect::<Vec<_>>();

    let (values, agreement) = match mode {
        CatalanMode::Recurrence => (by_recurrence(), None),
        CatalanMode::Closed => (by_closed(), None),
        CatalanMode::Both => {
            let rec = by_recurrence();
            let agree = rec == by_closed();
            (rec, Some(agree))
        }
    };

    match format {
        OutputFormat::Csv => {
            let mut out = String::from("n,value\n");
            for (i, v) in values.iter().enumerate() {
                out.push_str(&format!("{},{}\n", first + i, v));
            }
            Ok(out.trim_end().to_string())
        }
        OutputFormat::Json => {
            let mut results = Map::new();
            results.insert(
                "values".into(),
                Value::Array(values.iter().map(|v| Value::String(v.to_string())).collect()),
            );
            if let Some(agree) = agreement {
                results.insert("agreement".into(), Value::Bool(agree));
            }
            Ok(envelope(
                "catalan",
                json!({"n": n, "count": count, "mode": value_name(mode)}),
                Value::Object(results),
                true,
            ))
        }
    }
}

fn cmd_series(
    a_raw: &str,
    b_raw: &str,
    order: usize,
    source: SeriesSource,
    format: OutputFormat,
) -> Result<String, CliError> {
    let parse = |s: &str| {
        rational::parse_rational(s).map_err(|e| CliError::Usage(e.to_string()))
    };
    let a = parse(a_raw)?;
    let b = parse(b_raw)?;

    let (series, mismatch) = match source {
        SeriesSource::ClosedForm => (solver::closed_form_series(a, b, order), None),
        SeriesSource::FixedPoint => (fixed_point_solve(a, b, order), None),
        SeriesSource::Both => {
            let report = solver::verify_equivalence(a.clone(), b.clone(), order);
            (
                solver::closed_form_series(a, b, order),
                Some(report.first_mismatch_degree),
            )
        }
    };

    match format {
        OutputFormat::Csv => {
            let mut out = String::from("degree,coefficient\n");
            for (degree, c) in series.coeffs().iter().enumerate() {
                out.push_str(&format!("{},{}\n", degree, rational::format_rational(c)));
            }
            Ok(out.trim_end().to_string())
        }
        OutputFormat::Json => {
            let mut results = Map::new();
            results.insert(
                "coefficients".into(),
                Value::Array(
                    series
                        .coeffs()
                        .iter()
                        .map(|c| Value::String(rational::format_rational(c)))
                        .collect(),
                ),
            );
            if let Some(first_mismatch) = mismatch {
                results.insert(
                    "first_mismatch_degree".into(),
                    first_mismatch.map_or(Value::Null, |d| json!(d as u64)),
                );
            }
            Ok(envelope(
                "series",
                json!({
                    "A": a_raw,
                    "B": b_raw,
                    "order": order as u64,
                    "source": value_name(source),
                }),
                Value::Object(results),
                true,
            ))
        }
    }
}

fn regime_name(note: RegimeNote) -> &'static str {
    match note {
        RegimeNote::Generic => "generic",
        RegimeNote::AZero => "A_zero",
        RegimeNote::BZero => "B_zero",
    }
}

// Radius as JSON: the degenerate regimes converge everywhere, rendered
// as the string "inf" (JSON has no infinity literal).
fn radius_value(radius: f64) -> Value {
    if radius.is_finite() {
        json!(radius)
    } else {
        Value::String("inf".into())
    }
}

fn estimate_fields(results: &mut Map<String, Value>, params: QuadraticParams, n: usize) {
    let report = convergence::convergence_report(params, n)
        .expect("estimate only requested for nondegenerate params");
    results.insert("hadamard_estimate".into(), json!(report.hadamard_estimate));
    results.insert("n_used".into(), json!(report.n_used as u64));
    results.insert("asymptotic_ratio".into(), json!(report.asymptotic_ratio));
    results.insert("relative_gap".into(), json!(report.relative_gap));
}

fn cmd_radius(
    a: Option<String>,
    b: Option<String>,
    m: Option<f64>,
    alpha: Option<f64>,
    e: Option<f64>,
    n: usize,
) -> Result<String, CliError> {
    let ab_given = a.is_some() || b.is_some();
    let geometry_given = m.is_some() || alpha.is_some() || e.is_some();
    if ab_given && geometry_given {
        return Err(CliError::Usage(
            "give either --A/--B or --m/--alpha/--e, not both".into(),
        ));
    }

    if ab_given {
        let (a_raw, b_raw) = match (a, b) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(CliError::Usage("--A and --B must be given together".into())),
        };
        let parse = |s: &str| {
            rational::parse_rational(s).map_err(|e| CliError::Usage(e.to_string()))
        };
        let params = QuadraticParams::new(
            rational::rational_to_f64(&parse(&a_raw)?),
            rational::rational_to_f64(&parse(&b_raw)?),
        );

        let mut results = Map::new();
        results.insert(
            "analytic_radius".into(),
            radius_value(convergence::analytic_radius(params)),
        );
        if !params.a_is_zero() && !params.b_is_zero() {
            estimate_fields(&mut results, params, n);
        }
        return Ok(envelope(
            "radius",
            json!({"A": a_raw, "B": b_raw, "n": n as u64}),
            Value::Object(results),
            false,
        ));
    }

    let (m, alpha, e) = match (m, alpha, e) {
        (Some(m), Some(alpha), Some(e)) => (m, alpha, e),
        _ => {
            return Err(CliError::Usage(
                "give --A/--B, or all of --m/--alpha/--e".into(),
            ))
        }
    };
    let report = bridgeland::threshold(bridgeland::BridgelandParams { m, alpha, e })
        .map_err(|e| CliError::Domain(e.to_string()))?;

    let mut results = Map::new();
    results.insert("A".into(), json!(report.a));
    results.insert("B".into(), json!(report.b));
    results.insert("analytic_radius".into(), radius_value(report.radius));
    results.insert("v_threshold".into(), json!(report.v_threshold));
    results.insert(
        "regime_note".into(),
        Value::String(regime_name(report.regime_note).into()),
    );
    if report.regime_note == RegimeNote::Generic {
        estimate_fields(
            &mut results,
            QuadraticParams::new(report.a, report.b),
            n,
        );
    }
    Ok(envelope(
        "radius",
        json!({"m": m, "alpha": alpha, "e": e, "n": n as u64}),
        Value::Object(results),
        false,
    ))
}

fn cmd_eval(a: f64, b: f64, w: f64, order: usize) -> Result<String, CliError> {
    let params = QuadraticParams::new(a, b);
    let report = evaluation::compare_series_to_closed(params, w, order)
        .map_err(|e| CliError::Domain(e.to_string()))?;
    Ok(envelope(
        "eval",
        json!({"A": a, "B": b, "w": w, "order": order as u64}),
        json!({
            "w": report.w,
            "series_value": report.series_value,
            "closed_value": report.closed_value,
            "abs_error": report.abs_error,
            "order_used": report.order_used as u64,
            "inside_radius": report.inside_radius,
        }),
        false,
    ))
}
