//! `eval` and `compare`.

use std::fmt::Write as _;

use alpha_core::{
    alpha2_via_integrand, alpha3_via_torus, alpha_series, alpha_via_hadamard, bessel_i0,
    AlphaQuery, ComplexValue, QuadratureConfig, QuadratureResult, SeriesConfig, SeriesResult,
    TorusForm,
};
use serde::Serialize;

use crate::args::{CompareArgs, EvalArgs, Method, ReportFormat};
use crate::format::num;
use crate::{resolve_tol, CliError, Outcome};

/// Default agreement tolerance for `compare`.
pub const DEFAULT_COMPARE_TOL: f64 = 1e-9;

/// Printed literature value of `0F2(;1,1;1)`, audited against the series.
pub const PRINTED_0F2_VALUE: &str = "1.1297";

/// The `(x, s)` pair a report is about.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QueryRecord {
    /// Argument.
    pub x: f64,
    /// Factorial power.
    pub s: u32,
}

/// One method's contribution to a report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MethodValue {
    /// Method name.
    pub name: String,
    /// Real part of the computed value.
    pub value: f64,
    /// Imaginary part (zero up to rounding for real `x`).
    pub imag: f64,
    /// Tail bound (series) or node-doubling estimate (quadrature).
    pub error_estimate: f64,
    /// Terms summed or nodes per dimension.
    pub work: usize,
}

impl MethodValue {
    fn from_series(name: &str, r: &SeriesResult) -> Self {
        Self {
            name: name.to_owned(),
            value: r.value.re,
            imag: r.value.im,
            error_estimate: r.tail_bound,
            work: r.terms_used,
        }
    }

    fn from_quadrature(name: &str, r: &QuadratureResult) -> Self {
        Self {
            name: name.to_owned(),
            value: r.value.re,
            imag: r.value.im,
            error_estimate: r.est_error,
            work: r.nodes,
        }
    }

    fn complex(&self) -> ComplexValue {
        ComplexValue::new(self.value, self.imag)
    }
}

/// Agreement of every applicable method at one query.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonReport {
    /// Query evaluated.
    pub query: QueryRecord,
    /// Per-method values, never empty.
    pub methods: Vec<MethodValue>,
    /// Largest `|v_i - v_j|` over all method pairs.
    pub max_pairwise_delta: f64,
    /// Threshold on `max_pairwise_delta`.
    pub tolerance: f64,
    /// `max_pairwise_delta <= tolerance`.
    pub passed: bool,
    /// Free-form annotations.
    pub notes: Vec<String>,
}

impl ComparisonReport {
    /// Builds the report from already computed method values.
    pub fn new(
        query: QueryRecord,
        methods: Vec<MethodValue>,
        tolerance: f64,
        notes: Vec<String>,
    ) -> Self {
        let mut max_pairwise_delta: f64 = 0.0;
        for (i, a) in methods.iter().enumerate() {
            for b in &methods[i + 1..] {
                max_pairwise_delta = max_pairwise_delta.max((a.complex() - b.complex()).norm());
            }
        }
        Self {
            query,
            passed: max_pairwise_delta <= tolerance,
            methods,
            max_pairwise_delta,
            tolerance,
            notes,
        }
    }

    /// Human-readable rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "alpha(x = {}, s = {})",
            num(self.query.x),
            self.query.s
        )
        .unwrap();
        for m in &self.methods {
            writeln!(
                out,
                "  {:<22} {:>24}  imag {:>10.2e}  err {:>10.2e}  work {}",
                m.name,
                num(m.value),
                m.imag,
                m.error_estimate,
                m.work
            )
            .unwrap();
        }
        writeln!(out, "max pairwise delta: {:e}", self.max_pairwise_delta).unwrap();
        writeln!(out, "tolerance:          {:e}", self.tolerance).unwrap();
        writeln!(out, "passed:             {}", self.passed).unwrap();
        for note in &self.notes {
            writeln!(out, "note: {note}").unwrap();
        }
        out
    }

    /// JSON rendering (one object, newline-terminated).
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

fn series(x: f64, s: u32, cfg: &SeriesConfig) -> Result<SeriesResult, CliError> {
    Ok(alpha_series(&AlphaQuery::real(x, s)?, cfg)?)
}

fn bessel_route(x: f64, s: u32, cfg: &SeriesConfig) -> Result<SeriesResult, CliError> {
    if s != 2 {
        return Err(CliError::Usage(format!(
            "the bessel method needs s = 2, got s = {s}"
        )));
    }
    if x.is_nan() || x < 0.0 {
        return Err(CliError::Usage(format!(
            "the bessel method needs x >= 0, got x = {x}"
        )));
    }
    Ok(bessel_i0(2.0 * x.sqrt(), cfg)?)
}

/// Note comparing a computed `sum 1/(n!)^3` with the printed `~1.1297`.
pub fn hypergeometric_audit(computed: f64) -> String {
    let digits = format!("{computed:.4}");
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((&digits, ""));
    let printed_frac = PRINTED_0F2_VALUE.split_once('.').map_or("", |(_, f)| f);
    let frac_verdict = if frac_part == printed_frac {
        "matches"
    } else {
        "does not match"
    };
    let int_verdict = if int_part == "1" {
        "matches"
    } else {
        "does not match"
    };
    format!(
        "0F2(;1,1;1) = sum 1/(n!)^3: literature value printed as =~ {PRINTED_0F2_VALUE}, computed {}; \
         the computed value {frac_verdict} the fractional digits .{printed_frac} and {int_verdict} the integer part 1 \
         (the n = 0 term alone contributes 1, so the printed leading digit is treated as a typo)",
        num(computed)
    )
}

/// Evaluates every method applicable to `(x, s)` with default configurations.
pub fn compare(x: f64, s: u32, tolerance: f64) -> Result<ComparisonReport, CliError> {
    let query = AlphaQuery::real(x, s)?;
    let series_cfg = SeriesConfig::default();
    let quad_1d = QuadratureConfig::default_1d();
    let mut methods = vec![MethodValue::from_series(
        "series",
        &alpha_series(&query, &series_cfg)?,
    )];
    match s {
        1 => methods.push(MethodValue {
            name: "exp".into(),
            value: x.exp(),
            imag: 0.0,
            error_estimate: 0.0,
            work: 1,
        }),
        _ => {
            if s == 2 {
                methods.push(MethodValue::from_quadrature(
                    "hadamard-closed-form",
                    &alpha2_via_integrand(x, &quad_1d)?,
                ));
                if x >= 0.0 {
                    methods.push(MethodValue::from_series(
                        "bessel",
                        &bessel_route(x, s, &series_cfg)?,
                    ));
                }
            }
            if s == 3 {
                let quad_2d = QuadratureConfig::default_2d();
                methods.push(MethodValue::from_quadrature(
                    "hadamard-2d-complex",
                    &alpha3_via_torus(x, TorusForm::Complex, &quad_2d)?,
                ));
                methods.push(MethodValue::from_quadrature(
                    "hadamard-2d-real",
                    &alpha3_via_torus(x, TorusForm::Real, &quad_2d)?,
                ));
            }
            methods.push(MethodValue::from_quadrature(
                "hadamard-iterated",
                &alpha_via_hadamard(x, s, &quad_1d)?,
            ));
        }
    }
    let mut notes = Vec::new();
    if s == 3 && x == 1.0 {
        notes.push(hypergeometric_audit(methods[0].value));
    }
    Ok(ComparisonReport::new(
        QueryRecord { x, s },
        methods,
        tolerance,
        notes,
    ))
}

pub(crate) fn cmd_compare(a: &CompareArgs, env_tol: Option<&str>) -> Result<Outcome, CliError> {
    let tol = resolve_tol(a.tol, env_tol, DEFAULT_COMPARE_TOL)?;
    let report = compare(a.x, a.s, tol)?;
    let text = match a.format {
        ReportFormat::Text => report.to_text(),
        ReportFormat::Json => report.to_json(),
    };
    Ok(Outcome {
        text,
        code: if report.passed { 0 } else { 1 },
    })
}

/// Result of a single `eval`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Evaluation {
    /// Query evaluated.
    pub query: QueryRecord,
    /// Method name and value.
    #[serde(flatten)]
    pub method: MethodValue,
    /// What `method.work` counts: `terms_used` or `nodes`.
    pub work_unit: &'static str,
}

/// Runs one method at its default configuration with tolerance `tol`.
pub fn evaluate(x: f64, s: u32, method: Method, tol: f64) -> Result<Evaluation, CliError> {
    let query = QueryRecord { x, s };
    let series_cfg = SeriesConfig::with_tol(tol);
    let (method, work_unit) = match method {
        Method::Series => (
            MethodValue::from_series("series", &series(x, s, &series_cfg)?),
            "terms_used",
        ),
        Method::Bessel => (
            MethodValue::from_series("bessel", &bessel_route(x, s, &series_cfg)?),
            "terms_used",
        ),
        Method::Hadamard => {
            AlphaQuery::real(x, s)?;
            let cfg = QuadratureConfig::default_1d().with_tol(tol);
            (
                MethodValue::from_quadrature("hadamard", &alpha_via_hadamard(x, s, &cfg)?),
                "nodes",
            )
        }
    };
    Ok(Evaluation {
        query,
        method,
        work_unit,
    })
}

pub(crate) fn cmd_eval(a: &EvalArgs, env_tol: Option<&str>) -> Result<Outcome, CliError> {
    let default = match a.method {
        Method::Hadamard => QuadratureConfig::default_1d().tol,
        Method::Series | Method::Bessel => SeriesConfig::DEFAULT_TOL,
    };
    let tol = resolve_tol(a.tol, env_tol, default)?;
    let e = evaluate(a.x, a.s, a.method, tol)?;
    let text = match a.format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&e).expect("evaluation serializes");
            s.push('\n');
            s
        }
        ReportFormat::Text => {
            let bound = if e.work_unit == "nodes" {
                "est_error"
            } else {
                "tail_bound"
            };
            format!(
                "method: {}\nx: {}\ns: {}\nvalue: {}\nimag: {}\n{}: {}\n{bound}: {:e}\n",
                e.method.name,
                num(e.query.x),
                e.query.s,
                num(e.method.value),
                num(e.method.imag),
                e.work_unit,
                e.method.work,
                e.method.error_estimate,
            )
        }
    };
    Ok(Outcome { text, code: 0 })
}
