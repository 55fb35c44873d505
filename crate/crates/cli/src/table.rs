//! `table`: series against the iterated Hadamard route on a uniform grid.

use std::fmt::Write as _;

use alpha_core::{alpha_series, alpha_via_hadamard, AlphaQuery, QuadratureConfig, SeriesConfig};
use serde::{Deserialize, Serialize};

use crate::args::{TableArgs, TableFormat};
use crate::format::num;
use crate::{CliError, Outcome};

/// CSV header.
pub const CSV_HEADER: [&str; 4] = ["x", "alpha_series", "alpha_hadamard", "abs_delta"];

/// One grid point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Row {
    /// Grid point.
    pub x: f64,
    /// Series value.
    pub alpha_series: f64,
    /// Iterated Hadamard value.
    pub alpha_hadamard: f64,
    /// `|alpha_series - alpha_hadamard|`.
    pub abs_delta: f64,
}

/// `steps` equally spaced points from `x_min` to `x_max` inclusive.
pub fn grid(x_min: f64, x_max: f64, steps: usize) -> Result<Vec<f64>, CliError> {
    if steps < 1 {
        return Err(CliError::Usage("--steps must be at least 1".into()));
    }
    if !(x_min.is_finite() && x_max.is_finite()) || x_min > x_max {
        return Err(CliError::Usage(format!("bad range [{x_min}, {x_max}]")));
    }
    if steps == 1 {
        return Ok(vec![x_min]);
    }
    let h = (x_max - x_min) / (steps - 1) as f64;
    Ok((0..steps)
        .map(|i| {
            if i + 1 == steps {
                x_max
            } else {
                x_min + h * i as f64
            }
        })
        .collect())
}

/// Computes every row of the table.
pub fn rows(x_min: f64, x_max: f64, steps: usize, s: u32) -> Result<Vec<Row>, CliError> {
    let series_cfg = SeriesConfig::default();
    let quad_cfg = QuadratureConfig::default_1d();
    grid(x_min, x_max, steps)?
        .into_iter()
        .map(|x| {
            let series = alpha_series(&AlphaQuery::real(x, s)?, &series_cfg)?
                .value
                .re;
            let hadamard = alpha_via_hadamard(x, s, &quad_cfg)?.value.re;
            Ok(Row {
                x,
                alpha_series: series,
                alpha_hadamard: hadamard,
                abs_delta: (series - hadamard).abs(),
            })
        })
        .collect()
}

/// CSV with [`CSV_HEADER`], `\n` line endings.
pub fn to_csv(rows: &[Row]) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for r in rows {
        w.write_record([
            num(r.x),
            num(r.alpha_series),
            num(r.alpha_hadamard),
            num(r.abs_delta),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
}

/// Parses output of [`to_csv`].
pub fn from_csv(text: &str) -> Result<Vec<Row>, csv::Error> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect()
}

/// JSON array of row objects.
pub fn to_json(rows: &[Row]) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
    s.push('\n');
    s
}

/// Aligned text columns.
pub fn to_text(rows: &[Row]) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{:>24} {:>24} {:>24} {:>24}",
        CSV_HEADER[0], CSV_HEADER[1], CSV_HEADER[2], CSV_HEADER[3]
    )
    .unwrap();
    for r in rows {
        writeln!(
            out,
            "{:>24} {:>24} {:>24} {:>24}",
            num(r.x),
            num(r.alpha_series),
            num(r.alpha_hadamard),
            num(r.abs_delta)
        )
        .unwrap();
    }
    out
}

pub(crate) fn cmd_table(a: &TableArgs) -> Result<Outcome, CliError> {
    let rows = rows(a.x_min, a.x_max, a.steps, a.s)?;
    let text = match a.format {
        TableFormat::Csv => to_csv(&rows),
        TableFormat::Json => to_json(&rows),
        TableFormat::Text => to_text(&rows),
    };
    Ok(Outcome { text, code: 0 })
}
