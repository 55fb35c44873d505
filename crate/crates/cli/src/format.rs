//! Number formatting shared by every output format.

/// Shortest representation that parses back to the same `f64`; plain
/// decimal for moderate magnitudes, exponent form otherwise.
pub fn num(v: f64) -> String {
    let magnitude = v.abs();
    if v == 0.0 || !v.is_finite() || (1e-5..1e16).contains(&magnitude) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}
