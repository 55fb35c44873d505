//! Hadamard products of power series as circle averages.
//!
//! For `f(z) = sum a_n z^n` and `g(z) = sum b_n z^n` with real coefficients
//! and radii `R`, `R'`, the product `h(z) = sum a_n b_n z^n` satisfies
//!
//! ```text
//! h(u v) = (1 / 2 pi) integral_0^{2 pi} f(u e^{it}) g(v e^{-it}) dt,   |u| < R, |v| < R'.
//! ```
//!
//! Taking `f = g = exp` gives `alpha(x, 2)`; feeding that back in as `g`
//! gives a torus integral for `alpha(x, 3)`; and in general
//! `alpha(., s) = exp (*) alpha(., s - 1)`.

use crate::quadrature::{trapezoid_periodic_1d, trapezoid_periodic_2d, try_trapezoid_periodic_1d};
use crate::series::{alpha_series, bessel_i0, AlphaQuery, SeriesConfig};
use crate::{ComplexValue, Error, QuadratureConfig, QuadratureResult, Result};

#[cfg(not(any(feature = "std", test)))]
#[allow(unused_imports)]
use num_traits::Float;

/// Largest imaginary part accepted from [`hadamard_eval`] and the torus
/// forms of `alpha(x, 3)`.
pub const HADAMARD_IMAG_LIMIT: f64 = 1e-10;

/// Largest imaginary part accepted from [`alpha_via_hadamard`].
pub const LIFT_IMAG_LIMIT: f64 = 1e-9;

/// A real-coefficient power series, known through its values, with its
/// radius of convergence (`f64::INFINITY` for entire functions).
///
/// The evaluator must satisfy `f(conj z) = conj f(z)` inside the radius.
#[derive(Debug, Clone, Copy)]
pub struct AnalyticFunction<F> {
    evaluator: F,
    radius: f64,
}

impl<F> AnalyticFunction<F>
where
    F: Fn(ComplexValue) -> ComplexValue,
{
    /// Wraps `evaluator`; `radius` must be positive (possibly infinite).
    pub fn new(evaluator: F, radius: f64) -> Result<Self> {
        if radius.is_nan() || radius <= 0.0 {
            return Err(Error::InvalidArgument(
                "radius of convergence must be positive",
            ));
        }
        Ok(Self { evaluator, radius })
    }

    /// Entire function (infinite radius).
    pub fn entire(evaluator: F) -> Self {
        Self {
            evaluator,
            radius: f64::INFINITY,
        }
    }

    /// Evaluates the function.
    pub fn eval(&self, z: ComplexValue) -> ComplexValue {
        (self.evaluator)(z)
    }

    /// Radius of convergence.
    pub fn radius(&self) -> f64 {
        self.radius
    }
}

/// Pair of series whose coefficient-wise product is evaluated.
#[derive(Debug, Clone, Copy)]
pub struct HadamardProduct<F, G> {
    /// Series sampled at `u e^{i theta}`.
    pub f: AnalyticFunction<F>,
    /// Series sampled at `v e^{-i theta}`.
    pub g: AnalyticFunction<G>,
}

impl<F, G> HadamardProduct<F, G> {
    /// Pairs two series.
    pub fn new(f: AnalyticFunction<F>, g: AnalyticFunction<G>) -> Self {
        Self { f, g }
    }
}

fn check_imag(result: QuadratureResult, limit: f64) -> Result<QuadratureResult> {
    if result.value.im.abs() > limit {
        return Err(Error::ImaginaryResidue {
            im: result.value.im,
            limit,
        });
    }
    Ok(result)
}

fn check_inside(value: f64, radius: f64) -> Result<()> {
    if !value.is_finite() {
        return Err(Error::InvalidArgument("evaluation point must be finite"));
    }
    if value.abs() >= radius {
        return Err(Error::DomainViolation { value, radius });
    }
    Ok(())
}

/// `h(u v)` as the circle average of `f(u e^{i theta}) g(v e^{-i theta})`.
///
/// The complex result is returned as computed; an imaginary part above
/// [`HADAMARD_IMAG_LIMIT`] is an error.
pub fn hadamard_eval<F, G>(
    p: &HadamardProduct<F, G>,
    u: f64,
    v: f64,
    cfg: &QuadratureConfig,
) -> Result<QuadratureResult>
where
    F: Fn(ComplexValue) -> ComplexValue,
    G: Fn(ComplexValue) -> ComplexValue,
{
    check_inside(u, p.f.radius)?;
    check_inside(v, p.g.radius)?;
    let result = trapezoid_periodic_1d(
        |theta| {
            let w = ComplexValue::from_polar(1.0, theta);
            p.f.eval(w * u) * p.g.eval(w.conj() * v)
        },
        cfg,
    )?;
    check_imag(result, HADAMARD_IMAG_LIMIT)
}

/// `e^{(x+1) cos t} cos((x-1) sin t)`, the real form of
/// `e^{x e^{it}} e^{e^{-it}}` averaged against `t -> -t`.
pub fn alpha2_integrand(x: f64, t: f64) -> f64 {
    ((x + 1.0) * t.cos()).exp() * ((x - 1.0) * t.sin()).cos()
}

/// `alpha(x, 2)` as the circle average of [`alpha2_integrand`].
pub fn alpha2_via_integrand(x: f64, cfg: &QuadratureConfig) -> Result<QuadratureResult> {
    if !x.is_finite() {
        return Err(Error::InvalidQuery("x must be finite"));
    }
    trapezoid_periodic_1d(|t| ComplexValue::new(alpha2_integrand(x, t), 0.0), cfg)
}

/// Returns `(lhs, rhs)` for `(1 / 2 pi) integral e^{a cos t + b sin t} dt = I0(sqrt(a^2 + b^2))`.
///
/// The left side is integrated over `[0, 2 pi)`, equivalent to `[-pi, pi)`
/// by periodicity; the right side is the series value of `I0`.
pub fn bessel_identity_check(a: f64, b: f64, cfg: &QuadratureConfig) -> Result<(f64, f64)> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::InvalidArgument("a and b must be finite"));
    }
    let lhs = trapezoid_periodic_1d(
        |t| ComplexValue::new((a * t.cos() + b * t.sin()).exp(), 0.0),
        cfg,
    )?;
    let rhs = bessel_i0(a.hypot(b), &SeriesConfig::default())?;
    Ok((lhs.value.re, rhs.value.re))
}

/// Torus integrand for `alpha(x, 3)` in complex product form:
/// `e^{x e^{i theta}} e^{(e^{-i theta} + 1) cos t} cos((e^{-i theta} - 1) sin t)`.
pub fn alpha3_integrand_complex(x: f64, theta: f64, t: f64) -> ComplexValue {
    let w = ComplexValue::from_polar(1.0, -theta);
    let one = ComplexValue::new(1.0, 0.0);
    let (sin_t, cos_t) = t.sin_cos();
    (ComplexValue::from_polar(1.0, theta) * x).exp()
        * ((w + one) * cos_t).exp()
        * ((w - one) * sin_t).cos()
}

/// Real part of [`alpha3_integrand_complex`], expanded into real functions:
///
/// ```text
/// e^{x cos th + cos th cos t + cos t} [ cos(x sin th - sin th cos t) cos(cos th sin t - sin t) cosh(sin th sin t)
///                                     - sin(x sin th - sin th cos t) sin(cos th sin t - sin t) sinh(sin th sin t) ]
/// ```
pub fn alpha3_integrand_real(x: f64, theta: f64, t: f64) -> f64 {
    let (sin_th, cos_th) = theta.sin_cos();
    let (sin_t, cos_t) = t.sin_cos();
    let envelope = (x * cos_th + cos_th * cos_t + cos_t).exp();
    let phase = x * sin_th - sin_th * cos_t;
    let inner = cos_th * sin_t - sin_t;
    let hyper = sin_th * sin_t;
    envelope * (phase.cos() * inner.cos() * hyper.cosh() - phase.sin() * inner.sin() * hyper.sinh())
}

/// Which torus integrand [`alpha3_via_torus`] averages.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorusForm {
    /// [`alpha3_integrand_complex`]; the imaginary part is checked.
    Complex,
    /// [`alpha3_integrand_real`].
    Real,
}

/// `alpha(x, 3)` as a torus average over `(theta, t)`.
pub fn alpha3_via_torus(
    x: f64,
    form: TorusForm,
    cfg: &QuadratureConfig,
) -> Result<QuadratureResult> {
    if !x.is_finite() {
        return Err(Error::InvalidQuery("x must be finite"));
    }
    match form {
        TorusForm::Complex => {
            let r = trapezoid_periodic_2d(|theta, t| alpha3_integrand_complex(x, theta, t), cfg)?;
            check_imag(r, HADAMARD_IMAG_LIMIT)
        }
        TorusForm::Real => trapezoid_periodic_2d(
            |theta, t| ComplexValue::new(alpha3_integrand_real(x, theta, t), 0.0),
            cfg,
        ),
    }
}

/// `alpha(x, s)` for `s >= 2` by one Hadamard product of `exp` with
/// `alpha(., s - 1)` at `u = x`, `v = 1`:
///
/// ```text
/// alpha(x, s) = (1 / 2 pi) integral exp(x e^{i theta}) alpha(e^{-i theta}, s - 1) d theta
/// ```
///
/// The inner factor is summed as a complex series on the unit circle rather
/// than by a nested quadrature, so the cost stays one-dimensional for every `s`.
pub fn alpha_via_hadamard(x: f64, s: u32, cfg: &QuadratureConfig) -> Result<QuadratureResult> {
    if s < 2 {
        return Err(Error::InvalidQuery("the Hadamard route needs s >= 2"));
    }
    if !x.is_finite() {
        return Err(Error::InvalidQuery("x must be finite"));
    }
    let series_cfg = SeriesConfig::default();
    let result = try_trapezoid_periodic_1d(
        |theta| {
            let w = ComplexValue::from_polar(1.0, theta);
            let inner = alpha_series(&AlphaQuery::new(w.conj(), s - 1)?, &series_cfg)?;
            Ok((w * x).exp() * inner.value)
        },
        cfg,
    )?;
    check_imag(result, LIFT_IMAG_LIMIT)
}
