//! Direct summation of `alpha(x, s) = sum x^n / (n!)^s` and relatives.
//!
//! Terms are generated by the recurrence `t_{n+1} = t_n * x / (n + 1)^s`, so
//! `(n!)^s` is never formed (it leaves the `f64` range near `n = 58` already
//! for `s = 3`). Summation stops at the first index `N` where both
//!
//! * `|t_N| <= tol`, and
//! * the ratio bound `r = |x| / (N + 1)^s <= 1/2`
//!
//! hold. Because the ratios decrease monotonically from there on, the
//! remainder is dominated by a geometric series and
//! `|exact - partial| <= |t_N| * r / (1 - r)`, which is what
//! [`SeriesResult::tail_bound`] reports.

#[cfg(not(any(feature = "std", test)))]
#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result};

/// Complex scalar used for circle evaluations `x * e^{i theta}`.
pub type ComplexValue = num_complex::Complex64;

/// A validated `(x, s)` pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaQuery {
    x: ComplexValue,
    s: u32,
}

impl AlphaQuery {
    /// Builds a query, rejecting `s < 1` and non-finite `x`.
    pub fn new(x: ComplexValue, s: u32) -> Result<Self> {
        if s < 1 {
            return Err(Error::InvalidQuery("s must be at least 1"));
        }
        if !(x.re.is_finite() && x.im.is_finite()) {
            return Err(Error::InvalidQuery("x must be finite"));
        }
        Ok(Self { x, s })
    }

    /// Real-axis query.
    pub fn real(x: f64, s: u32) -> Result<Self> {
        Self::new(ComplexValue::new(x, 0.0), s)
    }

    /// Argument `x`.
    pub fn x(&self) -> ComplexValue {
        self.x
    }

    /// Factorial power `s`.
    pub fn s(&self) -> u32 {
        self.s
    }
}

/// Truncation controls for every series evaluator in this module.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    /// Largest admissible magnitude of the last summed term.
    pub tol: f64,
    /// Hard cap on the number of terms.
    pub max_terms: usize,
}

impl SeriesConfig {
    /// Default term tolerance.
    pub const DEFAULT_TOL: f64 = 1e-13;
    /// Default term budget.
    pub const DEFAULT_MAX_TERMS: usize = 500;

    /// Default budget with a custom tolerance.
    pub fn with_tol(tol: f64) -> Self {
        Self {
            tol,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidArgument(
                "series tolerance must be positive and finite",
            ));
        }
        if self.max_terms < 2 {
            return Err(Error::InvalidArgument("max_terms must be at least 2"));
        }
        Ok(())
    }
}

impl Default for SeriesConfig {
    fn default() -> Self {
        Self {
            tol: Self::DEFAULT_TOL,
            max_terms: Self::DEFAULT_MAX_TERMS,
        }
    }
}

/// A truncated series sum together with its certified remainder bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    /// Partial sum.
    pub value: ComplexValue,
    /// Number of terms summed (always at least 1).
    pub terms_used: usize,
    /// Upper bound on `|exact - value|` from geometric domination of the tail.
    pub tail_bound: f64,
}

/// Sums `first * prod_{j < m} (x * factor(j))` over `m = 0, 1, ...`.
///
/// `factor(m)` is the positive real multiplier taking term `m` to term
/// `m + 1` (apart from `x`); it must be non-increasing in `m` for the tail
/// bound to hold.
fn truncated_sum(
    first: ComplexValue,
    x: ComplexValue,
    factor: impl Fn(usize) -> f64,
    cfg: &SeriesConfig,
) -> Result<SeriesResult> {
    cfg.validate()?;
    let modulus = x.norm();
    let mut term = first;
    let mut sum = ComplexValue::new(0.0, 0.0);
    for m in 0..cfg.max_terms {
        sum += term;
        let c = factor(m);
        let ratio = modulus * c;
        let magnitude = term.norm();
        // A zero product means every later term vanishes identically.
        let tail_is_zero = magnitude * ratio == 0.0;
        if ratio <= 0.5 && (magnitude <= cfg.tol || tail_is_zero) {
            let tail_bound = if tail_is_zero {
                0.0
            } else {
                magnitude * ratio / (1.0 - ratio)
            };
            return Ok(SeriesResult {
                value: sum,
                terms_used: m + 1,
                tail_bound,
            });
        }
        term = term * x * c;
        if !(term.re.is_finite() && term.im.is_finite()) {
            return Err(Error::NonConvergence {
                max_terms: cfg.max_terms,
                last_term: f64::INFINITY,
            });
        }
    }
    Err(Error::NonConvergence {
        max_terms: cfg.max_terms,
        last_term: term.norm(),
    })
}

/// `alpha(x, s) = sum_{n >= 0} x^n / (n!)^s`.
pub fn alpha_series(q: &AlphaQuery, cfg: &SeriesConfig) -> Result<SeriesResult> {
    let s = q.s as i32;
    truncated_sum(
        ComplexValue::new(1.0, 0.0),
        q.x,
        |n| ((n + 1) as f64).powi(s).recip(),
        cfg,
    )
}

/// `k`-th derivative of `alpha(., s)` at `x`, by term-wise differentiation:
///
/// ```text
/// sum_{n >= k} n (n-1) ... (n-k+1) x^(n-k) / (n!)^s
/// ```
///
/// With `m = n - k` the leading coefficient is `1 / (k!)^(s-1)` and the term
/// ratio is `x (n+1) / ((n+1-k) (n+1)^s)`.
pub fn alpha_derivative_series(q: &AlphaQuery, k: u32, cfg: &SeriesConfig) -> Result<SeriesResult> {
    let s = q.s as i32;
    let k = k as usize;
    let first = (1..=k).fold(1.0_f64, |acc, j| acc / (j as f64).powi(s - 1));
    truncated_sum(
        ComplexValue::new(first, 0.0),
        q.x,
        |m| {
            let n1 = (m + k + 1) as f64;
            n1 / ((m + 1) as f64 * n1.powi(s))
        },
        cfg,
    )
}

/// Modified Bessel function `I0(z) = alpha(z^2 / 4, 2)`.
pub fn bessel_i0(z: f64, cfg: &SeriesConfig) -> Result<SeriesResult> {
    if !z.is_finite() {
        return Err(Error::InvalidQuery("z must be finite"));
    }
    alpha_series(&AlphaQuery::real(z * z / 4.0, 2)?, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{One, ToPrimitive, Zero};
    use proptest::prelude::*;

    fn alpha(x: f64, s: u32) -> f64 {
        alpha_series(&AlphaQuery::real(x, s).unwrap(), &SeriesConfig::default())
            .unwrap()
            .value
            .re
    }

    /// Exact rational partial sum of `x^n / (n!)^s` for `n <= n_max`.
    fn rational_alpha(x: &BigRational, s: u32, n_max: u32) -> BigRational {
        let mut sum = BigRational::zero();
        let mut power = BigRational::one();
        let mut fact = BigInt::one();
        for n in 0..=n_max {
            if n > 0 {
                power = &power * x;
                fact *= BigInt::from(n);
            }
            sum += &power / BigRational::from_integer(num_traits::pow(fact.clone(), s as usize));
        }
        sum
    }

    fn ratio(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn rejects_bad_queries() {
        assert!(matches!(
            AlphaQuery::real(1.0, 0),
            Err(Error::InvalidQuery(_))
        ));
        assert!(matches!(
            AlphaQuery::real(f64::NAN, 2),
            Err(Error::InvalidQuery(_))
        ));
        let q = AlphaQuery::real(1.0, 2).unwrap();
        let bad = SeriesConfig {
            tol: 0.0,
            max_terms: 10,
        };
        assert!(matches!(
            alpha_series(&q, &bad),
            Err(Error::InvalidArgument(_))
        ));
        let bad = SeriesConfig {
            tol: 1e-10,
            max_terms: 1,
        };
        assert!(matches!(
            alpha_series(&q, &bad),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn zero_argument_uses_single_term() {
        let r = alpha_series(
            &AlphaQuery::real(0.0, 3).unwrap(),
            &SeriesConfig::with_tol(1e-15),
        )
        .unwrap();
        assert_eq!(r.value.re, 1.0);
        assert_eq!(r.terms_used, 1);
        assert_eq!(r.tail_bound, 0.0);
    }

    #[test]
    fn exponential_case() {
        let r = alpha_series(
            &AlphaQuery::real(1.0, 1).unwrap(),
            &SeriesConfig::with_tol(1e-15),
        )
        .unwrap();
        assert!((r.value.re - core::f64::consts::E).abs() < 1e-15);
    }

    #[test]
    fn matches_exact_rational_partial_sums() {
        // n <= 20 leaves a remainder far below 1e-16 for x = 1, s >= 2.
        for (s, tol) in [(2, 1e-14), (3, 1e-14), (4, 1e-14)] {
            let exact = rational_alpha(&BigRational::one(), s, 20).to_f64().unwrap();
            let got = alpha_series(
                &AlphaQuery::real(1.0, s).unwrap(),
                &SeriesConfig::with_tol(tol),
            )
            .unwrap();
            assert!(
                (got.value.re - exact).abs() < 1e-15,
                "s={s}: {} vs {exact}",
                got.value.re
            );
        }
        // Frozen from the rational oracle.
        assert!((alpha(1.0, 3) - 2.129_702_548_983_306_4).abs() < 1e-15);
        assert!((alpha(1.0, 2) - 2.279_585_302_336_067_3).abs() < 1e-15);
        assert!((alpha(1.0, 4) - 2.063_274_623_846_315_2).abs() < 1e-15);
    }

    #[test]
    fn alpha_overflow_free_for_large_arguments() {
        // 1/(n!)^3 underflows long before the sum stops; the recurrence never forms (n!)^3.
        let r = alpha_series(
            &AlphaQuery::real(200.0, 3).unwrap(),
            &SeriesConfig::default(),
        )
        .unwrap();
        assert!(r.value.re.is_finite() && r.value.re > 1.0);
    }

    #[test]
    fn budget_exhaustion_is_non_convergence() {
        let q = AlphaQuery::real(1e6, 1).unwrap();
        assert!(matches!(
            alpha_series(&q, &SeriesConfig::default()),
            Err(Error::NonConvergence { max_terms: 500, .. })
        ));
        let q = AlphaQuery::real(50.0, 2).unwrap();
        let tight = SeriesConfig {
            tol: 1e-13,
            max_terms: 5,
        };
        assert!(matches!(
            alpha_series(&q, &tight),
            Err(Error::NonConvergence { .. })
        ));
    }

    #[test]
    fn derivative_examples() {
        let cfg = SeriesConfig::default();
        let d = alpha_derivative_series(&AlphaQuery::real(0.0, 2).unwrap(), 1, &cfg).unwrap();
        assert_eq!(d.value.re, 1.0);
        let d = alpha_derivative_series(&AlphaQuery::real(1.0, 1).unwrap(), 3, &cfg).unwrap();
        assert!((d.value.re - core::f64::consts::E).abs() < 1e-13);
        let d = alpha_derivative_series(&AlphaQuery::real(0.7, 3).unwrap(), 0, &cfg).unwrap();
        assert!((d.value.re - alpha(0.7, 3)).abs() < 1e-15);
    }

    #[test]
    fn second_derivative_matches_central_difference() {
        // Central second difference of the series itself, in exact arithmetic at
        // h = 1e-5; the O(h^2) truncation error is ~1e-11.
        let x = ratio(1, 2);
        let h = ratio(1, 100_000);
        let f = |p: &BigRational| rational_alpha(p, 2, 30);
        let fd = (f(&(&x + &h)) - f(&x) * BigRational::from_integer(BigInt::from(2))
            + f(&(&x - &h)))
            / (&h * &h);
        let fd = fd.to_f64().unwrap();
        let d = alpha_derivative_series(
            &AlphaQuery::real(0.5, 2).unwrap(),
            2,
            &SeriesConfig::default(),
        )
        .unwrap();
        assert!((d.value.re - fd).abs() < 1e-8, "{} vs {fd}", d.value.re);
        // Floating-point central difference of the first derivative.
        let hf = 1e-5;
        let d1 = |t: f64| {
            alpha_derivative_series(
                &AlphaQuery::real(t, 2).unwrap(),
                1,
                &SeriesConfig::default(),
            )
            .unwrap()
            .value
            .re
        };
        let fd1 = (d1(0.5 + hf) - d1(0.5 - hf)) / (2.0 * hf);
        assert!((d.value.re - fd1).abs() < 1e-8);
    }

    #[test]
    fn bessel_examples() {
        let cfg = SeriesConfig::default();
        assert_eq!(bessel_i0(0.0, &cfg).unwrap().value.re, 1.0);
        let i2 = bessel_i0(2.0, &cfg).unwrap().value.re;
        assert!((i2 - 2.279_585_302_336_067).abs() < 1e-13);
        assert_eq!(
            bessel_i0(-2.0, &cfg).unwrap().value,
            bessel_i0(2.0, &cfg).unwrap().value
        );
        let i5 = bessel_i0(5.0, &cfg).unwrap().value.re;
        assert!((i5 - 27.239_871_823_604_447).abs() < 1e-12);
    }

    #[test]
    fn bessel_at_least_one_on_grid() {
        let cfg = SeriesConfig::default();
        for j in 0..=200 {
            let z = -10.0 + 0.1 * j as f64;
            let v = bessel_i0(z, &cfg).unwrap().value.re;
            assert!(v * v >= 1.0, "I0({z}) = {v}");
        }
    }

    #[test]
    fn monotone_in_s_at_one() {
        let cfg = SeriesConfig::with_tol(1e-12);
        for s in 1..=5 {
            let a = alpha_series(&AlphaQuery::real(1.0, s).unwrap(), &cfg)
                .unwrap()
                .value
                .re;
            let b = alpha_series(&AlphaQuery::real(1.0, s + 1).unwrap(), &cfg)
                .unwrap()
                .value
                .re;
            assert!(b < a, "s={s}");
        }
    }

    #[test]
    fn complex_argument_on_unit_circle() {
        // alpha(e^{i theta}, 1) = exp(e^{i theta}).
        let z = ComplexValue::from_polar(1.0, 0.8);
        let r = alpha_series(&AlphaQuery::new(z, 1).unwrap(), &SeriesConfig::default()).unwrap();
        assert!((r.value - z.exp()).norm() < 1e-13);
    }

    #[test]
    fn complex_multiplication_unit_modulus() {
        let a = ComplexValue::from_polar(1.0, 0.3);
        let b = ComplexValue::from_polar(1.0, 1.7);
        let c = ComplexValue::from_polar(1.0, -2.2);
        assert!(((a * b) * c - a * (b * c)).norm() < 1e-14);
        assert!((a * b - b * a).norm() < 1e-14);
    }

    proptest! {
        #[test]
        fn conjugate_symmetry(r in 0.0..3.0f64, phi in 0.0..core::f64::consts::TAU, s in 1u32..=4) {
            let x = ComplexValue::from_polar(r, phi);
            let cfg = SeriesConfig::default();
            let a = alpha_series(&AlphaQuery::new(x, s).unwrap(), &cfg).unwrap().value;
            let b = alpha_series(&AlphaQuery::new(x.conj(), s).unwrap(), &cfg).unwrap().value;
            prop_assert!((b - a.conj()).norm() <= 1e-13 * a.norm().max(1e-300));
        }

        #[test]
        fn tail_bound_dominates_refinement(
            r in 0.0..5.0f64,
            phi in 0.0..core::f64::consts::TAU,
            s in 1u32..=4,
            exp in 4i32..=10,
        ) {
            let x = ComplexValue::from_polar(r, phi);
            let q = AlphaQuery::new(x, s).unwrap();
            let tol = 10f64.powi(-exp);
            let loose = alpha_series(&q, &SeriesConfig::with_tol(tol)).unwrap();
            let tight = alpha_series(&q, &SeriesConfig::with_tol(tol / 1e6)).unwrap();
            prop_assert!(loose.terms_used >= 1);
            // The bound covers truncation only; allow a few ulps of summation rounding.
            let rounding = 4.0 * f64::EPSILON * tight.value.norm().max(1.0);
            prop_assert!((tight.value - loose.value).norm() <= loose.tail_bound + rounding);
        }
    }
}
