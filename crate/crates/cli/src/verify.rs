//! `verify`: seeded identity suites with per-case pass/fail lines.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use alpha_core::{
    alpha3_integrand_complex, alpha3_integrand_real, alpha3_via_torus, bessel_identity_check,
    hadamard_eval, ode_residual, stirling2, stirling_genfunc_residual, AnalyticFunction,
    ComplexValue, HadamardProduct, QuadratureConfig, StirlingTable, TorusForm,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::args::{Suite, VerifyArgs};
use crate::Outcome;

/// Random polynomial pairs in the `theorem1` suite.
pub const THEOREM1_TRIALS: usize = 200;

/// One checked case.
#[derive(Debug, Clone, PartialEq)]
pub struct Case {
    /// Suite the case belongs to.
    pub suite: &'static str,
    /// What was checked.
    pub label: String,
    /// Observed discrepancy.
    pub delta: f64,
    /// Largest admissible discrepancy.
    pub limit: f64,
}

impl Case {
    fn new(suite: &'static str, label: impl Into<String>, delta: f64, limit: f64) -> Self {
        Self {
            suite,
            label: label.into(),
            delta,
            limit,
        }
    }

    fn failed(suite: &'static str, label: impl Into<String>, err: impl std::fmt::Display) -> Self {
        Self::new(
            suite,
            format!("{} (error: {err})", label.into()),
            f64::INFINITY,
            0.0,
        )
    }

    /// `delta <= limit`.
    pub fn passed(&self) -> bool {
        self.delta <= self.limit
    }
}

fn horner(coeffs: &[f64], z: ComplexValue) -> ComplexValue {
    coeffs
        .iter()
        .rev()
        .fold(ComplexValue::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// Hadamard product of random real polynomials (degree <= 8, coefficients in
/// `[-1, 1]`, `u, v` in `(-1, 1)`) against `sum a_n b_n (u v)^n`.
pub fn theorem1(seed: u64) -> Vec<Case> {
    const SUITE: &str = "theorem1";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cfg = QuadratureConfig::default_1d();
    let open_unit = |rng: &mut ChaCha8Rng| loop {
        let t: f64 = rng.random_range(-1.0..1.0);
        if t > -1.0 {
            break t;
        }
    };
    (0..THEOREM1_TRIALS)
        .map(|trial| {
            let deg_a = rng.random_range(0..=8usize);
            let deg_b = rng.random_range(0..=8usize);
            let a: Vec<f64> = (0..=deg_a).map(|_| rng.random_range(-1.0..=1.0)).collect();
            let b: Vec<f64> = (0..=deg_b).map(|_| rng.random_range(-1.0..=1.0)).collect();
            let u = open_unit(&mut rng);
            let v = open_unit(&mut rng);
            let label = format!("trial {trial:03} deg {deg_a}x{deg_b} u={u:.3} v={v:.3}");
            let p = HadamardProduct::new(
                AnalyticFunction::entire(|z| horner(&a, z)),
                AnalyticFunction::entire(|z| horner(&b, z)),
            );
            let z = u * v;
            let direct: f64 = a
                .iter()
                .zip(&b)
                .enumerate()
                .map(|(n, (x, y))| x * y * z.powi(n as i32))
                .sum();
            match hadamard_eval(&p, u, v, &cfg) {
                Ok(h) => Case::new(SUITE, label, (h.value.re - direct).abs(), 1e-11),
                Err(e) => Case::failed(SUITE, label, e),
            }
        })
        .collect()
}

/// Circle average of `e^{a cos t + b sin t}` against `I0(sqrt(a^2 + b^2))`,
/// plus rotational invariance of the left side.
pub fn bessel_eq1() -> Vec<Case> {
    const SUITE: &str = "bessel_eq1";
    let cfg = QuadratureConfig::default_1d();
    let mut cases = Vec::new();
    for (a, b) in [(0.0, 0.0), (2.0, 0.0), (0.0, 2.0), (3.0, 4.0), (1.0, 1.0)] {
        let label = format!("lhs vs I0 at (a, b) = ({a}, {b})");
        cases.push(match bessel_identity_check(a, b, &cfg) {
            Ok((lhs, rhs)) => Case::new(SUITE, label, (lhs - rhs).abs(), 1e-10),
            Err(e) => Case::failed(SUITE, label, e),
        });
    }
    let lhs = |a, b| bessel_identity_check(a, b, &cfg).map(|(l, _)| l);
    for (a, b) in [(5.0, 0.0), (0.0, 5.0)] {
        let label = format!("lhs(3, 4) vs lhs({a}, {b})");
        cases.push(match (lhs(3.0, 4.0), lhs(a, b)) {
            (Ok(p), Ok(q)) => Case::new(SUITE, label, (p - q).abs(), 1e-11),
            (Err(e), _) | (_, Err(e)) => Case::failed(SUITE, label, e),
        });
    }
    cases
}

/// ODE residual of `alpha(., s)` over `s in 1..=4` and a grid of `x`.
pub fn ode() -> Vec<Case> {
    const SUITE: &str = "ode";
    let mut cases = Vec::new();
    for s in 1..=4 {
        for x in [-2.0, -0.5, 0.0, 0.5, 1.0, 2.0f64] {
            let label = format!("residual at s = {s}, x = {x}");
            let limit = 1e-10 * (1.0 + x.abs().exp());
            cases.push(match ode_residual(x, s, 1e-13) {
                Ok(r) => Case::new(SUITE, label, r.abs(), limit),
                Err(e) => Case::failed(SUITE, label, e),
            });
        }
    }
    cases
}

fn count_partitions(n: usize, k: usize) -> u128 {
    // Restricted growth strings: element i joins one of the open blocks or opens the next.
    fn go(pos: usize, n: usize, open: usize, k: usize) -> u128 {
        if pos == n {
            return u128::from(open == k);
        }
        (0..=open.min(k.saturating_sub(1)))
            .map(|b| go(pos + 1, n, if b == open { open + 1 } else { open }, k))
            .sum()
    }
    go(0, n, 0, k)
}

/// Stirling numbers against exhaustive enumeration (`n <= 9`), row sums against
/// Bell numbers, and the exponential generating function.
pub fn stirling_gf() -> Vec<Case> {
    const SUITE: &str = "stirling_gf";
    let mut cases = Vec::new();
    for n in 0..=9u32 {
        let mut worst = 0.0f64;
        let mut error = None;
        for k in 0..=n {
            match stirling2(n, k) {
                Ok(v) => {
                    worst = worst.max(v.abs_diff(count_partitions(n as usize, k as usize)) as f64)
                }
                Err(e) => error = Some(e),
            }
        }
        let label = format!("S({n}, k) vs enumeration, all k");
        cases.push(match error {
            None => Case::new(SUITE, label, worst, 0.0),
            Some(e) => Case::failed(SUITE, label, e),
        });
    }
    const BELL: [u128; 13] = [
        1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597,
    ];
    match StirlingTable::new(12) {
        Ok(t) => {
            let worst = (0..=12u32)
                .map(|n| {
                    t.row(n)
                        .unwrap()
                        .iter()
                        .sum::<u128>()
                        .abs_diff(BELL[n as usize])
                })
                .max()
                .unwrap_or(0);
            cases.push(Case::new(
                SUITE,
                "row sums vs Bell numbers, n <= 12",
                worst as f64,
                0.0,
            ));
        }
        Err(e) => cases.push(Case::failed(SUITE, "row sums vs Bell numbers", e)),
    }
    for k in 1..=3 {
        for x in [0.0, 0.5, 1.0] {
            let label = format!("generating function k = {k}, x = {x}, order 20");
            cases.push(match stirling_genfunc_residual(k, x, 20) {
                Ok(r) => Case::new(SUITE, label, r, 1e-10),
                Err(e) => Case::failed(SUITE, label, e),
            });
        }
    }
    cases
}

/// Pointwise real expansion of the `s = 3` torus integrand against its
/// complex form on a 16 x 16 grid, and the torus-averaged imaginary part.
pub fn expansion_s3() -> Vec<Case> {
    const SUITE: &str = "expansion_s3";
    let cfg = QuadratureConfig::new(16, 128, 1e-10).expect("valid config");
    let mut cases = Vec::new();
    for x in [-1.0, 0.0, 0.5, 1.0, 2.0f64] {
        let mut worst = 0.0f64;
        for j in 0..16 {
            for k in 0..16 {
                let (theta, t) = (TAU * j as f64 / 16.0, TAU * k as f64 / 16.0);
                let diff =
                    alpha3_integrand_complex(x, theta, t).re - alpha3_integrand_real(x, theta, t);
                worst = worst.max(diff.abs());
            }
        }
        cases.push(Case::new(
            SUITE,
            format!("pointwise Re(complex) - real, 16x16 grid, x = {x}"),
            worst,
            1e-12 * (1.0 + (x.abs() + 2.0).exp()),
        ));
        let label = format!("torus average of Im(complex), x = {x}");
        cases.push(match alpha3_via_torus(x, TorusForm::Complex, &cfg) {
            Ok(r) => Case::new(SUITE, label, r.value.im.abs(), 1e-10),
            Err(e) => Case::failed(SUITE, label, e),
        });
    }
    cases
}

/// Cases of one suite (or all of them).
pub fn run_suite(suite: Suite, seed: u64) -> Vec<Case> {
    match suite {
        Suite::Theorem1 => theorem1(seed),
        Suite::BesselEq1 => bessel_eq1(),
        Suite::Ode => ode(),
        Suite::StirlingGf => stirling_gf(),
        Suite::ExpansionS3 => expansion_s3(),
        Suite::All => {
            let mut all = theorem1(seed);
            all.extend(bessel_eq1());
            all.extend(ode());
            all.extend(stirling_gf());
            all.extend(expansion_s3());
            all
        }
    }
}

/// Per-case lines, a summary per suite and an overall line.
pub fn render(cases: &[Case]) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{:<13} {:<58} {:>11} {:>9}  status",
        "suite", "case", "delta", "limit"
    )
    .unwrap();
    for c in cases {
        writeln!(
            out,
            "{:<13} {:<58} {:>11.3e} {:>9.2e}  {}",
            c.suite,
            c.label,
            c.delta,
            c.limit,
            if c.passed() { "pass" } else { "FAIL" }
        )
        .unwrap();
    }
    let mut suites: Vec<&str> = cases.iter().map(|c| c.suite).collect();
    suites.dedup();
    for suite in suites {
        let of_suite: Vec<_> = cases.iter().filter(|c| c.suite == suite).collect();
        let passed = of_suite.iter().filter(|c| c.passed()).count();
        let worst = of_suite.iter().map(|c| c.delta).fold(0.0, f64::max);
        writeln!(
            out,
            "{suite}: {passed}/{} passed, worst delta {worst:.3e}",
            of_suite.len()
        )
        .unwrap();
    }
    let passed = cases.iter().filter(|c| c.passed()).count();
    writeln!(out, "total: {passed}/{} passed", cases.len()).unwrap();
    out
}

pub(crate) fn cmd_verify(a: &VerifyArgs) -> Outcome {
    let cases = run_suite(a.suite, a.seed);
    let code = if cases.iter().all(Case::passed) { 0 } else { 1 };
    Outcome {
        text: render(&cases),
        code,
    }
}
