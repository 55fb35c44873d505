//! Equal-weight trapezoid rule for smooth `2 pi`-periodic integrands.
//!
//! Nodes sit at `theta_j = 2 pi j / N`, every weight is `1 / N`, so the rule
//! returns the normalized average `(1 / 2 pi) * integral over [0, 2 pi)`. On
//! integrands analytic in a strip around the real axis the error decays
//! geometrically in `N`. Accuracy is controlled by doubling `N` until two
//! consecutive levels agree to `tol`.
//!
//! Node values are summed in ascending `j` (then `k` in 2D) at every level,
//! so results are bit-reproducible.

use core::f64::consts::TAU;

use crate::{ComplexValue, Error, Result};

/// Node-doubling controls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Node count (per dimension) of the first level.
    pub initial_nodes: usize,
    /// Largest node count (per dimension) that may be used.
    pub max_nodes: usize,
    /// Stop once consecutive levels differ by at most this much.
    pub tol: f64,
}

impl QuadratureConfig {
    /// Validated constructor.
    pub fn new(initial_nodes: usize, max_nodes: usize, tol: f64) -> Result<Self> {
        let cfg = Self {
            initial_nodes,
            max_nodes,
            tol,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// 16 initial nodes, up to 1024, `tol = 1e-12`.
    pub const fn default_1d() -> Self {
        Self {
            initial_nodes: 16,
            max_nodes: 1024,
            tol: 1e-12,
        }
    }

    /// 16 initial nodes per dimension, up to 512, `tol = 1e-10`.
    pub const fn default_2d() -> Self {
        Self {
            initial_nodes: 16,
            max_nodes: 512,
            tol: 1e-10,
        }
    }

    /// Single level with exactly `nodes` nodes; no doubling, `est_error = 0`.
    pub fn fixed(nodes: usize) -> Result<Self> {
        Self::new(nodes, nodes, f64::MAX)
    }

    /// Same node limits with another tolerance.
    pub fn with_tol(self, tol: f64) -> Self {
        Self { tol, ..self }
    }

    fn validate(&self) -> Result<()> {
        if self.initial_nodes < 4 {
            return Err(Error::InvalidArgument("initial_nodes must be at least 4"));
        }
        if self.max_nodes < self.initial_nodes {
            return Err(Error::InvalidArgument(
                "max_nodes must be at least initial_nodes",
            ));
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::InvalidArgument(
                "quadrature tolerance must be positive",
            ));
        }
        Ok(())
    }
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self::default_1d()
    }
}

/// Outcome of a node-doubling run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    /// Normalized average at the finest level.
    pub value: ComplexValue,
    /// Node count per dimension at the finest level.
    pub nodes: usize,
    /// `|value(N) - value(N / 2)|`, or 0 when only one level ran.
    pub est_error: f64,
}

fn angle(j: usize, n: usize) -> f64 {
    TAU * j as f64 / n as f64
}

fn refine(
    cfg: &QuadratureConfig,
    mut level: impl FnMut(usize) -> Result<ComplexValue>,
) -> Result<QuadratureResult> {
    cfg.validate()?;
    let mut n = cfg.initial_nodes;
    let mut prev = level(n)?;
    if n.saturating_mul(2) > cfg.max_nodes {
        return Ok(QuadratureResult {
            value: prev,
            nodes: n,
            est_error: 0.0,
        });
    }
    loop {
        n *= 2;
        let value = level(n)?;
        let result = QuadratureResult {
            value,
            nodes: n,
            est_error: (value - prev).norm(),
        };
        if result.est_error <= cfg.tol {
            return Ok(result);
        }
        if n.saturating_mul(2) > cfg.max_nodes {
            return Err(Error::ToleranceNotReached {
                best: result,
                tol: cfg.tol,
            });
        }
        prev = value;
    }
}

/// `(1 / N) sum_j f(2 pi j / N)` with node doubling.
pub fn trapezoid_periodic_1d<F>(f: F, cfg: &QuadratureConfig) -> Result<QuadratureResult>
where
    F: Fn(f64) -> ComplexValue,
{
    try_trapezoid_periodic_1d(|theta| Ok(f(theta)), cfg)
}

/// As [`trapezoid_periodic_1d`] for integrands that can fail; the first
/// error aborts the run.
pub fn try_trapezoid_periodic_1d<F>(f: F, cfg: &QuadratureConfig) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Result<ComplexValue>,
{
    refine(cfg, |n| {
        let mut sum = ComplexValue::new(0.0, 0.0);
        for j in 0..n {
            sum += f(angle(j, n))?;
        }
        Ok(sum / n as f64)
    })
}

/// Tensor-product rule `(1 / N^2) sum_{j,k} f(2 pi j / N, 2 pi k / N)` on the
/// torus, doubling `N` in both dimensions together.
pub fn trapezoid_periodic_2d<F>(f: F, cfg: &QuadratureConfig) -> Result<QuadratureResult>
where
    F: Fn(f64, f64) -> ComplexValue,
{
    refine(cfg, |n| {
        let mut sum = ComplexValue::new(0.0, 0.0);
        for j in 0..n {
            let theta = angle(j, n);
            for k in 0..n {
                sum += f(theta, angle(k, n));
            }
        }
        Ok(sum / (n as f64 * n as f64))
    })
}
