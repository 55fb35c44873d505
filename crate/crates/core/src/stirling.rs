//! Stirling numbers of the second kind and the two identities built on them:
//!
//! * the exponential generating function `(e^x - 1)^k / k! = sum_{n >= k} S(n, k) x^n / n!`;
//! * the linear ODE `sum_{k=1}^{s} S(s, k) x^(k-1) y^(k) - y = 0` solved by
//!   `y = alpha(., s)`.
//!
//! Values are exact `u128` integers. Row 44 is the first row with an entry
//! above `u128::MAX`.

use alloc::vec::Vec;

#[cfg(not(any(feature = "std", test)))]
#[allow(unused_imports)]
use num_traits::Float;

use crate::series::{alpha_derivative_series, alpha_series, AlphaQuery, SeriesConfig};
use crate::{Error, Result};

/// Largest `n` accepted by [`stirling2`].
pub const MAX_N: u32 = 64;

/// Highest truncation order accepted by [`stirling_genfunc_residual`].
pub const MAX_GENFUNC_ORDER: u32 = 20;

/// Immutable triangle `S(n, k)` for `0 <= k <= n <= max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingTable {
    max_n: u32,
    // Row-major triangle; row n starts at n (n + 1) / 2.
    entries: Vec<u128>,
}

impl StirlingTable {
    /// Builds every row up to `max_n`, failing if any entry overflows.
    pub fn new(max_n: u32) -> Result<Self> {
        if max_n > MAX_N {
            return Err(Error::InvalidArgument("table size above 64"));
        }
        let rows = max_n as usize + 1;
        let mut entries = Vec::with_capacity(rows * (rows + 1) / 2);
        entries.push(1u128);
        for n in 1..=max_n {
            let prev = Self::offset(n - 1);
            entries.push(0);
            for k in 1..=n {
                let above = if k < n { entries[prev + k as usize] } else { 0 };
                let diag = entries[prev + k as usize - 1];
                let value = (k as u128)
                    .checked_mul(above)
                    .and_then(|v| v.checked_add(diag))
                    .ok_or(Error::Overflow { n, k })?;
                entries.push(value);
            }
        }
        Ok(Self { max_n, entries })
    }

    fn offset(n: u32) -> usize {
        let n = n as usize;
        n * (n + 1) / 2
    }

    /// Largest row index stored.
    pub fn max_n(&self) -> u32 {
        self.max_n
    }

    /// `S(n, k)`, or `None` outside the stored triangle.
    pub fn get(&self, n: u32, k: u32) -> Option<u128> {
        (n <= self.max_n && k <= n).then(|| self.entries[Self::offset(n) + k as usize])
    }

    /// Row `n` as `[S(n, 0), ..., S(n, n)]`.
    pub fn row(&self, n: u32) -> Option<&[u128]> {
        (n <= self.max_n).then(|| {
            let start = Self::offset(n);
            &self.entries[start..=start + n as usize]
        })
    }
}

/// Exact `S(n, k)` via `S(n, k) = k S(n-1, k) + S(n-1, k-1)`.
pub fn stirling2(n: u32, k: u32) -> Result<u128> {
    if k > n {
        return Err(Error::InvalidArgument("k must not exceed n"));
    }
    if n > MAX_N {
        return Err(Error::InvalidArgument("n must not exceed 64"));
    }
    // Rolling row; `None` marks an overflowed entry. Anything built from an
    // overflowed entry overflows too, so propagation is exact.
    let mut row = [None::<u128>; MAX_N as usize + 1];
    row[0] = Some(1);
    for m in 1..=n as usize {
        let top = m.min(k as usize);
        for j in (1..=top).rev() {
            let above = if j < m { row[j] } else { Some(0) };
            row[j] = match (above, row[j - 1]) {
                (Some(a), Some(d)) => (j as u128).checked_mul(a).and_then(|v| v.checked_add(d)),
                _ => None,
            };
        }
        row[0] = Some(0);
    }
    row[k as usize].ok_or(Error::Overflow { n, k })
}

/// `| (e^x - 1)^k / k! - sum_{n=k}^{order} S(n, k) x^n / n! |`.
pub fn stirling_genfunc_residual(k: u32, x: f64, order: u32) -> Result<f64> {
    if k < 1 {
        return Err(Error::InvalidArgument("k must be at least 1"));
    }
    if order < k {
        return Err(Error::InvalidArgument("order must be at least k"));
    }
    if order > MAX_GENFUNC_ORDER {
        return Err(Error::InvalidArgument("order must not exceed 20"));
    }
    if x.is_nan() || x.abs() > 1.0 {
        return Err(Error::InvalidArgument("|x| must not exceed 1"));
    }
    let table = StirlingTable::new(order)?;
    let k_factorial: f64 = (1..=k).map(f64::from).product();
    let lhs = x.exp_m1().powi(k as i32) / k_factorial;

    let mut power_over_factorial = 1.0;
    let mut rhs = 0.0;
    for n in 1..=order {
        power_over_factorial *= x / f64::from(n);
        if n >= k {
            rhs += table.get(n, k).unwrap() as f64 * power_over_factorial;
        }
    }
    Ok((lhs - rhs).abs())
}

/// `sum_{k=1}^{s} S(s, k) x^(k-1) alpha^(k)(x, s) - alpha(x, s)`, with every
/// series truncated at term tolerance `tol`.
pub fn ode_residual(x: f64, s: u32, tol: f64) -> Result<f64> {
    let q = AlphaQuery::real(x, s)?;
    if s > MAX_N {
        return Err(Error::InvalidQuery("s must not exceed 64"));
    }
    let cfg = SeriesConfig::with_tol(tol);
    let mut lhs = 0.0;
    let mut x_power = 1.0;
    for k in 1..=s {
        let coefficient = stirling2(s, k)? as f64;
        let derivative = alpha_derivative_series(&q, k, &cfg)?.value.re;
        lhs += coefficient * x_power * derivative;
        x_power *= x;
    }
    Ok(lhs - alpha_series(&q, &cfg)?.value.re)
}
