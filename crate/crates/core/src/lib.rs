//! Evaluation of the alpha function
//!
//! ```text
//! alpha(x, s) = sum_{n >= 0} x^n / (n!)^s
//! ```
//!
//! by several independent routes:
//!
//! * [`series`]: direct summation with a certified geometric tail bound, at
//!   real or complex `x`, plus term-wise derivatives and `I0`.
//! * [`hadamard`]: Hadamard products of power series evaluated as circle
//!   averages, the closed-form integrands for `s = 2` and `s = 3`, and the
//!   iterated lift `alpha(., s) = exp (*) alpha(., s - 1)`.
//! * [`quadrature`]: the equal-weight periodic trapezoid rule on the circle
//!   and on the torus, with node-doubling error control.
//! * [`stirling`]: exact Stirling numbers of the second kind and residual
//!   checks of their generating function and of the linear ODE satisfied by
//!   `alpha(., s)`.
//!
//! The crate is `no_std` (it needs `alloc` only for [`stirling::StirlingTable`]).
//! Enable the `std` feature to get `std::error::Error` through the std
//! backends of the numeric dependencies.

#![cfg_attr(not(any(feature = "std", test)), no_std)]
#![deny(missing_docs)]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;
pub mod hadamard;
pub mod quadrature;
pub mod series;
pub mod stirling;

pub use error::{Error, Result};
pub use hadamard::{
    alpha2_integrand, alpha2_via_integrand, alpha3_integrand_complex, alpha3_integrand_real,
    alpha3_via_torus, alpha_via_hadamard, bessel_identity_check, hadamard_eval, AnalyticFunction,
    HadamardProduct, TorusForm,
};
pub use quadrature::{
    trapezoid_periodic_1d, trapezoid_periodic_2d, try_trapezoid_periodic_1d, QuadratureConfig,
    QuadratureResult,
};
pub use series::{
    alpha_derivative_series, alpha_series, bessel_i0, AlphaQuery, ComplexValue, SeriesConfig,
    SeriesResult,
};
pub use stirling::{ode_residual, stirling2, stirling_genfunc_residual, StirlingTable};
