//! Generating functions of the Fibonacci and Lucas sequences, the limit
//! `Xₙ₊₁/Xₙ → ε`, and the characteristic equation `ε² − 2aε + Δ = 0`.
//!
//! Closed forms and partial sums are exact rationals. The radius of
//! convergence `1/ε` is irrational, so the only decimal quantities are the
//! [`FixedPointDecimal`] approximations of `√d`, `ε` and ratio errors.

mod fixed;
mod limits;
mod series;

pub use fixed::{approx_sqrt, approx_unit, FixedPointDecimal, MAX_DIGITS};
pub use limits::{characteristic_check, ratio_error, ratio_error_exact};
pub use series::{
    gf_alt_closed, gf_closed, gf_fib_closed, gf_lucas_closed, gf_truncated, GfQuery, Series,
    RADIUS_MARGIN_DIGITS,
};
