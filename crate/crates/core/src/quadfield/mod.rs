//! Exact arithmetic in a real quadratic field `Q(√d)`.
//!
//! Elements carry arbitrary rational coordinates; membership in the ring of
//! integers is a predicate ([`QuadElement::is_integral`]) rather than a type.
//! [`MatrixRep`] is the faithful 2×2 model `x + y√d ↦ [[x, yd], [y, x]]`.

mod element;
mod matrix;
mod squarefree;

pub use element::QuadElement;
pub use matrix::{power_coeffs_closed, MatrixRep};
pub use squarefree::{validate_d, SquarefreeD};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// `n / 1` as a [`Rational`].
pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// `n / d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `Δᵏ` for `Δ = ±1` and any integer `k`.
pub fn sign_pow(delta: i8, k: i64) -> i8 {
    if delta == -1 && k.rem_euclid(2) == 1 {
        -1
    } else {
        1
    }
}

/// Row `n` of Pascal's triangle.
pub(crate) fn binomial_row(n: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for k in 0..n {
        c = c * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(c.clone());
    }
    row
}

/// `r` as an exact integer, if it is one.
pub fn as_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.numer().clone())
}

/// Integer part of `|r|` compared against zero; handy for sign tests.
pub(crate) fn sign_of(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
