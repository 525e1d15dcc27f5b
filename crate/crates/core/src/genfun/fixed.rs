use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::quadfield::{QuadElement, Rational};
use crate::sequences::SeqContext;

pub const MAX_DIGITS: u32 = 10_000;

/// `scaled_value / 10^digits`, known to lie within `error_ulps · 10^−digits`
/// of the quantity it approximates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointDecimal {
    scaled_value: BigInt,
    digits: u32,
    error_ulps: u32,
}

fn check_digits(digits: u32) -> Result<()> {
    if (1..=MAX_DIGITS).contains(&digits) {
        Ok(())
    } else {
        Err(Error::InvalidPrecision(digits))
    }
}

fn ten_pow(digits: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), digits as usize)
}

impl FixedPointDecimal {
    pub fn new(scaled_value: BigInt, digits: u32, error_ulps: u32) -> Self {
        Self { scaled_value, digits, error_ulps }
    }

    /// Truncation of `r` toward −∞ (error below one ulp).
    pub fn from_rational(r: &Rational, digits: u32) -> Result<Self> {
        check_digits(digits)?;
        let scaled = (r * Rational::from_integer(ten_pow(digits))).floor().to_integer();
        Ok(Self::new(scaled, digits, 1))
    }

    /// Truncation of a real quadratic number toward −∞.
    pub fn from_element(e: &QuadElement, digits: u32) -> Result<Self> {
        check_digits(digits)?;
        Ok(Self::new(e.floor_scaled(&ten_pow(digits)), digits, 1))
    }

    pub fn scaled_value(&self) -> &BigInt {
        &self.scaled_value
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Worst-case distance to the true value, in units of `10^−digits`.
    pub fn error_ulps(&self) -> u32 {
        self.error_ulps
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.scaled_value.clone(), ten_pow(self.digits))
    }

    pub fn to_f64(&self) -> f64 {
        self.to_rational().to_f64().unwrap_or(f64::NAN)
    }

    /// Equal up to `10^(−digits+2)`, using the coarser of the two precisions.
    pub fn approx_eq(&self, other: &Self) -> bool {
        let digits = self.digits.min(other.digits);
        let tol = Rational::new(BigInt::from(1), ten_pow(digits.saturating_sub(2)));
        (self.to_rational() - other.to_rational()).abs() <= tol
    }

    /// Compares against `r` when the error bound makes the answer certain.
    pub fn certainly_cmp(&self, r: &Rational) -> Option<Ordering> {
        let v = self.to_rational();
        let err = Rational::new(BigInt::from(self.error_ulps), ten_pow(self.digits));
        if &v + &err < *r {
            Some(Ordering::Less)
        } else if &v - &err > *r {
            Some(Ordering::Greater)
        } else {
            None
        }
    }
}

impl fmt::Display for FixedPointDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.digits as usize;
        let sign = if self.scaled_value.is_negative() { "-" } else { "" };
        let mag = self.scaled_value.abs().to_string();
        let padded = format!("{mag:0>width$}", width = digits + 1);
        let (int_part, frac) = padded.split_at(padded.len() - digits);
        write!(f, "{sign}{int_part}.{frac}")
    }
}

/// `√d` truncated to `digits` decimals: `isqrt(d · 10^(2·digits))`.
pub fn approx_sqrt(d: u64, digits: u32) -> Result<FixedPointDecimal> {
    check_digits(digits)?;
    let radicand = BigInt::from(d) * ten_pow(2 * digits);
    let root = radicand.sqrt();
    let exact = (&root * &root) == radicand;
    Ok(FixedPointDecimal::new(root, digits, if exact { 0 } else { 1 }))
}

/// The context's unit `a + b√d` truncated to `digits` decimals.
pub fn approx_unit(ctx: &SeqContext, digits: u32) -> Result<FixedPointDecimal> {
    FixedPointDecimal::from_element(ctx.element(), digits)
}
