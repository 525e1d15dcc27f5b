use num_traits::Zero;

use super::fixed::FixedPointDecimal;
use crate::error::{Error, Result};
use crate::quadfield::{int, QuadElement, Rational};
use crate::sequences::{SeqContext, SeqKind};

fn term(ctx: &SeqContext, which: SeqKind, n: i64) -> Rational {
    match which {
        SeqKind::Fib => int(ctx.fib(n)),
        SeqKind::Lucas => ctx.lucas(n),
    }
}

/// `|Xₙ₊₁/Xₙ − ε|` as an exact element of the field.
pub fn ratio_error_exact(ctx: &SeqContext, which: SeqKind, n: i64) -> Result<QuadElement> {
    if n < 1 {
        return Err(Error::NonPositiveIndex(n));
    }
    let den = term(ctx, which, n);
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let ratio = term(ctx, which, n + 1) / den;
    let e = ctx.element();
    Ok((&QuadElement::rational(e.field(), ratio) - e).abs())
}

/// [`ratio_error_exact`] truncated to `digits` decimals.
pub fn ratio_error(ctx: &SeqContext, which: SeqKind, n: i64, digits: u32) -> Result<FixedPointDecimal> {
    FixedPointDecimal::from_element(&ratio_error_exact(ctx, which, n)?, digits)
}

/// Whether the unit is a root of `t² − 2a·t + Δ`.
pub fn characteristic_check(ctx: &SeqContext) -> bool {
    let e = ctx.element();
    let two_a = int(2) * ctx.a();
    let delta = QuadElement::rational(e.field(), int(ctx.delta()));
    (e * e - e.scale(&two_a) + delta).is_zero()
}
