use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadfield::{int, Rational};
use crate::sequences::SeqContext;

/// Inputs with `|x|·ε ≥ 1 − 10^−RADIUS_MARGIN_DIGITS` are rejected.
pub const RADIUS_MARGIN_DIGITS: u32 = 10;

/// The four power series attached to a context.
///
/// * `Fib`: `Σₙ≥₁ Fₙ·xⁿ⁻¹`
/// * `Lucas`: `Σₙ≥₁ Lₙ·xⁿ⁻¹`
/// * `AltFib`: `Σₙ≥₀ Δⁿ·Fₙ₊₁·xⁿ`
/// * `AltLucas`: `Σₙ≥₀ Δⁿ·Lₙ₊₁·xⁿ`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Series {
    Fib,
    Lucas,
    AltFib,
    AltLucas,
}

impl Series {
    pub const ALL: [Series; 4] = [Series::Fib, Series::Lucas, Series::AltFib, Series::AltLucas];

    pub fn name(self) -> &'static str {
        match self {
            Series::Fib => "fib",
            Series::Lucas => "lucas",
            Series::AltFib => "alt_fib",
            Series::AltLucas => "alt_lucas",
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Series {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Series::ALL
            .into_iter()
            .find(|k| k.name() == s.to_ascii_lowercase().replace('-', "_"))
            .ok_or_else(|| format!("unknown series `{s}`"))
    }
}

/// `|x|·ε < 1 − 10⁻¹⁰`, decided exactly.
fn check_radius(ctx: &SeqContext, x: &Rational) -> Result<()> {
    let margin = Rational::new(BigInt::one(), num_traits::pow(BigInt::from(10), RADIUS_MARGIN_DIGITS as usize));
    let scaled = ctx.element().scale(&x.abs());
    if scaled.cmp_rational(&(Rational::one() - margin)) == Ordering::Less {
        Ok(())
    } else {
        Err(Error::OutsideRadius(x.to_string()))
    }
}

fn nonzero(den: Rational, x: &Rational) -> Result<Rational> {
    if den.is_zero() {
        Err(Error::PoleHit(x.to_string()))
    } else {
        Ok(den)
    }
}

/// `f(x) = 1/(Δx² − 2ax + 1)`.
pub fn gf_fib_closed(ctx: &SeqContext, x: &Rational) -> Result<Rational> {
    check_radius(ctx, x)?;
    let den = nonzero(int(ctx.delta()) * x * x - int(2) * ctx.a() * x + Rational::one(), x)?;
    Ok(den.recip())
}

/// `g(x) = (a − Δx)/(a·(Δx² − 2ax + 1))`.
pub fn gf_lucas_closed(ctx: &SeqContext, x: &Rational) -> Result<Rational> {
    let f = gf_fib_closed(ctx, x)?;
    let a = ctx.a();
    Ok((a - int(ctx.delta()) * x) / a * f)
}

/// `(f₁(x), g₁(x)) = (Δ/(x² − 2ax + Δ), Δ(a − x)/(a·(x² − 2ax + Δ)))`.
pub fn gf_alt_closed(ctx: &SeqContext, x: &Rational) -> Result<(Rational, Rational)> {
    check_radius(ctx, x)?;
    let delta = int(ctx.delta());
    let den = nonzero(x * x - int(2) * ctx.a() * x + &delta, x)?;
    let f1 = &delta / den;
    let a = ctx.a();
    let g1 = (a - x) / a * &f1;
    Ok((f1, g1))
}

/// Closed form of any of the four series.
pub fn gf_closed(ctx: &SeqContext, x: &Rational, which: Series) -> Result<Rational> {
    match which {
        Series::Fib => gf_fib_closed(ctx, x),
        Series::Lucas => gf_lucas_closed(ctx, x),
        Series::AltFib => gf_alt_closed(ctx, x).map(|p| p.0),
        Series::AltLucas => gf_alt_closed(ctx, x).map(|p| p.1),
    }
}

/// A point inside the radius of convergence and a truncation length.
#[derive(Clone, Debug)]
pub struct GfQuery<'a> {
    ctx: &'a SeqContext,
    x: Rational,
    truncation: usize,
}

impl<'a> GfQuery<'a> {
    pub fn new(ctx: &'a SeqContext, x: Rational, truncation: usize) -> Result<Self> {
        if truncation == 0 {
            return Err(Error::NonPositiveIndex(0));
        }
        check_radius(ctx, &x)?;
        Ok(Self { ctx, x, truncation })
    }

    pub fn ctx(&self) -> &SeqContext {
        self.ctx
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }
}

/// Exact sum of the first `q.truncation()` terms of the series.
pub fn gf_truncated(q: &GfQuery<'_>, which: Series) -> Rational {
    let n = q.truncation as i64;
    let terms = q.ctx.slice(1, n).expect("1 ≤ n");
    let alt = matches!(which, Series::AltFib | Series::AltLucas);
    // Alternating series are the plain ones evaluated at Δx.
    let x = if alt { int(q.ctx.delta()) * &q.x } else { q.x.clone() };
    // Horner from the highest coefficient down.
    terms.iter().rev().fold(Rational::zero(), |acc, t| {
        let c = match which {
            Series::Fib | Series::AltFib => Rational::from_integer(t.fib.clone()),
            Series::Lucas | Series::AltLucas => t.lucas.clone(),
        };
        acc * &x + c
    })
}
