use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::Error;
use crate::quadfield::{int, sign_pow, QuadElement, Rational};
use crate::sequences::SeqContext;

/// One closed-form identity of the catalog.
///
/// Declaration order is the catalog order used by reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    T7i,
    T7ii,
    T7iii,
    T7iv,
    T7v,
    T7vi,
    T7vii,
    T7viii,
    T7ix,
    T8,
    T13,
    T21,
    T25i,
    T25ii,
    T25iii,
    T25iv,
    T25v,
    T25vi,
    C17i,
    C17iiIii,
    T26,
}

use IdentityId::*;

impl IdentityId {
    pub const ALL: [IdentityId; 21] = [
        T7i, T7ii, T7iii, T7iv, T7v, T7vi, T7vii, T7viii, T7ix, T8, T13, T21, T25i, T25ii,
        T25iii, T25iv, T25v, T25vi, C17i, C17iiIii, T26,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            T7i => "T7.i",
            T7ii => "T7.ii",
            T7iii => "T7.iii",
            T7iv => "T7.iv",
            T7v => "T7.v",
            T7vi => "T7.vi",
            T7vii => "T7.vii",
            T7viii => "T7.viii",
            T7ix => "T7.ix",
            T8 => "T8",
            T13 => "T13",
            T21 => "T21",
            T25i => "T25.i",
            T25ii => "T25.ii",
            T25iii => "T25.iii",
            T25iv => "T25.iv",
            T25v => "T25.v",
            T25vi => "T25.vi",
            C17i => "C17.i",
            C17iiIii => "C17.ii_iii",
            T26 => "T26",
        }
    }

    /// The identity as a formula.
    pub fn statement(self) -> &'static str {
        match self {
            T7i => "F(n+1) = a(L(n) + F(n))",
            T7ii => "L(n+1) = a·L(n) + (b²d/a)·F(n)",
            T7iii => "F(n) = (a/Δ)(F(n+1) − L(n+1))",
            T7iv => "L(n) = (1/Δ)(a·L(n+1) − (b²d/a)·F(n+1))",
            T7v => "F(n+1) − aⁿ·F(1) = Σ_{t=0}^{n−1} a^(t+1)·L(n−t)   (n ≥ 0)",
            T7vi => "L(n+1) − aⁿ·L(1) = b²d·Σ_{t=0}^{n−1} a^(t−1)·F(n−t)   (n ≥ 0)",
            T7vii => "F(m+n) = a(F(m)·L(n) + F(n)·L(m))",
            T7viii => "L(m+n) = (b²d/a)·F(m)·F(n) + a·L(m)·L(n)",
            T7ix => "b²d·F(n)² − a²·L(n)² = −Δⁿ",
            T8 => "F(n+2) = −Δ·F(n) + 2a·F(n+1)",
            T13 => "L(n+2) = −Δ·L(n) + 2a·L(n+1)",
            T21 => "εⁿ = F(n)·ε − F(n−1)·Δ",
            T25i => "F(n)² − F(n+m)·F(n−m) = Δ^(n−m)·F(m)²",
            T25ii => "F(n)² − F(n−1)·F(n+1) = Δ^(n−1)",
            T25iii => "L(n)² − L(n+r)·L(n−r) = Δⁿ/(2a²) − (Δ^(n−r)/(2a))·L(2r)",
            T25iv => "F(m)·F(n+1) − F(n)·F(m+1) = Δⁿ·F(m−n)",
            T25v => "F(m−1)·F(n) + F(m)·F(n+1) = F(m+n) if Δ = −1; (a/(2b²d))(2a·L(m+n) − L(m−n−1)) if Δ = 1",
            T25vi => "L(n)·L(n+r) = (1/(2a))·L(2n+r) + (Δⁿ/(2a))·L(r)",
            C17i => "L(2k−1) is an integer",
            C17iiIii => "a₀·L(2k) is an integer coprime to a₀ (a = a₀ or a = a₀/2)",
            T26 => "F(1/ε, n) = F(−n) if Δ = −1; F(n) if Δ = 1",
        }
    }

    /// Names of the free index variables.
    pub fn variables(self) -> &'static [&'static str] {
        match self {
            T7vii | T7viii | T25iv | T25v => &["m", "n"],
            T25i => &["n", "m"],
            T25iii | T25vi => &["n", "r"],
            C17i | C17iiIii => &["k"],
            _ => &["n"],
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

impl From<IdentityId> for String {
    fn from(id: IdentityId) -> String {
        id.tag().to_string()
    }
}

impl TryFrom<String> for IdentityId {
    type Error = Error;

    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

/// An exact side of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Side {
    Rational(Rational),
    Element(QuadElement),
}

/// Result of evaluating one identity at one index tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Fails { lhs: Side, rhs: Side },
    /// A referenced quantity is undefined at these indices.
    Skipped,
}

fn compare(lhs: Rational, rhs: Rational) -> Outcome {
    if lhs == rhs {
        Outcome::Holds
    } else {
        Outcome::Fails { lhs: Side::Rational(lhs), rhs: Side::Rational(rhs) }
    }
}

/// Precomputed `F`, `L` on a window of indices, plus the inverse-unit sequence.
pub(crate) struct Terms<'a> {
    ctx: &'a SeqContext,
    lo: i64,
    fib: Vec<Rational>,
    lucas: Vec<Rational>,
    inverse_fib: Vec<Rational>,
    a: Rational,
    b2d: Rational,
    delta: i8,
}

impl<'a> Terms<'a> {
    /// Table wide enough for every index any identity touches when its
    /// variables range over `from..=to`.
    pub(crate) fn for_range(ctx: &'a SeqContext, from: i64, to: i64) -> Self {
        let width = to - from;
        let lo = 3 * from.min(0) - width - 3;
        let hi = 3 * to.max(0) + width + 3;
        let terms = ctx.slice(lo, hi).expect("lo ≤ hi");
        let inverse = ctx.inverse().slice(lo, hi).expect("lo ≤ hi");
        let b = ctx.b();
        Self {
            ctx,
            lo,
            fib: terms.iter().map(|t| Rational::from_integer(t.fib.clone())).collect(),
            lucas: terms.into_iter().map(|t| t.lucas).collect(),
            inverse_fib: inverse.into_iter().map(|t| Rational::from_integer(t.fib)).collect(),
            a: ctx.a().clone(),
            b2d: b * b * int(ctx.field().value()),
            delta: ctx.delta(),
        }
    }

    fn f(&self, n: i64) -> &Rational {
        &self.fib[(n - self.lo) as usize]
    }

    fn l(&self, n: i64) -> &Rational {
        &self.lucas[(n - self.lo) as usize]
    }

    /// `Δᵏ` as a rational.
    fn dp(&self, k: i64) -> Rational {
        int(sign_pow(self.delta, k))
    }

    fn delta(&self) -> Rational {
        int(self.delta)
    }

    /// Evaluates `id` at the index tuple `ix` (one entry per variable).
    pub(crate) fn evaluate(&self, id: IdentityId, ix: &[i64]) -> Outcome {
        let a = &self.a;
        let b2d = &self.b2d;
        let two = int(2);
        match id {
            T7i => {
                let n = ix[0];
                compare(self.f(n + 1).clone(), a * (self.l(n) + self.f(n)))
            }
            T7ii => {
                let n = ix[0];
                compare(self.l(n + 1).clone(), a * self.l(n) + b2d / a * self.f(n))
            }
            T7iii => {
                let n = ix[0];
                compare(self.f(n).clone(), a / self.delta() * (self.f(n + 1) - self.l(n + 1)))
            }
            T7iv => {
                let n = ix[0];
                let inner = a * self.l(n + 1) - b2d / a * self.f(n + 1);
                compare(self.l(n).clone(), inner / self.delta())
            }
            T7v => {
                let n = ix[0];
                if n < 0 {
                    return Outcome::Skipped;
                }
                let lhs = self.f(n + 1) - pow(a, n) * self.f(1);
                let rhs = (0..n).map(|t| pow(a, t + 1) * self.l(n - t)).sum();
                compare(lhs, rhs)
            }
            T7vi => {
                let n = ix[0];
                if n < 0 {
                    return Outcome::Skipped;
                }
                let lhs = self.l(n + 1) - pow(a, n) * self.l(1);
                let sum: Rational = (0..n).map(|t| pow(a, t - 1) * self.f(n - t)).sum();
                compare(lhs, b2d * sum)
            }
            T7vii => {
                let (m, n) = (ix[0], ix[1]);
                let rhs = a * (self.f(m) * self.l(n) + self.f(n) * self.l(m));
                compare(self.f(m + n).clone(), rhs)
            }
            T7viii => {
                let (m, n) = (ix[0], ix[1]);
                let rhs = b2d / a * self.f(m) * self.f(n) + a * self.l(m) * self.l(n);
                compare(self.l(m + n).clone(), rhs)
            }
            T7ix => {
                let n = ix[0];
                let lhs = b2d * self.f(n) * self.f(n) - a * a * self.l(n) * self.l(n);
                compare(lhs, -self.dp(n))
            }
            T8 => {
                let n = ix[0];
                let rhs = -self.delta() * self.f(n) + &two * a * self.f(n + 1);
                compare(self.f(n + 2).clone(), rhs)
            }
            T13 => {
                let n = ix[0];
                let rhs = -self.delta() * self.l(n) + &two * a * self.l(n + 1);
                compare(self.l(n + 2).clone(), rhs)
            }
            T21 => {
                let n = ix[0];
                let eps = self.ctx.element();
                let lhs = eps.pow(n).expect("units are invertible");
                let rhs = eps.scale(self.f(n))
                    - QuadElement::rational(eps.field(), self.f(n - 1) * self.delta());
                if lhs == rhs {
                    Outcome::Holds
                } else {
                    Outcome::Fails { lhs: Side::Element(lhs), rhs: Side::Element(rhs) }
                }
            }
            T25i => {
                let (n, m) = (ix[0], ix[1]);
                let lhs = self.f(n) * self.f(n) - self.f(n + m) * self.f(n - m);
                compare(lhs, self.dp(n - m) * self.f(m) * self.f(m))
            }
            T25ii => {
                let n = ix[0];
                let lhs = self.f(n) * self.f(n) - self.f(n - 1) * self.f(n + 1);
                compare(lhs, self.dp(n - 1))
            }
            T25iii => {
                let (n, r) = (ix[0], ix[1]);
                let lhs = self.l(n) * self.l(n) - self.l(n + r) * self.l(n - r);
                let rhs = self.dp(n) / (&two * a * a) - self.dp(n - r) / (&two * a) * self.l(2 * r);
                compare(lhs, rhs)
            }
            T25iv => {
                let (m, n) = (ix[0], ix[1]);
                let lhs = self.f(m) * self.f(n + 1) - self.f(n) * self.f(m + 1);
                compare(lhs, self.dp(n) * self.f(m - n))
            }
            T25v => {
                let (m, n) = (ix[0], ix[1]);
                let lhs = self.f(m - 1) * self.f(n) + self.f(m) * self.f(n + 1);
                // Both branches exactly as stated, selected by Δ.
                let rhs = if self.delta == -1 {
                    self.f(m + n).clone()
                } else {
                    a / (&two * b2d) * (&two * a * self.l(m + n) - self.l(m - n - 1))
                };
                compare(lhs, rhs)
            }
            T25vi => {
                let (n, r) = (ix[0], ix[1]);
                let lhs = self.l(n) * self.l(n + r);
                let rhs = self.l(2 * n + r) / (&two * a) + self.dp(n) / (&two * a) * self.l(r);
                compare(lhs, rhs)
            }
            C17i => {
                let v = self.l(2 * ix[0] - 1);
                compare(v.clone(), Rational::from_integer(v.floor().to_integer()))
            }
            C17iiIii => {
                let a0 = if a.is_integer() { a.clone() } else { a * &two };
                let scaled = &a0 * self.l(2 * ix[0]);
                if !scaled.is_integer() {
                    return compare(scaled.clone(), scaled.floor());
                }
                let g = a0.to_integer().abs().gcd(&scaled.to_integer());
                compare(Rational::from_integer(g), Rational::one())
            }
            T26 => {
                let n = ix[0];
                let inverse_term = self.inverse_fib[(n - self.lo) as usize].clone();
                let expected = if self.delta == -1 { self.f(-n) } else { self.f(n) };
                compare(inverse_term, expected.clone())
            }
        }
    }
}

fn pow(base: &Rational, k: i64) -> Rational {
    if k >= 0 {
        num_traits::pow(base.clone(), k as usize)
    } else {
        num_traits::pow(base.recip(), (-k) as usize)
    }
}
