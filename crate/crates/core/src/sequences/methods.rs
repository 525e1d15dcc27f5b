use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::context::{SeqContext, SeqTerm};
use crate::error::{Error, Result};
use crate::quadfield::{as_integer, binomial_row, sign_pow, Rational};

impl SeqContext {
    /// `Fₙ` for any integer `n`.
    ///
    /// Forward recurrence from `F₁ = 1`, `F₂ = 2a` for `n ≥ 1`, `F₀ = 0`, and
    /// the reflection `F₋ₙ = −Δⁿ·Fₙ` for negative indices.
    pub fn fib(&self, n: i64) -> BigInt {
        match n {
            0 => BigInt::zero(),
            n if n > 0 => self.forward(n, BigInt::one(), self.two_a().clone()),
            n => {
                let m = -n;
                -BigInt::from(sign_pow(self.delta(), m)) * self.fib(m)
            }
        }
    }

    /// `Lₙ` for any integer `n`.
    ///
    /// The recurrence `Lₙ₊₂ = −Δ·Lₙ + 2a·Lₙ₊₁` (`L₁ = 1`, `L₂ = 2a − Δ/a`) is run
    /// on the integer multiples `2a·Lₙ`; `L₀ = 1/a` and `L₋ₙ = Δⁿ·Lₙ`.
    pub fn lucas(&self, n: i64) -> Rational {
        match n {
            0 => self.a().recip(),
            n if n > 0 => {
                let ta = self.two_a().clone();
                let v2 = &ta * &ta - BigInt::from(2 * self.delta());
                let v = self.forward(n, ta.clone(), v2);
                Rational::new(v, ta)
            }
            n => {
                let m = -n;
                self.lucas(m) * Rational::from_integer(sign_pow(self.delta(), m).into())
            }
        }
    }

    /// Term `n ≥ 1` of `Xₖ₊₂ = −Δ·Xₖ + 2a·Xₖ₊₁` from `X₁`, `X₂`.
    fn forward(&self, n: i64, x1: BigInt, x2: BigInt) -> BigInt {
        debug_assert!(n >= 1);
        let neg_delta = BigInt::from(-self.delta());
        let (mut prev, mut cur) = (x1, x2);
        if n == 1 {
            return prev;
        }
        for _ in 2..n {
            let next = &neg_delta * &prev + self.two_a() * &cur;
            prev = cur;
            cur = next;
        }
        cur
    }

    /// `Fₙ = bₙ / b` where `uⁿ = aₙ + bₙ√d` is computed by exact powering.
    pub fn fib_binet(&self, n: i64) -> BigInt {
        let p = self.element().pow(n).expect("units are invertible");
        as_integer(&(p.y() / self.b())).expect("Fibonacci terms are integers")
    }

    /// `Lₙ = aₙ / a` from the exact power `uⁿ`.
    pub fn lucas_binet(&self, n: i64) -> Rational {
        let p = self.element().pow(n).expect("units are invertible");
        p.x() / self.a()
    }

    /// `Fₙ = Σₜ C(n, 2t+1)·a^(n−2t−1)·b^(2t)·dᵗ`, for `n ≥ 1`.
    pub fn fib_binomial(&self, n: i64) -> Result<BigInt> {
        let sums = self.binomial_sums(n)?;
        let f = Rational::new(sums.odd, sums.scale_pow_n_minus_1);
        Ok(as_integer(&f).expect("Fibonacci terms are integers"))
    }

    /// `Lₙ = Σₜ C(n, 2t)·a^(n−2t−1)·b^(2t)·dᵗ`, for `n ≥ 1`.
    pub fn lucas_binomial(&self, n: i64) -> Result<Rational> {
        let sums = self.binomial_sums(n)?;
        Ok(Rational::new(sums.even, sums.scale_pow_n_minus_1 * sums.alpha))
    }

    /// With `a = α/s`, `b = β/s` (`s ∈ {1, 2}`), both sums become integer sums
    /// over `α^(n−k)·(β²d)^t` and a single division by `s^(n−1)`.
    fn binomial_sums(&self, n: i64) -> Result<BinomialSums> {
        if n < 1 {
            return Err(Error::NonPositiveIndex(n));
        }
        let n = n as u64;
        let s = self.a().denom().max(self.b().denom()).clone();
        let alpha = (self.a() * Rational::from_integer(s.clone())).to_integer();
        let beta = (self.b() * Rational::from_integer(s.clone())).to_integer();
        let step = &beta * &beta * BigInt::from(self.field().value());

        let mut alpha_pows = Vec::with_capacity(n as usize + 1);
        alpha_pows.push(BigInt::one());
        for k in 1..=n as usize {
            alpha_pows.push(&alpha_pows[k - 1] * &alpha);
        }
        let c = binomial_row(n);
        let (mut odd, mut even) = (BigInt::zero(), BigInt::zero());
        let mut step_pow = BigInt::one();
        for t in 0..=n / 2 {
            let i = 2 * t;
            even += &c[i as usize] * &alpha_pows[(n - i) as usize] * &step_pow;
            if i + 1 <= n {
                odd += &c[(i + 1) as usize] * &alpha_pows[(n - i - 1) as usize] * &step_pow;
            }
            step_pow *= &step;
        }
        Ok(BinomialSums {
            odd,
            even,
            alpha,
            scale_pow_n_minus_1: num_traits::pow(s, (n - 1) as usize),
        })
    }

    /// Consecutive terms `from..=to`, in one pass each way from `n = 0, 1`.
    ///
    /// Negative indices come from the backward recurrence
    /// `Xₙ = Δ·(2a·Xₙ₊₁ − Xₙ₊₂)`.
    pub fn slice(&self, from: i64, to: i64) -> Result<Vec<SeqTerm>> {
        if from > to {
            return Err(Error::InvalidRange { from, to });
        }
        let ta = self.two_a().clone();
        let delta = BigInt::from(self.delta());
        let neg_delta = -&delta;
        // (F, 2a·L) pairs indexed from `lo`.
        let lo = from.min(0);
        let hi = to.max(1);
        let mut fib: VecDeque<BigInt> = VecDeque::from([BigInt::zero(), BigInt::one()]);
        let mut tr: VecDeque<BigInt> = VecDeque::from([BigInt::from(2), ta.clone()]);
        for _ in 2..=hi {
            let k = fib.len();
            fib.push_back(&neg_delta * &fib[k - 2] + &ta * &fib[k - 1]);
            tr.push_back(&neg_delta * &tr[k - 2] + &ta * &tr[k - 1]);
        }
        for _ in lo..0 {
            fib.push_front(&delta * (&ta * &fib[0] - &fib[1]));
            tr.push_front(&delta * (&ta * &tr[0] - &tr[1]));
        }
        Ok((from..=to)
            .map(|n| {
                let i = (n - lo) as usize;
                SeqTerm {
                    n,
                    fib: fib[i].clone(),
                    lucas: Rational::new(tr[i].clone(), ta.clone()),
                }
            })
            .collect())
    }
}

struct BinomialSums {
    odd: BigInt,
    even: BigInt,
    alpha: BigInt,
    scale_pow_n_minus_1: BigInt,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadfield::{int, rat, validate_d};
    use crate::sequences::context_with_unit;
    use crate::unitfinder::UnitSign;

    fn ctx(d: i64) -> SeqContext {
        SeqContext::for_field(d).unwrap()
    }

    fn fibs(c: &SeqContext, ns: std::ops::RangeInclusive<i64>) -> Vec<i64> {
        ns.map(|n| i64::try_from(c.fib(n)).unwrap()).collect()
    }

    #[test]
    fn fibonacci_examples() {
        assert_eq!(ctx(5).fib(6), BigInt::from(8));
        assert_eq!(ctx(13).fib(5), BigInt::from(109));
        assert_eq!(ctx(7).fib(0), BigInt::zero());
        assert_eq!(ctx(2).fib(-3), BigInt::from(5));
        assert_eq!(ctx(38).fib(4), BigInt::from(405_076));
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(ctx(3).lucas(2), rat(7, 2));
        assert_eq!(ctx(5).lucas(5), int(11));
        assert_eq!(ctx(3).lucas(0), rat(1, 2));
        assert_eq!(ctx(6).lucas(4), rat(4801, 5));
        assert_eq!(ctx(5).lucas(1), int(1));
    }

    #[test]
    fn binet_examples() {
        assert_eq!(ctx(5).fib_binet(6), BigInt::from(8));
        assert_eq!(ctx(2).fib_binet(1), BigInt::one());
        assert_eq!(ctx(7).fib_binet(3), BigInt::from(255));
        assert_eq!(ctx(7).lucas_binet(3), int(253));
        assert_eq!(ctx(2).fib_binet(-3), BigInt::from(5));
        assert_eq!(ctx(3).lucas_binet(0), rat(1, 2));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(ctx(11).fib_binomial(3).unwrap(), BigInt::from(399));
        for d in [2, 5, 13, 38] {
            assert_eq!(ctx(d).fib_binomial(1).unwrap(), BigInt::one());
            assert_eq!(ctx(d).lucas_binomial(1).unwrap(), int(1));
        }
        assert_eq!(ctx(37).fib_binomial(5).unwrap(), BigInt::from(21169));
        assert_eq!(ctx(6).lucas_binomial(6).unwrap(), rat(470_449, 5));
        assert!(matches!(ctx(3).fib_binomial(0), Err(Error::NonPositiveIndex(0))));
        assert!(matches!(ctx(3).lucas_binomial(-2), Err(Error::NonPositiveIndex(-2))));
    }

    #[test]
    fn slices() {
        let t = ctx(2).slice(1, 6).unwrap();
        let f: Vec<i64> = t.iter().map(|t| i64::try_from(&t.fib).unwrap()).collect();
        assert_eq!(f, [1, 2, 5, 12, 29, 70]);
        let t = ctx(5).slice(-3, 3).unwrap();
        let f: Vec<i64> = t.iter().map(|t| i64::try_from(&t.fib).unwrap()).collect();
        assert_eq!(f, [2, -1, 1, 0, 1, 1, 2]);
        let c = ctx(13);
        let single = c.slice(-4, -4).unwrap();
        assert_eq!(single, vec![SeqTerm { n: -4, fib: c.fib(-4), lucas: c.lucas(-4) }]);
        assert!(matches!(c.slice(3, 2), Err(Error::InvalidRange { from: 3, to: 2 })));
    }

    #[test]
    fn slice_agrees_with_pointwise_terms() {
        for d in [2, 3, 5, 6, 13, 21, 94] {
            let c = ctx(d);
            for t in c.slice(-30, 30).unwrap() {
                assert_eq!(t.fib, c.fib(t.n), "d = {d}, n = {}", t.n);
                assert_eq!(t.lucas, c.lucas(t.n), "d = {d}, n = {}", t.n);
            }
        }
    }

    #[test]
    fn golden_inverse_alternates() {
        let d5 = validate_d(5).unwrap();
        let c = context_with_unit(d5, UnitSign::Plus, -1).unwrap();
        assert_eq!(fibs(&c, 1..=4), [1, -1, 2, -3]);
    }

    #[test]
    fn classical_case() {
        assert_eq!(fibs(&ctx(5), 1..=10), [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]);
        let lucas: Vec<Rational> = (1..=6).map(|n| ctx(5).lucas(n)).collect();
        assert_eq!(lucas, [1, 3, 4, 7, 11, 18].map(int));
    }
}
