use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::quadfield::SquarefreeD;

/// Longest period examined before giving up.
pub const DEFAULT_PERIOD_CAP: usize = 1_000_000;

/// Quadratic irrational whose continued fraction is expanded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Seed {
    /// `ω = √d`
    SqrtD,
    /// `ω = (1+√d)/2`, only meaningful for odd `d`.
    HalfOnePlusSqrtD,
}

impl Seed {
    /// The seed whose convergents generate the full ring of integers.
    pub fn for_field(d: SquarefreeD) -> Self {
        if d.is_one_mod_four() {
            Seed::HalfOnePlusSqrtD
        } else {
            Seed::SqrtD
        }
    }

    fn initial_state(self) -> (i64, i64) {
        match self {
            Seed::SqrtD => (0, 1),
            Seed::HalfOnePlusSqrtD => (1, 2),
        }
    }
}

/// `ω = [a₀; a₁, …, a_l, a₁, …]`: the first partial quotient and one full period.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFExpansion {
    pub d: SquarefreeD,
    pub seed: Seed,
    pub initial_quotient: i64,
    pub periodic_quotients: Vec<i64>,
    /// `(P, Q)` of the complete quotient `(P + √d)/Q` that starts each period.
    pub period_state: (i64, i64),
}

impl CFExpansion {
    pub fn period_length(&self) -> usize {
        self.periodic_quotients.len()
    }

    /// Convergents `p_k / q_k` for `k = 0 ..= count-1`, continuing periodically.
    pub fn convergents(&self, count: usize) -> Vec<(BigInt, BigInt)> {
        let mut out = Vec::with_capacity(count);
        let (mut p2, mut p1) = (BigInt::zero(), BigInt::one());
        let (mut q2, mut q1) = (BigInt::one(), BigInt::zero());
        for k in 0..count {
            let a = BigInt::from(self.quotient(k));
            let p = &a * &p1 + &p2;
            let q = &a * &q1 + &q2;
            (p2, p1) = (p1, p.clone());
            (q2, q1) = (q1, q.clone());
            out.push((p, q));
        }
        out
    }

    /// Partial quotient `a_k`.
    pub fn quotient(&self, k: usize) -> i64 {
        if k == 0 {
            self.initial_quotient
        } else {
            self.periodic_quotients[(k - 1) % self.period_length()]
        }
    }
}

/// One PQa step on `(P + √d)/Q`: returns the partial quotient and the next state.
pub(crate) fn pqa_step(d: i64, isqrt_d: i64, (p, q): (i64, i64)) -> (i64, (i64, i64)) {
    debug_assert!(q > 0, "complete quotients of a reduced expansion have Q > 0");
    let a = Integer::div_floor(&(p + isqrt_d), &q);
    let p_next = a * q - p;
    let q_next = (d - p_next * p_next) / q;
    (a, (p_next, q_next))
}

/// Continued fraction of `ω` with the default period cap.
pub fn continued_fraction(d: SquarefreeD, seed: Seed) -> Result<CFExpansion> {
    continued_fraction_capped(d, seed, DEFAULT_PERIOD_CAP)
}

/// PQa expansion of `ω`; the period ends when the state after `a₀` recurs.
pub fn continued_fraction_capped(d: SquarefreeD, seed: Seed, cap: usize) -> Result<CFExpansion> {
    let dv = d.value() as i64;
    let root = dv.sqrt();
    let (a0, start) = pqa_step(dv, root, seed.initial_state());
    let mut state = start;
    let mut quotients = Vec::new();
    loop {
        if quotients.len() >= cap {
            return Err(Error::ResourceLimit(cap));
        }
        let (a, next) = pqa_step(dv, root, state);
        quotients.push(a);
        state = next;
        if state == start {
            break;
        }
    }
    Ok(CFExpansion {
        d,
        seed,
        initial_quotient: a0,
        periodic_quotients: quotients,
        period_state: start,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadfield::validate_d;

    fn cf(d: i64, seed: Seed) -> CFExpansion {
        continued_fraction(validate_d(d).unwrap(), seed).unwrap()
    }

    #[test]
    fn small_expansions() {
        let e = cf(2, Seed::SqrtD);
        assert_eq!((e.initial_quotient, e.periodic_quotients.clone()), (1, vec![2]));
        let e = cf(3, Seed::SqrtD);
        assert_eq!((e.initial_quotient, e.periodic_quotients.clone()), (1, vec![1, 2]));
        assert_eq!(e.period_length(), 2);
        let e = cf(5, Seed::HalfOnePlusSqrtD);
        assert_eq!((e.initial_quotient, e.periodic_quotients.clone()), (1, vec![1]));
        let e = cf(17, Seed::HalfOnePlusSqrtD);
        assert_eq!((e.initial_quotient, e.periodic_quotients.clone()), (2, vec![1, 1, 3]));
    }

    #[test]
    fn period_restarts_from_end_state() {
        for d in SquarefreeD::range(2, 300) {
            let e = continued_fraction(d, Seed::SqrtD).unwrap();
            let root = (d.value() as i64).sqrt();
            let mut state = e.period_state;
            let again: Vec<i64> = (0..e.period_length())
                .map(|_| {
                    let (a, next) = pqa_step(d.value() as i64, root, state);
                    state = next;
                    a
                })
                .collect();
            assert_eq!(again, e.periodic_quotients, "d = {d}");
            assert_eq!(state, e.period_state);
        }
    }

    #[test]
    fn sqrt_period_ends_with_twice_first_quotient() {
        for d in SquarefreeD::range(2, 500) {
            let e = continued_fraction(d, Seed::SqrtD).unwrap();
            assert_eq!(*e.periodic_quotients.last().unwrap(), 2 * e.initial_quotient);
        }
    }

    #[test]
    fn cap_turns_into_resource_limit() {
        let d = validate_d(94).unwrap();
        assert!(matches!(
            continued_fraction_capped(d, Seed::SqrtD, 3),
            Err(Error::ResourceLimit(3))
        ));
    }

    #[test]
    fn convergents_approach_sqrt_two() {
        let c = cf(2, Seed::SqrtD).convergents(5);
        let pairs: Vec<(i64, i64)> = c
            .iter()
            .map(|(p, q)| (p.try_into().unwrap(), q.try_into().unwrap()))
            .collect();
        assert_eq!(pairs, [(1, 1), (3, 2), (7, 5), (17, 12), (41, 29)]);
    }
}
