use crate::quadfield::{rat, validate_d, QuadElement, SquarefreeD};
use crate::unitfinder::Unit;

use super::SeqContext;

/// The field and unit whose Fibonacci sequence is the `k`-Fibonacci sequence.
///
/// `k² + 4 = r²·d` with `d` squarefree, and `(k + r√d)/2` has norm `−1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KFibMapping {
    pub k: u64,
    pub d: SquarefreeD,
    pub r: u64,
    pub unit: Unit,
}

impl KFibMapping {
    pub fn context(&self) -> SeqContext {
        SeqContext::new(self.unit.clone()).expect("(k + r√d)/2 has nonzero coordinates")
    }
}

/// Splits `k² + 4` into a square times a squarefree part by trial division.
///
/// Panics for `k = 0` (`4` is a perfect square).
pub fn kfib_map(k: u64) -> KFibMapping {
    assert!(k >= 1, "k-Fibonacci sequences start at k = 1");
    let n = (k as u128) * (k as u128) + 4;
    let (mut rest, mut r, mut p) = (n, 1u128, 2u128);
    while p * p <= rest {
        while rest % (p * p) == 0 {
            rest /= p * p;
            r *= p;
        }
        p += 1;
    }
    let d = validate_d(rest as i64).expect("k² + 4 is never a perfect square for k ≥ 1");
    let element = QuadElement::new(d, rat(k, 2), rat(r as u64, 2));
    let unit = Unit::new(element).expect("(k + r√d)/2 is a unit of norm −1");
    debug_assert_eq!(unit.delta(), -1);
    KFibMapping { k, d, r: r as u64, unit }
}
