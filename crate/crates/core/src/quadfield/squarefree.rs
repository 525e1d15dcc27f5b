use std::fmt;

use num_integer::Roots;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A squarefree integer `d ≥ 2`, naming the real quadratic field `Q(√d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "u64")]
pub struct SquarefreeD {
    d: u64,
}

impl SquarefreeD {
    pub fn value(self) -> u64 {
        self.d
    }

    /// Field discriminant: `d` when `d ≡ 1 (mod 4)`, `4d` otherwise.
    pub fn discriminant(self) -> u64 {
        if self.is_one_mod_four() {
            self.d
        } else {
            4 * self.d
        }
    }

    /// `d ≡ 1 (mod 4)`: the ring of integers is `Z[(1+√d)/2]`.
    pub fn is_one_mod_four(self) -> bool {
        self.d % 4 == 1
    }

    /// Every squarefree `d` in `lo..=hi` (clamped below at 2).
    pub fn range(lo: u64, hi: u64) -> impl Iterator<Item = SquarefreeD> {
        (lo.max(2)..=hi).filter_map(|n| validate_d(n as i64).ok())
    }
}

impl fmt::Display for SquarefreeD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.d, f)
    }
}

impl TryFrom<i64> for SquarefreeD {
    type Error = Error;

    fn try_from(n: i64) -> Result<Self> {
        validate_d(n)
    }
}

impl From<SquarefreeD> for u64 {
    fn from(d: SquarefreeD) -> u64 {
        d.d
    }
}

/// Validates `n` as a squarefree field parameter by trial division up to `√n`.
pub fn validate_d(n: i64) -> Result<SquarefreeD> {
    if n <= 1 {
        return Err(Error::NotPositive(n));
    }
    let root = n.sqrt();
    if root * root == n {
        return Err(Error::PerfectSquare(n));
    }
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return Err(Error::NotSquarefree { n, p });
            }
        }
        p += 1;
    }
    Ok(SquarefreeD { d: n as u64 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discriminant_follows_residue_mod_four() {
        let five = validate_d(5).unwrap();
        assert_eq!((five.value(), five.discriminant()), (5, 5));
        let two = validate_d(2).unwrap();
        assert_eq!((two.value(), two.discriminant()), (2, 8));
        assert_eq!(validate_d(3).unwrap().discriminant(), 12);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(validate_d(12), Err(Error::NotSquarefree { n: 12, p: 2 })));
        assert!(matches!(validate_d(45), Err(Error::NotSquarefree { p: 3, .. })));
        assert!(matches!(validate_d(1), Err(Error::NotPositive(1))));
        assert!(matches!(validate_d(-7), Err(Error::NotPositive(-7))));
        assert!(matches!(validate_d(49), Err(Error::PerfectSquare(49))));
    }

    #[test]
    fn squarefree_count_below_hundred() {
        // 61 squarefree integers in [1, 100], minus d = 1.
        assert_eq!(SquarefreeD::range(2, 100).count(), 60);
    }
}
