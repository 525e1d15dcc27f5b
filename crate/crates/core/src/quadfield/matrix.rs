use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{binomial_row, int, QuadElement, Rational, SquarefreeD};

/// The matrix `[[x, y·d], [y, x]]` representing `x + y√d`.
///
/// These matrices form a field isomorphic to `Q(√d)`; the determinant is the
/// norm, so units correspond to determinant `±1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRep {
    pub entries: [[Rational; 2]; 2],
}

impl MatrixRep {
    pub fn of(e: &QuadElement) -> Self {
        let d = int(e.field().value());
        Self {
            entries: [
                [e.x().clone(), e.y() * &d],
                [e.y().clone(), e.x().clone()],
            ],
        }
    }

    pub fn determinant(&self) -> Rational {
        let m = &self.entries;
        &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
    }

    /// Reads the element back, if the matrix has the `[[x, yd], [y, x]]` shape.
    pub fn to_element(&self, d: SquarefreeD) -> Option<QuadElement> {
        let m = &self.entries;
        let shaped = m[0][0] == m[1][1] && m[0][1] == &m[1][0] * int(d.value());
        shaped.then(|| QuadElement::new(d, m[0][0].clone(), m[1][0].clone()))
    }
}

impl Mul for &MatrixRep {
    type Output = MatrixRep;

    fn mul(self, rhs: &MatrixRep) -> MatrixRep {
        let (a, b) = (&self.entries, &rhs.entries);
        let cell = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        MatrixRep {
            entries: [[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]],
        }
    }
}

/// `(aₙ, bₙ)` with `(x + y√d)ⁿ = aₙ + bₙ√d`, evaluated from the even/odd
/// binomial sums rather than by repeated multiplication.
///
/// Used as an independent oracle for [`QuadElement::pow`]. Panics if `n == 0`.
pub fn power_coeffs_closed(e: &QuadElement, n: u64) -> (Rational, Rational) {
    assert!(n >= 1, "closed power sums are defined for n ≥ 1");
    let (a, b, d) = (e.x(), e.y(), BigInt::from(e.field().value()));
    let c = binomial_row(n);
    let pw = |base: &Rational, k: u64| -> Rational { num_traits::pow(base.clone(), k as usize) };
    let dpow = |k: u64| -> Rational { Rational::from_integer(num_traits::pow(d.clone(), k as usize)) };
    let mut an = Rational::zero();
    let mut bn = Rational::zero();
    if n % 2 == 0 {
        for t in 0..=n / 2 {
            an += Rational::from_integer(c[(2 * t) as usize].clone())
                * pw(a, 2 * t)
                * pw(b, n - 2 * t)
                * dpow(n / 2 - t);
        }
        for t in 0..=(n - 2) / 2 {
            bn += Rational::from_integer(c[(2 * t + 1) as usize].clone())
                * pw(a, 2 * t + 1)
                * pw(b, n - 2 * t - 1)
                * dpow((n - 2) / 2 - t);
        }
    } else {
        for t in 0..=(n - 1) / 2 {
            an += Rational::from_integer(c[(2 * t + 1) as usize].clone())
                * pw(a, 2 * t + 1)
                * pw(b, n - 2 * t - 1)
                * dpow((n - 1) / 2 - t);
            bn += Rational::from_integer(c[(2 * t) as usize].clone())
                * pw(a, 2 * t)
                * pw(b, n - 2 * t)
                * dpow((n - 1) / 2 - t);
        }
    }
    (an, bn)
}
