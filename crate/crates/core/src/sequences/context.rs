use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::quadfield::{int, validate_d, QuadElement, Rational, SquarefreeD};
use crate::unitfinder::{fundamental_unit, unit_from_power, Unit, UnitSign};

/// A field together with the unit generating its sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqContext {
    unit: Unit,
    a: Rational,
    b: Rational,
    two_a: BigInt,
    two_b: BigInt,
}

/// One term of both sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqTerm {
    pub n: i64,
    pub fib: BigInt,
    pub lucas: Rational,
}

impl SeqContext {
    /// Context over an arbitrary unit.
    ///
    /// Fails for `±1` (no `√d` part) and for units with zero rational part,
    /// where the Lucas sequence would divide by zero.
    pub fn new(unit: Unit) -> Result<Self> {
        let e = unit.element();
        if e.y().is_zero() {
            return Err(Error::ZeroIrrationalPart(e.to_string()));
        }
        if e.x().is_zero() {
            return Err(Error::ZeroRationalPart(e.to_string()));
        }
        let (a, b) = (e.x().clone(), e.y().clone());
        let two_a = (&a * int(2)).to_integer();
        let two_b = (&b * int(2)).to_integer();
        Ok(Self { unit, a, b, two_a, two_b })
    }

    /// Context over the fundamental unit of `Q(√d)`.
    pub fn for_field(d: i64) -> Result<Self> {
        context(validate_d(d)?)
    }

    pub fn field(&self) -> SquarefreeD {
        self.unit.field()
    }

    pub fn unit(&self) -> &Unit {
        &self.unit
    }

    pub fn element(&self) -> &QuadElement {
        self.unit.element()
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// `Δ = a² − b²d`.
    pub fn delta(&self) -> i8 {
        self.unit.delta()
    }

    /// The trace `2a`, an integer for every unit.
    pub fn two_a(&self) -> &BigInt {
        &self.two_a
    }

    pub fn two_b(&self) -> &BigInt {
        &self.two_b
    }

    /// The sequences of the inverse unit.
    pub fn inverse(&self) -> SeqContext {
        SeqContext::new(self.unit.inverse()).expect("inverse of a usable unit is usable")
    }

    /// `Some(k)` when the Fibonacci sequence is the `k`-Fibonacci sequence,
    /// i.e. `Δ = −1` and `k = 2a ≥ 1`.
    pub fn as_k_fibonacci(&self) -> Option<BigInt> {
        (self.delta() == -1 && self.two_a.is_positive()).then(|| self.two_a.clone())
    }
}

/// Context over the fundamental unit.
pub fn context(d: SquarefreeD) -> Result<SeqContext> {
    SeqContext::new(fundamental_unit(d)?)
}

/// Context over `sign · εˡ`.
pub fn context_with_unit(d: SquarefreeD, sign: UnitSign, exponent: i64) -> Result<SeqContext> {
    match unit_from_power(d, sign, exponent) {
        Err(Error::ZeroExponent) => {
            let one = match sign {
                UnitSign::Plus => "1",
                UnitSign::Minus => "-1",
            };
            Err(Error::ZeroIrrationalPart(one.to_string()))
        }
        other => SeqContext::new(other?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadfield::rat;

    #[test]
    fn context_coordinates() {
        let c = SeqContext::for_field(5).unwrap();
        assert_eq!((c.a(), c.b(), c.delta()), (&rat(1, 2), &rat(1, 2), -1));
        let c = SeqContext::for_field(10).unwrap();
        assert_eq!((c.a(), c.b(), c.delta()), (&int(3), &int(1), -1));
        let d5 = validate_d(5).unwrap();
        let c = context_with_unit(d5, UnitSign::Plus, -1).unwrap();
        assert_eq!((c.a(), c.b(), c.delta()), (&rat(-1, 2), &rat(1, 2), -1));
        assert_eq!(c.two_a(), &BigInt::from(-1));
    }

    #[test]
    fn trivial_units_are_rejected() {
        let d = validate_d(7).unwrap();
        for s in [UnitSign::Plus, UnitSign::Minus] {
            assert!(matches!(context_with_unit(d, s, 0), Err(Error::ZeroIrrationalPart(_))));
        }
    }

    #[test]
    fn k_fibonacci_detection() {
        let k = |d| SeqContext::for_field(d).unwrap().as_k_fibonacci();
        assert_eq!(k(5), Some(BigInt::from(1)));
        assert_eq!(k(3), None);
        assert_eq!(k(10), Some(BigInt::from(6)));
        assert_eq!(k(2), Some(BigInt::from(2)));
        // η = (−1+√5)/2 has Δ = −1 but trace −1.
        let d5 = validate_d(5).unwrap();
        assert_eq!(context_with_unit(d5, UnitSign::Plus, -1).unwrap().as_k_fibonacci(), None);
    }
}
