use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::cf::{continued_fraction_capped, Seed, DEFAULT_PERIOD_CAP};
use crate::error::{Error, Result};
use crate::quadfield::{rat, QuadElement, Rational, SquarefreeD};

/// An integral element of norm `±1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Unit {
    element: QuadElement,
    delta: i8,
}

impl Unit {
    /// Checks integrality and `norm = ±1`; `None` otherwise.
    pub fn new(element: QuadElement) -> Option<Self> {
        if !element.is_integral() {
            return None;
        }
        let n = element.norm();
        let delta = if n.is_one() {
            1
        } else if n == -Rational::one() {
            -1
        } else {
            return None;
        };
        Some(Self { element, delta })
    }

    pub fn element(&self) -> &QuadElement {
        &self.element
    }

    /// `Δ = N(unit)`.
    pub fn delta(&self) -> i8 {
        self.delta
    }

    pub fn field(&self) -> SquarefreeD {
        self.element.field()
    }

    pub fn inverse(&self) -> Unit {
        let inv = self.element.inverse().expect("units are nonzero");
        Unit { element: inv, delta: self.delta }
    }

    pub fn pow(&self, n: i64) -> Unit {
        let element = self.element.pow(n).expect("units are nonzero");
        Unit::new(element).expect("powers of units are units")
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.element.fmt(f)
    }
}

/// Sign in `±εˡ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum UnitSign {
    #[default]
    Plus,
    Minus,
}

impl FromStr for UnitSign {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "+" | "+1" | "1" | "plus" => Ok(UnitSign::Plus),
            "-" | "-1" | "minus" => Ok(UnitSign::Minus),
            other => Err(format!("unit sign must be + or -, got `{other}`")),
        }
    }
}

/// The fundamental unit `ε > 1` of `Q(√d)`.
pub fn fundamental_unit(d: SquarefreeD) -> Result<Unit> {
    fundamental_unit_capped(d, DEFAULT_PERIOD_CAP)
}

/// [`fundamental_unit`] with an explicit period-length cap.
pub fn fundamental_unit_capped(d: SquarefreeD, cap: usize) -> Result<Unit> {
    let seed = Seed::for_field(d);
    let cf = continued_fraction_capped(d, seed, cap)?;
    let (p, q) = cf
        .convergents(cf.period_length())
        .pop()
        .expect("period is nonempty");
    let element = convergent_to_element(d, seed, &p, &q);
    Ok(Unit::new(element).expect("period-end convergent is a unit"))
}

/// `p − q·ω̄`, which equals `p + q√d` for `ω = √d`.
pub(crate) fn convergent_to_element(d: SquarefreeD, seed: Seed, p: &BigInt, q: &BigInt) -> QuadElement {
    match seed {
        Seed::SqrtD => QuadElement::new(d, p.clone().into(), q.clone().into()),
        Seed::HalfOnePlusSqrtD => {
            QuadElement::new(d, rat(BigInt::from(2) * p - q, 2), rat(q.clone(), 2))
        }
    }
}

/// `sign · εᵉˣᵖᵒⁿᵉⁿᵗ`.
pub fn unit_from_power(d: SquarefreeD, sign: UnitSign, exponent: i64) -> Result<Unit> {
    if exponent == 0 {
        return Err(Error::ZeroExponent);
    }
    let u = fundamental_unit(d)?.pow(exponent);
    Ok(match sign {
        UnitSign::Plus => u,
        UnitSign::Minus => Unit::new(-u.element()).expect("negated unit"),
    })
}

impl Unit {
    /// Whether the √d-coordinate is positive and the rational one too (`ε > 1` form).
    pub fn has_positive_coordinates(&self) -> bool {
        self.element.x().is_positive() && self.element.y().is_positive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadfield::{int, validate_d};
    use crate::unitfinder::continued_fraction;

    fn fu(d: i64) -> Unit {
        fundamental_unit(validate_d(d).unwrap()).unwrap()
    }

    fn el(d: i64, x: Rational, y: Rational) -> QuadElement {
        QuadElement::new(validate_d(d).unwrap(), x, y)
    }

    #[test]
    fn table_units() {
        let table: [(i64, Rational, Rational, i8); 13] = [
            (2, int(1), int(1), -1),
            (3, int(2), int(1), 1),
            (5, rat(1, 2), rat(1, 2), -1),
            (6, int(5), int(2), 1),
            (7, int(8), int(3), 1),
            (10, int(3), int(1), -1),
            (11, int(10), int(3), 1),
            (13, rat(3, 2), rat(1, 2), -1),
            (37, int(6), int(1), -1),
            (38, int(37), int(6), 1),
            (39, int(25), int(4), 1),
            (41, int(32), int(5), -1),
            (42, int(13), int(2), 1),
        ];
        for (d, x, y, delta) in table {
            let u = fu(d);
            assert_eq!(u.element(), &el(d, x, y), "d = {d}");
            assert_eq!(u.delta(), delta, "d = {d}");
        }
        assert_eq!(fu(17).element(), &el(17, int(4), int(1)));
    }

    #[test]
    fn units_exceed_one_and_are_integral() {
        for d in SquarefreeD::range(2, 200) {
            let u = fundamental_unit(d).unwrap();
            assert!(u.element().is_integral());
            assert!(u.has_positive_coordinates(), "d = {d}");
            assert_eq!(u.element().cmp_rational(&int(1)), std::cmp::Ordering::Greater);
        }
    }

    #[test]
    fn no_earlier_convergent_is_a_unit() {
        for d in SquarefreeD::range(2, 200) {
            let seed = Seed::for_field(d);
            let cf = continued_fraction(d, seed).unwrap();
            let conv = cf.convergents(cf.period_length());
            for (p, q) in &conv[..conv.len() - 1] {
                let e = convergent_to_element(d, seed, p, q);
                assert!(Unit::new(e).is_none(), "d = {d}: smaller unit among convergents");
            }
        }
    }

    #[test]
    fn powers_and_signs() {
        let d5 = validate_d(5).unwrap();
        let eta = unit_from_power(d5, UnitSign::Plus, -1).unwrap();
        assert_eq!(eta.element(), &el(5, rat(-1, 2), rat(1, 2)));
        let u = unit_from_power(validate_d(2).unwrap(), UnitSign::Plus, 2).unwrap();
        assert_eq!((u.element().clone(), u.delta()), (el(2, int(3), int(2)), 1));
        let m = unit_from_power(d5, UnitSign::Minus, 1).unwrap();
        assert_eq!(m.element(), &el(5, rat(-1, 2), rat(-1, 2)));
        assert!(matches!(unit_from_power(d5, UnitSign::Plus, 0), Err(Error::ZeroExponent)));
    }

    #[test]
    fn norm_one_fields_have_only_norm_one_units() {
        for d in SquarefreeD::range(2, 60) {
            if fundamental_unit(d).unwrap().delta() != 1 {
                continue;
            }
            for l in [-3, -1, 1, 2, 5] {
                for s in [UnitSign::Plus, UnitSign::Minus] {
                    assert_eq!(unit_from_power(d, s, l).unwrap().delta(), 1);
                }
            }
        }
    }

    #[test]
    fn rejects_non_units() {
        assert!(Unit::new(el(2, int(2), int(1))).is_none());
        assert!(Unit::new(el(2, rat(1, 2), rat(1, 2))).is_none());
    }
}
