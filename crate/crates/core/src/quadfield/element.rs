use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{int, sign_of, Rational, SquarefreeD};
use crate::error::{Error, Result};

/// An element `x + y√d` of `Q(√d)` with exact rational coordinates.
///
/// Since `√d` is irrational, two elements are equal exactly when their
/// coordinates are, so structural equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadElement {
    d: SquarefreeD,
    x: Rational,
    y: Rational,
}

impl QuadElement {
    pub fn new(d: SquarefreeD, x: Rational, y: Rational) -> Self {
        Self { d, x, y }
    }

    pub fn from_ints(d: SquarefreeD, x: i64, y: i64) -> Self {
        Self::new(d, int(x), int(y))
    }

    pub fn rational(d: SquarefreeD, x: Rational) -> Self {
        Self::new(d, x, Rational::zero())
    }

    pub fn zero(d: SquarefreeD) -> Self {
        Self::rational(d, Rational::zero())
    }

    pub fn one(d: SquarefreeD) -> Self {
        Self::rational(d, Rational::one())
    }

    pub fn field(&self) -> SquarefreeD {
        self.d
    }

    /// Rational coordinate `x`.
    pub fn x(&self) -> &Rational {
        &self.x
    }

    /// Coefficient `y` of `√d`.
    pub fn y(&self) -> &Rational {
        &self.y
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(Error::MixedFields(self.d.value(), other.d.value()))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self::new(self.d, &self.x + &other.x, &self.y + &other.y))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self::new(self.d, &self.x - &other.x, &self.y - &other.y))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let d = int(self.d.value());
        let x = &self.x * &other.x + d * &self.y * &other.y;
        let y = &self.x * &other.y + &self.y * &other.x;
        Ok(Self::new(self.d, x, y))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        self.checked_mul(&other.inverse()?)
    }

    /// Galois conjugate `x − y√d`.
    pub fn conj(&self) -> Self {
        Self::new(self.d, self.x.clone(), -&self.y)
    }

    /// `x² − d·y²`.
    pub fn norm(&self) -> Rational {
        &self.x * &self.x - int(self.d.value()) * &self.y * &self.y
    }

    /// `2x`, the sum of the element and its conjugate.
    pub fn trace(&self) -> Rational {
        &self.x + &self.x
    }

    /// `conj(e) / norm(e)`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(Self::new(self.d, &self.x / &n, -&self.y / &n))
    }

    /// Multiplies both coordinates by a rational.
    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(self.d, &self.x * r, &self.y * r)
    }

    /// `selfⁿ` by binary exponentiation; negative exponents go through the inverse.
    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut exp = n.unsigned_abs();
        let mut acc = Self::one(self.d);
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &sq;
            }
            exp >>= 1;
            if exp > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Membership in the ring of integers of `Q(√d)`.
    ///
    /// For `d ≡ 1 (mod 4)` this means `2x`, `2y` are integers of equal parity;
    /// otherwise `x` and `y` must themselves be integers.
    pub fn is_integral(&self) -> bool {
        if self.d.is_one_mod_four() {
            let two = int(2);
            let (tx, ty) = (&self.x * &two, &self.y * &two);
            tx.is_integer() && ty.is_integer() && tx.numer().is_even() == ty.numer().is_even()
        } else {
            self.x.is_integer() && self.y.is_integer()
        }
    }

    /// Exact sign of the real number `x + y√d`.
    pub fn signum(&self) -> i8 {
        let sx = sign_of(&self.x);
        let sy = sign_of(&self.y);
        if sx == sy || sy == 0 {
            return sx;
        }
        if sx == 0 {
            return sy;
        }
        // Opposite signs: the larger of x² and d·y² wins.
        let dy2 = int(self.d.value()) * &self.y * &self.y;
        match (&self.x * &self.x).cmp(&dy2) {
            Ordering::Greater => sx,
            Ordering::Less => sy,
            Ordering::Equal => unreachable!("√d is irrational"),
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Compares the real values of two elements of the same field.
    pub fn cmp_real(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }

    /// Compares the real value against a rational.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        (self - &Self::rational(self.d, r.clone())).signum().cmp(&0)
    }

    /// `⌊(x + y√d) · scale⌋`, computed exactly.
    pub fn floor_scaled(&self, scale: &BigInt) -> BigInt {
        let x = &self.x * Rational::from_integer(scale.clone());
        let y = &self.y * Rational::from_integer(scale.clone());
        // x = u/v, y = p/q; value = (u·q + v·p·√d) / (v·q).
        let (u, v) = (x.numer(), x.denom());
        let (p, q) = (y.numer(), y.denom());
        let radicand = (v * p) * (v * p) * BigInt::from(self.d.value());
        let root = radicand.sqrt();
        let exact = &root * &root == radicand;
        let irr_floor = if p.is_negative() {
            if exact {
                -root
            } else {
                -root - 1
            }
        } else {
            root
        };
        (u * q + irr_floor).div_floor(&(v * q))
    }

    /// `⌈x + y√d⌉`.
    pub fn ceil(&self) -> BigInt {
        let fl = self.floor_scaled(&BigInt::one());
        if self.y.is_zero() && self.x.is_integer() {
            fl
        } else {
            fl + 1
        }
    }

    /// Floating-point approximation, for display and diagnostics only.
    pub fn to_f64(&self) -> f64 {
        let x = self.x.to_f64().unwrap_or(f64::NAN);
        let y = self.y.to_f64().unwrap_or(f64::NAN);
        x + y * (self.d.value() as f64).sqrt()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&QuadElement> for &QuadElement {
            type Output = QuadElement;

            /// Panics on mismatched fields; the `checked_*` methods return an error instead.
            fn $method(self, rhs: &QuadElement) -> QuadElement {
                self.$checked(rhs).expect("arithmetic across different quadratic fields")
            }
        }

        impl $trait for QuadElement {
            type Output = QuadElement;

            fn $method(self, rhs: QuadElement) -> QuadElement {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &QuadElement {
    type Output = QuadElement;

    fn neg(self) -> QuadElement {
        QuadElement::new(self.d, -&self.x, -&self.y)
    }
}

impl Neg for QuadElement {
    type Output = QuadElement;

    fn neg(self) -> QuadElement {
        -&self
    }
}

impl fmt::Display for QuadElement {
    /// `1+√2`, `5+2√6`, `(3+√13)/2`, `(-1+√5)/2`, `-√3`, `7/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let common = self.x.denom().lcm(self.y.denom());
        let (num_x, num_y) = if common.is_one() || self.x.is_zero() || self.y.is_zero() {
            (None, None)
        } else {
            let c = Rational::from_integer(common.clone());
            (Some((&self.x * &c).to_integer()), Some((&self.y * &c).to_integer()))
        };
        if let (Some(nx), Some(ny)) = (num_x, num_y) {
            return write!(f, "({})/{}", render(&Rational::from(nx), &Rational::from(ny), self.d), common);
        }
        f.write_str(&render(&self.x, &self.y, self.d))
    }
}

fn render(x: &Rational, y: &Rational, d: SquarefreeD) -> String {
    if y.is_zero() {
        return x.to_string();
    }
    let mag = y.abs();
    let coeff = if mag.is_one() { String::new() } else { mag.to_string() };
    let surd = format!("{coeff}√{d}");
    match (x.is_zero(), y.is_negative()) {
        (true, false) => surd,
        (true, true) => format!("-{surd}"),
        (false, false) => format!("{x}+{surd}"),
        (false, true) => format!("{x}-{surd}"),
    }
}
