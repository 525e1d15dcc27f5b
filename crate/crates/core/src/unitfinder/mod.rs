//! Fundamental units of real quadratic fields.
//!
//! The unit is read off the periodic continued fraction of `ω = √d`
//! (or `ω = (1+√d)/2` when `d ≡ 1 mod 4`, so half-integer units appear
//! directly). All units are then `±εˡ`.

mod cf;
mod unit;

pub use cf::{continued_fraction, continued_fraction_capped, CFExpansion, Seed, DEFAULT_PERIOD_CAP};
pub use unit::{fundamental_unit, fundamental_unit_capped, unit_from_power, Unit, UnitSign};
