//! Serde adapters writing exact numbers as strings (`"7/2"`, `"-5"`).

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

use crate::quadfield::Rational;

pub mod rational {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        Rational::from_str(&s).map_err(|e| D::Error::custom(format!("bad rational `{s}`: {e}")))
    }
}

pub mod bigint {
    use super::*;

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(n)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        BigInt::from_str(&s).map_err(|e| D::Error::custom(format!("bad integer `{s}`: {e}")))
    }
}
