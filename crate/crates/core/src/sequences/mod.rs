//! Fibonacci and Lucas sequences of `Q(√d)` with respect to a unit.
//!
//! For a unit `u = a + b√d` of norm `Δ` and `uⁿ = aₙ + bₙ√d`,
//! `Fₙ = bₙ / b` and `Lₙ = aₙ / a`. Both obey
//! `Xₙ₊₂ = −Δ·Xₙ + 2a·Xₙ₊₁` over all of `Z`.
//!
//! Four independent routes are provided: the recurrence ([`SeqContext::fib`]),
//! exact powers of the unit ([`SeqContext::fib_binet`]), binomial sums
//! ([`SeqContext::fib_binomial`]) and the one-pass [`SeqContext::slice`].

mod context;
mod kfib;
mod methods;

pub use context::{context, context_with_unit, SeqContext, SeqTerm};
pub use kfib::{kfib_map, KFibMapping};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Which of the two sequences of a context.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeqKind {
    Fib,
    Lucas,
}

impl SeqKind {
    pub const BOTH: [SeqKind; 2] = [SeqKind::Fib, SeqKind::Lucas];

    pub fn name(self) -> &'static str {
        match self {
            SeqKind::Fib => "fib",
            SeqKind::Lucas => "lucas",
        }
    }
}

impl fmt::Display for SeqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for SeqKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "fib" | "f" | "fibonacci" => Ok(SeqKind::Fib),
            "lucas" | "l" => Ok(SeqKind::Lucas),
            other => Err(format!("expected fib or lucas, got `{other}`")),
        }
    }
}
