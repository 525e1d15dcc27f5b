//! Fibonacci and Lucas sequences of a real quadratic field.
//!
//! Every real quadratic field `Q(√d)` has a fundamental unit `ε = a + b√d`
//! (with `N(ε) = a² − b²d = Δ = ±1`). Writing `εⁿ = aₙ + bₙ√d`, the field's
//! Fibonacci and Lucas sequences are `Fₙ = bₙ / b` and `Lₙ = aₙ / a`. For
//! `d = 5` these are the classical sequences.
//!
//! The crate is organised bottom-up:
//!
//! * [`quadfield`]: exact arithmetic in `Q(√d)` and its matrix model,
//! * [`unitfinder`]: fundamental units from periodic continued fractions,
//! * [`sequences`]: `Fₙ`, `Lₙ` for every `n ∈ Z` by several independent routes,
//! * [`identities`]: a catalog of closed-form identities and an exact verifier,
//! * [`genfun`]: generating functions, convergence and fixed-point decimals,
//! * [`app`]: CLI, JSON/CSV reports and the OEIS b-file cross-check.
//!
//! ```
//! use quadfib::sequences::SeqContext;
//!
//! let ctx = SeqContext::for_field(5).unwrap();
//! let fib: Vec<String> = (1..=6).map(|n| ctx.fib(n).to_string()).collect();
//! assert_eq!(fib, ["1", "1", "2", "3", "5", "8"]);
//! ```

pub mod app;
pub mod error;
mod exact_serde;
pub mod genfun;
pub mod identities;
pub mod quadfield;
pub mod sequences;
pub mod unitfinder;

pub use error::{Error, Result};
pub use quadfield::{QuadElement, Rational, SquarefreeD};
pub use sequences::{SeqContext, SeqKind, SeqTerm};
pub use unitfinder::Unit;
