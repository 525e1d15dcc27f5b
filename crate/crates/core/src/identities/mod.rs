//! The identity catalog and its exact verifier.
//!
//! Each [`IdentityId`] names one closed-form relation among `Fₙ`, `Lₙ` and the
//! unit. [`verify`] scans an index range (the full square for two-variable
//! identities) with exact arithmetic and records every violation.

mod catalog;
mod verify;

pub use catalog::{IdentityId, Outcome, Side};
pub use verify::{verify, verify_all, verify_fields, verify_tag, Counterexample, ExactValue, IdentityReport};
