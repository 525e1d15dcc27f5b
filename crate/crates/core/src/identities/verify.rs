use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::catalog::{IdentityId, Outcome, Side, Terms};
use crate::error::{Error, Result};
use crate::exact_serde;
use crate::quadfield::{Rational, SquarefreeD};
use crate::sequences::SeqContext;

/// One side of a violated identity, as written to reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ExactValue {
    Rational {
        #[serde(with = "exact_serde::rational")]
        value: Rational,
    },
    /// `x + y√d`, with `d` taken from the enclosing report.
    Element {
        #[serde(with = "exact_serde::rational")]
        x: Rational,
        #[serde(with = "exact_serde::rational")]
        y: Rational,
    },
}

impl From<Side> for ExactValue {
    fn from(s: Side) -> Self {
        match s {
            Side::Rational(value) => ExactValue::Rational { value },
            Side::Element(e) => ExactValue::Element { x: e.x().clone(), y: e.y().clone() },
        }
    }
}

impl std::fmt::Display for ExactValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExactValue::Rational { value } => write!(f, "{value}"),
            ExactValue::Element { x, y } => write!(f, "{x} + ({y})·√d"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub indices: Vec<i64>,
    pub lhs: ExactValue,
    pub rhs: ExactValue,
}

/// Outcome of scanning one identity over one field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    #[serde(with = "identity_tag")]
    pub identity: IdentityId,
    pub d: SquarefreeD,
    /// `(from, to)` for each free variable, in the order of [`IdentityId::variables`].
    pub index_range: Vec<(i64, i64)>,
    pub checked: usize,
    pub skipped: usize,
    pub passed: bool,
    pub counterexamples: Vec<Counterexample>,
}

mod identity_tag {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use super::IdentityId;

    pub fn serialize<S: Serializer>(id: &IdentityId, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(id.tag())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<IdentityId, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

fn check_range((from, to): (i64, i64)) -> Result<()> {
    if from > to {
        Err(Error::InvalidRange { from, to })
    } else {
        Ok(())
    }
}

fn scan(terms: &Terms<'_>, ctx: &SeqContext, id: IdentityId, (from, to): (i64, i64)) -> IdentityReport {
    let arity = id.variables().len();
    let mut report = IdentityReport {
        identity: id,
        d: ctx.field(),
        index_range: vec![(from, to); arity],
        checked: 0,
        skipped: 0,
        passed: true,
        counterexamples: Vec::new(),
    };
    let mut record = |ix: Vec<i64>| match terms.evaluate(id, &ix) {
        Outcome::Holds => report.checked += 1,
        Outcome::Skipped => report.skipped += 1,
        Outcome::Fails { lhs, rhs } => {
            report.checked += 1;
            report.counterexamples.push(Counterexample {
                indices: ix,
                lhs: lhs.into(),
                rhs: rhs.into(),
            });
        }
    };
    for i in from..=to {
        if arity == 1 {
            record(vec![i]);
        } else {
            for j in from..=to {
                record(vec![i, j]);
            }
        }
    }
    report.passed = report.counterexamples.is_empty();
    report
}

/// Scans `id` over `range` (both variables over the same range for
/// two-variable identities).
pub fn verify(ctx: &SeqContext, id: IdentityId, range: (i64, i64)) -> Result<IdentityReport> {
    check_range(range)?;
    let terms = Terms::for_range(ctx, range.0, range.1);
    Ok(scan(&terms, ctx, id, range))
}

/// [`verify`] with the identity given by its tag, e.g. `"T25.ii"`.
pub fn verify_tag(ctx: &SeqContext, tag: &str, range: (i64, i64)) -> Result<IdentityReport> {
    verify(ctx, tag.parse()?, range)
}

/// The full catalog in catalog order.
pub fn verify_all(ctx: &SeqContext, range: (i64, i64)) -> Result<Vec<IdentityReport>> {
    check_range(range)?;
    let terms = Terms::for_range(ctx, range.0, range.1);
    Ok(IdentityId::ALL
        .par_iter()
        .map(|&id| scan(&terms, ctx, id, range))
        .collect())
}

/// The full catalog over many fundamental-unit contexts, in parallel.
///
/// Reports come back sorted by identity, then by `d`.
pub fn verify_fields(fields: &[SquarefreeD], range: (i64, i64)) -> Result<Vec<IdentityReport>> {
    check_range(range)?;
    let per_field: Vec<Vec<IdentityReport>> = fields
        .par_iter()
        .map(|&d| {
            let ctx = crate::sequences::context(d)?;
            verify_all(&ctx, range)
        })
        .collect::<Result<_>>()?;
    let mut all: Vec<IdentityReport> = per_field.into_iter().flatten().collect();
    all.sort_by_key(|r| (r.identity, r.d));
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadfield::{int, rat, validate_d};
    use crate::sequences::context_with_unit;
    use crate::unitfinder::UnitSign;

    fn ctx(d: i64) -> SeqContext {
        SeqContext::for_field(d).unwrap()
    }

    fn holds(c: &SeqContext, id: IdentityId, ix: &[i64]) -> bool {
        let t = Terms::for_range(c, -5, 5);
        t.evaluate(id, ix) == Outcome::Holds
    }

    #[test]
    fn cassini_over_pell_numbers() {
        let r = verify_tag(&ctx(2), "T25.ii", (-20, 20)).unwrap();
        assert!(r.passed);
        assert_eq!((r.checked, r.skipped), (41, 0));
        // n = 2: F₂² − F₁F₃ = 4 − 5 = −1 = Δ.
        let c = ctx(2);
        assert_eq!(c.fib(2).pow(2) - c.fib(1) * c.fib(3), (-1).into());
    }

    #[test]
    fn pointwise_examples() {
        let c5 = ctx(5);
        assert!(holds(&c5, IdentityId::T25i, &[4, 2]));
        assert!(holds(&c5, IdentityId::T7ix, &[1]));
        assert!(holds(&ctx(3), IdentityId::T7i, &[2]));
        // Cassini at n = 1 touches F₀.
        for d in [2, 3, 5, 6, 13] {
            assert!(holds(&ctx(d), IdentityId::T25ii, &[1]));
        }
    }

    #[test]
    fn full_catalog_on_golden_field() {
        let reports = verify_all(&ctx(5), (-20, 20)).unwrap();
        assert_eq!(reports.len(), IdentityId::ALL.len());
        let order: Vec<IdentityId> = reports.iter().map(|r| r.identity).collect();
        assert_eq!(order, IdentityId::ALL);
        for r in &reports {
            assert!(r.passed, "{} failed: {:?}", r.identity, r.counterexamples.first());
        }
        let two_var = reports.iter().find(|r| r.identity == IdentityId::T25iv).unwrap();
        assert_eq!(two_var.checked, 41 * 41);
        let sum = reports.iter().find(|r| r.identity == IdentityId::T7v).unwrap();
        assert_eq!((sum.checked, sum.skipped), (21, 20));
    }

    #[test]
    fn norm_plus_one_branch_of_t25v_as_printed_fails() {
        // The Δ = 1 branch holds with a/(b²d)·(a·L(m+n) − L(m−n−1)); as printed
        // it does not, e.g. d = 3, m = n = 1: 4 versus 13/3.
        let reports = verify_all(&ctx(3), (-20, 20)).unwrap();
        for r in &reports {
            if r.identity == IdentityId::T25v {
                assert!(!r.passed);
                let first = r.counterexamples.iter().find(|c| c.indices == [1, 1]).unwrap();
                assert_eq!(first.lhs, ExactValue::Rational { value: int(4) });
                assert_eq!(first.rhs, ExactValue::Rational { value: rat(13, 3) });
            } else {
                assert!(r.passed, "{} failed", r.identity);
            }
        }
    }

    #[test]
    fn corrected_t25v_for_norm_plus_one() {
        for d in [3, 6, 7, 11, 14, 15] {
            let c = ctx(d);
            assert_eq!(c.delta(), 1);
            let b2d = c.b() * c.b() * int(d);
            for m in -8..=8 {
                for n in -8..=8 {
                    let lhs = int(c.fib(m - 1) * c.fib(n) + c.fib(m) * c.fib(n + 1));
                    let rhs = c.a() / &b2d * (c.a() * c.lucas(m + n) - c.lucas(m - n - 1));
                    assert_eq!(lhs, rhs, "d = {d}, m = {m}, n = {n}");
                }
            }
        }
    }

    #[test]
    fn arbitrary_unit_contexts_pass() {
        let d5 = validate_d(5).unwrap();
        let c = context_with_unit(d5, UnitSign::Minus, 3).unwrap();
        for r in verify_all(&c, (-10, 10)).unwrap() {
            assert!(r.passed, "{} failed", r.identity);
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(verify_all(&ctx(5), (3, 1)), Err(Error::InvalidRange { .. })));
        assert!(matches!(verify_tag(&ctx(5), "T99", (0, 1)), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn multi_field_order_is_by_tag_then_d() {
        let fields: Vec<SquarefreeD> = [7, 2, 5].map(|d| validate_d(d).unwrap()).to_vec();
        let reports = verify_fields(&fields, (-3, 3)).unwrap();
        let keys: Vec<(IdentityId, u64)> = reports.iter().map(|r| (r.identity, r.d.value())).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(keys[..3], [(IdentityId::T7i, 2), (IdentityId::T7i, 5), (IdentityId::T7i, 7)]);
    }

    #[test]
    fn tags_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.tag().parse::<IdentityId>().unwrap(), id);
        }
    }
}
