use std::io::Write;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::oeis::MatchReport;
use crate::error::Result;
use crate::exact_serde;
use crate::genfun::Series;
use crate::identities::IdentityReport;
use crate::quadfield::{Rational, SquarefreeD};
use crate::sequences::SeqTerm;
use crate::unitfinder::Unit;

/// Top-level JSON document written by every subcommand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub d: Option<SquarefreeD>,
    pub unit: Option<UnitCoords>,
    pub delta: Option<i8>,
    #[serde(default)]
    pub terms: Vec<TermRow>,
    #[serde(default)]
    pub reports: Vec<ReportItem>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self { command: command.into(), d: None, unit: None, delta: None, terms: vec![], reports: vec![] }
    }

    pub fn with_unit(mut self, unit: &Unit) -> Self {
        self.d = Some(unit.field());
        self.unit = Some(UnitCoords::from(unit));
        self.delta = Some(unit.delta());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitCoords {
    #[serde(with = "exact_serde::rational")]
    pub x: Rational,
    #[serde(with = "exact_serde::rational")]
    pub y: Rational,
}

impl From<&Unit> for UnitCoords {
    fn from(u: &Unit) -> Self {
        Self { x: u.element().x().clone(), y: u.element().y().clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRow {
    pub n: i64,
    #[serde(with = "exact_serde::bigint")]
    pub fib: BigInt,
    #[serde(with = "exact_serde::rational")]
    pub lucas: Rational,
}

impl From<SeqTerm> for TermRow {
    fn from(t: SeqTerm) -> Self {
        Self { n: t.n, fib: t.fib, lucas: t.lucas }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReportItem {
    Unit(UnitInfo),
    Identity(IdentityReport),
    Gf(GfRow),
    Kfib(KFibRow),
    Oeis(MatchReport),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitInfo {
    pub display: String,
    pub discriminant: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GfRow {
    pub series: Series,
    #[serde(with = "exact_serde::rational")]
    pub x: Rational,
    pub truncation: usize,
    #[serde(with = "exact_serde::rational")]
    pub closed: Rational,
    #[serde(with = "exact_serde::rational")]
    pub truncated: Rational,
    /// `closed − truncated`, truncated to a fixed number of decimals.
    pub difference: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KFibRow {
    pub k: u64,
    pub r: u64,
}

/// CSV with header `n,fib,lucas`; rationals as `P/Q`.
pub fn write_terms_csv<W: Write>(terms: &[TermRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "fib", "lucas"]).map_err(csv_io)?;
    for t in terms {
        w.write_record([t.n.to_string(), t.fib.to_string(), t.lucas.to_string()]).map_err(csv_io)?;
    }
    w.flush()?;
    Ok(())
}

fn csv_io(e: csv::Error) -> std::io::Error {
    std::io::Error::other(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadfield::rat;
    use crate::sequences::SeqContext;

    #[test]
    fn json_round_trip() {
        let ctx = SeqContext::for_field(3).unwrap();
        let mut report = Report::new("lucas").with_unit(ctx.unit());
        report.terms = ctx.slice(0, 3).unwrap().into_iter().map(TermRow::from).collect();
        report.reports.push(ReportItem::Kfib(KFibRow { k: 3, r: 1 }));
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains(r#""lucas":"7/2""#), "{json}");
        assert!(json.contains(r#""unit":{"x":"2","y":"1"}"#), "{json}");
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn csv_layout() {
        let rows = vec![TermRow { n: 2, fib: 4.into(), lucas: rat(7, 2) }];
        let mut buf = Vec::new();
        write_terms_csv(&rows, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "n,fib,lucas\n2,4,7/2\n");
    }
}
