//! Command-line front end, structured reports and the OEIS cross-check.

pub mod cli;
mod oeis;
mod report;

pub use oeis::{
    cache_path, citations_for, oeis_fetch, oeis_match, parse_bfile, resolve_cache_dir,
    validate_a_number, MatchReport, OeisRef, Verdict, CACHE_ENV, CITATIONS, DEFAULT_CACHE_DIR,
};
pub use report::{write_terms_csv, GfRow, KFibRow, Report, ReportItem, TermRow, UnitCoords, UnitInfo};
