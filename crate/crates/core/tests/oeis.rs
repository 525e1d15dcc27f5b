use std::path::PathBuf;

use num_bigint::BigInt;
use quadfib::app::{cache_path, citations_for, oeis_fetch, oeis_match, parse_bfile, Verdict, CITATIONS};
use quadfib::quadfield::validate_d;
use quadfib::sequences::{context, SeqKind};
use quadfib::{Error, SeqContext};

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/oeis")
}

fn head(a: &str, n: usize) -> Vec<i64> {
    let r = oeis_fetch(a, &fixtures(), true).unwrap();
    r.terms[..n].iter().map(|t| i64::try_from(t).unwrap()).collect()
}

#[test]
fn fixture_heads() {
    let r = oeis_fetch("A000045", &fixtures(), true).unwrap();
    assert_eq!(r.offset, 0);
    assert_eq!(head("A000045", 6), [0, 1, 1, 2, 3, 5]);
    assert_eq!(head("A006497", 7), [2, 3, 11, 36, 119, 393, 1298]);
    assert_eq!(head("A075843", 5), [0, 3, 60, 1197, 23880]);
    assert_eq!(head("A097309", 4), [1, 26, 675, 17524]);
}

#[test]
fn every_citation_matches() {
    for &(d, which, a) in CITATIONS {
        let ctx = context(validate_d(d as i64).unwrap()).unwrap();
        let oeis = oeis_fetch(a, &fixtures(), true).unwrap();
        let r = oeis_match(&ctx, which, &oeis, 2);
        assert_eq!(r.verdict, Verdict::Match, "d = {d}, {which}, {a}: {r:?}");
        assert!(r.matched_terms >= 8);
    }
}

#[test]
fn reference_verdicts() {
    let fix = fixtures();
    let m = |d: i64, which, a| {
        let ctx = SeqContext::for_field(d).unwrap();
        oeis_match(&ctx, which, &oeis_fetch(a, &fix, true).unwrap(), 2).verdict
    };
    assert_eq!(m(2, SeqKind::Fib, "A000129"), Verdict::Match);
    assert_eq!(m(5, SeqKind::Lucas, "A000032"), Verdict::Match);
    assert_eq!(m(3, SeqKind::Fib, "A000045"), Verdict::Mismatch);
}

#[test]
fn citations_cover_table_fields() {
    for d in [2, 3, 5, 6, 7, 10, 11, 13] {
        assert_eq!(citations_for(validate_d(d).unwrap()).len(), 2, "d = {d}");
    }
    for d in [37, 42] {
        assert_eq!(citations_for(validate_d(d).unwrap()), [(SeqKind::Fib, CITATIONS.iter().find(|c| c.0 == d as u64).unwrap().2)]);
    }
    assert!(citations_for(validate_d(17).unwrap()).is_empty());
}

#[test]
fn cache_round_trip_is_verbatim() {
    let dir = tempfile::tempdir().unwrap();
    let text = "# test\n0 0\n1 1\n2 1\n";
    std::fs::write(cache_path(dir.path(), "A000045"), text).unwrap();
    let r = oeis_fetch("A000045", dir.path(), true).unwrap();
    assert_eq!(r, parse_bfile("A000045", text).unwrap());
    assert_eq!(r.terms, [0, 1, 1].map(BigInt::from));
    assert!(matches!(oeis_fetch("A999999", dir.path(), true), Err(Error::CacheMiss { .. })));
    assert!(matches!(oeis_fetch("A99", dir.path(), true), Err(Error::BadANumber(_))));
}
