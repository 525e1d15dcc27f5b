//! Compares the cited OEIS entries against the sequences computed here.
//!
//! Reads b-files from the vendored fixtures unless a cache directory is given
//! as the first argument; never touches the network.

use std::path::PathBuf;

use quadfib::app::{oeis_fetch, oeis_match, CITATIONS};
use quadfib::quadfield::validate_d;
use quadfib::sequences::context;

fn main() -> quadfib::Result<()> {
    let dir = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/oeis"));
    for &(d, which, a) in CITATIONS {
        let ctx = context(validate_d(d as i64)?)?;
        let oeis = oeis_fetch(a, &dir, true)?;
        let r = oeis_match(&ctx, which, &oeis, 2);
        println!(
            "d = {d:>2} {which:<5} {a}  shift {:>2}  scale {:<4} {:>3}/{:<3} {:?}",
            r.shift, r.scale.to_string(), r.matched_terms, r.compared_terms, r.verdict
        );
    }
    Ok(())
}
