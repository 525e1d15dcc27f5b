use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::thread;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_serde;
use crate::quadfield::{int, Rational, SquarefreeD};
use crate::sequences::{SeqContext, SeqKind};

pub const DEFAULT_CACHE_DIR: &str = ".oeis-cache";
pub const CACHE_ENV: &str = "QUADFIB_CACHE_DIR";

const TIMEOUT: Duration = Duration::from_secs(10);
const MIN_GAP: Duration = Duration::from_secs(1);
const MIN_MATCH: usize = 8;

/// OEIS entries for the classical tables of units, by `d`.
pub const CITATIONS: &[(u64, SeqKind, &str)] = &[
    (2, SeqKind::Fib, "A000129"),
    (2, SeqKind::Lucas, "A001333"),
    (3, SeqKind::Fib, "A001353"),
    (3, SeqKind::Lucas, "A001075"),
    (5, SeqKind::Fib, "A000045"),
    (5, SeqKind::Lucas, "A000032"),
    (6, SeqKind::Fib, "A004189"),
    (6, SeqKind::Lucas, "A001079"),
    (7, SeqKind::Fib, "A077412"),
    (7, SeqKind::Lucas, "A001081"),
    (10, SeqKind::Fib, "A005668"),
    (10, SeqKind::Lucas, "A005667"),
    (11, SeqKind::Fib, "A075843"),
    (11, SeqKind::Lucas, "A001085"),
    (13, SeqKind::Fib, "A006190"),
    (13, SeqKind::Lucas, "A006497"),
    (37, SeqKind::Fib, "A041061"),
    (42, SeqKind::Fib, "A097309"),
];

pub fn citations_for(d: SquarefreeD) -> Vec<(SeqKind, &'static str)> {
    CITATIONS
        .iter()
        .filter(|c| c.0 == d.value())
        .map(|c| (c.1, c.2))
        .collect()
}

/// Terms of an OEIS sequence, `terms[i]` being the value at index `offset + i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OeisRef {
    pub a_number: String,
    pub offset: i64,
    pub terms: Vec<BigInt>,
}

impl OeisRef {
    /// Value at OEIS index `i`, if listed.
    pub fn at(&self, i: i64) -> Option<&BigInt> {
        usize::try_from(i - self.offset).ok().and_then(|k| self.terms.get(k))
    }
}

pub fn validate_a_number(s: &str) -> Result<String> {
    let b = s.as_bytes();
    if b.len() == 7 && (b[0] == b'A' || b[0] == b'a') && b[1..].iter().all(u8::is_ascii_digit) {
        Ok(format!("A{}", &s[1..]))
    } else {
        Err(Error::BadANumber(s.to_string()))
    }
}

/// Parses b-file text. Indices must be consecutive.
pub fn parse_bfile(a_number: &str, text: &str) -> Result<OeisRef> {
    let mut offset = None;
    let mut terms = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |msg: &str| Error::Parse { line: line_no, msg: format!("{msg}: `{line}`") };
        let mut parts = line.split_whitespace();
        let (Some(i), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(bad("expected `index value`"));
        };
        let i: i64 = i.parse().map_err(|_| bad("bad index"))?;
        let v: BigInt = v.parse().map_err(|_| bad("bad value"))?;
        let start = *offset.get_or_insert(i);
        if i != start + terms.len() as i64 {
            return Err(bad("indices are not consecutive"));
        }
        terms.push(v);
    }
    let Some(offset) = offset else {
        return Err(Error::Parse { line: 0, msg: "no terms".into() });
    };
    Ok(OeisRef { a_number: a_number.to_string(), offset, terms })
}

/// Cache directory: explicit flag, then `QUADFIB_CACHE_DIR`, then `./.oeis-cache`.
pub fn resolve_cache_dir(flag: Option<&Path>) -> PathBuf {
    if let Some(p) = flag {
        return p.to_path_buf();
    }
    match std::env::var_os(CACHE_ENV) {
        Some(v) if !v.is_empty() => PathBuf::from(v),
        _ => PathBuf::from(DEFAULT_CACHE_DIR),
    }
}

/// `b000045.txt`-style file name inside `dir`.
pub fn cache_path(dir: &Path, a_number: &str) -> PathBuf {
    dir.join(format!("b{}.txt", &a_number[1..]))
}

static LAST_REQUEST: Mutex<Option<Instant>> = Mutex::new(None);

fn download(a_number: &str) -> Result<String> {
    let url = format!("https://oeis.org/{a_number}/b{}.txt", &a_number[1..]);
    let agent: ureq::Agent = ureq::Agent::config_builder().timeout_global(Some(TIMEOUT)).build().into();
    let mut last_err = String::new();
    for _attempt in 0..2 {
        {
            let mut last = LAST_REQUEST.lock().unwrap_or_else(|e| e.into_inner());
            if let Some(t) = *last {
                let since = t.elapsed();
                if since < MIN_GAP {
                    thread::sleep(MIN_GAP - since);
                }
            }
            *last = Some(Instant::now());
        }
        match agent.get(&url).call() {
            Ok(mut resp) => match resp.body_mut().read_to_string() {
                Ok(text) => return Ok(text),
                Err(e) => last_err = e.to_string(),
            },
            Err(e) => last_err = e.to_string(),
        }
    }
    Err(Error::Network(format!("{url}: {last_err}")))
}

/// Loads a sequence from the cache, downloading (and caching) it unless `offline`.
pub fn oeis_fetch(a_number: &str, cache_dir: &Path, offline: bool) -> Result<OeisRef> {
    let a_number = validate_a_number(a_number)?;
    let path = cache_path(cache_dir, &a_number);
    if path.is_file() {
        let text = fs::read_to_string(&path)?;
        return parse_bfile(&a_number, &text);
    }
    if offline {
        return Err(Error::CacheMiss { a_number, dir: cache_dir.to_path_buf() });
    }
    let text = download(&a_number)?;
    let parsed = parse_bfile(&a_number, &text)?;
    fs::create_dir_all(cache_dir)?;
    fs::write(&path, &text)?;
    Ok(parsed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Match,
    Mismatch,
    InsufficientData,
}

/// Best alignment of one of our sequences against an OEIS entry.
///
/// Our term `n` (from 1) is compared with the entry's index `n + shift`
/// after multiplying by `scale`. OEIS often lists `bₙ = b·Fₙ`, `aₙ = a·Lₙ`
/// or `2aₙ`, so `scale` ranges over `1, b, 2b` for `fib` and `1, a, 2a` for
/// `lucas`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchReport {
    pub d: SquarefreeD,
    pub which: SeqKind,
    pub a_number: String,
    pub shift: i64,
    #[serde(with = "exact_serde::rational")]
    pub scale: Rational,
    /// Leading run of agreeing terms.
    pub matched_terms: usize,
    /// Terms available for comparison at this shift.
    pub compared_terms: usize,
    pub verdict: Verdict,
}

pub fn oeis_match(ctx: &SeqContext, which: SeqKind, oeis: &OeisRef, max_shift: i64) -> MatchReport {
    let base = match which {
        SeqKind::Fib => ctx.b().clone(),
        SeqKind::Lucas => ctx.a().clone(),
    };
    let scales = [int(1), base.clone(), int(2) * base];
    let last_index = oeis.offset + oeis.terms.len() as i64 - 1;
    let top = (last_index + max_shift).max(1);
    let ours = ctx.slice(1, top).expect("1 ≤ top");
    let value = |n: i64| -> Rational {
        let t = &ours[(n - 1) as usize];
        match which {
            SeqKind::Fib => Rational::from_integer(t.fib.clone()),
            SeqKind::Lucas => t.lucas.clone(),
        }
    };

    let mut shifts: Vec<i64> = vec![0];
    for s in 1..=max_shift {
        shifts.extend([-s, s]);
    }
    let mut best: Option<MatchReport> = None;
    for scale in &scales {
        for &shift in &shifts {
            let first = (oeis.offset - shift).max(1);
            let last = last_index - shift;
            let compared = (last - first + 1).max(0) as usize;
            let matched = (first..=last)
                .take_while(|&n| {
                    let theirs = Rational::from_integer(oeis.at(n + shift).expect("in range").clone());
                    value(n) * scale == theirs
                })
                .count();
            let verdict = if compared < MIN_MATCH {
                Verdict::InsufficientData
            } else if matched == compared {
                Verdict::Match
            } else {
                Verdict::Mismatch
            };
            let candidate = MatchReport {
                d: ctx.field(),
                which,
                a_number: oeis.a_number.clone(),
                shift,
                scale: scale.clone(),
                matched_terms: matched,
                compared_terms: compared,
                verdict,
            };
            let better = match &best {
                None => true,
                Some(b) => rank(&candidate) > rank(b),
            };
            if better {
                best = Some(candidate);
            }
        }
    }
    best.expect("at least one alignment")
}

fn rank(r: &MatchReport) -> (bool, usize) {
    (r.verdict == Verdict::Match, r.matched_terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(d: i64) -> SeqContext {
        SeqContext::for_field(d).unwrap()
    }

    fn bfile(offset: i64, values: &[i64]) -> String {
        values
            .iter()
            .enumerate()
            .map(|(i, v)| format!("{} {v}\n", offset + i as i64))
            .collect()
    }

    #[test]
    fn a_numbers() {
        assert_eq!(validate_a_number("A000045").unwrap(), "A000045");
        assert_eq!(validate_a_number("a000045").unwrap(), "A000045");
        for bad in ["A45", "B000045", "A0000451", "A00004x"] {
            assert!(matches!(validate_a_number(bad), Err(Error::BadANumber(_))));
        }
    }

    #[test]
    fn parsing() {
        let r = parse_bfile("A000045", "# Fibonacci\n0 0\n1 1\n\n2 1\n3 2\n").unwrap();
        assert_eq!(r.offset, 0);
        assert_eq!(r.terms, [0, 1, 1, 2].map(BigInt::from));
        assert!(matches!(parse_bfile("A000001", "abc\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_bfile("A000001", "0 1\n2 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_bfile("A000001", "# only a comment\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn offline_cache_miss() {
        let dir = tempfile::tempdir().unwrap();
        assert!(matches!(oeis_fetch("A000045", dir.path(), true), Err(Error::CacheMiss { .. })));
        fs::write(cache_path(dir.path(), "A000045"), bfile(0, &[0, 1, 1, 2, 3])).unwrap();
        let r = oeis_fetch("A000045", dir.path(), true).unwrap();
        assert_eq!(r.terms.len(), 5);
    }

    #[test]
    fn matching() {
        let pell = parse_bfile("A000129", &bfile(0, &[0, 1, 2, 5, 12, 29, 70, 169, 408, 985, 2378])).unwrap();
        let r = oeis_match(&ctx(2), SeqKind::Fib, &pell, 2);
        assert_eq!((r.verdict, r.shift, r.scale.clone()), (Verdict::Match, 0, int(1)));
        assert_eq!(r.matched_terms, 10);

        let fib = parse_bfile("A000045", &bfile(0, &[0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89])).unwrap();
        assert_eq!(oeis_match(&ctx(3), SeqKind::Fib, &fib, 2).verdict, Verdict::Mismatch);

        // Starting at F₁ with offset 0 needs shift −1.
        let shifted = parse_bfile("A000000", &bfile(0, &[1, 1, 2, 3, 5, 8, 13, 21, 34, 55])).unwrap();
        let r = oeis_match(&ctx(5), SeqKind::Fib, &shifted, 2);
        assert_eq!((r.verdict, r.shift), (Verdict::Match, -1));

        let short = parse_bfile("A000000", &bfile(0, &[0, 1, 1, 2])).unwrap();
        assert_eq!(oeis_match(&ctx(5), SeqKind::Fib, &short, 2).verdict, Verdict::InsufficientData);
    }

    #[test]
    fn scaled_lucas() {
        // 2a·Lₙ for d = 13 (a = 3/2).
        let v = parse_bfile("A006497", &bfile(0, &[2, 3, 11, 36, 119, 393, 1298, 4287, 14159, 46764])).unwrap();
        let r = oeis_match(&ctx(13), SeqKind::Lucas, &v, 2);
        assert_eq!((r.verdict, r.scale.clone()), (Verdict::Match, int(3)));
    }

    #[test]
    fn cache_dir_precedence() {
        let flag = Path::new("/tmp/x");
        assert_eq!(resolve_cache_dir(Some(flag)), flag);
    }
}
