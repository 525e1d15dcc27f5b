//! `quadfib` command line.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 I/O or
//! network failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use super::oeis::{citations_for, oeis_fetch, oeis_match, resolve_cache_dir, Verdict};
use super::report::{write_terms_csv, GfRow, KFibRow, Report, ReportItem, TermRow, UnitInfo};
use crate::error::{Error, Result};
use crate::genfun::{gf_closed, gf_truncated, FixedPointDecimal, GfQuery, Series};
use crate::identities::{verify_all, verify_tag, IdentityReport};
use crate::quadfield::{validate_d, Rational, SquarefreeD};
use crate::sequences::{context, context_with_unit, kfib_map, SeqContext, SeqKind};
use crate::unitfinder::UnitSign;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

const DIFF_DIGITS: u32 = 30;

#[derive(Parser, Debug)]
#[command(name = "quadfib", version, about = "Fibonacci and Lucas sequences of real quadratic fields")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// OEIS cache directory (overrides QUADFIB_CACHE_DIR).
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Fundamental unit, its norm and the field discriminant.
    Unit { d: i64 },
    /// Fibonacci terms F(from..=to).
    Fib(TermArgs),
    /// Lucas terms L(from..=to).
    Lucas(TermArgs),
    /// The field and unit realising the k-Fibonacci sequence.
    Kfib {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        /// Number of terms to print.
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
    /// Check catalog identities over an index range.
    Verify {
        /// A single d, or LO..HI for every squarefree d in that range.
        d: String,
        /// Identity tag such as T25.ii, or `all`.
        #[arg(long, default_value = "all")]
        identity: String,
        /// Index range A..B (inclusive).
        #[arg(long, allow_hyphen_values = true, default_value = "-20..20")]
        range: String,
    },
    /// Closed-form generating functions against truncated series.
    Gf {
        d: i64,
        /// Evaluation point P/Q.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Number of series terms.
        #[arg(long, default_value_t = 50)]
        terms: usize,
        /// fib, lucas, alt_fib, alt_lucas (default: all four).
        #[arg(long)]
        series: Option<String>,
    },
    /// Compare against OEIS b-files.
    #[command(name = "oeis-check")]
    OeisCheck {
        d: i64,
        /// A-number to compare against (default: the entries cited for d).
        #[arg(long = "a", value_name = "A-NUMBER")]
        a_number: Option<String>,
        /// fib or lucas (default: both).
        #[arg(long)]
        which: Option<String>,
        /// Never touch the network.
        #[arg(long)]
        offline: bool,
        #[arg(long, default_value_t = 2)]
        max_shift: i64,
    },
}

#[derive(Args, Debug)]
struct TermArgs {
    d: i64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 1)]
    from: i64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 10)]
    to: i64,
    /// Use ±ε^L instead of ε.
    #[arg(long, allow_negative_numbers = true, default_value_t = 1)]
    unit_power: i64,
    #[arg(long, allow_hyphen_values = true, default_value = "+")]
    unit_sign: UnitSign,
}

/// What a subcommand produced: the report plus its plain rendering.
struct Output {
    report: Report,
    plain: String,
    csv: Option<String>,
    code: i32,
}

/// Runs the CLI on `argv` (including the program name).
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind::*;
            return match e.kind() {
                DisplayHelp | DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let text = e.render().to_string();
                    let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("usage error");
                    let _ = writeln!(err, "{}", line.trim());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli).and_then(|o| emit(&cli, o, out)) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) | Error::Network(_) | Error::CacheMiss { .. } | Error::Parse { .. } => EXIT_IO,
        _ => EXIT_USAGE,
    }
}

fn emit(cli: &Cli, o: Output, out: &mut dyn Write) -> Result<i32> {
    let text = match cli.format {
        Format::Plain => o.plain,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&o.report).map_err(std::io::Error::other)?;
            s.push('\n');
            s
        }
        Format::Csv => match o.csv {
            Some(s) => s,
            None => {
                let mut buf = Vec::new();
                write_terms_csv(&o.report.terms, &mut buf)?;
                String::from_utf8(buf).expect("csv output is UTF-8")
            }
        },
    };
    match &cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(o.code)
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

/// `A..B` or `A..=B`, both inclusive.
fn parse_range(s: &str) -> Result<(i64, i64)> {
    let bad = || usage(format!("expected a range A..B, got `{s}`"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let (from, to) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if from > to {
        return Err(Error::InvalidRange { from, to });
    }
    Ok((from, to))
}

fn fields(arg: &str) -> Result<Vec<SquarefreeD>> {
    if arg.contains("..") {
        let (lo, hi) = parse_range(arg)?;
        Ok(SquarefreeD::range(lo.max(2) as u64, hi.max(0) as u64).collect())
    } else {
        let d: i64 = arg.trim().parse().map_err(|_| usage(format!("bad d `{arg}`")))?;
        Ok(vec![validate_d(d)?])
    }
}

fn execute(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Unit { d } => unit_cmd(*d),
        Command::Fib(a) => terms_cmd("fib", a, SeqKind::Fib),
        Command::Lucas(a) => terms_cmd("lucas", a, SeqKind::Lucas),
        Command::Kfib { k, terms } => kfib_cmd(*k, *terms),
        Command::Verify { d, identity, range } => verify_cmd(d, identity, range),
        Command::Gf { d, x, terms, series } => gf_cmd(*d, x, *terms, series.as_deref()),
        Command::OeisCheck { d, a_number, which, offline, max_shift } => {
            oeis_cmd(cli, *d, a_number.as_deref(), which.as_deref(), *offline, *max_shift)
        }
    }
}

fn unit_cmd(d: i64) -> Result<Output> {
    let d = validate_d(d)?;
    let ctx = context(d)?;
    let u = ctx.unit();
    let info = UnitInfo { display: u.to_string(), discriminant: d.discriminant() };
    let plain = format!("d={d} unit={u} norm={} discriminant={}\n", u.delta(), d.discriminant());
    let csv = format!(
        "d,x,y,norm,discriminant\n{d},{},{},{},{}\n",
        u.element().x(),
        u.element().y(),
        u.delta(),
        d.discriminant()
    );
    let mut report = Report::new("unit").with_unit(u);
    report.reports.push(ReportItem::Unit(info));
    Ok(Output { report, plain, csv: Some(csv), code: EXIT_OK })
}

fn terms_cmd(name: &str, a: &TermArgs, which: SeqKind) -> Result<Output> {
    let d = validate_d(a.d)?;
    let ctx = if a.unit_power == 1 && a.unit_sign == UnitSign::Plus {
        context(d)?
    } else {
        context_with_unit(d, a.unit_sign, a.unit_power)?
    };
    let rows: Vec<TermRow> = ctx.slice(a.from, a.to)?.into_iter().map(TermRow::from).collect();
    let words: Vec<String> = rows
        .iter()
        .map(|t| match which {
            SeqKind::Fib => t.fib.to_string(),
            SeqKind::Lucas => t.lucas.to_string(),
        })
        .collect();
    let mut report = Report::new(name).with_unit(ctx.unit());
    report.terms = rows;
    Ok(Output { report, plain: format!("{}\n", words.join(" ")), csv: None, code: EXIT_OK })
}

fn kfib_cmd(k: u64, count: usize) -> Result<Output> {
    let m = kfib_map(k);
    let ctx = m.context();
    let mut plain = format!("d={} r={} unit={} norm={}\n", m.d, m.r, m.unit, m.unit.delta());
    let mut report = Report::new("kfib").with_unit(&m.unit);
    report.reports.push(ReportItem::Kfib(KFibRow { k, r: m.r }));
    if count > 0 {
        let rows: Vec<TermRow> = ctx.slice(1, count as i64)?.into_iter().map(TermRow::from).collect();
        let words: Vec<String> = rows.iter().map(|t| t.fib.to_string()).collect();
        let _ = writeln!(plain, "{}", words.join(" "));
        report.terms = rows;
    }
    Ok(Output { report, plain, csv: None, code: EXIT_OK })
}

fn verify_cmd(d: &str, identity: &str, range: &str) -> Result<Output> {
    let range = parse_range(range)?;
    let ds = fields(d)?;
    let run_one = |ctx: &SeqContext| -> Result<Vec<IdentityReport>> {
        if identity.eq_ignore_ascii_case("all") {
            verify_all(ctx, range)
        } else {
            Ok(vec![verify_tag(ctx, identity, range)?])
        }
    };
    let mut report = Report::new("verify");
    let reports = if let [single] = ds.as_slice() {
        let ctx = context(*single)?;
        report = report.with_unit(ctx.unit());
        run_one(&ctx)?
    } else {
        use rayon::prelude::*;
        let per: Vec<Vec<IdentityReport>> = ds
            .par_iter()
            .map(|&d| run_one(&context(d)?))
            .collect::<Result<_>>()?;
        let mut all: Vec<IdentityReport> = per.into_iter().flatten().collect();
        all.sort_by_key(|r| (r.identity, r.d));
        all
    };
    let mut plain = String::new();
    let mut csv = String::from("identity,d,checked,skipped,passed,counterexamples\n");
    let mut code = EXIT_OK;
    for r in &reports {
        let status = if r.passed {
            "passed".to_string()
        } else {
            code = EXIT_MISMATCH;
            let c = &r.counterexamples[0];
            format!(
                "FAILED ({} counterexamples; first at {:?}: {} vs {})",
                r.counterexamples.len(),
                c.indices,
                c.lhs,
                c.rhs
            )
        };
        let _ = writeln!(plain, "{} d={} checked={} skipped={} {status}", r.identity, r.d, r.checked, r.skipped);
        let _ = writeln!(
            csv,
            "{},{},{},{},{},{}",
            r.identity,
            r.d,
            r.checked,
            r.skipped,
            r.passed,
            r.counterexamples.len()
        );
    }
    report.reports = reports.into_iter().map(ReportItem::Identity).collect();
    Ok(Output { report, plain, csv: Some(csv), code })
}

fn gf_cmd(d: i64, x: &str, terms: usize, series: Option<&str>) -> Result<Output> {
    let ctx = context(validate_d(d)?)?;
    let x: Rational = x.trim().parse().map_err(|_| usage(format!("bad rational `{x}`")))?;
    let which: Vec<Series> = match series {
        None => Series::ALL.to_vec(),
        Some(s) => vec![s.parse().map_err(usage)?],
    };
    let q = GfQuery::new(&ctx, x.clone(), terms)?;
    let mut report = Report::new("gf").with_unit(ctx.unit());
    let mut plain = String::new();
    let mut csv = String::from("series,x,terms,closed,truncated,difference\n");
    for s in which {
        let closed = gf_closed(&ctx, &x, s)?;
        let truncated = gf_truncated(&q, s);
        let diff = FixedPointDecimal::from_rational(&(&closed - &truncated), DIFF_DIGITS)?;
        let approx = FixedPointDecimal::from_rational(&truncated, DIFF_DIGITS)?;
        let _ = writeln!(plain, "{s} x={x} N={terms} closed={closed} truncated≈{approx} difference≈{diff}");
        let _ = writeln!(csv, "{s},{x},{terms},{closed},{truncated},{diff}");
        report.reports.push(ReportItem::Gf(GfRow {
            series: s,
            x: x.clone(),
            truncation: terms,
            closed,
            truncated,
            difference: diff.to_string(),
        }));
    }
    Ok(Output { report, plain, csv: Some(csv), code: EXIT_OK })
}

fn oeis_cmd(
    cli: &Cli,
    d: i64,
    a_number: Option<&str>,
    which: Option<&str>,
    offline: bool,
    max_shift: i64,
) -> Result<Output> {
    let d = validate_d(d)?;
    let ctx = context(d)?;
    let which: Option<SeqKind> = which.map(|w| w.parse().map_err(usage)).transpose()?;
    // Each group succeeds if any of its candidate sequences matches.
    let groups: Vec<(String, Vec<SeqKind>)> = match a_number {
        Some(a) => {
            let kinds = which.map(|w| vec![w]).unwrap_or_else(|| SeqKind::BOTH.to_vec());
            vec![(a.to_string(), kinds)]
        }
        None => {
            let cited: Vec<(String, Vec<SeqKind>)> = citations_for(d)
                .into_iter()
                .filter(|(k, _)| which.is_none_or(|w| w == *k))
                .map(|(k, a)| (a.to_string(), vec![k]))
                .collect();
            if cited.is_empty() {
                return Err(usage(format!("no OEIS entry is cited for d={d}; pass --a")));
            }
            cited
        }
    };
    let dir = resolve_cache_dir(cli.cache_dir.as_deref());
    let mut report = Report::new("oeis-check").with_unit(ctx.unit());
    let mut plain = String::new();
    let mut csv = String::from("a_number,which,shift,scale,matched_terms,compared_terms,verdict\n");
    let mut code = EXIT_OK;
    for (a, kinds) in groups {
        let oeis = oeis_fetch(&a, &dir, offline)?;
        let results: Vec<_> = kinds.iter().map(|&k| oeis_match(&ctx, k, &oeis, max_shift)).collect();
        let best = results
            .iter()
            .find(|r| r.verdict == Verdict::Match)
            .unwrap_or(&results[0])
            .clone();
        if best.verdict != Verdict::Match {
            code = EXIT_MISMATCH;
        }
        let verdict = serde_json::to_value(best.verdict).map_err(std::io::Error::other)?;
        let verdict = verdict.as_str().unwrap_or_default().to_string();
        let _ = writeln!(
            plain,
            "{} {} shift={} scale={} matched={}/{} verdict={verdict}",
            best.a_number, best.which, best.shift, best.scale, best.matched_terms, best.compared_terms
        );
        let _ = writeln!(
            csv,
            "{},{},{},{},{},{},{verdict}",
            best.a_number, best.which, best.shift, best.scale, best.matched_terms, best.compared_terms
        );
        report.reports.push(ReportItem::Oeis(best));
    }
    Ok(Output { report, plain, csv: Some(csv), code })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("quadfib").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn fib_plain() {
        let (code, out, _) = run_str(&["fib", "2", "--from", "1", "--to", "6", "--format", "plain"]);
        assert_eq!((code, out.as_str()), (0, "1 2 5 12 29 70\n"));
        let (_, out, _) = run_str(&["fib", "5", "--from", "-3", "--to", "3"]);
        assert_eq!(out, "2 -1 1 0 1 1 2\n");
        let (_, out, _) = run_str(&["lucas", "3", "--from", "0", "--to", "2"]);
        assert_eq!(out, "1/2 1 7/2\n");
    }

    #[test]
    fn kfib_line() {
        let (code, out, _) = run_str(&["kfib", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().next().unwrap(), "d=13 r=1 unit=(3+√13)/2 norm=-1");
        assert_eq!(run_str(&["kfib", "0"]).0, EXIT_USAGE);
    }

    #[test]
    fn verify_exit_codes() {
        let (code, out, _) = run_str(&["verify", "5", "--identity", "T25.ii", "--range", "-20..20"]);
        assert_eq!(code, 0);
        assert!(out.contains("passed"));
        let (code, out, _) = run_str(&["verify", "3", "--identity", "T25.v", "--range", "0..2"]);
        assert_eq!(code, EXIT_MISMATCH);
        assert!(out.contains("FAILED"));
        assert_eq!(run_str(&["verify", "5", "--identity", "nope"]).0, EXIT_USAGE);
    }

    #[test]
    fn usage_errors_are_one_line() {
        for args in [&["fib", "4"][..], &["fib"], &["bogus"], &["gf", "5", "--x", "2/3"]] {
            let (code, out, err) = run_str(args);
            assert_eq!(code, EXIT_USAGE, "{args:?}");
            assert!(out.is_empty());
            assert_eq!(err.lines().count(), 1, "{err}");
        }
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("-20..20").unwrap(), (-20, 20));
        assert_eq!(parse_range("1..=3").unwrap(), (1, 3));
        assert!(parse_range("3..1").is_err());
        assert!(parse_range("x").is_err());
    }
}
