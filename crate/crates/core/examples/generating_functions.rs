//! Closed-form generating functions against exact partial sums, and the
//! convergence of `F(n+1)/F(n)` to the unit.

use num_traits::Signed;
use quadfib::genfun::{approx_unit, gf_closed, gf_truncated, ratio_error, FixedPointDecimal, GfQuery, Series};
use quadfib::quadfield::rat;
use quadfib::{SeqContext, SeqKind};

fn main() -> quadfib::Result<()> {
    let ctx = SeqContext::for_field(5)?;
    let x = rat(1, 2);
    println!("d = 5, x = {x}, ε ≈ {}", approx_unit(&ctx, 20)?);
    for n in [1, 10, 30, 39, 60] {
        let q = GfQuery::new(&ctx, x.clone(), n)?;
        for s in [Series::Fib, Series::Lucas] {
            let gap = (gf_closed(&ctx, &x, s)? - gf_truncated(&q, s)).abs();
            println!("  {s:<6} N = {n:>2}  closed − partial ≈ {}", FixedPointDecimal::from_rational(&gap, 12)?);
        }
    }

    let ctx = SeqContext::for_field(2)?;
    println!("d = 2, |F(n+1)/F(n) − ε|:");
    for n in [1, 5, 10, 20, 30] {
        println!("  n = {n:>2}  {}", ratio_error(&ctx, SeqKind::Fib, n, 30)?);
    }
    Ok(())
}
