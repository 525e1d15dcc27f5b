//! Fibonacci and Lucas sequences of Q(√d), including negative indices and
//! sequences taken with respect to other units.

use quadfib::quadfield::validate_d;
use quadfib::sequences::context_with_unit;
use quadfib::unitfinder::UnitSign;
use quadfib::SeqContext;

fn show(label: &str, ctx: &SeqContext, from: i64, to: i64) -> quadfib::Result<()> {
    let terms = ctx.slice(from, to)?;
    let f: Vec<String> = terms.iter().map(|t| t.fib.to_string()).collect();
    let l: Vec<String> = terms.iter().map(|t| t.lucas.to_string()).collect();
    println!("{label}  unit {}  Δ = {}", ctx.unit(), ctx.delta());
    println!("  F({from}..{to}): {}", f.join(" "));
    println!("  L({from}..{to}): {}", l.join(" "));
    Ok(())
}

fn main() -> quadfib::Result<()> {
    for d in [2, 3, 5, 6, 13] {
        show(&format!("d = {d}"), &SeqContext::for_field(d)?, 1, 8)?;
    }
    show("d = 3, both directions", &SeqContext::for_field(3)?, -4, 4)?;

    // Four independent routes give the same term.
    let ctx = SeqContext::for_field(94)?;
    let n = 40;
    println!("d = 94, F({n}):");
    println!("  recurrence {}", ctx.fib(n));
    println!("  power      {}", ctx.fib_binet(n));
    println!("  binomial   {}", ctx.fib_binomial(n)?);

    let d5 = validate_d(5)?;
    show("d = 5 with η = 1/ε", &context_with_unit(d5, UnitSign::Plus, -1)?, 1, 8)?;
    show("d = 5 with −ε²", &context_with_unit(d5, UnitSign::Minus, 2)?, 1, 8)?;
    Ok(())
}
