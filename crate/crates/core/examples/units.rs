//! Fundamental units of the first real quadratic fields, with the continued
//! fraction period that produces each one.

use quadfib::quadfield::SquarefreeD;
use quadfib::unitfinder::{continued_fraction, fundamental_unit, Seed};

fn main() -> quadfib::Result<()> {
    println!("{:>4}  {:>3}  {:<28} {}", "d", "Δ", "ε", "period");
    for d in SquarefreeD::range(2, 50) {
        let unit = fundamental_unit(d)?;
        let cf = continued_fraction(d, Seed::for_field(d))?;
        let period: Vec<String> = (0..cf.period_length()).map(|k| cf.quotient(k + 1).to_string()).collect();
        println!("{:>4}  {:>3}  {:<28} [{}; {}]", d, unit.delta(), unit.to_string(), cf.quotient(0), period.join(","));
    }
    Ok(())
}
