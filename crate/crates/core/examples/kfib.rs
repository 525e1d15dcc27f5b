//! Every k-Fibonacci sequence is the Fibonacci sequence of some field with
//! respect to the norm −1 unit `(k + r√d)/2`.

use quadfib::sequences::kfib_map;

fn main() {
    for k in 1..=12 {
        let m = kfib_map(k);
        let ctx = m.context();
        let terms: Vec<String> = (1..=7).map(|n| ctx.fib(n).to_string()).collect();
        println!("k = {k:>2}  d = {:>3}  r = {}  unit {:<14} {}", m.d, m.r, m.unit.to_string(), terms.join(" "));
    }
}
