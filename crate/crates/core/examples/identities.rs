//! Runs the identity catalog over a few fields and prints any counterexample.

use quadfib::identities::{verify_fields, IdentityId};
use quadfib::quadfield::SquarefreeD;

fn main() -> quadfib::Result<()> {
    for id in IdentityId::ALL {
        println!("{:<11} {}", id.tag(), id.statement());
    }
    println!();

    let fields: Vec<SquarefreeD> = SquarefreeD::range(2, 15).collect();
    for r in verify_fields(&fields, (-10, 10))? {
        if r.passed {
            continue;
        }
        let c = &r.counterexamples[0];
        println!(
            "{} fails for d = {} ({} of {} index tuples), e.g. at {:?}: {} vs {}",
            r.identity,
            r.d,
            r.counterexamples.len(),
            r.checked,
            c.indices,
            c.lhs,
            c.rhs
        );
    }
    Ok(())
}
