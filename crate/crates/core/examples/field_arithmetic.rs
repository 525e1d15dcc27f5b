//! Exact arithmetic in Q(√d): norms, inverses, exact comparisons and the
//! 2×2 matrix model.

use quadfib::genfun::approx_sqrt;
use quadfib::quadfield::{rat, validate_d, MatrixRep, QuadElement};

fn main() -> quadfib::Result<()> {
    let d = validate_d(7)?;
    let x = QuadElement::new(d, rat(3, 2), rat(-2, 3));
    let y = QuadElement::from_ints(d, 8, 3);
    println!("x = {x}, y = {y}");
    println!("x·y = {}", &x * &y);
    println!("N(x) = {}, Tr(x) = {}, 1/x = {}", x.norm(), x.trace(), x.inverse()?);
    println!("y is a unit: norm {}", y.norm());
    println!("y^-3 = {}", y.pow(-3)?);
    // Signs are decided without floating point.
    println!("sign of {x} = {}, ⌊x⌋ = {}", x.signum(), x.floor_scaled(&1.into()));
    let m = &MatrixRep::of(&x) * &MatrixRep::of(&y);
    println!("matrix product maps back to {}", m.to_element(d).expect("of the form [[u, vd], [v, u]]"));
    println!("√7 ≈ {}", approx_sqrt(7, 40)?);
    Ok(())
}
