// Independent exact checks: evaluate a printed identity, and re-verify an
// integer tuple against its equation.
//
//     cargo run --example verify_identity

use num_bigint::BigInt;
use quintic_cubic::identity::evaluate_identity;
use quintic_cubic::{DiophantineEquation, Equation, Rational, Solution};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let line = "128122^5 + (-79524)^5 + 48598^5 = 359227580^3 + (-251874598)^3 + 107352982^3";
    let (lhs, rhs) = evaluate_identity(line)?;
    println!("{line}\n  both sides: {lhs}");
    assert_eq!(lhs, rhs);

    let one = Rational::from(1);
    let eq = Equation::Direct(DiophantineEquation::new(one.clone(), one.clone(), vec![one.clone()], vec![one])?);
    let ints = |xs: &[i64]| xs.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    let good = Solution::checked(ints(&[8, 6, 14]), ints(&[-110, 124, 14]), eq.clone());
    let bad = Solution::checked(ints(&[8, 6, 14]), ints(&[-110, 124, 15]), eq);
    println!("{good}: {}", good.is_verified());
    println!("{bad}: {}", bad.is_verified());
    assert!(good.is_verified() && !bad.is_verified());
    Ok(())
}

fn main() {
    run_example().expect("verify_identity failed");
}
