// Turns a rational solution into an integer one with the least μ: quintic
// values are scaled by μ³ and cubic values by μ⁵.
//
//     cargo run --example clear_denominators

use quintic_cubic::{
    clear_denominators, DiophantineEquation, FactorBudget, Model, Parametrization, Rational,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let r = |s: &str| s.parse::<Rational>();
    let model = Model::direct(
        DiophantineEquation::new(r("1")?, r("1")?, vec![r("1")?], vec![r("1")?])?,
        Parametrization { x1: r("1")?, alphas: vec![r("2")?], betas: vec![r("2")?] },
    )?;
    let rational = model.build_solution(&r("11/47")?, &r("2943/2209")?)?;
    println!("rational: {rational}");

    let (integer, factor) = clear_denominators(&rational, &FactorBudget::default())?;
    println!("mu = {} (minimal: {})", factor.mu, factor.minimal);
    println!("integer:  {integer}");
    assert_eq!(factor.mu, 47u32.into());
    assert!(integer.is_verified());
    Ok(())
}

fn main() {
    run_example().expect("clear_denominators failed");
}
