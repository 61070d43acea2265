// Reduces both equation shapes to their quartic v² = At⁴ + Ct² + E.
//
//     cargo run --example derive_quartic

use quintic_cubic::{
    DiophantineEquation, Model, PairedEquation, PairedParametrization, Parametrization, Rational,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let r = |s: &str| s.parse::<Rational>();

    // X₁⁵ + X₂⁵ + X₃⁵ = Y₁³ + Y₂³ + Y₃³ with X₁,₂ = t ± 1, X₃ = 2t, Y₃ = 2t
    let direct = Model::direct(
        DiophantineEquation::new(r("1")?, r("1")?, vec![r("1")?], vec![r("1")?])?,
        Parametrization { x1: r("1")?, alphas: vec![r("2")?], betas: vec![r("2")?] },
    )?;
    let quartic = direct.quartic()?;
    println!("direct: {quartic}");
    assert_eq!(quartic.coeff4(), &r("17/3")?);
    assert_eq!(quartic.constant_is_square(), None);

    // 3(X₁⁵ + … + X₄⁵) = 17(Y₁³ + … + Y₄³) with pairs t ± 1, t ± 2 and t ± v, t ± 1
    let paired = Model::paired(
        PairedEquation::new(vec![r("3")?, r("3")?], vec![r("17")?, r("17")?])?,
        PairedParametrization { xs: vec![r("1")?, r("2")?], ys: vec![r("1")?] },
    )?;
    let quartic = paired.quartic()?;
    println!("paired: {quartic}");
    assert_eq!(quartic.constant_is_square(), Some(r("2")?));

    // any point on the quartic gives a rational solution
    let s = direct.build_solution(&r("7")?, &r("-117")?)?;
    println!("(7, -117) gives {s}");
    Ok(())
}

fn main() {
    run_example().expect("derive_quartic failed");
}
