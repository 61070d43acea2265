// Chord-and-tangent arithmetic on y² = x³ + (107/3)x² + (1156/3)x + 3536/3.
//
//     cargo run --example group_law

use quintic_cubic::{CurvePoint, Rational, WeierstrassCurve};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let r = |s: &str| s.parse::<Rational>();
    let e = WeierstrassCurve::short(r("107/3")?, r("1156/3")?, r("3536/3")?);
    let g1 = CurvePoint::affine(r("-44/3")?, r("20/3")?);
    let g2 = CurvePoint::affine(r("-152/9")?, r("140/27")?);

    let doubled = e.add(&g2, &g2)?;
    println!("2G2 = {doubled}");
    assert_eq!(doubled, CurvePoint::affine(r("373/36")?, r("-21721/216")?));

    let sum = e.add(&g1, &g2)?;
    println!("G1 + G2 = {sum}");
    assert_eq!(e.add(&sum, &e.negate(&g2))?, g1);
    assert_eq!(e.add(&g1, &e.negate(&g1))?, CurvePoint::Infinity);

    for n in 1..=4 {
        let p = e.multiply(n, &g1)?;
        let digits = p.coords().map_or(0, |(x, _)| x.height().to_string().len());
        println!("{n}G1: x has {digits} digits");
    }
    Ok(())
}

fn main() {
    run_example().expect("group_law failed");
}
