// Maps a quartic with square constant term to a Weierstrass cubic and back,
// then completes the square to reach y² = x³ + Fx² + Gx + H.
//
//     cargo run --example bridge_to_weierstrass

use quintic_cubic::{CurvePoint, QuarticCubicBridge, QuarticCurve, QuarticPoint, Rational};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let r = |s: &str| s.parse::<Rational>();
    let quartic = QuarticCurve::new(r("17/3")?, r("68/3")?, r("107/3")?, r("26")?, r("9")?)?;
    let bridge = QuarticCubicBridge::new(&quartic)?;
    println!("quartic: {quartic}");
    println!("cubic:   {}", bridge.cubic());

    let p = QuarticPoint::new(r("6")?, r("117")?);
    let image = bridge.to_cubic(&p)?;
    println!("{p} -> {image}");
    assert_eq!(bridge.from_cubic(&image)?, p);

    let completion = bridge.cubic().complete_square();
    println!("completed: {}", completion.target);
    let g1 = CurvePoint::affine(r("-44/3")?, r("20/3")?);
    assert!(completion.target.contains(&g1));
    let back = bridge.from_cubic(&completion.backward(&g1))?;
    println!("G1 = {g1} -> {back} (add 1 to t to undo the shift)");
    assert_eq!(back, QuarticPoint::new(r("6")?, r("-117")?));
    Ok(())
}

fn main() {
    run_example().expect("bridge_to_weierstrass failed");
}
