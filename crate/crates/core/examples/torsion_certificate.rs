// A point has infinite order iff none of its first 12 multiples is the
// identity (no rational torsion point has larger order).
//
//     cargo run --example torsion_certificate

use quintic_cubic::{CurvePoint, Rational, WeierstrassCurve};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let r = |s: &str| s.parse::<Rational>();

    let e = WeierstrassCurve::short(r("0")?, r("0")?, r("1")?);
    let t = CurvePoint::affine(r("2")?, r("3")?);
    println!("{t} on {e}: order {:?}", e.torsion_order(&t)?);
    assert_eq!(e.torsion_order(&t)?, Some(6));

    let e = WeierstrassCurve::short(r("116/51")?, r("-32/17")?, r("-3712/867")?);
    let p = CurvePoint::affine(r("4")?, r("160/17")?);
    println!("{p} on {e}: infinite order = {}", e.is_infinite_order(&p)?);
    assert!(e.is_infinite_order(&p)?);
    Ok(())
}

fn main() {
    run_example().expect("torsion_certificate failed");
}
