// Bounded-height search for rational points, and moving a found point to
// t = 0 so the constant term becomes a square.
//
//     cargo run --example point_search

use quintic_cubic::{QuarticCurve, Rational};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let r = |s: &str| s.parse::<Rational>();
    let quartic = QuarticCurve::even(r("17/3")?, r("5/3")?, r("5/3")?)?;
    assert!(quartic.constant_is_square().is_none());

    let points = quartic.search_points(20);
    for p in &points {
        println!("{p}  height {}", p.t.height());
    }
    assert!(points.iter().any(|p| p.t == r("7").unwrap() && p.v == r("117").unwrap()));

    let moved = quartic.translate(&r("1")?);
    println!("t = T + 1: {moved}");
    assert_eq!(moved.constant_is_square(), Some(r("3")?));
    Ok(())
}

fn main() {
    run_example().expect("point_search failed");
}
