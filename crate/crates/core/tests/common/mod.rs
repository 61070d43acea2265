#![allow(dead_code)]

use proptest::prelude::*;
use quintic_cubic::Rational;

pub const CASES: u32 = 256;

pub fn config() -> ProptestConfig {
    ProptestConfig { cases: CASES, ..ProptestConfig::default() }
}

pub fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

/// p/q with |p| ≤ num, 1 ≤ q ≤ den.
pub fn rational(num: i64, den: i64) -> impl Strategy<Value = Rational> {
    (-num..=num, 1..=den).prop_map(|(p, q)| Rational::ratio(p, q))
}

pub fn nonzero_rational(num: i64, den: i64) -> impl Strategy<Value = Rational> {
    rational(num, den).prop_filter("nonzero", |x| !x.is_zero())
}
