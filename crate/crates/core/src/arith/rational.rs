use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ArithmeticError;

/// Exact rational number, always stored reduced with a positive denominator.
///
/// Equality is structural because of the canonical form, so two rationals are
/// equal iff their numerators and denominators are.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den`. Panics if `den` is zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        let den = den.into();
        assert!(!den.is_zero(), "rational with zero denominator");
        Rational(BigRational::new(num.into(), den))
    }

    /// Shorthand for small literals, mostly useful in tests and fixtures.
    pub fn ratio(num: i64, den: i64) -> Self {
        Rational::new(num, den)
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rational(num_traits::Pow::pow(&self.0, exp))
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    /// Integer value when the denominator is 1.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.to_integer())
    }

    /// Height max(|p|, q) of the reduced fraction p/q.
    pub fn height(&self) -> BigInt {
        let p = self.numer().abs();
        let q = self.denom().clone();
        p.max(q)
    }

    pub fn into_inner(self) -> BigRational {
        self.0
    }

    /// Lowest common denominator of a collection of rationals.
    pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
        values
            .into_iter()
            .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl From<&BigInt> for Rational {
    fn from(n: &BigInt) -> Self {
        Rational::from_integer(n.clone())
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

/// Writes `c₁m₁ + c₂m₂ + …`, skipping zero terms and unit coefficients.
pub(crate) fn write_polynomial(f: &mut fmt::Formatter<'_>, terms: &[(&Rational, &str)]) -> fmt::Result {
    let mut first = true;
    for (c, m) in terms.iter().filter(|(c, _)| !c.is_zero()) {
        let sign = if c.is_negative() { "-" } else { "+" };
        match (first, sign) {
            (true, "-") => write!(f, "-")?,
            (true, _) => {}
            (false, s) => write!(f, " {s} ")?,
        }
        let mag = c.abs();
        if m.is_empty() {
            write!(f, "{mag}")?;
        } else if mag == 1 {
            write!(f, "{m}")?;
        } else if !mag.is_integer() {
            write!(f, "({mag}){m}")?;
        } else {
            write!(f, "{mag}{m}")?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ArithmeticError;

    /// Accepts `p` or `p/q` with `q > 0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ArithmeticError::Parse(s.to_string());
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt, ArithmeticError> {
            let t = t.trim();
            if t.is_empty() {
                return Err(bad());
            }
            t.parse::<BigInt>().map_err(|_| bad())
        };
        match s.split_once('/') {
            None => Ok(Rational::from_integer(parse_int(s)?)),
            Some((n, d)) => {
                let d_trim = d.trim();
                if d_trim.starts_with('-') || d_trim.starts_with('+') {
                    return Err(bad());
                }
                let num = parse_int(n)?;
                let den = parse_int(d)?;
                if !den.is_positive() {
                    return Err(bad());
                }
                Ok(Rational::new(num, den))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct RationalVisitor;

        impl<'de> Visitor<'de> for RationalVisitor {
            type Value = Rational;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational written as \"p\" or \"p/q\", or an integer")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Rational, E> {
                v.parse().map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rational, E> {
                Ok(Rational::from_integer(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rational, E> {
                Ok(Rational::from_integer(v))
            }
        }

        deserializer.deserialize_any(RationalVisitor)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.is_integer() && *self.numer() == BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&Rational::from(*other)))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($tr::$method(self.0, rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational($tr::$method(self.0, &rhs.0))
            }
        }
        impl<'a> $tr<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($tr::$method(&self.0, rhs.0))
            }
        }
        impl<'a, 'b> $tr<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational($tr::$method(&self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stored_reduced_with_positive_denominator() {
        let r = Rational::new(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(r, Rational::ratio(-3, 2));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("25/9".parse::<Rational>().unwrap(), Rational::ratio(25, 9));
        assert_eq!("-10336/3".parse::<Rational>().unwrap().to_string(), "-10336/3");
        assert_eq!("4/2".parse::<Rational>().unwrap().to_string(), "2");
        assert_eq!(" 7 ".parse::<Rational>().unwrap(), Rational::from(7));
        for bad in ["", "1/0", "1/-3", "a/2", "3/", "/3", "1.5"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn serde_string_and_integer_forms() {
        let r: Rational = serde_json::from_str("\"-21721/216\"").unwrap();
        assert_eq!(r, Rational::ratio(-21721, 216));
        let r: Rational = serde_json::from_str("17").unwrap();
        assert_eq!(r, Rational::from(17));
        assert_eq!(serde_json::to_string(&Rational::ratio(373, 36)).unwrap(), "\"373/36\"");
    }

    #[test]
    fn sum_two_ways() {
        let (a, b, c, d) = (
            Rational::ratio(3, 14),
            Rational::ratio(-5, 21),
            Rational::ratio(7, 15),
            Rational::ratio(11, 35),
        );
        let direct = &a + &b + &c + &d;
        let lcd = Rational::common_denominator([&a, &b, &c, &d]);
        let scaled: BigInt = [&a, &b, &c, &d]
            .iter()
            .map(|r| r.numer() * (&lcd / r.denom()))
            .sum();
        assert_eq!(direct, Rational::new(scaled, lcd));
    }

    #[test]
    fn height_of_fraction() {
        assert_eq!(Rational::ratio(-44, 3).height(), BigInt::from(44));
        assert_eq!(Rational::ratio(11, 47).height(), BigInt::from(47));
    }
}
