//! Quartic models v² = a·u⁴ + b·u³ + c·u² + d·u + e.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{is_square, perfect_sqrt, sqrt_exact, write_polynomial, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuarticError {
    #[error("leading coefficient is zero, not a quartic")]
    NotQuartic,
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuarticCurve {
    coeff4: Rational,
    coeff3: Rational,
    coeff2: Rational,
    coeff1: Rational,
    coeff0: Rational,
}

/// A rational point (t, v) of a quartic model.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuarticPoint {
    pub t: Rational,
    pub v: Rational,
}

impl QuarticPoint {
    pub fn new(t: Rational, v: Rational) -> Self {
        QuarticPoint { t, v }
    }

    pub fn negate_v(&self) -> Self {
        QuarticPoint { t: self.t.clone(), v: -&self.v }
    }

    /// Points with v = 0 are ramification points of the double cover; they
    /// land on 2-torsion and cannot seed an infinite family on their own.
    pub fn is_ramification(&self) -> bool {
        self.v.is_zero()
    }
}

impl fmt::Display for QuarticPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.t, self.v)
    }
}

impl QuarticCurve {
    /// Coefficients from the leading one down to the constant term.
    pub fn new(
        coeff4: Rational,
        coeff3: Rational,
        coeff2: Rational,
        coeff1: Rational,
        coeff0: Rational,
    ) -> Result<Self, QuarticError> {
        if coeff4.is_zero() {
            return Err(QuarticError::NotQuartic);
        }
        Ok(QuarticCurve { coeff4, coeff3, coeff2, coeff1, coeff0 })
    }

    /// Even quartic A·t⁴ + C·t² + E.
    pub fn even(a: Rational, c: Rational, e: Rational) -> Result<Self, QuarticError> {
        QuarticCurve::new(a, Rational::zero(), c, Rational::zero(), e)
    }

    pub fn coeff4(&self) -> &Rational {
        &self.coeff4
    }
    pub fn coeff3(&self) -> &Rational {
        &self.coeff3
    }
    pub fn coeff2(&self) -> &Rational {
        &self.coeff2
    }
    pub fn coeff1(&self) -> &Rational {
        &self.coeff1
    }
    pub fn coeff0(&self) -> &Rational {
        &self.coeff0
    }

    /// `[coeff4, coeff3, coeff2, coeff1, coeff0]`.
    pub fn coefficients(&self) -> [&Rational; 5] {
        [&self.coeff4, &self.coeff3, &self.coeff2, &self.coeff1, &self.coeff0]
    }

    pub fn evaluate(&self, t: &Rational) -> Rational {
        // Horner
        let mut acc = self.coeff4.clone();
        for c in [&self.coeff3, &self.coeff2, &self.coeff1, &self.coeff0] {
            acc = acc * t + c;
        }
        acc
    }

    pub fn contains(&self, p: &QuarticPoint) -> bool {
        p.v.square() == self.evaluate(&p.t)
    }

    /// The curve C'(T) = C(T + t0). Points map by (t, v) ↦ (t − t0, v).
    pub fn translate(&self, t0: &Rational) -> QuarticCurve {
        let (a, b, c, d) = (&self.coeff4, &self.coeff3, &self.coeff2, &self.coeff1);
        let t2 = t0.square();
        let t3 = &t2 * t0;
        let four = Rational::from(4);
        let three = Rational::from(3);
        let two = Rational::from(2);
        QuarticCurve {
            coeff4: a.clone(),
            coeff3: &four * a * t0 + b,
            coeff2: Rational::from(6) * a * &t2 + &three * b * t0 + c,
            coeff1: &four * a * &t3 + &three * b * &t2 + &two * c * t0 + d,
            coeff0: self.evaluate(t0),
        }
    }

    /// q ≥ 0 with q² equal to the constant term, if there is one.
    pub fn constant_is_square(&self) -> Option<Rational> {
        is_square(&self.coeff0).then(|| sqrt_exact(&self.coeff0).expect("checked square"))
    }

    /// All (t, v) with t = p/q in lowest terms, |p| ≤ `height_bound`,
    /// 1 ≤ q ≤ `height_bound`, and v ≥ 0 rational, sorted by (q, p).
    pub fn search_points(&self, height_bound: u64) -> Vec<QuarticPoint> {
        let form = IntegerForm::new(self);
        let h = height_bound as i64;
        let mut points = Vec::new();
        for q in 1..=h {
            let qb = BigInt::from(q);
            for p in -h..=h {
                if p.gcd(&q) != 1 {
                    continue;
                }
                if let Some(v) = form.square_value(&BigInt::from(p), &qb) {
                    points.push(QuarticPoint::new(Rational::new(p, q), v));
                }
            }
        }
        points
    }
}

/// The quartic scaled to integer coefficients, L·(a, b, c, d, e), for
/// testing f(p/q) = F(p, q) / (L·q⁴) for squareness with integers only.
struct IntegerForm {
    scale: BigInt,
    coeffs: [BigInt; 5],
}

impl IntegerForm {
    fn new(curve: &QuarticCurve) -> Self {
        let scale = Rational::common_denominator(curve.coefficients());
        let coeffs = curve
            .coefficients()
            .map(|c| (c * Rational::from_integer(scale.clone())).to_integer().expect("cleared"));
        IntegerForm { scale, coeffs }
    }

    /// v ≥ 0 with v² = f(p/q), when f(p/q) is a rational square.
    fn square_value(&self, p: &BigInt, q: &BigInt) -> Option<Rational> {
        // F(p, q) = Σ cᵢ p^(4-i) q^i
        let mut value = BigInt::zero();
        let mut p_pow = BigInt::one();
        let mut powers_p = Vec::with_capacity(5);
        for _ in 0..5 {
            powers_p.push(p_pow.clone());
            p_pow *= p;
        }
        let mut q_pow = BigInt::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            value += c * &powers_p[4 - i] * &q_pow;
            q_pow *= q;
        }
        if value.is_negative() {
            return None;
        }
        // f = F·L / (L·q²)²
        let root = perfect_sqrt(&(&value * &self.scale))?;
        Some(Rational::new(root, &self.scale * q * q))
    }
}

impl fmt::Debug for QuarticCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QuarticCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v^2 = ")?;
        write_polynomial(
            f,
            &[
                (&self.coeff4, "t^4"),
                (&self.coeff3, "t^3"),
                (&self.coeff2, "t^2"),
                (&self.coeff1, "t"),
                (&self.coeff0, ""),
            ],
        )
    }
}
