//! Long Weierstrass curves y² + a₁xy + a₃y = x³ + a₂x² + a₄x + a₆ over ℚ.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{write_polynomial, Rational};

/// Mazur: a rational torsion point has order at most 12.
pub const MAZUR_BOUND: u32 = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("point {0} is not on the curve")]
    PointNotOnCurve(CurvePoint),
    #[error("curve is singular (discriminant 0)")]
    Singular,
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeierstrassCurve {
    pub a1: Rational,
    pub a2: Rational,
    pub a3: Rational,
    pub a4: Rational,
    pub a6: Rational,
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CurvePoint {
    Infinity,
    Affine { x: Rational, y: Rational },
}

impl CurvePoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        CurvePoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn coords(&self) -> Option<(&Rational, &Rational)> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { x, y } => Some((x, y)),
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => f.write_str("∞"),
            CurvePoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl fmt::Debug for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl WeierstrassCurve {
    /// No singularity check; see [`WeierstrassCurve::elliptic`].
    pub fn new(a1: Rational, a2: Rational, a3: Rational, a4: Rational, a6: Rational) -> Self {
        WeierstrassCurve { a1, a2, a3, a4, a6 }
    }

    /// Builds the curve and rejects it if singular.
    pub fn elliptic(
        a1: Rational,
        a2: Rational,
        a3: Rational,
        a4: Rational,
        a6: Rational,
    ) -> Result<Self, CurveError> {
        let e = WeierstrassCurve::new(a1, a2, a3, a4, a6);
        if e.discriminant().is_zero() {
            Err(CurveError::Singular)
        } else {
            Ok(e)
        }
    }

    /// Y² = X³ + F·X² + G·X + H.
    pub fn short(f: Rational, g: Rational, h: Rational) -> Self {
        WeierstrassCurve::new(Rational::zero(), f, Rational::zero(), g, h)
    }

    pub fn coefficients(&self) -> [&Rational; 5] {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6]
    }

    pub fn b_invariants(&self) -> [Rational; 4] {
        let Self { a1, a2, a3, a4, a6 } = self;
        let b2 = a1.square() + Rational::from(4) * a2;
        let b4 = Rational::from(2) * a4 + a1 * a3;
        let b6 = a3.square() + Rational::from(4) * a6;
        let b8 = a1.square() * a6 + Rational::from(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3.square()
            - a4.square();
        [b2, b4, b6, b8]
    }

    pub fn discriminant(&self) -> Rational {
        let [b2, b4, b6, b8] = self.b_invariants();
        -(b2.square() * &b8) - Rational::from(8) * b4.pow(3) - Rational::from(27) * b6.square()
            + Rational::from(9) * &b2 * &b4 * &b6
    }

    pub fn is_nonsingular(&self) -> bool {
        !self.discriminant().is_zero()
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => {
                let lhs = y.square() + &self.a1 * x * y + &self.a3 * y;
                let rhs = ((x + &self.a2) * x + &self.a4) * x + &self.a6;
                lhs == rhs
            }
        }
    }

    fn check(&self, p: &CurvePoint) -> Result<(), CurveError> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(CurveError::PointNotOnCurve(p.clone()))
        }
    }

    /// −(x, y) = (x, −y − a₁x − a₃).
    pub fn negate(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => {
                CurvePoint::affine(x.clone(), -y - &self.a1 * x - &self.a3)
            }
        }
    }

    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint, CurveError> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    fn add_unchecked(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => {
                (x1, y1, x2, y2)
            }
        };
        let Self { a1, a2, a3, a4, a6 } = self;
        let (slope, intercept) = if x1 != x2 {
            let dx = x2 - x1;
            ((y2 - y1) / &dx, (y1 * x2 - y2 * x1) / &dx)
        } else {
            // same x and different y: Q = −P
            if y1 != y2 {
                return CurvePoint::Infinity;
            }
            let denom = Rational::from(2) * y1 + a1 * x1 + a3;
            if denom.is_zero() {
                return CurvePoint::Infinity;
            }
            let x1sq = x1.square();
            let slope = (Rational::from(3) * &x1sq + Rational::from(2) * a2 * x1 + a4 - a1 * y1) / &denom;
            let intercept =
                (-(&x1sq * x1) + a4 * x1 + Rational::from(2) * a6 - a3 * y1) / &denom;
            (slope, intercept)
        };
        let x3 = slope.square() + a1 * &slope - a2 - x1 - x2;
        let y3 = -((&slope + a1) * &x3) - intercept - a3;
        CurvePoint::affine(x3, y3)
    }

    /// n·P by double-and-add; negative n multiplies −P.
    pub fn multiply(&self, n: i64, p: &CurvePoint) -> Result<CurvePoint, CurveError> {
        self.check(p)?;
        Ok(self.multiply_unchecked(n, p))
    }

    fn multiply_unchecked(&self, n: i64, p: &CurvePoint) -> CurvePoint {
        let mut base = if n < 0 { self.negate(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.add_unchecked(&base, &base);
            }
        }
        acc
    }

    /// Order of P when it is torsion, found by stepping P, 2P, …, 12P.
    pub fn torsion_order(&self, p: &CurvePoint) -> Result<Option<u32>, CurveError> {
        self.check(p)?;
        let mut acc = p.clone();
        for n in 1..=MAZUR_BOUND {
            if acc.is_infinity() {
                return Ok(Some(n));
            }
            if n < MAZUR_BOUND {
                acc = self.add_unchecked(&acc, p);
            }
        }
        Ok(None)
    }

    /// True iff nP ≠ ∞ for n = 1..=12, which by Mazur's bound certifies that
    /// P has infinite order.
    pub fn is_infinite_order(&self, p: &CurvePoint) -> Result<bool, CurveError> {
        Ok(self.torsion_order(p)?.is_none())
    }

    /// Completes the square in y, returning the a₁ = a₃ = 0 model together
    /// with the isomorphism (x, y) ↦ (x, y + (a₁x + a₃)/2).
    pub fn complete_square(&self) -> SquareCompletion {
        let half = Rational::ratio(1, 2);
        let quarter = Rational::ratio(1, 4);
        let target = WeierstrassCurve::short(
            &self.a2 + &quarter * self.a1.square(),
            &self.a4 + &half * &self.a1 * &self.a3,
            &self.a6 + &quarter * self.a3.square(),
        );
        SquareCompletion { source: self.clone(), target }
    }
}

/// The isomorphism produced by [`WeierstrassCurve::complete_square`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareCompletion {
    pub source: WeierstrassCurve,
    pub target: WeierstrassCurve,
}

impl SquareCompletion {
    fn shift(&self, x: &Rational) -> Rational {
        (&self.source.a1 * x + &self.source.a3) / Rational::from(2)
    }

    pub fn forward(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::affine(x.clone(), y + self.shift(x)),
        }
    }

    pub fn backward(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::affine(x.clone(), y - self.shift(x)),
        }
    }
}

impl fmt::Display for WeierstrassCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_polynomial(f, &[(&Rational::one(), "y^2"), (&self.a1, "xy"), (&self.a3, "y")])?;
        write!(f, " = ")?;
        write_polynomial(
            f,
            &[(&Rational::one(), "x^3"), (&self.a2, "x^2"), (&self.a4, "x"), (&self.a6, "")],
        )
    }
}

impl fmt::Debug for WeierstrassCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}, {}, {}]", self.a1, self.a2, self.a3, self.a4, self.a6)
    }
}
