//! Birational correspondence between v² = au⁴ + bu³ + cu² + du + q² and
//! the long Weierstrass cubic y² + a₁xy + a₃y = x³ + a₂x² + a₄x + a₆ with
//!
//! ```text
//! a₁ = d/q,  a₂ = c − d²/(4q²),  a₃ = 2qb,  a₄ = −4q²a,  a₆ = a₂a₄
//! ```
//!
//! (u, v) = (0, q) goes to the point at infinity and (0, −q) to
//! (−a₂, a₁a₂ − a₃).

use serde::Serialize;
use thiserror::Error;

use crate::arith::Rational;
use crate::quartic::{QuarticCurve, QuarticPoint};
use crate::weierstrass::{CurvePoint, WeierstrassCurve};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BridgeError {
    #[error("constant term {0} of the quartic is not a rational square")]
    ConstantNotSquare(Rational),
    #[error("constant term of the quartic is zero")]
    ZeroConstant,
    #[error("the associated cubic is singular")]
    SingularCubic(WeierstrassCurve),
    #[error("point {0} is not on the quartic")]
    NotOnQuartic(QuarticPoint),
    #[error("point {0} is not on the cubic")]
    NotOnCubic(CurvePoint),
    #[error("point {0} has y = 0 and no quartic preimage formula")]
    Unmappable(CurvePoint),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuarticCubicBridge {
    quartic: QuarticCurve,
    q: Rational,
    cubic: WeierstrassCurve,
}

impl QuarticCubicBridge {
    /// Uses the positive square root q of the constant term.
    pub fn new(quartic: &QuarticCurve) -> Result<Self, BridgeError> {
        let q = quartic
            .constant_is_square()
            .ok_or_else(|| BridgeError::ConstantNotSquare(quartic.coeff0().clone()))?;
        if q.is_zero() {
            return Err(BridgeError::ZeroConstant);
        }
        let cubic = Self::cubic_for(quartic, &q);
        if !cubic.is_nonsingular() {
            return Err(BridgeError::SingularCubic(cubic));
        }
        Ok(QuarticCubicBridge { quartic: quartic.clone(), q, cubic })
    }

    fn cubic_for(quartic: &QuarticCurve, q: &Rational) -> WeierstrassCurve {
        let [a, b, c, d, _] = quartic.coefficients();
        let q2 = q.square();
        let a1 = d / q;
        let a2 = c - d.square() / (Rational::from(4) * &q2);
        let a3 = Rational::from(2) * q * b;
        let a4 = -(Rational::from(4) * &q2 * a);
        let a6 = &a2 * &a4;
        WeierstrassCurve::new(a1, a2, a3, a4, a6)
    }

    pub fn quartic(&self) -> &QuarticCurve {
        &self.quartic
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn cubic(&self) -> &WeierstrassCurve {
        &self.cubic
    }

    /// Image of (0, −q).
    pub fn special_point(&self) -> CurvePoint {
        let e = &self.cubic;
        CurvePoint::affine(-&e.a2, &e.a1 * &e.a2 - &e.a3)
    }

    pub fn to_cubic(&self, p: &QuarticPoint) -> Result<CurvePoint, BridgeError> {
        if !self.quartic.contains(p) {
            return Err(BridgeError::NotOnQuartic(p.clone()));
        }
        let QuarticPoint { t: u, v } = p;
        if u.is_zero() {
            // on the curve, so v = ±q
            return Ok(if *v == self.q { CurvePoint::Infinity } else { self.special_point() });
        }
        let [_, _, c, d, _] = self.quartic.coefficients();
        let q = &self.q;
        let two_q = Rational::from(2) * q;
        let u2 = u.square();
        let x = (&two_q * (v + q) + d * u) / &u2;
        let y = (Rational::from(4) * q.square() * (v + q) + &two_q * (d * u + c * &u2)
            - d.square() * &u2 / &two_q)
            / (&u2 * u);
        Ok(CurvePoint::affine(x, y))
    }

    pub fn from_cubic(&self, p: &CurvePoint) -> Result<QuarticPoint, BridgeError> {
        if !self.cubic.contains(p) {
            return Err(BridgeError::NotOnCubic(p.clone()));
        }
        let (x, y) = match p.coords() {
            None => return Ok(QuarticPoint::new(Rational::zero(), self.q.clone())),
            Some(xy) => xy,
        };
        if *p == self.special_point() {
            return Ok(QuarticPoint::new(Rational::zero(), -&self.q));
        }
        if y.is_zero() {
            return Err(BridgeError::Unmappable(p.clone()));
        }
        let [_, _, c, d, _] = self.quartic.coefficients();
        let two_q = Rational::from(2) * &self.q;
        let u = (&two_q * (x + c) - d.square() / &two_q) / y;
        let v = -&self.q + &u * (&u * x - d) / &two_q;
        Ok(QuarticPoint::new(u, v))
    }
}
