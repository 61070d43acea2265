//! The target equations, their parametrizations by a curve point (t, v), and
//! exact solution tuples.
//!
//! Two families are supported:
//!
//! * direct: `a(X'₁⁵ + X'₂⁵) + Σ aᵢXᵢ⁵ = b(Y'₁³ + Y'₂³) + Σ bᵢYᵢ³`, parametrized by
//!   `X'₁ = t + x₁, X'₂ = t − x₁, Xᵢ = αᵢt, Y'₁ = t + v, Y'₂ = t − v, Yᵢ = βᵢt`;
//! * paired: `Σ Aᵢ(Zᵢ⁵ + Z'ᵢ₊₁⁵) = Σ Bᵢ(Wᵢ³ + W'ᵢ₊₁³)`, parametrized by
//!   `Zᵢ, Z'ᵢ₊₁ = t ± xᵢ` and `Wᵢ, W'ᵢ₊₁ = t ± yᵢ` with `y₀ = v`.
//!
//! Substituting and dividing by the common factor t turns either equation into
//! an even quartic v² = A·t⁴ + C·t² + E.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{denominator_of, scaling_factor, to_bigint, FactorBudget, Rational, ScalingFactor};
use crate::quartic::{QuarticCurve, QuarticError, QuarticPoint};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EquationError {
    #[error("coefficient {0} must be nonzero")]
    ZeroCoefficient(&'static str),
    #[error("{0} must not be empty")]
    Empty(&'static str),
    #[error("{what}: expected {expected} values, got {got}")]
    Arity { what: &'static str, expected: usize, got: usize },
    #[error("t = 0 gives only the trivial solution")]
    DegenerateParameter,
    #[error("point {0} is not on the derived quartic")]
    PointNotOnCurve(QuarticPoint),
    #[error("scale factor must be nonzero")]
    ZeroScale,
    #[error("solution does not satisfy its equation")]
    Unverified,
    #[error("derived quartic is degenerate: {0}")]
    Quartic(#[from] QuarticError),
}

fn arity(what: &'static str, expected: usize, got: usize) -> Result<(), EquationError> {
    if expected == got {
        Ok(())
    } else {
        Err(EquationError::Arity { what, expected, got })
    }
}

/// `a(X'₁⁵ + X'₂⁵) + Σ aᵢXᵢ⁵ = b(Y'₁³ + Y'₂³) + Σ bᵢYᵢ³`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiophantineEquation {
    pub a: Rational,
    pub b: Rational,
    #[serde(default)]
    pub quintic_coeffs: Vec<Rational>,
    #[serde(default)]
    pub cubic_coeffs: Vec<Rational>,
}

impl DiophantineEquation {
    pub fn new(
        a: Rational,
        b: Rational,
        quintic_coeffs: Vec<Rational>,
        cubic_coeffs: Vec<Rational>,
    ) -> Result<Self, EquationError> {
        let eq = DiophantineEquation { a, b, quintic_coeffs, cubic_coeffs };
        eq.validate()?;
        Ok(eq)
    }

    pub fn validate(&self) -> Result<(), EquationError> {
        if self.a.is_zero() {
            return Err(EquationError::ZeroCoefficient("a"));
        }
        if self.b.is_zero() {
            return Err(EquationError::ZeroCoefficient("b"));
        }
        Ok(())
    }

    pub fn quintic_arity(&self) -> usize {
        2 + self.quintic_coeffs.len()
    }

    pub fn cubic_arity(&self) -> usize {
        2 + self.cubic_coeffs.len()
    }
}

/// x₁, αᵢ and βᵢ of the direct parametrization.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Parametrization {
    pub x1: Rational,
    #[serde(default)]
    pub alphas: Vec<Rational>,
    #[serde(default)]
    pub betas: Vec<Rational>,
}

/// `Σ Aᵢ(Zᵢ⁵ + Z'ᵢ₊₁⁵) = Σ Bᵢ(Wᵢ³ + W'ᵢ₊₁³)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairedEquation {
    pub quintic_pair_coeffs: Vec<Rational>,
    pub cubic_pair_coeffs: Vec<Rational>,
}

impl PairedEquation {
    pub fn new(
        quintic_pair_coeffs: Vec<Rational>,
        cubic_pair_coeffs: Vec<Rational>,
    ) -> Result<Self, EquationError> {
        let eq = PairedEquation { quintic_pair_coeffs, cubic_pair_coeffs };
        eq.validate()?;
        Ok(eq)
    }

    pub fn validate(&self) -> Result<(), EquationError> {
        if self.quintic_pair_coeffs.is_empty() {
            return Err(EquationError::Empty("quintic_pair_coeffs"));
        }
        match self.cubic_pair_coeffs.first() {
            None => Err(EquationError::Empty("cubic_pair_coeffs")),
            Some(b0) if b0.is_zero() => Err(EquationError::ZeroCoefficient("B0")),
            Some(_) => Ok(()),
        }
    }

    pub fn quintic_arity(&self) -> usize {
        2 * self.quintic_pair_coeffs.len()
    }

    pub fn cubic_arity(&self) -> usize {
        2 * self.cubic_pair_coeffs.len()
    }
}

/// xᵢ for every quintic pair and yᵢ for the cubic pairs after the first
/// (whose offset is the curve coordinate v).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairedParametrization {
    pub xs: Vec<Rational>,
    #[serde(default)]
    pub ys: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "lowercase")]
pub enum Equation {
    Direct(DiophantineEquation),
    Paired(PairedEquation),
}

impl Equation {
    pub fn validate(&self) -> Result<(), EquationError> {
        match self {
            Equation::Direct(eq) => eq.validate(),
            Equation::Paired(eq) => eq.validate(),
        }
    }

    pub fn quintic_arity(&self) -> usize {
        match self {
            Equation::Direct(eq) => eq.quintic_arity(),
            Equation::Paired(eq) => eq.quintic_arity(),
        }
    }

    pub fn cubic_arity(&self) -> usize {
        match self {
            Equation::Direct(eq) => eq.cubic_arity(),
            Equation::Paired(eq) => eq.cubic_arity(),
        }
    }

    /// Coefficient multiplying each quintic-side variable, in tuple order.
    pub fn quintic_weights(&self) -> Vec<Rational> {
        match self {
            Equation::Direct(eq) => {
                let mut w = vec![eq.a.clone(), eq.a.clone()];
                w.extend(eq.quintic_coeffs.iter().cloned());
                w
            }
            Equation::Paired(eq) => pair_weights(&eq.quintic_pair_coeffs),
        }
    }

    /// Coefficient multiplying each cubic-side variable, in tuple order.
    pub fn cubic_weights(&self) -> Vec<Rational> {
        match self {
            Equation::Direct(eq) => {
                let mut w = vec![eq.b.clone(), eq.b.clone()];
                w.extend(eq.cubic_coeffs.iter().cloned());
                w
            }
            Equation::Paired(eq) => pair_weights(&eq.cubic_pair_coeffs),
        }
    }

    /// Exact values of the fifth-power side and the cube side.
    pub fn sides(
        &self,
        quintic: &[Rational],
        cubic: &[Rational],
    ) -> Result<(Rational, Rational), EquationError> {
        arity("quintic values", self.quintic_arity(), quintic.len())?;
        arity("cubic values", self.cubic_arity(), cubic.len())?;
        let lhs = weighted_power_sum(&self.quintic_weights(), quintic, 5);
        let rhs = weighted_power_sum(&self.cubic_weights(), cubic, 3);
        Ok((lhs, rhs))
    }
}

fn pair_weights(coeffs: &[Rational]) -> Vec<Rational> {
    coeffs.iter().flat_map(|c| [c.clone(), c.clone()]).collect()
}

fn weighted_power_sum(weights: &[Rational], values: &[Rational], exp: u32) -> Rational {
    weights.iter().zip(values).map(|(w, x)| w * x.pow(exp)).sum()
}

/// Direct method: v² = A·t⁴ + C·t² + E with
/// A = (2a + Σaᵢαᵢ⁵)/(6b), C = (20a·x₁² − 2b − Σbᵢβᵢ³)/(6b), E = (5a/3b)·x₁⁴.
pub fn derive_quartic_method1(
    eq: &DiophantineEquation,
    par: &Parametrization,
) -> Result<QuarticCurve, EquationError> {
    eq.validate()?;
    arity("alphas", eq.quintic_coeffs.len(), par.alphas.len())?;
    arity("betas", eq.cubic_coeffs.len(), par.betas.len())?;
    let six_b = Rational::from(6) * &eq.b;
    let alpha_sum: Rational = eq.quintic_coeffs.iter().zip(&par.alphas).map(|(c, al)| c * al.pow(5)).sum();
    let beta_sum: Rational = eq.cubic_coeffs.iter().zip(&par.betas).map(|(c, be)| c * be.pow(3)).sum();
    let x1_sq = par.x1.square();
    let quartic_coeff = (Rational::from(2) * &eq.a + alpha_sum) / &six_b;
    let square_coeff =
        (Rational::from(20) * &eq.a * &x1_sq - Rational::from(2) * &eq.b - beta_sum) / &six_b;
    let constant = Rational::from(5) * &eq.a / (Rational::from(3) * &eq.b) * x1_sq.square();
    Ok(QuarticCurve::even(quartic_coeff, square_coeff, constant)?)
}

/// Paired method: v² = A·t⁴ + C·t² + E with A = ΣAᵢ/(3B₀),
/// C = (10ΣAᵢxᵢ² − ΣBᵢ)/(3B₀), E = (5ΣAᵢxᵢ⁴ − 3Σ_{i≥1}Bᵢyᵢ²)/(3B₀).
pub fn derive_quartic_method2(
    eq: &PairedEquation,
    par: &PairedParametrization,
) -> Result<QuarticCurve, EquationError> {
    eq.validate()?;
    arity("xs", eq.quintic_pair_coeffs.len(), par.xs.len())?;
    arity("ys", eq.cubic_pair_coeffs.len() - 1, par.ys.len())?;
    let three_b0 = Rational::from(3) * &eq.cubic_pair_coeffs[0];
    let a_sum: Rational = eq.quintic_pair_coeffs.iter().sum();
    let b_sum: Rational = eq.cubic_pair_coeffs.iter().sum();
    let ax2: Rational = eq.quintic_pair_coeffs.iter().zip(&par.xs).map(|(a, x)| a * x.square()).sum();
    let ax4: Rational = eq.quintic_pair_coeffs.iter().zip(&par.xs).map(|(a, x)| a * x.pow(4)).sum();
    let by2: Rational = eq.cubic_pair_coeffs[1..].iter().zip(&par.ys).map(|(b, y)| b * y.square()).sum();
    let quartic_coeff = a_sum / &three_b0;
    let square_coeff = (Rational::from(10) * ax2 - b_sum) / &three_b0;
    let constant = (Rational::from(5) * ax4 - Rational::from(3) * by2) / &three_b0;
    Ok(QuarticCurve::even(quartic_coeff, square_coeff, constant)?)
}

/// An equation together with the parametrization that reduces it to a
/// quartic; validated so arities agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Model {
    Direct { equation: DiophantineEquation, parametrization: Parametrization },
    Paired { equation: PairedEquation, parametrization: PairedParametrization },
}

impl Model {
    pub fn direct(equation: DiophantineEquation, parametrization: Parametrization) -> Result<Self, EquationError> {
        let m = Model::Direct { equation, parametrization };
        m.validate()?;
        Ok(m)
    }

    pub fn paired(equation: PairedEquation, parametrization: PairedParametrization) -> Result<Self, EquationError> {
        let m = Model::Paired { equation, parametrization };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<(), EquationError> {
        self.quartic().map(|_| ())
    }

    pub fn equation(&self) -> Equation {
        match self {
            Model::Direct { equation, .. } => Equation::Direct(equation.clone()),
            Model::Paired { equation, .. } => Equation::Paired(equation.clone()),
        }
    }

    pub fn quartic(&self) -> Result<QuarticCurve, EquationError> {
        match self {
            Model::Direct { equation, parametrization } => derive_quartic_method1(equation, parametrization),
            Model::Paired { equation, parametrization } => derive_quartic_method2(equation, parametrization),
        }
    }

    /// Plugs (t, v) into the parametrization without any check.
    pub fn substitute(&self, t: &Rational, v: &Rational) -> RationalSolution {
        let (quintic, cubic) = match self {
            Model::Direct { parametrization: par, .. } => {
                let mut quintic = vec![t + &par.x1, t - &par.x1];
                quintic.extend(par.alphas.iter().map(|al| al * t));
                let mut cubic = vec![t + v, t - v];
                cubic.extend(par.betas.iter().map(|be| be * t));
                (quintic, cubic)
            }
            Model::Paired { parametrization: par, .. } => {
                let quintic = par.xs.iter().flat_map(|x| [t + x, t - x]).collect();
                let cubic = std::iter::once(v)
                    .chain(&par.ys)
                    .flat_map(|y| [t + y, t - y])
                    .collect();
                (quintic, cubic)
            }
        };
        Solution::unverified(quintic, cubic, self.equation())
    }

    /// The rational solution attached to a nontrivial point of the quartic.
    pub fn build_solution(&self, t: &Rational, v: &Rational) -> Result<RationalSolution, EquationError> {
        if t.is_zero() {
            return Err(EquationError::DegenerateParameter);
        }
        let point = QuarticPoint::new(t.clone(), v.clone());
        if !self.quartic()?.contains(&point) {
            return Err(EquationError::PointNotOnCurve(point));
        }
        let mut s = self.substitute(t, v);
        s.verify();
        debug_assert!(s.is_verified());
        Ok(s)
    }
}

/// Something that can be evaluated exactly as a rational.
pub trait ExactValue: Clone + PartialEq + fmt::Display {
    fn to_rational(&self) -> Rational;
    fn is_zero_value(&self) -> bool;
}

impl ExactValue for Rational {
    fn to_rational(&self) -> Rational {
        self.clone()
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

impl ExactValue for BigInt {
    fn to_rational(&self) -> Rational {
        Rational::from(self)
    }
    fn is_zero_value(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}

/// Values for every variable of an equation, quintic side then cubic side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Solution<T> {
    pub quintic_values: Vec<T>,
    pub cubic_values: Vec<T>,
    pub equation: Equation,
    verified: bool,
}

pub type RationalSolution = Solution<Rational>;
pub type IntegerSolution = Solution<BigInt>;

impl<T: ExactValue> Solution<T> {
    pub fn unverified(quintic_values: Vec<T>, cubic_values: Vec<T>, equation: Equation) -> Self {
        Solution { quintic_values, cubic_values, equation, verified: false }
    }

    /// Builds and immediately verifies.
    pub fn checked(quintic_values: Vec<T>, cubic_values: Vec<T>, equation: Equation) -> Self {
        let mut s = Solution::unverified(quintic_values, cubic_values, equation);
        s.verify();
        s
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// Both sides of the equation, or an arity error.
    pub fn sides(&self) -> Result<(Rational, Rational), EquationError> {
        let q: Vec<Rational> = self.quintic_values.iter().map(ExactValue::to_rational).collect();
        let c: Vec<Rational> = self.cubic_values.iter().map(ExactValue::to_rational).collect();
        self.equation.sides(&q, &c)
    }

    /// Re-checks the equation exactly and records the result.
    pub fn verify(&mut self) -> bool {
        self.verified = matches!(self.sides(), Ok((l, r)) if l == r);
        self.verified
    }

    /// All values zero.
    pub fn is_trivial(&self) -> bool {
        self.quintic_values.iter().chain(&self.cubic_values).all(ExactValue::is_zero_value)
    }
}

impl RationalSolution {
    pub fn is_integral(&self) -> bool {
        self.quintic_values.iter().chain(&self.cubic_values).all(Rational::is_integer)
    }

    /// Converts when every value is an integer.
    pub fn to_integers(&self) -> Option<IntegerSolution> {
        let conv = |xs: &[Rational]| xs.iter().map(Rational::to_integer).collect::<Option<Vec<_>>>();
        Some(Solution {
            quintic_values: conv(&self.quintic_values)?,
            cubic_values: conv(&self.cubic_values)?,
            equation: self.equation.clone(),
            verified: self.verified,
        })
    }
}

impl IntegerSolution {
    pub fn to_rationals(&self) -> RationalSolution {
        Solution {
            quintic_values: self.quintic_values.iter().map(Rational::from).collect(),
            cubic_values: self.cubic_values.iter().map(Rational::from).collect(),
            equation: self.equation.clone(),
            verified: self.verified,
        }
    }
}

pub fn verify_solution<T: ExactValue>(s: &mut Solution<T>) -> bool {
    s.verify()
}

/// Multiplies quintic-side values by μ³ and cubic-side values by μ⁵; both
/// sides pick up μ¹⁵ so a solution stays a solution.
pub fn scale_solution(s: &RationalSolution, mu: &Rational) -> Result<RationalSolution, EquationError> {
    if mu.is_zero() {
        return Err(EquationError::ZeroScale);
    }
    let mu3 = mu.pow(3);
    let mu5 = mu.pow(5);
    Ok(Solution::checked(
        s.quintic_values.iter().map(|x| x * &mu3).collect(),
        s.cubic_values.iter().map(|y| y * &mu5).collect(),
        s.equation.clone(),
    ))
}

/// Integer solution obtained by scaling with the least μ > 0 that clears
/// every denominator.
pub fn clear_denominators(
    s: &RationalSolution,
    budget: &FactorBudget,
) -> Result<(IntegerSolution, ScalingFactor), EquationError> {
    if !s.is_verified() {
        return Err(EquationError::Unverified);
    }
    let quintic: Vec<_> = s.quintic_values.iter().map(denominator_of).collect();
    let cubic: Vec<_> = s.cubic_values.iter().map(denominator_of).collect();
    let factor = scaling_factor(&quintic, &cubic, budget).expect("denominators are positive");
    let scaled = scale_solution(s, &Rational::from(to_bigint(&factor.mu)))?;
    let ints = scaled.to_integers().expect("μ clears every denominator");
    Ok((ints, factor))
}

/// Renders the identity in the form `8^5 + 6^5 + 14^5 = (-110)^3 + 124^3 + 14^3`.
impl<T: ExactValue> fmt::Display for Solution<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = render_side(&self.equation, &self.quintic_values, 5, true);
        let c = render_side(&self.equation, &self.cubic_values, 3, false);
        write!(f, "{q} = {c}")
    }
}

fn render_value<T: ExactValue>(x: &T) -> String {
    let s = x.to_string();
    if s.starts_with('-') || s.contains('/') {
        format!("({s})")
    } else {
        s
    }
}

fn render_coefficient(c: &Rational) -> Option<String> {
    if *c == 1 {
        None
    } else if c.is_negative() || !c.is_integer() {
        Some(format!("({c})"))
    } else {
        Some(c.to_string())
    }
}

fn render_group<T: ExactValue>(coeff: &Rational, values: &[T], exp: u32) -> String {
    let powers: Vec<String> = values.iter().map(|x| format!("{}^{exp}", render_value(x))).collect();
    let body = powers.join(" + ");
    match render_coefficient(coeff) {
        None => body,
        Some(c) if values.len() == 1 => format!("{c}·{body}"),
        Some(c) => format!("{c}·({body})"),
    }
}

fn render_side<T: ExactValue>(eq: &Equation, values: &[T], exp: u32, quintic: bool) -> String {
    let mut groups = Vec::new();
    match eq {
        Equation::Direct(d) => {
            let (lead, rest) = if quintic { (&d.a, &d.quintic_coeffs) } else { (&d.b, &d.cubic_coeffs) };
            groups.push(render_group(lead, &values[..2.min(values.len())], exp));
            for (c, x) in rest.iter().zip(values.iter().skip(2)) {
                groups.push(render_group(c, std::slice::from_ref(x), exp));
            }
        }
        Equation::Paired(p) => {
            let coeffs = if quintic { &p.quintic_pair_coeffs } else { &p.cubic_pair_coeffs };
            if coeffs.iter().all(|c| c == &coeffs[0]) {
                groups.push(render_group(&coeffs[0], values, exp));
            } else {
                for (c, pair) in coeffs.iter().zip(values.chunks(2)) {
                    groups.push(render_group(c, pair, exp));
                }
            }
        }
    }
    groups.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn ri(n: i64) -> Rational {
        Rational::from(n)
    }

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn rats(xs: &[(i64, i64)]) -> Vec<Rational> {
        xs.iter().map(|&(n, d)| r(n, d)).collect()
    }

    pub(crate) fn example31() -> Model {
        Model::direct(
            DiophantineEquation::new(ri(1), ri(1), vec![ri(1)], vec![ri(1)]).unwrap(),
            Parametrization { x1: ri(1), alphas: vec![ri(2)], betas: vec![ri(2)] },
        )
        .unwrap()
    }

    fn example33(n: i64, m: i64) -> Model {
        Model::paired(
            PairedEquation::new(vec![ri(n), ri(n)], vec![ri(m), ri(m)]).unwrap(),
            PairedParametrization { xs: vec![ri(1), ri(2)], ys: vec![ri(1)] },
        )
        .unwrap()
    }

    fn coeffs(c: &QuarticCurve) -> Vec<Rational> {
        c.coefficients().into_iter().cloned().collect()
    }

    #[test]
    fn direct_quartics() {
        assert_eq!(coeffs(&example31().quartic().unwrap()), rats(&[(17, 3), (0, 1), (5, 3), (0, 1), (5, 3)]));

        let eq = DiophantineEquation::new(ri(5), ri(3), vec![], vec![]).unwrap();
        let par = Parametrization { x1: ri(1), alphas: vec![], betas: vec![] };
        assert_eq!(
            coeffs(&derive_quartic_method1(&eq, &par).unwrap()),
            rats(&[(5, 9), (0, 1), (47, 9), (0, 1), (25, 9)])
        );

        let eq = DiophantineEquation::new(ri(1), ri(1), vec![], vec![]).unwrap();
        let par = Parametrization { x1: ri(0), alphas: vec![], betas: vec![] };
        assert_eq!(
            coeffs(&derive_quartic_method1(&eq, &par).unwrap()),
            rats(&[(1, 3), (0, 1), (-1, 3), (0, 1), (0, 1)])
        );
    }

    #[test]
    fn paired_quartics() {
        assert_eq!(coeffs(&example33(6, 85).quartic().unwrap()), rats(&[(4, 85), (0, 1), (26, 51), (0, 1), (1, 1)]));
        assert_eq!(coeffs(&example33(3, 17).quartic().unwrap()), rats(&[(2, 17), (0, 1), (116, 51), (0, 1), (4, 1)]));
        let eq = PairedEquation::new(vec![ri(3)], vec![ri(1)]).unwrap();
        let par = PairedParametrization { xs: vec![ri(0)], ys: vec![] };
        assert_eq!(
            coeffs(&derive_quartic_method2(&eq, &par).unwrap()),
            rats(&[(1, 1), (0, 1), (-1, 3), (0, 1), (0, 1)])
        );
    }

    #[test]
    fn invalid_inputs() {
        assert_eq!(
            DiophantineEquation::new(ri(0), ri(1), vec![], vec![]),
            Err(EquationError::ZeroCoefficient("a"))
        );
        assert_eq!(
            PairedEquation::new(vec![ri(1)], vec![ri(0), ri(1)]),
            Err(EquationError::ZeroCoefficient("B0"))
        );
        assert_eq!(PairedEquation::new(vec![], vec![ri(1)]), Err(EquationError::Empty("quintic_pair_coeffs")));
        let eq = DiophantineEquation::new(ri(1), ri(1), vec![ri(1)], vec![]).unwrap();
        let par = Parametrization { x1: ri(1), alphas: vec![], betas: vec![] };
        assert!(matches!(Model::direct(eq, par), Err(EquationError::Arity { .. })));
        // 2a + Σaᵢαᵢ⁵ = 0 kills the quartic term
        let eq = DiophantineEquation::new(ri(1), ri(1), vec![ri(-2)], vec![]).unwrap();
        let par = Parametrization { x1: ri(1), alphas: vec![ri(1)], betas: vec![] };
        assert!(matches!(Model::direct(eq, par), Err(EquationError::Quartic(_))));
    }

    #[test]
    fn build_from_known_points() {
        let m = example31();
        let s = m.build_solution(&ri(7), &ri(-117)).unwrap();
        assert!(s.is_verified());
        assert_eq!(s.quintic_values, vec![ri(8), ri(6), ri(14)]);
        assert_eq!(s.cubic_values, vec![ri(-110), ri(124), ri(14)]);

        let s = m.build_solution(&ri(7), &ri(117)).unwrap();
        assert_eq!(s.cubic_values, vec![ri(124), ri(-110), ri(14)]);

        let s = example33(3, 17).build_solution(&r(8, 3), &r(46, 9)).unwrap();
        assert_eq!(s.quintic_values, rats(&[(11, 3), (5, 3), (14, 3), (2, 3)]));
        assert_eq!(s.cubic_values, rats(&[(70, 9), (-22, 9), (11, 3), (5, 3)]));
        let scaled = scale_solution(&s, &ri(3)).unwrap();
        assert_eq!(scaled.to_integers().unwrap().quintic_values, ints(&[99, 45, 126, 18]));
        assert_eq!(scaled.to_integers().unwrap().cubic_values, ints(&[1890, -594, 891, 405]));
    }

    #[test]
    fn build_errors() {
        let m = example31();
        assert_eq!(m.build_solution(&ri(0), &r(5, 3)), Err(EquationError::DegenerateParameter));
        assert!(matches!(m.build_solution(&ri(1), &ri(2)), Err(EquationError::PointNotOnCurve(_))));
    }

    #[test]
    fn scaling() {
        let eq = example31().equation();
        let base = RationalSolution::checked(vec![ri(8), ri(6), ri(14)], vec![ri(-110), ri(124), ri(14)], eq.clone());
        assert!(base.is_verified());
        assert_eq!(scale_solution(&base, &ri(1)).unwrap(), base);
        let doubled = scale_solution(&base, &ri(2)).unwrap();
        assert!(doubled.is_verified());
        assert_eq!(doubled.quintic_values, vec![ri(64), ri(48), ri(112)]);
        assert_eq!(doubled.cubic_values, vec![ri(-3520), ri(3968), ri(448)]);
        assert_eq!(scale_solution(&base, &ri(0)), Err(EquationError::ZeroScale));
        let negated = scale_solution(&base, &ri(-1)).unwrap();
        assert!(negated.is_verified());

        let s = RationalSolution::checked(
            rats(&[(58, 47), (-36, 47), (22, 47)]),
            rats(&[(3460, 2209), (-2426, 2209), (22, 47)]),
            eq,
        );
        assert!(s.is_verified());
        let big = scale_solution(&s, &ri(47)).unwrap().to_integers().unwrap();
        assert_eq!(big.quintic_values, ints(&[128122, -79524, 48598]));
        assert_eq!(big.cubic_values, ints(&[359227580, -251874598, 107352982]));
    }

    #[test]
    fn clearing_denominators() {
        let budget = FactorBudget::default();
        let m = example31();
        let s = m.build_solution(&r(11, 47), &r(2943, 2209)).unwrap();
        let (ints_sol, factor) = clear_denominators(&s, &budget).unwrap();
        assert_eq!(factor.mu, 47u32.into());
        assert!(factor.minimal && ints_sol.is_verified());
        assert_eq!(ints_sol.quintic_values, ints(&[128122, -79524, 48598]));

        let s = m.build_solution(&ri(7), &ri(-117)).unwrap();
        let (ints_sol, factor) = clear_denominators(&s, &budget).unwrap();
        assert_eq!(factor.mu, 1u32.into());
        assert_eq!(ints_sol.quintic_values, ints(&[8, 6, 14]));

        let s = example33(6, 85).build_solution(&r(30, 7), &r(251, 49)).unwrap();
        let (ints_sol, factor) = clear_denominators(&s, &budget).unwrap();
        assert_eq!(factor.mu, 7u32.into());
        assert_eq!(ints_sol.quintic_values, ints(&[1813, 1127, 2156, 784]));
        assert_eq!(ints_sol.cubic_values, ints(&[158123, -14063, 88837, 55223]));

        let unverified = m.substitute(&ri(1), &ri(1));
        assert_eq!(clear_denominators(&unverified, &budget), Err(EquationError::Unverified));
    }

    #[test]
    fn verification() {
        let eq = example31().equation();
        let mut good = IntegerSolution::unverified(ints(&[8, 6, 14]), ints(&[-110, 124, 14]), eq.clone());
        assert!(verify_solution(&mut good));
        assert_eq!(good.sides().unwrap(), (ri(578368), ri(578368)));
        assert!(!good.is_trivial());
        // the entry sums agree too for this particular tuple
        let sum = |xs: &[BigInt]| xs.iter().sum::<BigInt>();
        assert_eq!(sum(&good.quintic_values), sum(&good.cubic_values));

        let mut zero = IntegerSolution::unverified(ints(&[0, 0, 0]), ints(&[0, 0, 0]), eq.clone());
        assert!(verify_solution(&mut zero));
        assert!(zero.is_trivial());

        let mut bad = IntegerSolution::unverified(ints(&[8, 6, 14]), ints(&[-110, 124, 15]), eq.clone());
        assert!(!verify_solution(&mut bad));

        let mut short = IntegerSolution::unverified(ints(&[8, 6]), ints(&[-110, 124, 14]), eq);
        assert!(!verify_solution(&mut short));
        assert!(matches!(short.sides(), Err(EquationError::Arity { .. })));
    }

    #[test]
    fn rendering() {
        let eq = example31().equation();
        let s = IntegerSolution::checked(ints(&[8, 6, 14]), ints(&[-110, 124, 14]), eq);
        assert_eq!(s.to_string(), "8^5 + 6^5 + 14^5 = (-110)^3 + 124^3 + 14^3");

        let s = IntegerSolution::checked(
            ints(&[99, 45, 126, 18]),
            ints(&[1890, -594, 891, 405]),
            example33(3, 17).equation(),
        );
        assert_eq!(s.to_string(), "3·(99^5 + 45^5 + 126^5 + 18^5) = 17·(1890^3 + (-594)^3 + 891^3 + 405^3)");

        let eq = Equation::Direct(DiophantineEquation::new(ri(5), r(-3, 2), vec![ri(2)], vec![]).unwrap());
        let s = IntegerSolution::unverified(ints(&[1, 2, 3]), ints(&[4, 5]), eq);
        assert_eq!(s.to_string(), "5·(1^5 + 2^5) + 2·3^5 = (-3/2)·(4^3 + 5^3)");
    }
}
