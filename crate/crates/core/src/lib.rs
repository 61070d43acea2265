//! Integer identities between sums of fifth powers and sums of cubes.
//!
//! An equation `a(X'₁⁵ + X'₂⁵) + Σ aᵢXᵢ⁵ = b(Y'₁³ + Y'₂³) + Σ bᵢYᵢ³` (or its
//! paired variant) is parametrized by a point (t, v) of an even quartic
//! v² = A·t⁴ + C·t² + E. Once the quartic has a rational point it is moved to
//! a Weierstrass cubic, where the chord-tangent law produces an unbounded
//! supply of points; each maps back to a rational solution and, after
//! clearing denominators, to an integer identity that is checked exactly.
//!
//! ```
//! use quintic_cubic::{Model, DiophantineEquation, Parametrization, Rational};
//!
//! let one = Rational::from(1);
//! let model = Model::direct(
//!     DiophantineEquation::new(one.clone(), one.clone(), vec![one.clone()], vec![one.clone()]).unwrap(),
//!     Parametrization { x1: one, alphas: vec![Rational::from(2)], betas: vec![Rational::from(2)] },
//! ).unwrap();
//! let s = model.build_solution(&Rational::from(7), &Rational::from(-117)).unwrap();
//! assert_eq!(s.to_string(), "8^5 + 6^5 + 14^5 = (-110)^3 + 124^3 + 14^3");
//! ```

pub mod arith;
pub mod bridge;
pub mod cli;
pub mod config;
pub mod equation;
pub mod identity;
pub mod pipeline;
pub mod quartic;
pub mod weierstrass;

pub use arith::{
    is_square, minimal_scaling_factor, scaling_factor, sqrt_exact, ArithmeticError, FactorBudget,
    Rational, ScalingFactor,
};
pub use bridge::{BridgeError, QuarticCubicBridge};
pub use equation::{
    clear_denominators, derive_quartic_method1, derive_quartic_method2, scale_solution,
    verify_solution, DiophantineEquation, Equation, EquationError, IntegerSolution, Model,
    PairedEquation, PairedParametrization, Parametrization, RationalSolution, Solution,
};
pub use quartic::{QuarticCurve, QuarticError, QuarticPoint};
pub use weierstrass::{CurveError, CurvePoint, SquareCompletion, WeierstrassCurve};
pub use pipeline::{
    run, EmittedSolution, PipelineConfig, PipelineError, PipelineReport, SeedCurve, SeedPoint,
    SolutionSource,
};
