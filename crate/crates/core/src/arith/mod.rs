//! Exact rational arithmetic, square detection and denominator clearing.

mod factor;
mod rational;

pub use factor::{factorize, is_probable_prime, valuation, FactorBudget, Factorization};
pub use rational::Rational;
pub(crate) use rational::write_polynomial;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithmeticError {
    #[error("{0} is not the square of a rational")]
    NotASquare(Rational),
    #[error("could not factor {0} within the configured budget")]
    FactorizationTooLarge(BigUint),
    #[error("denominators must be at least 1")]
    ZeroDenominator,
    #[error("cannot parse {0:?} as a rational (expected \"p\" or \"p/q\" with q > 0)")]
    Parse(String),
}

/// Non-negative integer square root when `n` is a perfect square.
pub fn perfect_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let root = n.sqrt();
    (&root * &root == *n).then_some(root)
}

pub fn is_square(r: &Rational) -> bool {
    !r.is_negative() && perfect_sqrt(r.numer()).is_some() && perfect_sqrt(r.denom()).is_some()
}

/// The non-negative rational square root of a square rational.
pub fn sqrt_exact(r: &Rational) -> Result<Rational, ArithmeticError> {
    match (perfect_sqrt(r.numer()), perfect_sqrt(r.denom())) {
        (Some(n), Some(d)) => Ok(Rational::new(n, d)),
        _ => Err(ArithmeticError::NotASquare(r.clone())),
    }
}

/// Scale used to clear denominators, with a flag telling whether it is the
/// least such scale.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalingFactor {
    pub mu: BigUint,
    pub minimal: bool,
}

fn ceil_div(a: u32, b: u32) -> u32 {
    a.div_ceil(b)
}

fn check_nonzero(denoms: &[BigUint]) -> Result<(), ArithmeticError> {
    if denoms.iter().any(Zero::is_zero) {
        Err(ArithmeticError::ZeroDenominator)
    } else {
        Ok(())
    }
}

fn scaling_parts(
    quintic_denoms: &[BigUint],
    cubic_denoms: &[BigUint],
    budget: &FactorBudget,
) -> Result<(BigUint, BigUint), ArithmeticError> {
    check_nonzero(quintic_denoms)?;
    check_nonzero(cubic_denoms)?;
    let lcm = quintic_denoms
        .iter()
        .chain(cubic_denoms)
        .fold(BigUint::one(), |acc, d| acc.lcm(d));
    let factors = factorize(&lcm, budget);
    let mut mu = BigUint::one();
    for (p, _) in &factors.primes {
        let max_val = |ds: &[BigUint]| ds.iter().map(|d| valuation(d, p)).max().unwrap_or(0);
        let e = ceil_div(max_val(quintic_denoms), 3).max(ceil_div(max_val(cubic_denoms), 5));
        mu *= p.pow(e);
    }
    Ok((mu, factors.cofactor))
}

/// Least μ ≥ 1 with every quintic-side denominator dividing μ³ and every
/// cubic-side denominator dividing μ⁵.
///
/// Fails with `FactorizationTooLarge` if the denominators cannot be factored
/// within `budget`; [`scaling_factor`] falls back to a valid non-minimal μ in
/// that case.
pub fn minimal_scaling_factor(
    quintic_denoms: &[BigUint],
    cubic_denoms: &[BigUint],
    budget: &FactorBudget,
) -> Result<BigUint, ArithmeticError> {
    let (mu, cofactor) = scaling_parts(quintic_denoms, cubic_denoms, budget)?;
    if cofactor.is_one() {
        Ok(mu)
    } else {
        Err(ArithmeticError::FactorizationTooLarge(cofactor))
    }
}

/// Like [`minimal_scaling_factor`], but multiplies in any unfactored cofactor
/// instead of failing. Each denominator's unfactored part divides that
/// cofactor, so the result always clears denominators.
pub fn scaling_factor(
    quintic_denoms: &[BigUint],
    cubic_denoms: &[BigUint],
    budget: &FactorBudget,
) -> Result<ScalingFactor, ArithmeticError> {
    let (mu, cofactor) = scaling_parts(quintic_denoms, cubic_denoms, budget)?;
    let minimal = cofactor.is_one();
    Ok(ScalingFactor { mu: mu * cofactor, minimal })
}

/// Positive denominator of a rational as an unsigned integer.
pub fn denominator_of(r: &Rational) -> BigUint {
    r.denom().magnitude().clone()
}

pub(crate) fn to_bigint(n: &BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, n.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[u64]) -> Vec<BigUint> {
        xs.iter().map(|&x| BigUint::from(x)).collect()
    }

    /// Oracle: smallest μ by direct scan.
    fn scan_mu(quintic: &[u64], cubic: &[u64], limit: u64) -> Option<u64> {
        (1..=limit).find(|&mu| {
            let m = mu as u128;
            quintic.iter().all(|&d| (m * m * m).is_multiple_of(d as u128))
                && cubic.iter().all(|&d| m.pow(5).is_multiple_of(d as u128))
        })
    }

    #[test]
    fn square_detection() {
        assert!(is_square(&Rational::ratio(25, 9)));
        assert!(is_square(&Rational::zero()));
        assert!(!is_square(&Rational::ratio(5, 3)));
        assert!(!is_square(&Rational::from(-4)));
        assert!(!is_square(&Rational::ratio(4, 3)));
    }

    #[test]
    fn exact_roots() {
        assert_eq!(sqrt_exact(&Rational::ratio(25, 9)).unwrap(), Rational::ratio(5, 3));
        assert_eq!(sqrt_exact(&Rational::one()).unwrap(), Rational::one());
        assert_eq!(sqrt_exact(&Rational::from(9)).unwrap(), Rational::from(3));
        assert_eq!(
            sqrt_exact(&Rational::ratio(5, 3)),
            Err(ArithmeticError::NotASquare(Rational::ratio(5, 3)))
        );
    }

    #[test]
    fn scaling_examples() {
        let b = FactorBudget::default();
        assert_eq!(scan_mu(&[47], &[2209], 100), Some(47));
        assert_eq!(minimal_scaling_factor(&ints(&[47]), &ints(&[2209]), &b).unwrap(), BigUint::from(47u32));
        assert_eq!(minimal_scaling_factor(&ints(&[1]), &ints(&[1]), &b).unwrap(), BigUint::one());
        assert_eq!(scan_mu(&[7, 7, 7, 7], &[49, 49, 7, 7], 100), Some(7));
        assert_eq!(
            minimal_scaling_factor(&ints(&[7, 7, 7, 7]), &ints(&[49, 49, 7, 7]), &b).unwrap(),
            BigUint::from(7u32)
        );
    }

    #[test]
    fn empty_lists_need_no_scaling() {
        let b = FactorBudget::default();
        assert_eq!(minimal_scaling_factor(&[], &[], &b).unwrap(), BigUint::one());
    }

    #[test]
    fn zero_denominator_rejected() {
        let b = FactorBudget::default();
        assert_eq!(
            minimal_scaling_factor(&ints(&[0]), &[], &b),
            Err(ArithmeticError::ZeroDenominator)
        );
    }

    #[test]
    fn fallback_is_valid_and_flagged() {
        let budget = FactorBudget { trial_bound: 10, rho_iterations: 0 };
        let p = 1_000_003u64;
        let q = 1_000_033u64;
        let quintic = ints(&[12 * p]);
        let cubic = ints(&[p * q]);
        assert!(matches!(
            minimal_scaling_factor(&quintic, &cubic, &budget),
            Err(ArithmeticError::FactorizationTooLarge(_))
        ));
        let s = scaling_factor(&quintic, &cubic, &budget).unwrap();
        assert!(!s.minimal);
        for d in &quintic {
            assert!((s.mu.pow(3) % d).is_zero());
        }
        for d in &cubic {
            assert!((s.mu.pow(5) % d).is_zero());
        }
        // the default budget finds the minimal one: 2·3·p·q
        let full = scaling_factor(&quintic, &cubic, &FactorBudget::default()).unwrap();
        assert!(full.minimal);
        assert_eq!(full.mu, BigUint::from(6 * p as u128 * q as u128));
    }
}
