//! Integer factorization within a fixed work budget.
//!
//! Trial division by primes up to `trial_bound`, then Miller-Rabin to spot
//! prime cofactors, then Brent's variant of Pollard rho for the rest. Whatever
//! cannot be split inside the budget is returned as an unfactored cofactor.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

pub const DEFAULT_TRIAL_BOUND: u64 = 1_000_000;
pub const DEFAULT_RHO_ITERATIONS: u64 = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorBudget {
    pub trial_bound: u64,
    /// Total rho steps shared across all splitting attempts of one input.
    pub rho_iterations: u64,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget {
            trial_bound: DEFAULT_TRIAL_BOUND,
            rho_iterations: DEFAULT_RHO_ITERATIONS,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    /// Distinct primes with exponents, ascending.
    pub primes: Vec<(BigUint, u32)>,
    /// Part of the input left unsplit; 1 when factorization is complete.
    pub cofactor: BigUint,
}

impl Factorization {
    pub fn is_complete(&self) -> bool {
        self.cofactor.is_one()
    }
}

fn sieve(bound: u64) -> Vec<u32> {
    let n = bound as usize;
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u32);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

fn default_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| sieve(DEFAULT_TRIAL_BOUND))
}

const MR_BASES: [u32; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

/// Miller-Rabin with the first 20 prime bases. Exact below 3.3e24 and
/// probabilistic (with negligible error) above.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for &p in &MR_BASES {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_one = n - 1u32;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'bases: for &a in &MR_BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Finds a nontrivial factor of the odd composite `n`, consuming from `budget`.
fn brent_rho(n: &BigUint, budget: &mut u64) -> Option<BigUint> {
    const BATCH: u64 = 128;
    for c in 1u32.. {
        if *budget == 0 {
            return None;
        }
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let steps = BATCH.min(r - k);
                for _ in 0..steps {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                *budget = budget.saturating_sub(steps);
                g = q.gcd(n);
                k += steps;
                if *budget == 0 && g.is_one() {
                    return None;
                }
            }
            r *= 2;
        }
        if &g == n {
            // batch overshot; step one at a time from the saved state
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return Some(g);
        }
    }
    None
}

fn push_prime(primes: &mut Vec<(BigUint, u32)>, p: BigUint, e: u32) {
    match primes.iter_mut().find(|(q, _)| *q == p) {
        Some((_, k)) => *k += e,
        None => primes.push((p, e)),
    }
}

/// Factors `n` (n ≥ 1) as far as `budget` allows.
pub fn factorize(n: &BigUint, budget: &FactorBudget) -> Factorization {
    assert!(!n.is_zero(), "cannot factor zero");
    let mut primes: Vec<(BigUint, u32)> = Vec::new();
    let mut rest = n.clone();

    let owned;
    let table: &[u32] = if budget.trial_bound == DEFAULT_TRIAL_BOUND {
        default_primes()
    } else {
        owned = sieve(budget.trial_bound);
        &owned
    };

    let mut trial_exhausted = true;
    for &p in table {
        if rest.is_one() {
            break;
        }
        let p64 = p as u64;
        if rest.bits() <= 64 && rest.to_u64().is_some_and(|r| p64 * p64 > r) {
            trial_exhausted = false;
            break;
        }
        let pb = BigUint::from(p);
        let mut e = 0;
        loop {
            let (quot, rem) = rest.div_rem(&pb);
            if !rem.is_zero() {
                break;
            }
            rest = quot;
            e += 1;
        }
        if e > 0 {
            primes.push((pb, e));
        }
    }

    let mut cofactor = BigUint::one();
    if !rest.is_one() {
        let bound_sq = BigUint::from(budget.trial_bound) * BigUint::from(budget.trial_bound);
        if !trial_exhausted || rest < bound_sq || is_probable_prime(&rest) {
            // either p² > rest stopped the loop or the remainder has no factor
            // below the bound yet is smaller than its square: prime either way
            push_prime(&mut primes, rest, 1);
        } else {
            let mut steps = budget.rho_iterations;
            let mut stack = vec![rest];
            while let Some(m) = stack.pop() {
                if m.is_one() {
                    continue;
                }
                if is_probable_prime(&m) {
                    push_prime(&mut primes, m, 1);
                    continue;
                }
                match brent_rho(&m, &mut steps) {
                    Some(f) => {
                        let other = &m / &f;
                        stack.push(f);
                        stack.push(other);
                    }
                    None => cofactor *= m,
                }
            }
        }
    }
    primes.sort();
    Factorization { primes, cofactor }
}

/// Largest e with p^e | n (n ≠ 0).
pub fn valuation(n: &BigUint, p: &BigUint) -> u32 {
    let mut n = n.clone();
    let mut e = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return e;
        }
        n = q;
        e += 1;
    }
}
