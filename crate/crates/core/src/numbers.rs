//! Elementary number theory: Euler totient with its square-root bound,
//! Legendre exponents of factorials, divisor counts of n!, and the exact
//! rational growth ratio a^{ck} / ((k+1) d(k!)).

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// Euler's totient via trial-division factorization.
pub fn totient(k: u64) -> u64 {
    assert!(k >= 1, "totient requires k >= 1");
    let mut result = k;
    let mut rest = k;
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            while rest % p == 0 {
                rest /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if rest > 1 {
        result -= result / rest;
    }
    result
}

/// Totient of every value in 1..=limit by a sieve.
pub fn totient_sieve(limit: u64) -> Vec<u64> {
    let limit = limit as usize;
    let mut phi: Vec<u64> = (0..=limit as u64).collect();
    for p in 2..=limit {
        if phi[p] == p as u64 {
            // p is prime
            let mut multiple = p;
            while multiple <= limit {
                phi[multiple] -= phi[multiple] / p as u64;
                multiple += p;
            }
        }
    }
    phi
}

/// How the bound 2*phi(k)^2 > k fails at one k.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum BoundKind {
    /// 2*phi(k)^2 == k.
    Equality,
    /// 2*phi(k)^2 < k.
    StrictViolation,
}

#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub struct BoundViolation {
    pub k: u64,
    pub phi: u64,
    pub kind: BoundKind,
}

/// Checks 2*phi(k)^2 > k for all 1 <= k <= k_max in exact integer
/// arithmetic, returning every k where the strict inequality fails,
/// ascending. The only expected entry is the equality at k = 2.
pub fn totient_bound_check(k_max: u64) -> Vec<BoundViolation> {
    let phi = totient_sieve(k_max);
    let mut violations = Vec::new();
    for k in 1..=k_max {
        let p = phi[k as usize];
        let doubled = 2 * (p as u128) * (p as u128);
        if doubled <= k as u128 {
            violations.push(BoundViolation {
                k,
                phi: p,
                kind: if doubled == k as u128 {
                    BoundKind::Equality
                } else {
                    BoundKind::StrictViolation
                },
            });
        }
    }
    violations
}

/// Prime factorization of n! by Legendre's formula:
/// the exponent of p in n! is sum_{i>=1} floor(n / p^i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorialFactorization {
    pub n: u64,
    /// (prime, exponent), primes ascending, all <= n.
    pub exponents: Vec<(u64, u64)>,
}

impl FactorialFactorization {
    pub fn new(n: u64) -> Self {
        let exponents = primes_up_to(n)
            .into_iter()
            .map(|p| {
                let mut e = 0u64;
                let mut q = p;
                loop {
                    e += n / q;
                    match q.checked_mul(p) {
                        Some(next) if next <= n => q = next,
                        _ => break,
                    }
                }
                (p, e)
            })
            .collect();
        FactorialFactorization { n, exponents }
    }

    /// Reassembles n! from the exponents.
    pub fn value(&self) -> BigUint {
        let mut acc = BigUint::one();
        for &(p, e) in &self.exponents {
            acc *= BigUint::from(p).pow(e as u32);
        }
        acc
    }

    /// d(n!) = prod (e_p + 1).
    pub fn divisor_count(&self) -> BigUint {
        let mut acc = BigUint::one();
        for &(_, e) in &self.exponents {
            acc *= BigUint::from(e + 1);
        }
        acc
    }
}

/// Number of divisors of n!, exactly.
pub fn divisor_count_factorial(n: u64) -> BigUint {
    FactorialFactorization::new(n).divisor_count()
}

/// All primes <= limit by Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut sieve = vec![true; limit + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut p = 2usize;
    while p * p <= limit {
        if sieve[p] {
            let mut q = p * p;
            while q <= limit {
                sieve[q] = false;
                q += p;
            }
        }
        p += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter(|(_, &is_p)| is_p)
        .map(|(i, _)| i as u64)
        .collect()
}

/// Exact rational ratio a^{floor(c*k)} / ((k+1) d(k!)).
///
/// `a` and `c` are exact rationals; the exponent is floor(c*k), so the
/// result is exact for every rational a > 1. Rejects a <= 1 or c <= 0.
pub fn growth_ratio(a: &BigRational, c: &BigRational, k: u64) -> Result<BigRational> {
    if *a <= BigRational::one() {
        return Err(Error::InvalidParameter(format!("a must exceed 1, got {a}")));
    }
    if !c.is_positive() {
        return Err(Error::InvalidParameter(format!(
            "c must be positive, got {c}"
        )));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("k must be >= 1".into()));
    }
    let ck = c * BigRational::from(BigInt::from(k));
    let exponent = ck
        .floor()
        .to_integer()
        .to_u32()
        .ok_or_else(|| Error::InvalidParameter("floor(c*k) too large".into()))?;
    let power = BigRational::new(
        a.numer().pow(exponent),
        a.denom().pow(exponent),
    );
    let denom = BigInt::from(k + 1) * BigInt::from(divisor_count_factorial(k));
    Ok(power / BigRational::from(denom))
}
