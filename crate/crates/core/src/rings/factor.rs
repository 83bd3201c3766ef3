//! Integer factorization with a configurable size cap.
//!
//! Trial division and Pollard rho come from `num-prime`; this module only
//! enforces the bit-length bound and adapts the result types.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default cap on the bit length of integers handed to the factorizer.
pub const DEFAULT_MAX_BITS: u64 = 64;

static MAX_BITS: AtomicU64 = AtomicU64::new(DEFAULT_MAX_BITS);

/// Raises (or lowers) the process-wide factorization cap.
pub fn set_max_bits(bits: u64) {
    MAX_BITS.store(bits, Ordering::Relaxed);
}

pub fn max_bits() -> u64 {
    MAX_BITS.load(Ordering::Relaxed)
}

pub fn is_prime_u64(n: u64) -> bool {
    num_prime::nt_funcs::is_prime64(n)
}

/// Primality of an arbitrary-precision integer: deterministic below 2^64,
/// Baillie-PSW above.
pub fn is_prime_big(n: &BigUint) -> bool {
    match n.to_u64() {
        Some(small) => is_prime_u64(small),
        None => num_prime::nt_funcs::is_prime(n, Some(num_prime::PrimalityTestConfig::bpsw())).probably(),
    }
}

pub fn factor_u64(n: u64) -> BTreeMap<u64, u32> {
    if n <= 1 {
        return BTreeMap::new();
    }
    num_prime::nt_funcs::factorize64(n)
        .into_iter()
        .map(|(p, e)| (p, e as u32))
        .collect()
}

/// Prime factorization of a positive integer, subject to the bit cap.
pub fn factor_biguint(n: &BigUint) -> Result<BTreeMap<BigUint, u32>> {
    if n.is_zero() {
        return Err(Error::Unsupported("factorization of zero".into()));
    }
    if n.is_one() {
        return Ok(BTreeMap::new());
    }
    if n.bits() > max_bits() {
        return Err(Error::FactorizationLimit(format!(
            "{n} has {} bits, cap is {}",
            n.bits(),
            max_bits()
        )));
    }
    if let Some(small) = n.to_u64() {
        return Ok(factor_u64(small)
            .into_iter()
            .map(|(p, e)| (BigUint::from(p), e))
            .collect());
    }
    let (found, rest) = num_prime::nt_funcs::factors(n.clone(), None);
    if let Some(rest) = rest {
        return Err(Error::FactorizationLimit(format!(
            "could not finish factoring {n}; unfactored parts {rest:?}"
        )));
    }
    Ok(found.into_iter().map(|(p, e)| (p, e as u32)).collect())
}

/// Product of the distinct primes dividing `n`.
pub fn radical_u64(n: u64) -> u64 {
    factor_u64(n).keys().product()
}
