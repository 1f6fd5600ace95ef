//! Closed forms for cyclic and elementary abelian quotients.

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;

use super::{check_index, check_q, fix_count, CountError};

/// Prime factorization by trial division, as `(prime, exponent)` pairs.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// The number-theoretic Möbius function.
pub fn classical_mobius(n: u64) -> i8 {
    assert!(n >= 1, "Möbius function is defined on positive integers");
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (p, e) in factorize(n) {
        let len = ds.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                ds.push(ds[i] * pk);
            }
        }
    }
    ds.sort_unstable();
    ds
}

/// `Σ_{d | n} μ(d) q^(n/d)`: least-period count for a cyclic quotient of
/// order `n`.
pub fn psi_cyclic(n: u64, q: u64) -> Result<BigUint, CountError> {
    check_q(q)?;
    assert!(n >= 1, "cyclic order must be positive");
    check_index(n)?;
    let mut sum = BigInt::default();
    for d in divisors(n) {
        match classical_mobius(d) {
            0 => {}
            m => sum += BigInt::from(m) * BigInt::from(fix_count((n / d) as usize, q)),
        }
    }
    debug_assert!(!sum.is_negative());
    Ok(sum.magnitude().clone())
}

/// `q^(p^k) − q^(p^(k−1))` for a cyclic quotient of prime-power order.
pub fn psi_prime_power(p: u64, k: u32, q: u64) -> Result<BigUint, CountError> {
    check_q(q)?;
    if !is_prime(p) {
        return Err(CountError::NotPrime { p });
    }
    assert!(k >= 1, "exponent must be positive");
    let n = p.checked_pow(k).ok_or(CountError::IndexLimitExceeded { index: u64::MAX, limit: super::MAX_INDEX })?;
    check_index(n)?;
    Ok(fix_count(n as usize, q) - fix_count((n / p) as usize, q))
}

/// `q^(p²) − (p+1) q^p + p q` for the quotient `ℤ_p ⊕ ℤ_p`.
pub fn psi_elementary_p2(p: u64, q: u64) -> Result<BigUint, CountError> {
    check_q(q)?;
    if !is_prime(p) {
        return Err(CountError::NotPrime { p });
    }
    let n = p.checked_mul(p).ok_or(CountError::IndexLimitExceeded { index: u64::MAX, limit: super::MAX_INDEX })?;
    check_index(n)?;
    let qb = BigUint::from(q);
    let pb = BigUint::from(p);
    Ok(fix_count(n as usize, q) + &pb * &qb - (&pb + 1u32) * fix_count(p as usize, q))
}
