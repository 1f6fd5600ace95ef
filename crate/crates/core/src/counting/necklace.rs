//! Aperiodic necklaces and Lyndon words: `α_[1](ℤ_n; q)`.

use num_bigint::BigUint;

use super::{check_q, closed_form::psi_cyclic, CountError};

/// Number of aperiodic necklaces (equivalently Lyndon words) of length `n`
/// over `q` letters: `ψ_1(ℤ_n; q) / n`.
pub fn necklace_count(n: u64, q: u64) -> Result<BigUint, CountError> {
    let psi = psi_cyclic(n, q)?;
    let n_big = BigUint::from(n);
    debug_assert!((&psi % &n_big) == BigUint::default());
    Ok(psi / n_big)
}

/// True when `word` is strictly smaller than each of its nontrivial rotations,
/// i.e. aperiodic and minimal in its rotation class.
pub fn is_lyndon(word: &[u64]) -> bool {
    let n = word.len();
    n > 0 && (1..n).all(|r| word.iter().cmp(word[r..].iter().chain(&word[..r])).is_lt())
}

/// All Lyndon words of length `n` over `0..q`, in lexicographic order.
///
/// Uses the lexicographic successor method: repeat the current prefix to
/// length `n`, strip trailing maximal letters, increment the last one. Fails
/// with [`CountError::BudgetExceeded`] when `n · q^n` exceeds `budget`.
pub fn lyndon_words(n: usize, q: u64, budget: u64) -> Result<Vec<Vec<u64>>, CountError> {
    check_q(q)?;
    let cost = BigUint::from(n) * BigUint::from(q).pow(n as u32);
    if cost > BigUint::from(budget) {
        return Err(CountError::BudgetExceeded { budget });
    }
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    let mut w: Vec<u64> = vec![0];
    loop {
        let m = w.len();
        if m == n {
            debug_assert!(is_lyndon(&w));
            out.push(w.clone());
        }
        while w.len() < n {
            w.push(w[w.len() - m]);
        }
        while w.last() == Some(&(q - 1)) {
            w.pop();
        }
        match w.last_mut() {
            Some(x) => *x += 1,
            None => break,
        }
    }
    Ok(out)
}
