//! Parity kernels: binomial and multinomial coefficients modulo 2.

use crate::error::Error;

/// Binomial coefficient `C(n, k)` reduced mod 2.
///
/// By Lucas' theorem the coefficient is odd exactly when every binary digit
/// of `k` is bounded by the corresponding digit of `n`, i.e. when `k`'s bit
/// set is contained in `n`'s.
pub fn binom_mod2(n: u64, k: u64) -> bool {
    n & k == k
}

/// Chained multinomial coefficient mod 2 for a composition `[a_1, ..., a_m]`:
/// the product of `C(a_i + ... + a_m, a_i)` over `i < m`.
///
/// Empty compositions are rejected; a single part always gives 1.
pub fn multinomial_mod2(parts: &[u64]) -> Result<bool, Error> {
    if parts.is_empty() {
        return Err(Error::EmptyComposition);
    }
    let mut suffix: u64 = 0;
    for &a in parts {
        suffix = suffix.checked_add(a).ok_or(Error::ExponentOverflow)?;
    }
    for &a in &parts[..parts.len() - 1] {
        if !binom_mod2(suffix, a) {
            return Ok(false);
        }
        suffix -= a;
    }
    Ok(true)
}
