//! p-adic bookkeeping: leading terms of base-p expansions, binary
//! truncations, nim sums, and primality helpers.
//!
//! For `d >= 1` and a prime `p` there is a unique way to write the leading
//! base-p digit: `d = t*q + r` with `q = p^k` the largest power of `p`
//! not exceeding `d`, so `1 <= t < p` and `t*q <= d < (t+1)*q`.  Most of
//! the closed formulas in this crate branch on that decomposition.

use crate::{Error, Result};

/// Leading term of the base-p expansion of `d`: the unique `(t, k, q)`
/// with `q = p^k`, `1 <= t < p` and `t*q <= d < (t+1)*q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct PAdicLeading {
    /// Leading digit, `1 <= t < p`.
    pub t: u64,
    /// Exponent of the leading power.
    pub k: u32,
    /// `q = p^k`.
    pub q: u64,
}

/// Binary truncations of `d` around bit `i`, for `d < 2^(k+1)`:
/// `d = left*2^(i+1) + bit*2^i + right` with `right < 2^i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Truncation {
    /// Digits above position `i`: `(d_k ... d_{i+1})` read as an integer.
    pub left: u64,
    /// The digit `d_i`.
    pub bit: u8,
    /// Digits below position `i`: `(d_{i-1} ... d_0)` read as an integer.
    pub right: u64,
}

/// Computes the leading term of the base-p expansion of `d >= 1`.
pub fn leading_term(d: u64, p: u64) -> Result<PAdicLeading> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if d == 0 {
        return Err(Error::Domain("leading term requires d >= 1".into()));
    }
    let mut q = 1u64;
    let mut k = 0u32;
    while q <= d / p {
        q *= p;
        k += 1;
    }
    Ok(PAdicLeading { t: d / q, k, q })
}

/// Nim sum (bitwise xor) of two non-negative integers.
pub fn nim_sum(a: u64, b: u64) -> u64 {
    a ^ b
}

/// Splits `d` around binary digit `i`, with the caller fixing the window
/// `k`: requires `1 <= i <= k <= 62` and `d < 2^(k+1)`.
pub fn truncations(d: u64, i: u32, k: u32) -> Result<Truncation> {
    if i < 1 || i > k || k > 62 {
        return Err(Error::Domain(format!(
            "truncation position needs 1 <= i <= k <= 62, got i = {i}, k = {k}"
        )));
    }
    if d >> (k + 1) != 0 {
        return Err(Error::Domain(format!("d = {d} has more than {} bits", k + 1)));
    }
    Ok(Truncation {
        left: d >> (i + 1),
        bit: ((d >> i) & 1) as u8,
        right: d & ((1 << i) - 1),
    })
}

/// Deterministic Miller-Rabin primality test, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // These witnesses decide primality for every n < 2^64.
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Decomposes `q >= 2` as `p^k` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    if is_prime(q) {
        return Some((q, 1));
    }
    for k in 2..=63u32 {
        let r = integer_root(q, k);
        if r < 2 {
            break;
        }
        if r.checked_pow(k) == Some(q) && is_prime(r) {
            return Some((r, k));
        }
    }
    None
}

/// True when `q` is 1 or a prime power; these are the valid Frobenius twists.
pub fn is_prime_power_or_one(q: u64) -> bool {
    q == 1 || prime_power(q).is_some()
}

fn integer_root(q: u64, k: u32) -> u64 {
    let mut r = (q as f64).powf(1.0 / k as f64).round() as u64;
    // Floating point gets within 1 for u64 inputs; correct exactly.
    while r > 1 && r.checked_pow(k).map_or(true, |v| v > q) {
        r -= 1;
    }
    while (r + 1).checked_pow(k).map_or(false, |v| v <= q) {
        r += 1;
    }
    r
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}
