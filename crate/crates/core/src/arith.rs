//! Small integer helpers shared by the field and degree code.

pub use num_integer::{gcd, lcm};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut k = 3;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 2;
    }
    true
}

/// `base^exp`, or `None` on overflow.
pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

/// Smallest `k >= 1` with `n | p^k - 1`. Requires `gcd(p, n) = 1`.
pub fn multiplicative_order(p: u64, n: u64) -> Option<u32> {
    if n == 0 || gcd(p, n) != 1 {
        return None;
    }
    if n == 1 {
        return Some(1);
    }
    let p = p % n;
    let mut acc = p;
    let mut k = 1u32;
    while acc != 1 {
        acc = ((acc as u128 * p as u128) % n as u128) as u64;
        k += 1;
        if k as u64 > n {
            return None;
        }
    }
    Some(k)
}

/// `Some(j)` when `n = p^j` for some `j >= 0`.
pub fn log_exact(n: u64, p: u64) -> Option<u32> {
    if n == 0 || p < 2 {
        return None;
    }
    let mut n = n;
    let mut j = 0;
    while n % p == 0 {
        n /= p;
        j += 1;
    }
    (n == 1).then_some(j)
}
