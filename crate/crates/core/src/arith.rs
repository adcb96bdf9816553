//! Small integer helpers shared by the field, sieve and analytic code.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::{Integer, Roots};
use num_traits::{One, ToPrimitive, Zero};

/// Floor square root of a non-negative `u64`.
pub fn isqrt_u64(n: u64) -> u64 {
    n.sqrt()
}

/// Floor square root of a non-negative `u128`.
pub fn isqrt_u128(n: u128) -> u128 {
    n.sqrt()
}

pub fn is_perfect_square_u64(n: u64) -> bool {
    let r = isqrt_u64(n);
    r * r == n
}

/// Trial division up to `sqrt(n)`.
pub fn is_squarefree(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return false;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    true
}

/// Sieve of Eratosthenes, all primes `<= n`.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Smallest-prime-factor table for `0..=n`; entries 0 and 1 are 0.
pub fn smallest_prime_factors(n: usize) -> Vec<u32> {
    let mut spf = vec![0u32; n + 1];
    for i in 2..=n {
        if spf[i] == 0 {
            let mut j = i;
            while j <= n {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    spf
}

/// Prime factorisation by trial division, as `(p, e)` pairs in increasing order.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
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

/// Whether no prime power `p^k` divides `n` (`n >= 1`).
///
/// Only primes with `p^k <= n` can matter, so the scan stops at `n^(1/k)`.
pub fn is_kth_power_free(n: u64, k: u32) -> bool {
    debug_assert!(k >= 2);
    if n == 0 {
        return false;
    }
    let mut m = n;
    let mut p = 2u64;
    loop {
        let pk = match p.checked_pow(k) {
            Some(v) => v,
            None => return true,
        };
        if pk > m {
            return true;
        }
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            if e >= k {
                return false;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
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

/// Deterministic Miller–Rabin for all `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'outer: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Miller–Rabin with the first twelve prime bases; deterministic below 3.3e24.
pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    const BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &BASES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let r = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> r;
    'outer: for &a in &BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..r {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Natural logarithm of `|n|` for arbitrarily large `n != 0`.
pub fn ln_abs(n: &BigInt) -> f64 {
    ln_biguint(n.magnitude())
}

pub fn ln_biguint(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        if let Some(v) = n.to_f64() {
            if v.is_finite() && v > 0.0 {
                return v.ln();
            }
        }
    }
    let shift = bits.saturating_sub(64);
    let top = (n >> shift).to_f64().expect("64-bit prefix fits f64");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `(mantissa, exponent)` with `n ≈ mantissa · 2^exponent`, usable past the f64 range.
pub fn to_scaled_f64(n: &BigInt) -> (f64, i64) {
    let bits = n.bits();
    let shift = bits.saturating_sub(60);
    let top = (n.magnitude() >> shift).to_f64().expect("60-bit prefix fits f64");
    let m = if n.sign() == Sign::Minus { -top } else { top };
    (m, shift as i64)
}

pub fn big_isqrt(n: &BigUint) -> BigUint {
    n.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squarefree_small() {
        let sf: Vec<u64> = (1..=20).filter(|&n| is_squarefree(n)).collect();
        assert_eq!(sf, vec![1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19]);
        assert!(!is_squarefree(12));
        assert!(!is_squarefree(49));
    }

    #[test]
    fn primes_and_miller_rabin_agree() {
        let ps = primes_up_to(5000);
        for n in 0..5000u64 {
            assert_eq!(is_prime_u64(n), ps.binary_search(&n).is_ok(), "n = {n}");
        }
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(3_215_031_751)); // strong pseudoprime to 2,3,5,7
        assert!(is_probable_prime(&BigUint::from(170141183460469231731687303715884105727u128)));
        assert!(!is_probable_prime(&(BigUint::from(1u64 << 61) * 3u32)));
    }

    #[test]
    fn power_free() {
        assert!(is_kth_power_free(1, 4));
        assert!(is_kth_power_free(8 * 27, 4));
        assert!(!is_kth_power_free(16, 4));
        assert!(!is_kth_power_free(3 * 81, 4));
        assert!(!is_kth_power_free(9, 2));
    }

    #[test]
    fn ln_of_huge() {
        let n = BigInt::from(10u32).pow(400);
        assert!((ln_abs(&n) - 400.0 * 10f64.ln()).abs() < 1e-9);
        assert!((ln_abs(&BigInt::from(12345)) - 12345f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn spf_table() {
        let spf = smallest_prime_factors(50);
        assert_eq!(spf[49], 7);
        assert_eq!(spf[47], 47);
        assert_eq!(spf[12], 2);
    }
}
