//! Elementary arithmetic functions: divisors, Moebius, Euler phi, Ramanujan
//! sums, divisor-power sums, and binary weight.
//!
//! Ramanujan sums are evaluated through the Moebius formula
//! c_k(t) = sum over d | gcd(k, t) of mu(k/d) * d,
//! with gcd(k, 0) taken as k so that c_k(0) = phi(k). The argument t may be
//! any integer; it is reduced modulo k first, which is consistent with the
//! periodicity and evenness of c_k.
//!
//! Everything here works on machine words; factorization is plain trial
//! division, which is ample for the desk-scale moduli this crate targets.

/// Prime factorization of `k` as ascending (prime, exponent) pairs.
///
/// # Panics
/// Panics if `k` is zero.
pub fn factorize(mut k: u64) -> Vec<(u64, u32)> {
    assert!(k >= 1, "cannot factorize zero");
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= k {
        if k % p == 0 {
            let mut e = 0u32;
            while k % p == 0 {
                k /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if k > 1 {
        out.push((k, 1));
    }
    out
}

/// All positive divisors of `k`, sorted ascending.
///
/// # Panics
/// Panics if `k` is zero.
pub fn divisors(k: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize(k) {
        let prev = out.clone();
        let mut pe = 1u64;
        for _ in 0..e {
            pe *= p;
            out.extend(prev.iter().map(|d| d * pe));
        }
    }
    out.sort_unstable();
    out
}

/// Moebius function: 0 if `k` has a squared prime factor, otherwise
/// (-1)^(number of prime factors).
///
/// # Panics
/// Panics if `k` is zero.
pub fn moebius(k: u64) -> i64 {
    let f = factorize(k);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Euler totient: the count of 1 <= j <= k with gcd(j, k) = 1.
///
/// # Panics
/// Panics if `k` is zero.
pub fn euler_phi(k: u64) -> u64 {
    let mut out = k;
    for (p, _) in factorize(k) {
        out = out / p * (p - 1);
    }
    out
}

/// Ramanujan sum c_k(t) = sum over d | gcd(k, t) of mu(k/d) * d.
///
/// `t` may be negative or exceed k; it is reduced modulo k, and t = 0 uses
/// gcd(k, 0) = k, giving c_k(0) = phi(k). The result is k-periodic and even
/// in t.
///
/// # Panics
/// Panics if `k` is zero.
pub fn ramanujan_c(k: u64, t: i64) -> i64 {
    assert!(k >= 1, "modulus must be positive");
    let tm = t.rem_euclid(k as i64) as u64;
    let g = if tm == 0 { k } else { num_integer::gcd(k, tm) };
    divisors(g)
        .iter()
        .map(|&d| moebius(k / d) * d as i64)
        .sum()
}

/// Divisor-power sum: sum over d | n of d^r.
///
/// # Panics
/// Panics if `n` is zero or the sum overflows an i64.
pub fn divisor_sigma(r: u32, n: u64) -> i64 {
    divisors(n)
        .iter()
        .map(|&d| {
            (d as i64)
                .checked_pow(r)
                .expect("divisor power overflows i64")
        })
        .fold(0i64, |acc, v| {
            acc.checked_add(v).expect("divisor sum overflows i64")
        })
}

/// Number of 1 bits in the binary representation of `d`.
pub fn binary_weight(d: u64) -> u32 {
    d.count_ones()
}

/// Smallest prime factor of `k`.
///
/// # Panics
/// Panics if `k < 2`.
pub fn smallest_prime_factor(k: u64) -> u64 {
    assert!(k >= 2, "no prime factor below 2");
    factorize(k)[0].0
}

/// Whether `k` is prime.
pub fn is_prime(k: u64) -> bool {
    if k < 2 {
        return false;
    }
    let f = factorize(k);
    f.len() == 1 && f[0].1 == 1
}
