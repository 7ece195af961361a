use grsum::numtheory::{
    binary_weight, divisor_sigma, divisors, euler_phi, factorize, is_prime, moebius,
    ramanujan_c, smallest_prime_factor,
};

#[test]
fn factorize_known_values() {
    assert_eq!(factorize(1), vec![]);
    assert_eq!(factorize(2), vec![(2, 1)]);
    assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
    assert_eq!(factorize(997), vec![(997, 1)]);
    assert_eq!(factorize(1024), vec![(2, 10)]);
}

#[test]
fn divisors_sorted_and_complete() {
    assert_eq!(divisors(1), vec![1]);
    assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    assert_eq!(divisors(49), vec![1, 7, 49]);
    for k in 1..=200u64 {
        let ds = divisors(k);
        assert!(ds.windows(2).all(|w| w[0] < w[1]), "unsorted divisors for {k}");
        for d in 1..=k {
            assert_eq!(ds.contains(&d), k % d == 0, "divisor mismatch at k = {k}, d = {d}");
        }
    }
}

#[test]
fn moebius_known_values() {
    assert_eq!(moebius(1), 1);
    assert_eq!(moebius(2), -1);
    assert_eq!(moebius(4), 0);
    assert_eq!(moebius(6), 1);
    assert_eq!(moebius(12), 0);
    assert_eq!(moebius(30), -1);
    assert_eq!(moebius(210), 1);
}

#[test]
fn moebius_divisor_sum_is_unit_indicator() {
    for k in 1..=300u64 {
        let total: i64 = divisors(k).iter().map(|&d| moebius(d)).sum();
        assert_eq!(total, i64::from(k == 1), "Moebius sum over divisors of {k}");
    }
}

#[test]
fn euler_phi_known_values() {
    assert_eq!(euler_phi(1), 1);
    assert_eq!(euler_phi(2), 1);
    assert_eq!(euler_phi(6), 2);
    assert_eq!(euler_phi(9), 6);
    assert_eq!(euler_phi(12), 4);
    assert_eq!(euler_phi(30), 8);
    assert_eq!(euler_phi(97), 96);
}

#[test]
fn euler_phi_matches_coprime_count() {
    for k in 1..=200u64 {
        let count = (1..=k).filter(|&j| num_integer::gcd(j, k) == 1).count() as u64;
        assert_eq!(euler_phi(k), count, "phi({k})");
    }
}

#[test]
fn primality_and_smallest_factor() {
    for k in 2..=500u64 {
        let by_trial = (2..k).all(|d| k % d != 0);
        assert_eq!(is_prime(k), by_trial, "primality of {k}");
        let p = smallest_prime_factor(k);
        assert!(is_prime(p) && k % p == 0, "smallest factor of {k}");
        assert!((2..p).all(|d| k % d != 0), "{p} not smallest for {k}");
    }
}

#[test]
fn ramanujan_c_known_rows() {
    for t in -5..=5 {
        assert_eq!(ramanujan_c(1, t), 1);
    }
    assert_eq!(
        (0..6).map(|t| ramanujan_c(6, t)).collect::<Vec<_>>(),
        vec![2, 1, -1, -2, -1, 1]
    );
    assert_eq!(
        (0..9).map(|t| ramanujan_c(9, t)).collect::<Vec<_>>(),
        vec![6, 0, 0, -3, 0, 0, -3, 0, 0]
    );
}

#[test]
fn ramanujan_c_at_zero_is_totient() {
    for k in 1..=200u64 {
        assert_eq!(ramanujan_c(k, 0), euler_phi(k) as i64, "c_{k}(0)");
    }
}

#[test]
fn ramanujan_c_periodic_and_even() {
    for k in 1..=60u64 {
        for t in 0..k as i64 {
            assert_eq!(ramanujan_c(k, t), ramanujan_c(k, t + k as i64), "period at k = {k}");
            assert_eq!(ramanujan_c(k, t), ramanujan_c(k, -t), "evenness at k = {k}");
        }
    }
}

#[test]
fn ramanujan_c_rows_sum_to_zero() {
    for k in 2..=60u64 {
        let total: i64 = (0..k as i64).map(|t| ramanujan_c(k, t)).sum();
        assert_eq!(total, 0, "row sum for k = {k}");
    }
}

#[test]
fn ramanujan_c_is_multiplicative() {
    for k1 in 1..=12u64 {
        for k2 in 1..=12u64 {
            if num_integer::gcd(k1, k2) != 1 {
                continue;
            }
            for t in 0..(k1 * k2) as i64 {
                assert_eq!(
                    ramanujan_c(k1 * k2, t),
                    ramanujan_c(k1, t) * ramanujan_c(k2, t),
                    "multiplicativity at k1 = {k1}, k2 = {k2}, t = {t}"
                );
            }
        }
    }
}

#[test]
fn ramanujan_c_matches_cosine_sum() {
    use std::f64::consts::PI;
    for k in 1..=40u64 {
        for t in 0..k as i64 {
            let mut sum = 0.0;
            for j in 1..=k {
                if num_integer::gcd(j, k) == 1 {
                    sum += (2.0 * PI * (j as i64 * t).rem_euclid(k as i64) as f64 / k as f64).cos();
                }
            }
            let exact = ramanujan_c(k, t) as f64;
            assert!(
                (sum - exact).abs() < 1e-8,
                "cosine sum differs at k = {k}, t = {t}: {sum} vs {exact}"
            );
        }
    }
}

#[test]
fn divisor_sigma_known_values() {
    assert_eq!(divisor_sigma(0, 6), 4);
    assert_eq!(divisor_sigma(1, 6), 12);
    assert_eq!(divisor_sigma(1, 28), 56);
    assert_eq!(divisor_sigma(2, 10), 130);
}

#[test]
fn binary_weight_known_values() {
    assert_eq!(binary_weight(0), 0);
    assert_eq!(binary_weight(7), 3);
    assert_eq!(binary_weight(1 << 40), 1);
    assert_eq!(binary_weight(u64::MAX), 64);
}
