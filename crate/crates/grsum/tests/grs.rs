use std::str::FromStr;
use std::sync::Arc;

use grsum::grs::{
    dirichlet_updown, integrality_threshold, prime_closed_form, sigma, sigma_backward,
    sigma_single, sigma_table, sigma_table_forward, sigma_via_c_convolution,
    subdivisor_decomposition, write_table_csv,
};
use grsum::numtheory::ramanujan_c;
use grsum::{Int, Rational};

fn q(s: &str) -> Rational {
    Rational::from_str(s).unwrap()
}

fn row_of(values: &[&str]) -> Vec<Rational> {
    values.iter().map(|v| q(v)).collect()
}

#[test]
fn table_k6_b0_matches_known_values() {
    let table = sigma_table(6, 0).unwrap();
    let expected = [
        ["1", "0", "0", "0", "0", "0"],
        ["1", "-1", "0", "0", "0", "0"],
        ["1", "-1", "-1", "1", "0", "0"],
        ["0", "-1", "-1", "0", "1", "1"],
        ["1", "-1", "-2", "-1", "1", "2"],
        ["2", "1", "-1", "-2", "-1", "1"],
    ];
    for (i, row) in expected.iter().enumerate() {
        assert_eq!(table.row(i as u64 + 1), row_of(row), "b = 0, s = {}", i + 1);
    }
}

#[test]
fn table_k6_b1_matches_known_values() {
    let table = sigma_table(6, 1).unwrap();
    let expected = [
        ["1/3", "1/6", "-1/6", "-1/3", "-1/6", "1/6"],
        ["1/6", "-1/6", "-1/3", "-1/6", "1/6", "1/3"],
        ["0", "-1/2", "-1/2", "0", "1/2", "1/2"],
        ["0", "-1", "-1", "0", "1", "1"],
        ["1", "-1", "-2", "-1", "1", "2"],
        ["2", "1", "-1", "-2", "-1", "1"],
    ];
    for (i, row) in expected.iter().enumerate() {
        assert_eq!(table.row(i as u64 + 1), row_of(row), "b = 1, s = {}", i + 1);
    }
}

#[test]
fn sigma_spot_values() {
    assert_eq!(sigma(12, 0, 3, 6).unwrap(), q("-1"));
    assert_eq!(sigma(12, 0, 9, 6).unwrap(), q("-1"));
    assert_eq!(sigma(6, 1, 0, 2).unwrap(), q("1/6"));
    assert_eq!(sigma(6, 0, 3, 6).unwrap(), q("-2"));
    assert_eq!(sigma(9, 0, 5, 5).unwrap(), q("2"));
}

#[test]
fn full_row_is_ramanujan_c_for_both_slices() {
    for k in 1..=20u64 {
        for b in 0..=1u8 {
            for t in 0..k as i64 {
                assert_eq!(
                    sigma(k, b, t, k).unwrap(),
                    Rational::from_integer(Int::from(ramanujan_c(k, t))),
                    "k = {k}, b = {b}, t = {t}"
                );
            }
        }
    }
}

#[test]
fn first_row_shapes() {
    for k in 1..=20u64 {
        for t in 0..k as i64 {
            let zero_slice = sigma(k, 0, t, 1).unwrap();
            assert_eq!(zero_slice, if t == 0 { q("1") } else { q("0") });
            let one_slice = sigma(k, 1, t, 1).unwrap();
            assert_eq!(
                one_slice,
                Rational::new(Int::from(ramanujan_c(k, t)), Int::from(k)),
                "k = {k}, t = {t}"
            );
        }
    }
}

fn brute_signed_subset(k: u64, t: i64, s: u64) -> i64 {
    let parts: Vec<u64> = (1..s).collect();
    let mut acc = 0i64;
    for mask in 0u64..(1 << parts.len()) {
        let mut sum = 0u64;
        let mut sign = 1i64;
        for (i, &p) in parts.iter().enumerate() {
            if mask >> i & 1 == 1 {
                sum += p;
                sign = -sign;
            }
        }
        if sum % k == t.rem_euclid(k as i64) as u64 {
            acc += sign;
        }
    }
    acc
}

#[test]
fn zero_slice_matches_signed_subset_oracle() {
    for k in 1..=12u64 {
        for s in 1..=k.min(10) {
            for t in 0..k as i64 {
                assert_eq!(
                    sigma(k, 0, t, s).unwrap(),
                    Rational::from_integer(Int::from(brute_signed_subset(k, t, s))),
                    "k = {k}, s = {s}, t = {t}"
                );
            }
        }
    }
}

#[test]
fn sigma_single_matches_table() {
    for k in 1..=14u64 {
        for b in 0..=1u8 {
            for s in 1..=k {
                for t in 0..k as i64 {
                    assert_eq!(
                        sigma_single(k, b, t, s).unwrap(),
                        sigma(k, b, t, s).unwrap(),
                        "k = {k}, b = {b}, s = {s}, t = {t}"
                    );
                }
            }
        }
    }
}

#[test]
fn forward_recurrence_table_matches_definition() {
    for k in 1..=16u64 {
        for b in 0..=1u8 {
            let fwd = sigma_table_forward(k, b).unwrap();
            let def = sigma_table(k, b).unwrap();
            for s in 1..=k {
                assert_eq!(fwd.row(s), def.row(s), "k = {k}, b = {b}, s = {s}");
            }
        }
    }
}

#[test]
fn backward_recurrence_recovers_every_row() {
    for k in 2..=14u64 {
        for b in 0..=1u8 {
            for s in 1..k {
                for t in 0..k as i64 {
                    assert_eq!(
                        sigma_backward(k, b, t, s).unwrap(),
                        sigma(k, b, t, s).unwrap(),
                        "k = {k}, b = {b}, s = {s}, t = {t}"
                    );
                }
            }
        }
    }
}

#[test]
fn backward_rejects_widest_row() {
    assert!(sigma_backward(6, 0, 0, 6).is_err());
    assert!(sigma_backward(6, 1, 0, 0).is_err());
}

#[test]
fn c_convolution_matches_one_slice() {
    for k in 1..=14u64 {
        for s in 1..=k {
            for t in 0..k as i64 {
                assert_eq!(
                    sigma_via_c_convolution(k, t, s).unwrap(),
                    sigma(k, 1, t, s).unwrap(),
                    "k = {k}, s = {s}, t = {t}"
                );
            }
        }
    }
}

#[test]
fn dirichlet_pair_links_the_two_slices() {
    for k in 1..=30u64 {
        for s in 1..=k {
            for t in 0..k as i64 {
                let (up, down) = dirichlet_updown(k, t, s).unwrap();
                assert_eq!(up, sigma(k, 0, t, s).unwrap(), "up at k = {k}, s = {s}, t = {t}");
                assert_eq!(down, sigma(k, 1, t, s).unwrap(), "down at k = {k}, s = {s}, t = {t}");
            }
        }
    }
}

#[test]
fn dirichlet_prime_case_collapses() {
    for t in 0..7i64 {
        let (up, _) = dirichlet_updown(7, t, 1).unwrap();
        let expected = Rational::new(Int::from(1 + ramanujan_c(7, t)), Int::from(7));
        assert_eq!(up, expected, "s = 1 keeps the d = 1 term, t = {t}");
        for s in 2..=7u64 {
            let (up, down) = dirichlet_updown(7, t, s).unwrap();
            assert_eq!(up, down, "prime rows coincide from s = 2 on, t = {t}");
        }
    }
}

#[test]
fn prime_closed_form_matches_widest_proper_row() {
    for p in [3u64, 5, 7, 11, 13, 17, 19] {
        for t in 1..=p as i64 {
            let closed = prime_closed_form(p, t).unwrap();
            assert_eq!(closed, sigma(p, 0, t, p - 1).unwrap(), "p = {p}, t = {t}");
            assert_eq!(closed, sigma(p, 1, t, p - 1).unwrap(), "p = {p}, t = {t}");
        }
    }
}

#[test]
fn prime_closed_form_rejections() {
    assert!(prime_closed_form(2, 1).is_err());
    assert!(prime_closed_form(9, 1).is_err());
    assert!(prime_closed_form(7, 0).is_err());
    assert!(prime_closed_form(7, 8).is_err());
}

#[test]
fn subdivisor_sums_regroup() {
    assert_eq!(subdivisor_decomposition(12, 6, 3).unwrap().0, q("-2"));
    for k in 1..=18u64 {
        for s in (1..=k).filter(|s| k % s == 0) {
            for t in 0..k as i64 {
                let (sum0, sum1) = subdivisor_decomposition(k, s, t).unwrap();
                assert_eq!(
                    sum0,
                    Rational::from_integer(Int::from(ramanujan_c(s, t))),
                    "zero slice at k = {k}, s = {s}, t = {t}"
                );
                let expected1 = if s == k {
                    Rational::from_integer(Int::from(ramanujan_c(k, t)))
                } else {
                    Rational::from_integer(Int::from(0))
                };
                assert_eq!(sum1, expected1, "one slice at k = {k}, s = {s}, t = {t}");
            }
        }
    }
    assert!(subdivisor_decomposition(12, 5, 0).is_err());
}

#[test]
fn integrality_threshold_values() {
    assert_eq!(integrality_threshold(6).unwrap(), 4);
    assert_eq!(integrality_threshold(12).unwrap(), 7);
    for p in [3u64, 5, 7, 11, 13] {
        assert_eq!(integrality_threshold(p).unwrap(), 2, "p = {p}");
    }
    for k in 2..=24u64 {
        let s0 = integrality_threshold(k).unwrap();
        let p = grsum::numtheory::smallest_prime_factor(k);
        assert_eq!(s0, k / p + 1, "k = {k}");
        let t0 = sigma_table(k, 0).unwrap();
        let t1 = sigma_table(k, 1).unwrap();
        for s in s0..=k {
            assert_eq!(t0.row(s), t1.row(s), "rows above threshold, k = {k}, s = {s}");
        }
        if s0 > 1 {
            assert_ne!(t0.row(s0 - 1), t1.row(s0 - 1), "boundary row, k = {k}");
        }
    }
}

#[test]
fn integrality_boundary_counterexample_at_six() {
    assert_eq!(sigma(6, 0, 1, 3).unwrap(), q("-1"));
    assert_eq!(sigma(6, 1, 1, 3).unwrap(), q("-1/2"));
}

#[test]
fn csv_rendering_small_table() {
    let mut out = Vec::new();
    write_table_csv(2, 0, &mut out).unwrap();
    assert_eq!(String::from_utf8(out).unwrap(), "s,t=0,t=1\n1,1,0\n2,1,-1\n");
    let mut out1 = Vec::new();
    write_table_csv(2, 1, &mut out1).unwrap();
    assert_eq!(String::from_utf8(out1).unwrap(), "s,t=0,t=1\n1,1/2,-1/2\n2,1,-1\n");
}

#[test]
fn table_cache_returns_shared_instance() {
    let a = sigma_table(18, 1).unwrap();
    let handles: Vec<_> = (0..4)
        .map(|_| std::thread::spawn(|| sigma_table(18, 1).unwrap()))
        .collect();
    for h in handles {
        let b = h.join().unwrap();
        assert!(Arc::ptr_eq(&a, &b), "cache must hand out one shared table");
    }
}

#[test]
fn domain_rejections() {
    assert!(sigma(0, 0, 0, 1).is_err());
    assert!(sigma(6, 2, 0, 1).is_err());
    assert!(sigma(6, 0, 0, 0).is_err());
    assert!(sigma(6, 0, 0, 7).is_err());
    assert!(sigma_single(6, 0, 0, 7).is_err());
    assert!(sigma_single(0, 0, 0, 1).is_err());
}
