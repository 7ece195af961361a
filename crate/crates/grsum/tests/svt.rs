use grsum::qpoly::folded_qproduct;
use grsum::svt::{
    enumerate_svt, enumerate_svt_all, eta, eta_recurrences_check, sigma_quadratic, svt_size,
    svt_total_closed_form, SvtParams,
};
use grsum::{Int, Rational};

#[test]
fn enumeration_known_counts() {
    let hist = enumerate_svt_all(4, 9).unwrap();
    assert_eq!((hist[5].size0, hist[5].size1), (2, 0));
    assert_eq!((hist[2].size0, hist[2].size1), (0, 1));

    let empty = enumerate_svt_all(0, 5).unwrap();
    assert_eq!((empty[0].size0, empty[0].size1), (1, 0));
    for t in 1..5 {
        assert_eq!((empty[t].size0, empty[t].size1), (0, 0));
    }
}

#[test]
fn enumeration_conserves_word_count() {
    for n in 0..=10u32 {
        for k in 1..=12u64 {
            let hist = enumerate_svt_all(n, k).unwrap();
            let total: u64 = hist.iter().map(|c| c.size0 + c.size1).sum();
            assert_eq!(total, 1 << n, "n = {n}, k = {k}");
        }
    }
}

#[test]
fn enumeration_refuses_huge_words() {
    assert!(enumerate_svt_all(31, 5).is_err());
    assert!(enumerate_svt_all(4, 0).is_err());
}

#[test]
fn eta_known_row() {
    let row: Vec<Int> = (0..9).map(|t| eta(9, t, 5).unwrap()).collect();
    let expected: Vec<Int> = [2, 2, 1, 2, 2, 2, 2, 2, 1].iter().map(|&v| Int::from(v)).collect();
    assert_eq!(row, expected);
}

#[test]
fn eta_base_case_and_row_sums() {
    for k in 1..=12u64 {
        assert_eq!(eta(k, 0, 1).unwrap(), Int::from(1));
        if k > 1 {
            assert_eq!(eta(k, 1, 1).unwrap(), Int::from(0));
        }
        for s in 1..=10u64 {
            let total: Int = (0..k as i64).map(|t| eta(k, t, s).unwrap()).sum();
            assert_eq!(total, Int::from(1i64 << (s - 1)), "k = {k}, s = {s}");
        }
    }
}

#[test]
fn eta_recurrences_pass_for_odd_moduli() {
    assert!(eta_recurrences_check(9, 8).unwrap().passed);
    assert!(eta_recurrences_check(15, 10).unwrap().passed);
    assert!(eta_recurrences_check(2, 5).is_err());
}

#[test]
fn closed_form_total_known_values() {
    assert_eq!(svt_total_closed_form(4, 0).unwrap(), Int::from(2));
    assert_eq!(svt_total_closed_form(4, 8).unwrap(), Int::from(1));
    assert_eq!(svt_total_closed_form(4, 2).unwrap(), Int::from(1));
}

#[test]
fn closed_form_total_matches_eta() {
    for s in [4u64, 7, 8, 11, 12, 15, 16] {
        let k = 2 * s + 1;
        for t in 0..k as i64 {
            assert_eq!(
                svt_total_closed_form(s, t).unwrap(),
                eta(k, t, s + 1).unwrap(),
                "s = {s}, t = {t}"
            );
        }
    }
}

#[test]
fn quadratic_formula_known_values() {
    assert_eq!(sigma_quadratic(4, 5).unwrap(), Rational::from_integer(Int::from(2)));
    assert_eq!(sigma_quadratic(4, 2).unwrap(), Rational::from_integer(Int::from(-1)));
    assert_eq!(sigma_quadratic(4, 0).unwrap(), Rational::from_integer(Int::from(0)));
    assert!(sigma_quadratic(5, 0).is_err());
    assert!(sigma_quadratic(0, 0).is_err());
}

#[test]
fn quadratic_formula_matches_polynomial_row() {
    for s in [4u64, 7, 8, 11, 12, 15, 16] {
        let k = 2 * s + 1;
        for t in 0..k as i64 {
            assert_eq!(
                sigma_quadratic(s, t).unwrap(),
                Rational::from_integer(folded_qproduct(s as u32, k as usize).coeff(t)),
                "s = {s}, t = {t}"
            );
        }
    }
}

#[test]
fn size_formula_known_values() {
    let oracle = enumerate_svt(SvtParams::new(4, 9, 5, 0).unwrap()).unwrap();
    assert_eq!(svt_size(4, 0, 5, 0).unwrap(), Int::from(oracle.size0));
    assert_eq!(svt_size(4, 0, 5, 0).unwrap(), Int::from(2));
    assert_eq!(svt_size(4, 0, 2, 1).unwrap(), Int::from(1));
    let shifted = enumerate_svt(SvtParams::new(5, 9, 0, 0).unwrap()).unwrap();
    assert_eq!(svt_size(4, 1, 0, 0).unwrap(), Int::from(shifted.size0));
}

#[test]
fn size_formula_rejections() {
    assert!(svt_size(0, 0, 0, 0).is_err());
    assert!(svt_size(4, 4, 0, 0).is_err());
    assert!(svt_size(4, 0, 0, 2).is_err());
    assert!(svt_size(1, -3, 0, 0).is_err());
}

#[test]
fn parity_split_corollaries_match_enumeration() {
    for n in 0..=12u32 {
        for k in 1..=(2 * n as u64 + 3) {
            let hist = enumerate_svt_all(n, k).unwrap();
            for t in 0..k as i64 {
                let counts = &hist[t as usize];
                let diff = counts.size0 as i64 - counts.size1 as i64;
                assert_eq!(
                    Int::from(diff),
                    folded_qproduct(n, k as usize).coeff(t),
                    "difference at n = {n}, k = {k}, t = {t}"
                );
                let total = counts.size0 + counts.size1;
                assert_eq!(
                    Int::from(total),
                    eta(k, t, n as u64 + 1).unwrap(),
                    "sum at n = {n}, k = {k}, t = {t}"
                );
            }
        }
    }
}

#[test]
fn size_formula_matches_enumeration_on_delta_grid() {
    for s in [4u64, 7] {
        let k = 2 * s + 1;
        for delta in -3i64..=3 {
            let n = (s as i64 + delta) as u32;
            let hist = enumerate_svt_all(n, k).unwrap();
            for t in 0..k as i64 {
                for r in 0..=1u8 {
                    let size = svt_size(s, delta, t, r).unwrap();
                    let brute = if r == 0 { hist[t as usize].size0 } else { hist[t as usize].size1 };
                    assert_eq!(size, Int::from(brute), "s = {s}, delta = {delta}, t = {t}, r = {r}");
                }
            }
        }
    }
}

#[test]
fn params_validation() {
    assert!(SvtParams::new(4, 0, 0, 0).is_err());
    assert!(SvtParams::new(4, 9, 0, 2).is_err());
    let p = SvtParams::new(4, 9, -1, 1).unwrap();
    assert_eq!(p.t(), 8, "translate reduced into [0, k)");
    assert_eq!((p.n(), p.k(), p.r()), (4, 9, 1));
}
