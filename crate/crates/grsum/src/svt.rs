//! Sizes of Shifted Varshamov-Tenengolts codes.
//!
//! SVT_{t,r}(n; k) is the set of binary words b_1..b_n whose position sum
//! PS = sum j b_j is congruent to t mod k and whose Hamming weight is
//! congruent to r mod 2. Three routes to its size are implemented and
//! cross-checked:
//!
//! - brute-force enumeration of all 2^n words,
//! - the counting route (eta(k, t, n+1) + (-1)^r sigma^(0)_k(t; n+1)) / 2,
//!   where eta counts words by position sum alone and sigma^(0) is the
//!   signed count, both read off exact cyclic polynomial products,
//! - closed forms for the modulus k = 2s + 1: a divisor sum for the total
//!   over both parities and a quadratic root-of-unity sum for sigma^(0).
//!
//! The word length n is the primitive parameter everywhere; the modulus
//! k = 2s + 1 of the closed forms is tied to s, not to n, and [`svt_size`]
//! accepts lengths n = s + delta for small delta.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::numtheory::{divisors, ramanujan_c};
use crate::qpoly::{cyclic_reduce, folded_parity_product, folded_qproduct, parity_product};
use crate::report::{DeviationTracker, VerificationReport};
use crate::{Error, Int, Rational, Result};

/// Parameters selecting one SVT code: word length n, modulus k, residue t
/// (stored reduced mod k), and weight parity r.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SvtParams {
    n: u32,
    k: u64,
    t: i64,
    r: u8,
}

impl SvtParams {
    /// Validates k >= 1 and r in {0, 1}, and reduces t modulo k.
    pub fn new(n: u32, k: u64, t: i64, r: u8) -> Result<Self> {
        if k == 0 {
            return Err(Error::Domain("modulus k must be positive".into()));
        }
        if r > 1 {
            return Err(Error::Domain(format!("parity r must be 0 or 1; got {r}")));
        }
        Ok(SvtParams {
            n,
            k,
            t: t.rem_euclid(k as i64),
            r,
        })
    }

    /// Word length.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Modulus.
    pub fn k(&self) -> u64 {
        self.k
    }

    /// Residue, reduced into [0, k).
    pub fn t(&self) -> i64 {
        self.t
    }

    /// Weight parity.
    pub fn r(&self) -> u8 {
        self.r
    }
}

/// Word counts for one (n, k, t), split by Hamming weight parity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SvtCounts {
    /// Words of even weight.
    pub size0: u64,
    /// Words of odd weight.
    pub size1: u64,
}

fn walk(pos: u32, n: u32, k: u64, ps: u64, parity: u8, hist: &mut [SvtCounts]) {
    if pos > n {
        let cell = &mut hist[ps as usize];
        if parity == 0 {
            cell.size0 += 1;
        } else {
            cell.size1 += 1;
        }
        return;
    }
    walk(pos + 1, n, k, ps, parity, hist);
    walk(pos + 1, n, k, (ps + u64::from(pos)) % k, parity ^ 1, hist);
}

/// Enumerates all 2^n binary words of length n and tallies them by position
/// sum mod k and weight parity. Entry t of the result holds the counts for
/// residue t.
///
/// Rejects n > 30.
pub fn enumerate_svt_all(n: u32, k: u64) -> Result<Vec<SvtCounts>> {
    if k == 0 {
        return Err(Error::Domain("modulus k must be positive".into()));
    }
    if n > 30 {
        return Err(Error::Capacity(format!(
            "enumeration over 2^{n} words refused; n must be at most 30"
        )));
    }
    let mut hist = vec![SvtCounts::default(); k as usize];
    walk(1, n, k, 0, 0, &mut hist);
    Ok(hist)
}

/// Brute-force counts for one parameter set; the parity split for residue
/// `p.t()` regardless of `p.r()`.
pub fn enumerate_svt(p: SvtParams) -> Result<SvtCounts> {
    let hist = enumerate_svt_all(p.n, p.k)?;
    Ok(hist[p.t as usize])
}

/// eta_k(t; s): the number of binary words of length s - 1 with position
/// sum congruent to t mod k, read off as coefficient t of
/// (1 + q)(1 + q^2)...(1 + q^{s-1}) reduced mod 1 - q^k.
///
/// Rejects s = 0.
pub fn eta(k: u64, t: i64, s: u64) -> Result<Int> {
    if k == 0 {
        return Err(Error::Domain("modulus k must be positive".into()));
    }
    if s == 0 {
        return Err(Error::Domain("s must be at least 1".into()));
    }
    let m = u32::try_from(s - 1)
        .map_err(|_| Error::Capacity(format!("product length {} too large", s - 1)))?;
    Ok(folded_parity_product(m, k as usize).coeff(t))
}

/// Verifies both eta recurrences exactly for 1 <= s <= s_max and all t:
///
/// - forward:  eta(t; s+1) = eta(t; s) + eta(t - s; s), and
/// - backward: eta(t; s) = (1/2) sum_{j=0}^{k-1} (-1)^j eta(t - js; s+1).
///
/// The rows are recomputed here from dense products so the check does not
/// share code with [`eta`]'s folded route. Rejects even k: the backward
/// inversion needs 1 + q^s to be invertible mod 1 - q^k, which fails for
/// even k.
pub fn eta_recurrences_check(k: u64, s_max: u64) -> Result<VerificationReport> {
    if k == 0 || k % 2 == 0 {
        return Err(Error::Domain(format!("k must be odd and positive; got {k}")));
    }
    let ku = k as usize;
    let rows: Vec<Vec<Int>> = (0..=s_max)
        .map(|s| cyclic_reduce(&parity_product(s as u32), ku).coeffs().to_vec())
        .collect();
    let mut tr = DeviationTracker::new(0.0);
    for s in 1..=s_max {
        let cur = &rows[(s - 1) as usize];
        let next = &rows[s as usize];
        let si = s as i64;
        for t in 0..k as i64 {
            let fwd = &cur[t as usize] + &cur[(t - si).rem_euclid(k as i64) as usize];
            tr.observe_exact(next[t as usize] == fwd, || {
                format!("forward, k = {k}, s = {s}, t = {t}")
            });
            let mut acc = Int::zero();
            for j in 0..k as i64 {
                let term = &next[(t - j * si).rem_euclid(k as i64) as usize];
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            let ok = acc.is_even() && acc / 2 == cur[t as usize];
            tr.observe_exact(ok, || format!("backward, k = {k}, s = {s}, t = {t}"));
        }
    }
    Ok(tr.finish(
        "eta_recurrences",
        format!("k = {k}, 1 <= s <= {s_max}, all t"),
    ))
}

/// Total SVT code size over both parities at word length s and modulus
/// k = 2s + 1, by the divisor sum
///
/// (1/k) sum_{d | k} (-1)^((d-I)/4) 2^((k-d)/(2d)) c_d(a_d - t)
///
/// with I = +1 for d = 1 mod 4, I = -1 otherwise, and translate
/// a_d = (d - I)(3d + I)/16. Must equal `eta(2s+1, t, s+1)`.
///
/// Returns an internal consistency error if the divisor sum fails to be a
/// nonnegative multiple of k.
pub fn svt_total_closed_form(s: u64, t: i64) -> Result<Int> {
    if s == 0 {
        return Err(Error::Domain("s must be at least 1".into()));
    }
    let k = 2 * s + 1;
    let mut acc = Int::zero();
    for d in divisors(k) {
        let di = d as i64;
        let i = if d % 4 == 1 { 1i64 } else { -1 };
        let a_d = (di - i) * (3 * di + i) / 16;
        let pow = Int::from(1u8) << ((k - d) / (2 * d));
        let term = pow * Int::from(ramanujan_c(d, a_d - t));
        if ((di - i) / 4) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    let (q, rem) = acc.div_rem(&Int::from(k));
    if !rem.is_zero() || q.is_negative() {
        return Err(Error::Inconsistency(format!(
            "divisor sum for s = {s}, t = {t} is not a nonnegative multiple of {k}"
        )));
    }
    Ok(q)
}

fn exact_sqrt(k: u64) -> Option<u64> {
    let r = (k as f64).sqrt().round() as u64;
    (r * r == k).then_some(r)
}

/// sigma^(0)_{2s+1}(t; s+1) by the quadratic root-of-unity route
///
/// (1/k) sum_{j=0}^{k-1} c_k(j^2 + s(s+1)/4 - t),    k = 2s + 1,
///
/// valid when 4 | s or 4 | (s + 1). When k is a perfect square the value
/// also equals c_k(s(s+1)/4 - t) / sqrt(k); that branch is computed too and
/// a mismatch raises an internal consistency error.
pub fn sigma_quadratic(s: u64, t: i64) -> Result<Rational> {
    if s == 0 {
        return Err(Error::Domain("s must be at least 1".into()));
    }
    if s % 4 != 0 && (s + 1) % 4 != 0 {
        return Err(Error::Domain(format!(
            "neither s nor s + 1 is divisible by 4; got s = {s}"
        )));
    }
    let k = 2 * s + 1;
    let m = ((s as u128 * (s as u128 + 1) / 4) % k as u128) as i64;
    let mut acc = 0i64;
    for j in 0..k {
        let jsq = ((j as u128 * j as u128) % k as u128) as i64;
        acc += ramanujan_c(k, jsq + m - t);
    }
    let value = Rational::new(Int::from(acc), Int::from(k));
    if let Some(root) = exact_sqrt(k) {
        let alt = Rational::new(Int::from(ramanujan_c(k, m - t)), Int::from(root));
        if alt != value {
            return Err(Error::Inconsistency(format!(
                "square-modulus branch disagrees at s = {s}, t = {t}: \
                 {alt} vs {value}"
            )));
        }
    }
    Ok(value)
}

/// |SVT_{t,r}(s + delta; 2s + 1)|: the size of the code with word length
/// n = s + delta and modulus k = 2s + 1, by the counting formula
///
/// (1/2) (eta_k(t; n+1) + (-1)^r sigma^(0)_k(t; n+1)).
///
/// Accepts delta in [-3, 3] with n >= 0 and r in {0, 1}. The half-sum is
/// asserted integral and nonnegative; for delta = 0 with 4 | s or
/// 4 | (s+1), the sigma term is additionally cross-computed through
/// [`sigma_quadratic`]. Violations raise internal consistency errors.
pub fn svt_size(s: u64, delta: i64, t: i64, r: u8) -> Result<Int> {
    if s == 0 {
        return Err(Error::Domain("s must be at least 1".into()));
    }
    if !(-3..=3).contains(&delta) {
        return Err(Error::Domain(format!(
            "delta must lie in [-3, 3]; got {delta}"
        )));
    }
    if r > 1 {
        return Err(Error::Domain(format!("parity r must be 0 or 1; got {r}")));
    }
    let n = s as i64 + delta;
    if n < 0 {
        return Err(Error::Domain(format!(
            "word length s + delta = {n} must be nonnegative"
        )));
    }
    let n = u32::try_from(n)
        .map_err(|_| Error::Capacity(format!("word length {n} too large")))?;
    let k = 2 * s + 1;
    let eta_t = folded_parity_product(n, k as usize).coeff(t);
    let sigma_t = folded_qproduct(n, k as usize).coeff(t);
    if delta == 0 && (s % 4 == 0 || (s + 1) % 4 == 0) {
        let quad = sigma_quadratic(s, t)?;
        if Rational::from_integer(sigma_t.clone()) != quad {
            return Err(Error::Inconsistency(format!(
                "quadratic route disagrees with the polynomial route at \
                 s = {s}, t = {t}: {quad} vs {sigma_t}"
            )));
        }
    }
    let signed = if r == 0 { eta_t + sigma_t } else { eta_t - sigma_t };
    if signed.is_odd() || signed.is_negative() {
        return Err(Error::Inconsistency(format!(
            "count formula gave an odd or negative value {signed} at \
             s = {s}, delta = {delta}, t = {t}, r = {r}"
        )));
    }
    Ok(signed / 2)
}
