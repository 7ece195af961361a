//! Generalized Ramanujan sums sigma^(b)_k(t;s) and their structure theory:
//! the definition route through residue polynomials, forward and backward
//! linear recurrences, the Dirichlet-convolution pair linking b = 0 and
//! b = 1, closed forms, the integrality threshold, and the decomposition of
//! c_s over the residue classes of a divisor.
//!
//! Values come from memoized per-(k, b) tables holding all rows 1 <= s <= k.
//! A table is built once by the definition route (folding (q)_{s-1} modulo
//! 1 - q^k row by row, convolving with the folded (q)_{k-1} for b = 1) and
//! is immutable afterwards; the recurrence routes are separate code paths so
//! the two can be checked against each other.

use std::collections::HashMap;
use std::io::{self, Write};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::numtheory::{divisors, is_prime, moebius, ramanujan_c};
use crate::qpoly::{folded_qproduct, restricted_qproduct};
use crate::{Error, Int, Rational, Result};

/// All values sigma^(b)_k(t;s) for one (k, b): rows 1 <= s <= k, columns
/// 0 <= t < k, exact rationals.
///
/// Row s = k always equals the Ramanujan sums c_k(t); for b = 1 every
/// denominator divides k, and rows with s past the integrality threshold
/// are integral.
#[derive(Clone, Debug)]
pub struct SigmaTable {
    k: u64,
    b: u8,
    rows: Vec<Vec<Rational>>,
}

impl SigmaTable {
    /// The modulus k.
    pub fn k(&self) -> u64 {
        self.k
    }

    /// The exponent b.
    pub fn b(&self) -> u8 {
        self.b
    }

    /// Row s as a slice indexed by t.
    ///
    /// # Panics
    /// Panics if s lies outside [1, k].
    pub fn row(&self, s: u64) -> &[Rational] {
        assert!((1..=self.k).contains(&s), "row index out of range");
        &self.rows[(s - 1) as usize]
    }

    /// The entry sigma^(b)_k(t;s); t is reduced modulo k.
    ///
    /// # Panics
    /// Panics if s lies outside [1, k].
    pub fn value(&self, s: u64, t: i64) -> &Rational {
        let idx = t.rem_euclid(self.k as i64) as usize;
        &self.row(s)[idx]
    }

    fn build_definition(k: u64, b: u8) -> SigmaTable {
        let ku = k as usize;
        let g = (b == 1).then(|| folded_qproduct((k - 1) as u32, ku));
        let den = Int::from(k).pow(b as u32);
        let mut rows = Vec::with_capacity(ku);
        for s in 1..=k {
            let f = folded_qproduct((s - 1) as u32, ku);
            let numer = match &g {
                Some(g) => f.mul(g),
                None => f,
            };
            rows.push(
                numer
                    .coeffs()
                    .iter()
                    .map(|c| Rational::new(c.clone(), den.clone()))
                    .collect(),
            );
        }
        SigmaTable { k, b, rows }
    }
}

static CACHE: OnceLock<Mutex<HashMap<(u64, u8), Arc<SigmaTable>>>> = OnceLock::new();

fn validate_kb(k: u64, b: u8) -> Result<()> {
    if k == 0 {
        return Err(Error::Domain("k must be positive".into()));
    }
    if b > 1 {
        return Err(Error::Domain(format!("b must be 0 or 1; got {b}")));
    }
    Ok(())
}

/// The cached table for (k, b), built on first use by the definition route.
///
/// Duplicate builds are serialized; a completed table is immutable and
/// shared.
pub fn sigma_table(k: u64, b: u8) -> Result<Arc<SigmaTable>> {
    validate_kb(k, b)?;
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("sigma table cache poisoned");
    Ok(guard
        .entry((k, b))
        .or_insert_with(|| Arc::new(SigmaTable::build_definition(k, b)))
        .clone())
}

/// The value sigma^(b)_k(t;s) by the definition route; t is reduced mod k.
///
/// Rejects s outside [1, k].
pub fn sigma(k: u64, b: u8, t: i64, s: u64) -> Result<Rational> {
    validate_kb(k, b)?;
    if s < 1 || s > k {
        return Err(Error::Domain(format!(
            "s must lie in [1, k]; got s = {s}, k = {k}"
        )));
    }
    Ok(sigma_table(k, b)?.value(s, t).clone())
}

/// The value sigma^(b)_k(t;s) computed from freshly folded products,
/// bypassing the table cache. Costs O(sk + b k^2) and builds nothing it
/// does not need, so sweeps that read a few scattered values from many
/// different moduli stay cheap.
pub fn sigma_single(k: u64, b: u8, t: i64, s: u64) -> Result<Rational> {
    validate_kb(k, b)?;
    if s < 1 || s > k {
        return Err(Error::Domain(format!(
            "s must lie in [1, k]; got s = {s}, k = {k}"
        )));
    }
    let ku = k as usize;
    let f = folded_qproduct((s - 1) as u32, ku);
    if b == 0 {
        return Ok(Rational::from_integer(f.coeff(t)));
    }
    let g = folded_qproduct((k - 1) as u32, ku);
    let tm = t.rem_euclid(k as i64) as usize;
    let mut acc = Int::zero();
    for (i, fi) in f.coeffs().iter().enumerate() {
        if fi.is_zero() {
            continue;
        }
        acc += fi * &g.coeffs()[(tm + ku - i) % ku];
    }
    Ok(Rational::new(acc, Int::from(k)))
}

/// Builds the full table by the forward linear recurrence
/// sigma(t;s+1) = sigma(t;s) - sigma(t-s;s), starting from the closed-form
/// row s = 1 (an indicator at t = 0 for b = 0, c_k(t)/k for b = 1).
///
/// This route is independent of the definition route and linear in the
/// number of entries; the two must agree everywhere.
pub fn sigma_table_forward(k: u64, b: u8) -> Result<SigmaTable> {
    validate_kb(k, b)?;
    let ku = k as usize;
    let first: Vec<Rational> = (0..ku)
        .map(|t| {
            if b == 0 {
                Rational::from_integer(Int::from(u64::from(t == 0)))
            } else {
                Rational::new(Int::from(ramanujan_c(k, t as i64)), Int::from(k))
            }
        })
        .collect();
    let mut rows = vec![first];
    for s in 1..k {
        let prev = rows.last().expect("at least one row");
        let su = s as usize;
        let next: Vec<Rational> = (0..ku)
            .map(|t| &prev[t] - &prev[(t + ku - su % ku) % ku])
            .collect();
        rows.push(next);
    }
    Ok(SigmaTable { k, b, rows })
}

/// Reconstructs sigma^(b)_k(t;s) from row s + 1 alone through the weighted
/// sum -(1/k) sum_{j=1}^{k-1} j * sigma(t - js; s+1).
///
/// For b = 0 with s dividing k the weighted sum by itself equals
/// sigma(t;s) - (s/k) c_s(t); the missing term is the contribution of the
/// roots of unity whose order divides s, and it is restored here in closed
/// form, so the result equals `sigma(k, b, t, s)` in every case.
///
/// Rejects s = k (row k + 1 does not exist).
pub fn sigma_backward(k: u64, b: u8, t: i64, s: u64) -> Result<Rational> {
    validate_kb(k, b)?;
    if s < 1 || s >= k {
        return Err(Error::Domain(format!(
            "s must lie in [1, k-1]; got s = {s}, k = {k}"
        )));
    }
    let table = sigma_table(k, b)?;
    let row = table.row(s + 1);
    let ki = k as i64;
    let si = s as i64;
    let mut acc = Rational::zero();
    for j in 1..k {
        let idx = (t - j as i64 * si).rem_euclid(ki) as usize;
        acc += Rational::from_integer(Int::from(j)) * &row[idx];
    }
    let mut val = -(acc / Rational::from_integer(Int::from(k)));
    if b == 0 && k % s == 0 {
        val += Rational::new(Int::from(s) * Int::from(ramanujan_c(s, t)), Int::from(k));
    }
    Ok(val)
}

/// The value sigma^(1)_k(t;s) assembled from Ramanujan sums:
/// (1/k) sum_j a_j c_k(t - j), where a_j are the coefficients of (q)_{s-1}.
///
/// Rejects s outside [1, k].
pub fn sigma_via_c_convolution(k: u64, t: i64, s: u64) -> Result<Rational> {
    if k == 0 {
        return Err(Error::Domain("k must be positive".into()));
    }
    if s < 1 || s > k {
        return Err(Error::Domain(format!(
            "s must lie in [1, k]; got s = {s}, k = {k}"
        )));
    }
    let a = restricted_qproduct((s - 1) as u32);
    let mut acc = Int::zero();
    for (j, aj) in a.coeffs().iter().enumerate() {
        if aj.is_zero() {
            continue;
        }
        acc += aj * Int::from(ramanujan_c(k, t - j as i64));
    }
    Ok(Rational::new(acc, Int::from(k)))
}

/// The Dirichlet-convolution pair linking the two slices: returns
///
/// - (1/k) sum over d | k of d * sigma^(1)_d(t;s), which must equal
///   sigma^(0)_k(t;s), and
/// - (1/k) sum over d | k of mu(k/d) * d * sigma^(0)_d(t;s), which must
///   equal sigma^(1)_k(t;s),
///
/// with sigma^(b)_d(t;s) taken as 0 whenever s > d.
pub fn dirichlet_updown(k: u64, t: i64, s: u64) -> Result<(Rational, Rational)> {
    if k == 0 {
        return Err(Error::Domain("k must be positive".into()));
    }
    if s < 1 || s > k {
        return Err(Error::Domain(format!(
            "s must lie in [1, k]; got s = {s}, k = {k}"
        )));
    }
    let mut up = Rational::zero();
    let mut down = Rational::zero();
    for d in divisors(k) {
        if s > d {
            continue;
        }
        let di = Rational::from_integer(Int::from(d));
        up += &di * sigma(d, 1, t, s)?;
        down += Rational::from_integer(Int::from(moebius(k / d))) * di * sigma(d, 0, t, s)?;
    }
    let kk = Rational::from_integer(Int::from(k));
    Ok((up / &kk, down / kk))
}

/// Closed form at the widest proper row of a prime modulus:
/// sigma^(b)_p(t; p-1) = t - (p+1)/2 for 1 <= t <= p, the same for both b.
///
/// Rejects composite p, p < 3, and t outside [1, p].
pub fn prime_closed_form(p: u64, t: i64) -> Result<Rational> {
    if p < 3 || !is_prime(p) {
        return Err(Error::Domain(format!("p must be an odd prime; got {p}")));
    }
    if t < 1 || t > p as i64 {
        return Err(Error::Domain(format!(
            "t must lie in [1, p]; got t = {t}, p = {p}"
        )));
    }
    Ok(Rational::from_integer(Int::from(t - (p as i64 + 1) / 2)))
}

/// Sums of sigma over the residue classes of a divisor s | k: returns
///
/// - sum over j = 0..k/s-1 of sigma^(0)_k(js + t; s), which equals c_s(t)
///   for every divisor, and
/// - sum over j of sigma^(1)_k(js + t; s), which equals 0 for every proper
///   divisor s < k and collapses to the single term c_k(t) at s = k.
///
/// Rejects s that does not divide k.
pub fn subdivisor_decomposition(k: u64, s: u64, t: i64) -> Result<(Rational, Rational)> {
    if k == 0 {
        return Err(Error::Domain("k must be positive".into()));
    }
    if s < 1 || k % s != 0 {
        return Err(Error::Domain(format!(
            "s must divide k; got s = {s}, k = {k}"
        )));
    }
    let mut sum0 = Rational::zero();
    let mut sum1 = Rational::zero();
    for j in 0..k / s {
        let arg = t + (j * s) as i64;
        sum0 += sigma(k, 0, arg, s)?;
        sum1 += sigma(k, 1, arg, s)?;
    }
    Ok((sum0, sum1))
}

/// The smallest s0 such that rows s >= s0 of the b = 0 and b = 1 tables
/// agree entrywise (so sigma^(1) is integral there), found by scanning the
/// built tables. Equals k/p + 1 for every modulus tested, p the smallest
/// prime factor of k.
///
/// Rejects k < 2.
pub fn integrality_threshold(k: u64) -> Result<u64> {
    if k < 2 {
        return Err(Error::Domain(format!("k must be at least 2; got {k}")));
    }
    let t0 = sigma_table(k, 0)?;
    let t1 = sigma_table(k, 1)?;
    for s in (1..=k).rev() {
        if t0.row(s) != t1.row(s) {
            return Ok(s + 1);
        }
    }
    Ok(1)
}

fn render_value(num: &Int, den: u64) -> String {
    if den == 1 || num.is_zero() {
        return num.to_string();
    }
    let g = num.abs().gcd(&Int::from(den));
    let n = num / &g;
    let d = Int::from(den) / g;
    if d == Int::from(1) {
        n.to_string()
    } else {
        format!("{n}/{d}")
    }
}

struct ForwardRows {
    k: u64,
    s: u64,
    row: Vec<Int>,
}

impl ForwardRows {
    fn new(k: u64, b: u8) -> ForwardRows {
        let row = (0..k)
            .map(|t| {
                if b == 0 {
                    Int::from(u64::from(t == 0))
                } else {
                    Int::from(ramanujan_c(k, t as i64))
                }
            })
            .collect();
        ForwardRows { k, s: 1, row }
    }

    fn advance(&mut self) {
        let ku = self.k as usize;
        let su = (self.s % self.k) as usize;
        let old = self.row.clone();
        for t in 0..ku {
            self.row[t] = &old[t] - &old[(t + ku - su) % ku];
        }
        self.s += 1;
    }
}

/// Streams the full table for (k, b) as CSV: header `s,t=0,...,t=k-1`, one
/// row per s, each value an integer in plain decimal or a reduced `a/b`.
///
/// Rows are generated by the forward recurrence so memory stays linear in
/// k; the output is identical to rendering the definition-route table.
pub fn write_table_csv(k: u64, b: u8, out: &mut dyn Write) -> io::Result<()> {
    write!(out, "s")?;
    for t in 0..k {
        write!(out, ",t={t}")?;
    }
    writeln!(out)?;
    let den = if b == 0 { 1 } else { k };
    let mut rows = ForwardRows::new(k, b);
    for s in 1..=k {
        write!(out, "{s}")?;
        for t in 0..k as usize {
            write!(out, ",{}", render_value(&rows.row[t], den))?;
        }
        writeln!(out)?;
        if s < k {
            rows.advance();
        }
    }
    Ok(())
}

/// Streams the full table for (k, b) as JSON:
/// {"k": k, "b": b, "rows": [{"s": s, "coeffs": [{"num": "...", "den": "..."},
/// ...]}, ...]} with each entry reduced and big integers as decimal strings.
pub fn write_table_json(k: u64, b: u8, out: &mut dyn Write) -> io::Result<()> {
    write!(out, "{{\"k\":{k},\"b\":{b},\"rows\":[")?;
    let den = if b == 0 { 1 } else { k };
    let mut rows = ForwardRows::new(k, b);
    for s in 1..=k {
        if s > 1 {
            write!(out, ",")?;
        }
        write!(out, "{{\"s\":{s},\"coeffs\":[")?;
        for t in 0..k as usize {
            if t > 0 {
                write!(out, ",")?;
            }
            let r = Rational::new(rows.row[t].clone(), Int::from(den));
            write!(out, "{{\"num\":\"{}\",\"den\":\"{}\"}}", r.numer(), r.denom())?;
        }
        write!(out, "]}}")?;
        if s < k {
            rows.advance();
        }
    }
    writeln!(out, "]}}")?;
    Ok(())
}

