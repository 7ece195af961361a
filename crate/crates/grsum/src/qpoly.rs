//! Exact polynomial arithmetic: dense polynomials over a generic coefficient
//! ring, residue classes modulo 1 - q^k, restricted q-products (q)_m, and
//! parity products prod (1 + q^l).
//!
//! Reduction modulo 1 - q^k is exponent folding: q^k is congruent to 1, so
//! coefficient t of the residue collects every input coefficient whose
//! exponent is congruent to t mod k. Folding equals the remainder under
//! polynomial long division by 1 - q^k and runs in linear time.
//!
//! The coefficient type is generic so that integer-exact pipelines (subset
//! counts, parity products) and rational pipelines (values divided by k^b)
//! share one implementation; the crate root exports the concrete aliases
//! `IntPoly`, `RatPoly`, `IntCyclic`, `RatCyclic`.

use num_traits::{One, Zero};
use std::ops::{Mul, Neg, Sub};

use crate::{Error, Int, Rational, Result};

/// Coefficient-ring bound shared by every polynomial operation here.
pub trait Coeff:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
}

/// Dense polynomial with coefficients indexed by exponent.
///
/// The zero polynomial is stored as an empty coefficient vector; any other
/// value keeps a nonzero leading coefficient, so `degree` is well defined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensePoly<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> DensePoly<T> {
    /// Builds a polynomial from coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        DensePoly {
            coeffs: vec![T::one()],
        }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient slice, lowest exponent first; empty for zero.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of q^i (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// Schoolbook product.
    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let prod = a.clone() * b.clone();
                let cur = std::mem::replace(&mut out[i + j], T::zero());
                out[i + j] = cur + prod;
            }
        }
        Self::from_coeffs(out)
    }

    /// Multiplies in place by 1 - q^l.
    pub fn mul_one_minus_q_pow(&mut self, l: usize) {
        if l == 0 {
            self.coeffs.clear();
            return;
        }
        if self.coeffs.is_empty() {
            return;
        }
        let new_len = self.coeffs.len() + l;
        self.coeffs.resize(new_len, T::zero());
        for j in (l..new_len).rev() {
            let sub = self.coeffs[j - l].clone();
            let cur = std::mem::replace(&mut self.coeffs[j], T::zero());
            self.coeffs[j] = cur - sub;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Multiplies in place by 1 + q^l.
    pub fn mul_one_plus_q_pow(&mut self, l: usize) {
        if self.coeffs.is_empty() {
            return;
        }
        if l == 0 {
            for c in &mut self.coeffs {
                let cur = std::mem::replace(c, T::zero());
                *c = cur.clone() + cur;
            }
            return;
        }
        let new_len = self.coeffs.len() + l;
        self.coeffs.resize(new_len, T::zero());
        for j in (l..new_len).rev() {
            let add = self.coeffs[j - l].clone();
            let cur = std::mem::replace(&mut self.coeffs[j], T::zero());
            self.coeffs[j] = cur + add;
        }
    }

    /// Value at q = 1, i.e. the coefficient sum.
    pub fn eval_one(&self) -> T {
        self.coeffs
            .iter()
            .fold(T::zero(), |acc, c| acc + c.clone())
    }

    /// Applies `f` to every coefficient.
    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> DensePoly<U> {
        DensePoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

/// Residue class modulo 1 - q^k: exactly k coefficients, coeffs[t] on q^t.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicPoly<T> {
    order: usize,
    coeffs: Vec<T>,
}

impl<T: Coeff> CyclicPoly<T> {
    /// The zero residue of the given order.
    ///
    /// # Panics
    /// Panics if `order` is zero.
    pub fn zero(order: usize) -> Self {
        assert!(order >= 1, "cyclic order must be positive");
        CyclicPoly {
            order,
            coeffs: vec![T::zero(); order],
        }
    }

    /// The residue of the constant polynomial 1.
    pub fn one(order: usize) -> Self {
        let mut out = Self::zero(order);
        out.coeffs[0] = T::one();
        out
    }

    /// Builds a residue directly from exactly `order` coefficients.
    ///
    /// # Panics
    /// Panics if the vector length differs from a positive `order`.
    pub fn from_coeffs(order: usize, coeffs: Vec<T>) -> Self {
        assert!(order >= 1, "cyclic order must be positive");
        assert_eq!(coeffs.len(), order, "coefficient count must equal order");
        CyclicPoly { order, coeffs }
    }

    /// The modulus order k.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient slice of length k.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of q^(t mod k); any integer t is accepted.
    pub fn coeff(&self, t: i64) -> T {
        let idx = t.rem_euclid(self.order as i64) as usize;
        self.coeffs[idx].clone()
    }

    /// Cyclic product: coefficient t of the result collects a_i * b_j over
    /// all i + j congruent to t mod k.
    ///
    /// # Panics
    /// Panics if the orders differ.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "cyclic orders must match");
        let k = self.order;
        let mut out = vec![T::zero(); k];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let idx = (i + j) % k;
                let prod = a.clone() * b.clone();
                let cur = std::mem::replace(&mut out[idx], T::zero());
                out[idx] = cur + prod;
            }
        }
        CyclicPoly {
            order: k,
            coeffs: out,
        }
    }

    /// Multiplies in place by the residue of 1 - q^l; exponents wrap mod k,
    /// so l that is a multiple of k annihilates the value.
    pub fn mul_one_minus_q_pow(&mut self, l: usize) {
        let k = self.order;
        let lm = l % k;
        if lm == 0 {
            for c in &mut self.coeffs {
                *c = T::zero();
            }
            return;
        }
        let old = self.coeffs.clone();
        for j in 0..k {
            let sub = old[(j + k - lm) % k].clone();
            let cur = std::mem::replace(&mut self.coeffs[j], T::zero());
            self.coeffs[j] = cur - sub;
        }
    }

    /// Multiplies in place by the residue of 1 + q^l; l that is a multiple
    /// of k doubles the value.
    pub fn mul_one_plus_q_pow(&mut self, l: usize) {
        let k = self.order;
        let lm = l % k;
        if lm == 0 {
            for c in &mut self.coeffs {
                let cur = std::mem::replace(c, T::zero());
                *c = cur.clone() + cur;
            }
            return;
        }
        let old = self.coeffs.clone();
        for j in 0..k {
            let add = old[(j + k - lm) % k].clone();
            let cur = std::mem::replace(&mut self.coeffs[j], T::zero());
            self.coeffs[j] = cur + add;
        }
    }

    /// Coefficient sum, the value at q = 1.
    pub fn eval_one(&self) -> T {
        self.coeffs
            .iter()
            .fold(T::zero(), |acc, c| acc + c.clone())
    }

    /// Applies `f` to every coefficient.
    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> CyclicPoly<U> {
        CyclicPoly {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl CyclicPoly<Rational> {
    /// JSON form {"k": k, "coeffs": [{"num": "...", "den": "..."}, ...]}
    /// with numerators and denominators as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|c| {
                serde_json::json!({
                    "num": c.numer().to_string(),
                    "den": c.denom().to_string(),
                })
            })
            .collect();
        serde_json::json!({ "k": self.order, "coeffs": coeffs })
    }
}

/// The restricted q-product (q)_m = prod over l = 1..m of (1 - q^l), with
/// (q)_0 = 1. Coefficient j is the signed count of subsets of {1..m} with
/// element sum j, even-sized subsets counting +1 and odd-sized -1.
pub fn restricted_qproduct(m: u32) -> DensePoly<Int> {
    let mut p = DensePoly::one();
    for l in 1..=m {
        p.mul_one_minus_q_pow(l as usize);
    }
    p
}

/// The parity product prod over l = 1..m of (1 + q^l); coefficient j counts
/// the subsets of {1..m} with element sum j.
pub fn parity_product(m: u32) -> DensePoly<Int> {
    let mut p = DensePoly::one();
    for l in 1..=m {
        p.mul_one_plus_q_pow(l as usize);
    }
    p
}

/// Residue of `p` modulo 1 - q^k by exponent folding.
///
/// # Panics
/// Panics if `k` is zero.
pub fn cyclic_reduce<T: Coeff>(p: &DensePoly<T>, k: usize) -> CyclicPoly<T> {
    let mut out = CyclicPoly::zero(k);
    for (i, c) in p.coeffs().iter().enumerate() {
        let idx = i % k;
        let cur = std::mem::replace(&mut out.coeffs[idx], T::zero());
        out.coeffs[idx] = cur + c.clone();
    }
    out
}

/// Residue of (q)_m modulo 1 - q^k, built factor by factor on the residue
/// so intermediate degrees never exceed k.
pub fn folded_qproduct(m: u32, k: usize) -> CyclicPoly<Int> {
    let mut p = CyclicPoly::one(k);
    for l in 1..=m {
        p.mul_one_minus_q_pow(l as usize);
    }
    p
}

/// Residue of the parity product prod (1 + q^l), l = 1..m, modulo 1 - q^k,
/// built factor by factor on the residue.
pub fn folded_parity_product(m: u32, k: usize) -> CyclicPoly<Int> {
    let mut p = CyclicPoly::one(k);
    for l in 1..=m {
        p.mul_one_plus_q_pow(l as usize);
    }
    p
}

/// The residue polynomial whose coefficient t is sigma^(b)_k(t;s): the
/// residue of (1/k^b) (q)_{k-1}^b (q)_{s-1} modulo 1 - q^k, as exact
/// rationals.
///
/// Rejects s outside [1, k]. Any b >= 0 is accepted; values for b >= 2
/// coincide with b = 1.
pub fn remainder_poly(k: u64, s: u64, b: u32) -> Result<CyclicPoly<Rational>> {
    if k == 0 {
        return Err(Error::Domain("k must be positive".into()));
    }
    if s < 1 || s > k {
        return Err(Error::Domain(format!(
            "s must lie in [1, k]; got s = {s}, k = {k}"
        )));
    }
    let ku = k as usize;
    let mut f = folded_qproduct((s - 1) as u32, ku);
    if b > 0 {
        let g = folded_qproduct((k - 1) as u32, ku);
        for _ in 0..b {
            f = f.mul(&g);
        }
    }
    let den = Int::from(k).pow(b);
    Ok(f.map(|c| Rational::new(c.clone(), den.clone())))
}
