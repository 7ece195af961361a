//! Exact arithmetic for generalized Ramanujan sums.
//!
//! The central object is the family sigma^(b)_k(t;s): coefficient t of the
//! residue of (1/k^b) (q)_{k-1}^b (q)_{s-1} modulo 1 - q^k, where
//! (q)_m = (1 - q)(1 - q^2)...(1 - q^m). At s = k (and any b) the
//! coefficients collapse to the classical Ramanujan sums c_k(t), and the two
//! interesting slices b = 0 and b = 1 carry a subset-parity count and a
//! coprime-filtered root-of-unity sum respectively.
//!
//! The crate computes these values exactly (arbitrary-precision rationals),
//! cross-validates every route against independent ones (recurrences,
//! Dirichlet convolution, brute-force enumeration, frequency forms), checks
//! the finite trigonometric identities the sums satisfy, and applies the
//! machinery to certified sizes of Shifted Varshamov-Tenengolts
//! single-deletion codes.
//!
//! Modules:
//! - [`numtheory`]: divisors, Moebius, phi, Ramanujan sums c_k(t).
//! - [`qpoly`]: dense and cyclic polynomial arithmetic, q-products, residues.
//! - [`grs`]: sigma tables, recurrences, closed forms, decompositions.
//! - [`trig`]: floating-point verification of the trigonometric identities.
//! - [`svt`]: SVT code sizes with brute-force and closed-form cross-checks.
//! - [`series`]: truncated evaluation of the associated infinite series.

pub mod grs;
pub mod numtheory;
pub mod qpoly;
pub mod report;
pub mod series;
pub mod svt;
pub mod trig;

/// Arbitrary-precision integer used for all exact integer values.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Dense integer polynomial.
pub type IntPoly = qpoly::DensePoly<Int>;

/// Dense rational polynomial.
pub type RatPoly = qpoly::DensePoly<Rational>;

/// Integer residue class modulo 1 - q^k.
pub type IntCyclic = qpoly::CyclicPoly<Int>;

/// Rational residue class modulo 1 - q^k.
pub type RatCyclic = qpoly::CyclicPoly<Rational>;

/// Errors reported by the fallible operations of this crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A parameter lies outside the documented domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A request would exceed a hard capacity guard (for example a
    /// brute-force enumeration over more than 2^30 words).
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// Two routes that must agree produced different values, or a value
    /// violated an integrality or sign constraint it is required to satisfy.
    /// This signals an internal inconsistency, not a usage error.
    #[error("consistency check failed: {0}")]
    Inconsistency(String),
}

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// Converts an exact rational to the nearest f64, for comparing exact
/// values against floating-point sums.
///
/// # Panics
/// Panics if numerator or denominator overflows the f64 range; every value
/// in this crate is far below that.
pub fn rational_to_f64(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    x.numer().to_f64().expect("numerator fits in f64")
        / x.denom().to_f64().expect("denominator fits in f64")
}
