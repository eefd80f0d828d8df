//! Arithmetic modulo an odd prime and evaluation of finite multiple zeta values.

mod cache;
mod eval;
mod zmap;

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub use eval::{
    bernoulli_mod, brute_oracle, fmzv_eval, fmzv_t_eval, t_poly_from_strict, z_a_single,
};
pub use cache::{CacheRecord, EvalCache, LoadStats, CACHE_FILE};
pub use zmap::{
    reduce_rational, reduce_tpoly, z_map_index, z_map_index_plain, z_map_word, z_map_word_plain,
    Evaluator,
};

/// Residue in `[0, p)`.
pub type FpScalar = u64;

/// Largest prime the engine accepts.
pub const MAX_PRIME: u64 = 10_000;

fn smallest_factor(n: u64) -> Option<u64> {
    if n.is_multiple_of(2) {
        return Some(2);
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return Some(d);
        }
        d += 2;
    }
    None
}

pub fn is_odd_prime(n: u64) -> bool {
    n >= 3 && smallest_factor(n).is_none()
}

/// Odd primes in `[lo, hi]`, ascending.
pub fn primes_between(lo: u64, hi: u64) -> Vec<u64> {
    (lo.max(3)..=hi).filter(|&n| is_odd_prime(n)).collect()
}

#[derive(Debug)]
pub struct PrimeCtx {
    p: u64,
    inv: Vec<u64>,
    bernoulli: OnceLock<Vec<u64>>,
}

impl PrimeCtx {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 {
            return Err(Error::NotPrime { p, witness: p.max(1) });
        }
        if let Some(witness) = smallest_factor(p) {
            return Err(Error::NotPrime { p, witness });
        }
        if p > MAX_PRIME {
            return Err(Error::OutOfRange(format!("prime {p} exceeds the limit {MAX_PRIME}")));
        }
        let mut inv = vec![0u64; p as usize];
        if p > 1 {
            inv[1] = 1;
        }
        // inv(m) = -(p / m) * inv(p mod m)
        for m in 2..p {
            inv[m as usize] = (p - (p / m) * inv[(p % m) as usize] % p) % p;
        }
        Ok(Self {
            p,
            inv,
            bernoulli: OnceLock::new(),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Inverse table indexed by residue; entry 0 is unused and set to 0.
    pub fn inverses(&self) -> &[u64] {
        &self.inv
    }

    pub fn inv(&self, a: u64) -> u64 {
        self.inv[(a % self.p) as usize]
    }

    pub fn reduce(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let (mut base, mut acc) = (a % self.p, 1 % self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub(crate) fn bernoulli_table(&self) -> &[u64] {
        self.bernoulli.get_or_init(|| eval::bernoulli_table(self))
    }
}

/// Polynomial in `t` over `F_p`, constant term first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn zero(p: u64) -> Self {
        Self { p, coeffs: Vec::new() }
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::from_coeffs(p, vec![c])
    }

    pub fn from_coeffs(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { p, coeffs }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u64> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, n: usize) -> u64 {
        self.coeffs.get(n).copied().unwrap_or(0)
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.p, other.p, "polynomials over different primes");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|i| (self.coeff(i) + other.coeff(i)) % self.p).collect();
        Self::from_coeffs(self.p, v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n)
            .map(|i| (self.coeff(i) + self.p - other.coeff(i)) % self.p)
            .collect();
        Self::from_coeffs(self.p, v)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let mut v = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] = (v[i + j] + a * b) % self.p;
            }
        }
        Self::from_coeffs(self.p, v)
    }

    pub fn scale(&self, c: u64) -> Self {
        Self::from_coeffs(self.p, self.coeffs.iter().map(|a| a * (c % self.p)).collect())
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, c| (acc * (x % self.p) + c) % self.p)
    }

    /// `q(a + b t)`.
    pub fn compose_affine(&self, a: u64, b: u64) -> Self {
        let lin = Self::from_coeffs(self.p, vec![a, b]);
        self.coeffs.iter().rev().fold(Self::zero(self.p), |acc, &c| {
            acc.mul(&lin).add(&Self::constant(self.p, c))
        })
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} mod {}", self.coeffs, self.p)
    }
}
