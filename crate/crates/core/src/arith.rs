//! Integer helpers: primality, prime powers and p-adic valuations.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Deterministic trial division up to the square root.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A prime `p` together with an exponent `n >= 1`; `p^n` is cached.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPrimePower", into = "RawPrimePower")]
pub struct PrimePower {
    p: u64,
    n: u32,
    modulus: BigInt,
}

#[derive(Serialize, Deserialize)]
struct RawPrimePower {
    p: u64,
    n: u32,
}

impl TryFrom<RawPrimePower> for PrimePower {
    type Error = Error;
    fn try_from(raw: RawPrimePower) -> Result<Self> {
        PrimePower::new(raw.p, raw.n)
    }
}

impl From<PrimePower> for RawPrimePower {
    fn from(pp: PrimePower) -> Self {
        RawPrimePower { p: pp.p, n: pp.n }
    }
}

impl PrimePower {
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(BigInt::from(p)));
        }
        if n == 0 {
            return Err(Error::ZeroExponent(n));
        }
        Ok(Self {
            p,
            n,
            modulus: num_traits::pow(BigInt::from(p), n as usize),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn prime(&self) -> BigInt {
        BigInt::from(self.p)
    }

    /// `p^n`.
    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    /// `p^n` as a machine word when it fits.
    pub fn modulus_u64(&self) -> Option<u64> {
        self.modulus.to_u64()
    }

    /// Returns `p^e`.
    pub fn prime_pow(&self, e: u32) -> BigInt {
        num_traits::pow(self.prime(), e as usize)
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.n)
    }
}

/// Exact p-adic valuation of a nonzero integer.
pub fn vp(x: &BigInt, p: u64) -> Result<u32> {
    if x.is_zero() {
        return Err(Error::ZeroValuation);
    }
    let p = BigInt::from(p);
    let mut x = x.abs();
    let mut v = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return Ok(v);
        }
        x = q;
        v += 1;
    }
}

/// Valuation, treating zero as divisible by every power.
pub fn vp_or_inf(x: &BigInt, p: u64) -> Option<u32> {
    vp(x, p).ok()
}

/// Legendre's formula: `v_p(k!) = sum_{i >= 1} floor(k / p^i)`.
pub fn vp_factorial(k: u64, p: u64) -> u64 {
    let mut total = 0;
    let mut q = k;
    while q > 0 {
        q /= p;
        total += q;
    }
    total
}

/// `v_p((p m)!) = m + v_p(m!)`.
pub fn vp_pk_factorial(m: u64, p: u64) -> u64 {
    m + vp_factorial(m, p)
}

/// Prime factorization by trial division, ascending primes.
pub fn factorize(value: &BigInt) -> Vec<(BigInt, u32)> {
    let mut rest = value.abs();
    let mut out = Vec::new();
    if rest.is_zero() || rest.is_one() {
        return out;
    }
    let mut d = BigInt::from(2u32);
    while &d * &d <= rest {
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&d);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d += if d == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if !rest.is_one() {
        out.push((rest, 1));
    }
    out
}
