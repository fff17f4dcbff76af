//! Fixed divisors of integer polynomials.
//!
//! The fixed divisor `d(f)` is the gcd of all values `f(x)`, `x` an integer.
//! For `f` of degree `d` it already equals `gcd(f(0), ..., f(d))`, so every
//! routine here only evaluates at those `d + 1` points.
//!
//! The extended fixed divisor in `Int(Z)` is the principal ideal generated by
//! `d(f)`, so [`FixedDivisor`] carries everything needed to describe it.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{factorize, vp};
use crate::error::{Error, Result};
use crate::poly::IntPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedDivisor {
    value: BigInt,
    p_parts: BTreeMap<BigInt, u32>,
}

impl FixedDivisor {
    fn from_value(value: BigInt) -> Self {
        let p_parts = factorize(&value).into_iter().collect();
        Self { value, p_parts }
    }

    /// Nonnegative generator of `d(f)`; zero only for the zero polynomial.
    pub fn value(&self) -> &BigInt {
        &self.value
    }

    /// Prime factorization of [`value`](Self::value); empty for 0 and 1.
    pub fn p_parts(&self) -> &BTreeMap<BigInt, u32> {
        &self.p_parts
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.p_parts.get(&BigInt::from(p)).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }
}

pub fn fixed_divisor(f: &IntPoly) -> FixedDivisor {
    let Some(d) = f.degree() else {
        return FixedDivisor::from_value(BigInt::zero());
    };
    let value = (0..=d as i64).fold(BigInt::zero(), |acc, x| acc.gcd(&f.eval_i64(x)));
    FixedDivisor::from_value(value)
}

pub fn is_image_primitive(f: &IntPoly) -> bool {
    fixed_divisor(f).is_one()
}

/// Exponent of `p` in `d(f)`: the largest `n` with `p^n` dividing every value.
pub fn fixed_divisor_p_part(f: &IntPoly, p: u64) -> Result<u32> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    vp(fixed_divisor(f).value(), p)
}

/// An integer-valued polynomial `F / N`, stored with `gcd(content(F), N) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntValuedPoly {
    numerator: IntPoly,
    denominator: BigInt,
}

impl IntValuedPoly {
    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    /// `d(F) / N`, the fixed divisor of the rational polynomial.
    pub fn fixed_divisor_value(&self) -> BigInt {
        fixed_divisor(&self.numerator).value() / &self.denominator
    }

    /// Value at an integer point; exact because `F / N` is integer-valued.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.numerator.eval(x) / &self.denominator
    }
}

/// Checks that `F / N` maps integers to integers and normalizes the pair.
///
/// On failure the error names an `x` in `0..=deg F` with `N` not dividing `F(x)`.
pub fn validate_integer_valued(numerator: &IntPoly, denominator: &BigInt) -> Result<IntValuedPoly> {
    if !denominator.is_positive() {
        return Err(Error::NonPositiveDenominator(denominator.clone()));
    }
    let g = numerator.content().gcd(denominator);
    let num = IntPoly::new(numerator.coeffs().iter().map(|c| c / &g).collect());
    let den = denominator / &g;
    let deg = num.degree().unwrap_or(0);
    for x in 0..=deg as u64 {
        let value = num.eval(&BigInt::from(x));
        if !value.is_multiple_of(&den) {
            return Err(Error::NotIntegerValued {
                denominator: den,
                witness: x,
                value,
            });
        }
    }
    Ok(IntValuedPoly {
        numerator: num,
        denominator: den,
    })
}
