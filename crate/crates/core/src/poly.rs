//! Dense univariate polynomials over the integers.
//!
//! Coefficients are stored in ascending order: `coeffs[i]` is the coefficient
//! of `X^i`. The zero polynomial is the empty vector, and every other value
//! has a nonzero leading coefficient.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Serializes as ascending decimal coefficient strings.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<String>", try_from = "Vec<String>")]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Build from ascending coefficients; trailing zeros are dropped.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut poly = Self { coeffs };
        poly.normalize();
        poly
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `X`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// The monic linear polynomial `X - a`.
    pub fn x_minus(a: &BigInt) -> Self {
        Self::new(vec![-a, BigInt::one()])
    }

    /// `X^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Self { coeffs }
    }

    /// `prod_{r in roots} (X - r)`.
    pub fn from_roots<I: IntoIterator<Item = BigInt>>(roots: I) -> Self {
        roots
            .into_iter()
            .fold(Self::one(), |acc, r| acc.mul_linear(&r))
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `X^i`, zero past the end.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial (minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    /// Horner evaluation at an integer.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Multiply by `(X - r)` in place of a full product.
    pub fn mul_linear(&self, r: &BigInt) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + 1] += c;
            out[i] -= c * r;
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiply by `X^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Returns `g` with `g(X) = f(X + a)`.
    pub fn taylor_shift(&self, a: &BigInt) -> Self {
        // Horner in the ring Z[X]: g = (...(c_d (X+a) + c_{d-1})(X+a) + ...) + c_0.
        let mut acc: Vec<BigInt> = Vec::with_capacity(self.coeffs.len());
        for c in self.coeffs.iter().rev() {
            acc.insert(0, BigInt::zero());
            for i in 0..acc.len() - 1 {
                let t = &acc[i + 1] * a;
                acc[i] += t;
            }
            acc[0] += c;
        }
        Self::new(acc)
    }

    /// Euclidean division by a monic polynomial, exact over the integers.
    pub fn divmod_monic(&self, g: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        if !g.is_monic() {
            return Err(Error::NonMonicDivisor);
        }
        let dg = g.coeffs.len() - 1;
        if self.coeffs.len() <= dg {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dg];
        for k in (0..quot.len()).rev() {
            let lead = std::mem::take(&mut rem[k + dg]);
            if lead.is_zero() {
                continue;
            }
            for i in 0..dg {
                rem[k + i] -= &lead * &g.coeffs[i];
            }
            quot[k] = lead;
        }
        rem.truncate(dg);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Synthetic division by `X - a`: returns the quotient and `f(a)`.
    pub fn div_linear(&self, a: &BigInt) -> (IntPoly, BigInt) {
        if self.is_zero() {
            return (Self::zero(), BigInt::zero());
        }
        let n = self.coeffs.len();
        let mut quot = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        for i in (0..n).rev() {
            carry = &self.coeffs[i] + &carry * a;
            if i > 0 {
                quot[i - 1] = carry.clone();
            }
        }
        (Self::new(quot), carry)
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// `f / content(f)`, keeping the sign of the leading coefficient.
    pub fn primitive_part(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let c = self.content();
        Ok(Self {
            coeffs: self.coeffs.iter().map(|x| x / &c).collect(),
        })
    }

    /// Comma-separated ascending coefficients; `"0"` for the zero polynomial.
    pub fn to_comma_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn from_coeff_strings(items: &[String]) -> Result<Self> {
        let coeffs = items
            .iter()
            .map(|s| {
                s.trim().parse::<BigInt>().map_err(|e| Error::Parse {
                    input: s.clone(),
                    reason: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }
}

impl From<IntPoly> for Vec<String> {
    fn from(f: IntPoly) -> Self {
        f.coeff_strings()
    }
}

impl TryFrom<Vec<String>> for IntPoly {
    type Error = Error;
    fn try_from(items: Vec<String>) -> Result<Self> {
        Self::from_coeff_strings(&items)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self)
    }
}

/// Human form, highest degree first: `X^2 - 3*X + 2`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mag = if abs.is_one() && i > 0 {
                String::new()
            } else if i > 0 {
                format!("{}*", abs)
            } else {
                abs.to_string()
            };
            match i {
                0 => write!(f, "{}", mag)?,
                1 => write!(f, "{}X", mag)?,
                _ => write!(f, "{}X^{}", mag, i)?,
            }
        }
        Ok(())
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    /// Accepts `"2,1,1"` (ascending coefficients) or `"X^2+X+2"`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(parse_err(s, "empty input"));
        }
        if compact.contains(['X', 'x']) {
            parse_human(&compact).map_err(|reason| parse_err(s, &reason))
        } else {
            let coeffs = compact
                .split(',')
                .map(|t| {
                    t.parse::<BigInt>()
                        .map_err(|_| parse_err(s, &format!("bad coefficient {:?}", t)))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Self::new(coeffs))
        }
    }
}

fn parse_err(input: &str, reason: &str) -> Error {
    Error::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    }
}

fn parse_human(s: &str) -> std::result::Result<IntPoly, String> {
    let mut coeffs: Vec<BigInt> = Vec::new();
    let bytes = s.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut sign = BigInt::one();
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            if bytes[pos] == b'-' {
                sign = -sign;
            }
            pos += 1;
        } else if pos != 0 {
            return Err(format!("expected '+' or '-' at offset {}", pos));
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let magnitude = if pos > start {
            s[start..pos].parse::<BigInt>().map_err(|e| e.to_string())?
        } else {
            BigInt::one()
        };
        let has_digits = pos > start;
        if pos < bytes.len() && bytes[pos] == b'*' {
            if !has_digits {
                return Err(format!("dangling '*' at offset {}", pos));
            }
            pos += 1;
        }
        let mut exp = 0usize;
        if pos < bytes.len() && (bytes[pos] == b'X' || bytes[pos] == b'x') {
            pos += 1;
            exp = 1;
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                let es = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if es == pos {
                    return Err(format!("missing exponent at offset {}", es));
                }
                exp = s[es..pos].parse::<usize>().map_err(|e| e.to_string())?;
            }
        } else if !has_digits {
            return Err(format!("empty term at offset {}", start));
        }
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, BigInt::zero());
        }
        coeffs[exp] += sign * magnitude;
    }
    Ok(IntPoly::new(coeffs))
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (o, c) in out.iter_mut().zip(&short.coeffs) {
            *o += c;
        }
        IntPoly::new(out)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[2, 1, 1]).eval_i64(3), big(14));
        let huge: BigInt = "1000000000000000000".parse().unwrap();
        assert_eq!(IntPoly::zero().eval(&huge), BigInt::zero());
        let falling = IntPoly::from_roots([0, 1, 2].map(BigInt::from));
        assert_eq!(falling.eval_i64(5), big(60));
    }

    #[test]
    fn zero_is_normalized() {
        assert_eq!(p(&[0, 0, 0]), IntPoly::zero());
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(p(&[7]).degree(), Some(0));
        assert_eq!(&p(&[1, 2]) - &p(&[1, 2]), IntPoly::zero());
    }

    #[test]
    fn taylor_shift_examples() {
        assert_eq!(p(&[0, 0, 1]).taylor_shift(&big(1)), p(&[1, 2, 1]));
        let f = p(&[3, -1, 4, 1, -5]);
        assert_eq!(f.taylor_shift(&big(0)), f);
        // X(X-1) shifted by -1 is (X-1)(X-2); shifted by +1 it is (X+1)X.
        assert_eq!(p(&[0, -1, 1]).taylor_shift(&big(-1)), p(&[2, -3, 1]));
        assert_eq!(p(&[0, -1, 1]).taylor_shift(&big(1)), p(&[0, 1, 1]));
    }

    #[test]
    fn divmod_examples() {
        let (q, r) = p(&[2, 1, 1]).divmod_monic(&p(&[-1, 1])).unwrap();
        assert_eq!((q, r), (p(&[2, 1]), p(&[4])));
        let a = big(7);
        let (q, r) = IntPoly::x_minus(&a).divmod_monic(&IntPoly::x_minus(&a)).unwrap();
        assert_eq!((q, r), (IntPoly::one(), IntPoly::zero()));
        let (q, r) = p(&[0, -2, 1]).divmod_monic(&p(&[-2, 1])).unwrap();
        assert_eq!((q, r), (IntPoly::x(), IntPoly::zero()));
    }

    #[test]
    fn divmod_rejects_non_monic() {
        assert_eq!(
            p(&[1, 1]).divmod_monic(&p(&[1, 2])),
            Err(Error::NonMonicDivisor)
        );
        assert_eq!(
            p(&[1, 1]).divmod_monic(&IntPoly::zero()),
            Err(Error::NonMonicDivisor)
        );
    }

    #[test]
    fn div_linear_matches_divmod() {
        let f = p(&[5, 0, -3, 2, 1]);
        let a = big(-4);
        let (q, r) = f.div_linear(&a);
        let (q2, r2) = f.divmod_monic(&IntPoly::x_minus(&a)).unwrap();
        assert_eq!(q, q2);
        assert_eq!(IntPoly::constant(r.clone()), r2);
        assert_eq!(r, f.eval(&a));
    }

    #[test]
    fn content_examples() {
        let f = p(&[6, 0, 4]);
        assert_eq!(f.content(), big(2));
        assert_eq!(f.primitive_part().unwrap(), p(&[3, 0, 2]));
        assert_eq!(p(&[0, -1, 0, 0, 0, 1]).content(), big(1));
        assert_eq!(IntPoly::zero().content(), big(0));
        assert_eq!(IntPoly::zero().primitive_part(), Err(Error::ZeroPolynomial));
        assert_eq!(p(&[-4, -6]).content(), big(2));
    }

    #[test]
    fn parse_forms() {
        assert_eq!("2,1,1".parse::<IntPoly>().unwrap(), p(&[2, 1, 1]));
        assert_eq!("X^2+X+2".parse::<IntPoly>().unwrap(), p(&[2, 1, 1]));
        assert_eq!("x^4 - 6x^3 + 11*x^2 - 6x".parse::<IntPoly>().unwrap(), p(&[0, -6, 11, -6, 1]));
        assert_eq!("-X".parse::<IntPoly>().unwrap(), p(&[0, -1]));
        assert_eq!("0".parse::<IntPoly>().unwrap(), IntPoly::zero());
        assert_eq!("3X+X".parse::<IntPoly>().unwrap(), p(&[0, 4]));
        for bad in ["", "1,,2", "X^", "2**X", "X^2+", "1,a", "X X"] {
            assert!(bad.parse::<IntPoly>().is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn display_round_trips_through_parser() {
        for c in [&[2, 1, 1][..], &[0, -6, 11, -6, 1], &[-1], &[0, 0, -3]] {
            let f = p(c);
            assert_eq!(f.to_string().parse::<IntPoly>().unwrap(), f);
            assert_eq!(f.to_comma_string().parse::<IntPoly>().unwrap(), f);
        }
    }
}
