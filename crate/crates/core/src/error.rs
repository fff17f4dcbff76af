use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(BigInt),
    #[error("exponent must be at least 1, got {0}")]
    ZeroExponent(u32),
    #[error("divisor is not monic")]
    NonMonicDivisor,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("valuation of zero is infinite")]
    ZeroValuation,
    #[error("residue {j} out of range for p = {p} (expected 0 <= j < p)")]
    ResidueOutOfRange { j: u64, p: u64 },
    #[error("index {index} out of range (expected 0..={max})")]
    IndexOutOfRange { index: u64, max: u64 },
    #[error("denominator must be positive, got {0}")]
    NonPositiveDenominator(BigInt),
    #[error("not integer-valued: {denominator} does not divide F({witness}) = {value}")]
    NotIntegerValued {
        denominator: BigInt,
        witness: u64,
        value: BigInt,
    },
    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("polynomial degree {degree} exceeds bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },
    #[error("degree bound {bound} is below the largest generator degree {required}; use a bound of at least {required}")]
    DegreeBoundTooSmall { bound: usize, required: usize },
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("claim {claim} does not apply to p^n = {pp}: {reason}")]
    ClaimMismatch {
        claim: String,
        pp: String,
        reason: String,
    },
    #[error("{what} exceeds the desk-scale cap ({size} > {cap})")]
    CapExceeded { what: String, size: u128, cap: u128 },
}
