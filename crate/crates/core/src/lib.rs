//! Fixed divisors of integer polynomials and the primary decomposition of
//! the ideal `I_{p^n}` of integer polynomials whose values are all divisible
//! by a prime power.
//!
//! - [`poly`] and [`arith`]: exact polynomial and valuation arithmetic.
//! - [`fixdiv`]: fixed divisors, their p-parts and integer-valued quotients.
//! - [`primary`]: the components `Q_{n,j}`, their generators and membership
//!   certificates, and closed forms for `I_{p^n}`.
//! - [`lattice`]: brute-force residue scans and truncated HNF lattices used to
//!   cross-check the above; [`claims`] packages the ideal equalities.
//! - [`table`] and [`cli`]: JSON tables and the `ivpoly` front end.

pub mod arith;
pub mod claims;
pub mod cli;
pub mod error;
pub mod fixdiv;
pub mod lattice;
pub mod poly;
pub mod primary;
pub mod table;

pub use arith::PrimePower;
pub use error::{Error, Result};
pub use poly::IntPoly;
