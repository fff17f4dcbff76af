//! Named ideal equalities that [`verify_equal`] can check for a given `p^n`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::PrimePower;
use crate::error::{Error, Result};
use crate::lattice::{minimal_degree_bound, verify_equal, VerifyMode, VerifyOutcome};
use crate::poly::IntPoly;
use crate::primary::{component_tail_generators, ipn_generators, Generator, GeneratorSet, Provenance, SpecialCase};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Claim {
    /// `I_p = (p, prod_{j<p} (X - j)) = (p, X^p - X)`.
    #[serde(rename = "pIZ")]
    PIZ,
    /// `I_{p^n} = (p, prod_{j<p} (X - j))^n` for `p >= n`.
    #[serde(rename = "pnIZ")]
    PnIZ,
    /// `I_{p^{p+1}} = (p, prod (X - j))^{p+1} + (prod_{i<p^2} (X - i))`.
    #[serde(rename = "p_plus_1")]
    PPlusOne,
    /// `Q_{n,j} = (p, X - j)^n + (q_{n,m} G_m(X - j) : p <= m <= mbar)` for every `j`.
    #[serde(rename = "components")]
    Components,
}

impl Claim {
    /// The claim matching the closed form used for `pp`.
    pub fn default_for(pp: &PrimePower) -> Self {
        match SpecialCase::of(pp) {
            SpecialCase::N1 => Claim::PIZ,
            SpecialCase::PGeN => Claim::PnIZ,
            SpecialCase::PPlusOne => Claim::PPlusOne,
            SpecialCase::Product => Claim::Components,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Claim::PIZ => "pIZ",
            Claim::PnIZ => "pnIZ",
            Claim::PPlusOne => "p_plus_1",
            Claim::Components => "components",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Claim {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "pIZ" => Ok(Claim::PIZ),
            "pnIZ" => Ok(Claim::PnIZ),
            "p_plus_1" => Ok(Claim::PPlusOne),
            "components" => Ok(Claim::Components),
            other => Err(format!(
                "unknown claim {other:?} (expected pIZ, pnIZ, p_plus_1 or components)"
            )),
        }
    }
}

/// One candidate generator list and the ideal it should equal.
#[derive(Clone, Debug)]
pub struct ClaimTarget {
    pub mode: VerifyMode,
    pub candidate: GeneratorSet,
}

fn mismatch(claim: Claim, pp: &PrimePower, reason: &str) -> Error {
    Error::ClaimMismatch {
        claim: claim.to_string(),
        pp: pp.to_string(),
        reason: reason.to_string(),
    }
}

/// `{p, X^p - X}`.
pub fn fermat_generators(p: u64) -> Result<GeneratorSet> {
    let fermat = &IntPoly::monomial(p as usize) - &IntPoly::x();
    GeneratorSet::from_polys(
        format!("(p, X^p - X) for p={p}"),
        vec![IntPoly::constant(BigInt::from(p)), fermat],
    )
}

/// `(p, B)^e` plus optional extra generators.
fn prime_product_power(p: u64, e: u32, label: String, extra: Option<IntPoly>) -> Result<GeneratorSet> {
    let b = crate::primary::residue_product(p);
    let mut gens: Vec<Generator> = (0..=e)
        .map(|k| Generator {
            poly: b.pow(k).scale(&num_traits::pow(BigInt::from(p), (e - k) as usize)),
            provenance: Provenance::PrimeProductPower { k },
        })
        .collect();
    if let Some(h) = extra {
        gens.push(Generator {
            poly: h,
            provenance: Provenance::FullFalling,
        });
    }
    GeneratorSet::new(label, gens)
}

pub fn claim_targets(claim: Claim, pp: &PrimePower) -> Result<Vec<ClaimTarget>> {
    let (p, n) = (pp.p(), pp.n());
    let full = |candidate| ClaimTarget {
        mode: VerifyMode::Full,
        candidate,
    };
    match claim {
        Claim::PIZ => {
            if n != 1 {
                return Err(mismatch(claim, pp, "requires n = 1"));
            }
            Ok(vec![full(ipn_generators(pp)?), full(fermat_generators(p)?)])
        }
        Claim::PnIZ => Ok(vec![full(prime_product_power(
            p,
            n,
            format!("(p, prod(X-j))^{n} for p={p}"),
            None,
        )?)]),
        Claim::PPlusOne => {
            if u64::from(n) != p + 1 {
                return Err(mismatch(claim, pp, "requires n = p + 1"));
            }
            Ok(vec![full(prime_product_power(
                p,
                n,
                format!("(p, prod(X-j))^{n} + (H) for p={p}"),
                Some(crate::primary::full_falling(p)),
            )?)])
        }
        Claim::Components => (0..p)
            .map(|j| {
                Ok(ClaimTarget {
                    mode: VerifyMode::Component { j },
                    candidate: component_tail_generators(pp, j)?,
                })
            })
            .collect(),
    }
}

#[derive(Clone, Debug)]
pub struct ClaimResult {
    pub target: ClaimTarget,
    pub outcome: VerifyOutcome,
}

/// Runs every target of a claim. Without an explicit bound each target starts
/// at the largest degree among its candidate and canonical generators.
pub fn verify_claim(claim: Claim, pp: &PrimePower, degree_bound: Option<usize>) -> Result<Vec<ClaimResult>> {
    claim_targets(claim, pp)?
        .into_iter()
        .map(|target| {
            let bound = match degree_bound {
                Some(d) => d,
                None => minimal_degree_bound(&target.candidate, pp, target.mode)?.max(1),
            };
            let outcome = verify_equal(&target.candidate, pp, target.mode, bound)?;
            Ok(ClaimResult { target, outcome })
        })
        .collect()
}

/// Counterexample beats inconclusive beats certified.
pub fn overall_outcome(results: &[ClaimResult]) -> &'static str {
    if results
        .iter()
        .any(|r| matches!(r.outcome, VerifyOutcome::Counterexample { .. }))
    {
        "counterexample"
    } else if results.iter().all(|r| r.outcome.is_certified()) {
        "certified-equal"
    } else {
        "inconclusive"
    }
}
