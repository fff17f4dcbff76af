//! Primary decomposition of `I_{p^n}`, the ideal of integer polynomials whose
//! values are all divisible by `p^n`.
//!
//! `I_{p^n}` is the intersection (equivalently the product) of the `p`
//! primary components
//!
//! ```text
//! Q_{n,j} = { f : p^n | f(i) for every i = j (mod p) },   0 <= j < p,
//! ```
//!
//! each `(p, X - j)`-primary. With `G_m(X) = prod_{h<m} (X - h p)` and
//! `mbar` the least `m` with `v_p((p m)!) >= n`, the component is generated by
//! `q_{n,m} G_m(X - j)` for `m = 0..=mbar`, where `q_{n,m} = p^{n - v_p((pm)!)}`
//! below `mbar` and `1` at `mbar`.
//!
//! Membership is decided through the expansion of `f` in the basis
//! `G_k(X - j)`: `f` lies in `Q_{n,j}` exactly when every coefficient of index
//! `k < mbar` is divisible by `q_{n,k}`. The coefficients double as an explicit
//! certificate, see [`ComponentCertificate::multipliers`].

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{vp, vp_pk_factorial, PrimePower};
use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Largest generator count the product-of-components expansion may emit.
pub const PRODUCT_CAP: u128 = 100_000;

fn check_residue(j: u64, p: u64) -> Result<()> {
    if j >= p {
        return Err(Error::ResidueOutOfRange { j, p });
    }
    Ok(())
}

/// The contraction `(p^n, X - a)` of a power of a maximal ideal of `Int(Z)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContractionIdeal {
    pp: PrimePower,
    a: BigInt,
}

impl ContractionIdeal {
    /// `a` is reduced into `[0, p^n)`; ideals with congruent `a` coincide.
    pub fn new(pp: PrimePower, a: &BigInt) -> Self {
        let a = a.mod_floor(pp.modulus());
        Self { pp, a }
    }

    pub fn prime_power(&self) -> &PrimePower {
        &self.pp
    }

    pub fn point(&self) -> &BigInt {
        &self.a
    }

    /// The `j` with `(p, X - j)` the radical of this ideal.
    pub fn residue_class(&self) -> u64 {
        let r: BigInt = self.a.mod_floor(&self.pp.prime());
        r.try_into().expect("residue below p")
    }

    pub fn contains(&self, f: &IntPoly) -> bool {
        contraction_membership(f, self)
    }
}

/// `f in (p^n, X - a)` iff `p^n | f(a)`.
pub fn contraction_membership(f: &IntPoly, ideal: &ContractionIdeal) -> bool {
    f.eval(&ideal.a).is_multiple_of(ideal.pp.modulus())
}

/// `G_k(X - j) = prod_{h<k} (X - j - h p)`; `G_0 = 1`.
pub fn big_g(k: u64, p: u64, j: u64) -> Result<IntPoly> {
    check_residue(j, p)?;
    Ok(IntPoly::from_roots(
        (0..k).map(|h| BigInt::from(j) + BigInt::from(h) * BigInt::from(p)),
    ))
}

/// Least `m` with `v_p((p m)!) >= n`.
pub fn m_bar(pp: &PrimePower) -> u64 {
    let n = u64::from(pp.n());
    (0..)
        .find(|&m| vp_pk_factorial(m, pp.p()) >= n)
        .expect("v_p((pm)!) is unbounded")
}

/// Scalar `q_{n,m}` for `0 <= m <= mbar`.
pub fn q_coeff(pp: &PrimePower, m: u64) -> Result<BigInt> {
    let mbar = m_bar(pp);
    if m > mbar {
        return Err(Error::IndexOutOfRange { index: m, max: mbar });
    }
    if m == mbar {
        return Ok(BigInt::one());
    }
    let e = vp_pk_factorial(m, pp.p());
    Ok(pp.prime_pow(pp.n() - e as u32))
}

/// Which formula produced a generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    /// `q_{n,m} G_m(X - j)`.
    ComponentBasis { j: u64, m: u64 },
    /// `p^{n-i} (X - j)^i`, a generator of `(p, X - j)^n`.
    MaximalPower { j: u64, i: u32 },
    /// `p^{n-k} B(X)^k` with `B = prod_{j<p} (X - j)`.
    PrimeProductPower { k: u32 },
    /// `H(X) = prod_{i < p^2} (X - i)`.
    FullFalling,
    /// Product over `j` of `q_{n,m_j} G_{m_j}(X - j)`.
    ComponentProduct { indices: Vec<u64> },
    /// Supplied from outside the crate.
    External,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub poly: IntPoly,
    pub provenance: Provenance,
}

/// Nonempty list of nonzero generators of an ideal of `Z[X]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGeneratorSet")]
pub struct GeneratorSet {
    label: String,
    gens: Vec<Generator>,
}

#[derive(Deserialize)]
struct RawGeneratorSet {
    label: String,
    gens: Vec<Generator>,
}

impl TryFrom<RawGeneratorSet> for GeneratorSet {
    type Error = Error;
    fn try_from(raw: RawGeneratorSet) -> Result<Self> {
        Self::new(raw.label, raw.gens)
    }
}

impl GeneratorSet {
    /// Drops exact duplicates (first occurrence wins) and zero polynomials.
    pub fn new(label: impl Into<String>, gens: Vec<Generator>) -> Result<Self> {
        let mut seen = HashSet::new();
        let gens: Vec<Generator> = gens
            .into_iter()
            .filter(|g| !g.poly.is_zero() && seen.insert(g.poly.clone()))
            .collect();
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        Ok(Self {
            label: label.into(),
            gens,
        })
    }

    pub fn from_polys(label: impl Into<String>, polys: Vec<IntPoly>) -> Result<Self> {
        Self::new(
            label,
            polys
                .into_iter()
                .map(|poly| Generator {
                    poly,
                    provenance: Provenance::External,
                })
                .collect(),
        )
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn polys(&self) -> impl Iterator<Item = &IntPoly> {
        self.gens.iter().map(|g| &g.poly)
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn max_degree(&self) -> usize {
        self.polys().filter_map(IntPoly::degree).max().unwrap_or(0)
    }
}

/// Generators `q_{n,m} G_m(X - j)`, `m = 0..=mbar`, of `Q_{n,j}`.
pub fn component_generators(pp: &PrimePower, j: u64) -> Result<GeneratorSet> {
    check_residue(j, pp.p())?;
    let gens = (0..=m_bar(pp))
        .map(|m| {
            Ok(Generator {
                poly: big_g(m, pp.p(), j)?.scale(&q_coeff(pp, m)?),
                provenance: Provenance::ComponentBasis { j, m },
            })
        })
        .collect::<Result<Vec<_>>>()?;
    GeneratorSet::new(format!("Q[{pp}, j={j}]"), gens)
}

/// Generators `p^{n-i} (X - j)^i`, `i = 0..=n`, of `(p, X - j)^n`.
pub fn maximal_power_generators(pp: &PrimePower, j: u64) -> Result<GeneratorSet> {
    check_residue(j, pp.p())?;
    let lin = IntPoly::x_minus(&BigInt::from(j));
    let gens = (0..=pp.n())
        .map(|i| Generator {
            poly: lin.pow(i).scale(&pp.prime_pow(pp.n() - i)),
            provenance: Provenance::MaximalPower { j, i },
        })
        .collect();
    GeneratorSet::new(format!("(p, X-{j})^{} for p={}", pp.n(), pp.p()), gens)
}

/// The alternative description `(p, X - j)^n + (q_{n,m} G_m(X - j) : p <= m <= mbar)`.
pub fn component_tail_generators(pp: &PrimePower, j: u64) -> Result<GeneratorSet> {
    let mut gens = maximal_power_generators(pp, j)?.gens;
    for m in pp.p()..=m_bar(pp) {
        gens.push(Generator {
            poly: big_g(m, pp.p(), j)?.scale(&q_coeff(pp, m)?),
            provenance: Provenance::ComponentBasis { j, m },
        });
    }
    GeneratorSet::new(format!("M^n + tail [{pp}, j={j}]"), gens)
}

/// Coefficients of `f` in the basis `G_k(X - j)`, nodes `j, j + p, j + 2p, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonExpansion {
    p: u64,
    j: u64,
    coeffs: Vec<BigInt>,
}

impl NewtonExpansion {
    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn residue(&self) -> u64 {
        self.j
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn node(&self, k: usize) -> BigInt {
        BigInt::from(self.j) + BigInt::from(k as u64) * BigInt::from(self.p)
    }

    /// `sum_k a_k G_k(X - j)`, evaluated by nested multiplication.
    pub fn reconstruct(&self) -> IntPoly {
        let mut acc = IntPoly::zero();
        for (k, a) in self.coeffs.iter().enumerate().rev() {
            acc = &acc.mul_linear(&self.node(k)) + &IntPoly::constant(a.clone());
        }
        acc
    }
}

pub fn newton_expand(f: &IntPoly, p: u64, j: u64) -> Result<NewtonExpansion> {
    check_residue(j, p)?;
    let mut exp = NewtonExpansion {
        p,
        j,
        coeffs: Vec::with_capacity(f.coeffs().len()),
    };
    let mut rest = f.clone();
    for k in 0..f.coeffs().len() {
        let (q, r) = rest.div_linear(&exp.node(k));
        exp.coeffs.push(r);
        rest = q;
    }
    Ok(exp)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Member,
    NonMember,
}

/// The least index whose Newton coefficient misses its required divisibility.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub index: u64,
    /// `a_k` must be divisible by `p^required_exponent`.
    pub required_exponent: u32,
    pub actual_valuation: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentCertificate {
    pp: PrimePower,
    expansion: NewtonExpansion,
    verdict: Verdict,
    violation: Option<Violation>,
}

impl ComponentCertificate {
    pub fn prime_power(&self) -> &PrimePower {
        &self.pp
    }

    pub fn expansion(&self) -> &NewtonExpansion {
        &self.expansion
    }

    pub fn verdict(&self) -> Verdict {
        self.verdict
    }

    pub fn is_member(&self) -> bool {
        self.verdict == Verdict::Member
    }

    pub fn violation(&self) -> Option<&Violation> {
        self.violation.as_ref()
    }

    /// For a member, polynomials `c_0, ..., c_mbar` with
    /// `f = sum_m c_m * q_{n,m} G_m(X - j)`.
    ///
    /// Below `mbar` each `c_m = a_m / q_{n,m}` is a constant; `c_mbar` collects
    /// the tail `sum_{k >= mbar} a_k G_k(X - j) / G_mbar(X - j)`.
    pub fn multipliers(&self) -> Option<Vec<IntPoly>> {
        if !self.is_member() {
            return None;
        }
        let mbar = m_bar(&self.pp) as usize;
        let a = &self.expansion.coeffs;
        let mut out = Vec::with_capacity(mbar + 1);
        for m in 0..mbar {
            let coeff = a.get(m).cloned().unwrap_or_default();
            let q = q_coeff(&self.pp, m as u64).expect("m below mbar");
            out.push(IntPoly::constant(coeff / q));
        }
        let mut tail = IntPoly::zero();
        for k in (mbar..a.len()).rev() {
            tail = &tail.mul_linear(&self.expansion.node(k)) + &IntPoly::constant(a[k].clone());
        }
        out.push(tail);
        Some(out)
    }
}

pub fn component_membership(f: &IntPoly, pp: &PrimePower, j: u64) -> Result<ComponentCertificate> {
    let expansion = newton_expand(f, pp.p(), j)?;
    let mbar = m_bar(pp) as usize;
    let n = u64::from(pp.n());
    let violation = expansion
        .coeffs
        .iter()
        .enumerate()
        .take(mbar)
        .find_map(|(k, a)| {
            let e = vp_pk_factorial(k as u64, pp.p());
            debug_assert!(e < n);
            let required = (n - e) as u32;
            let actual = vp(a, pp.p()).ok()?;
            (actual < required).then_some(Violation {
                index: k as u64,
                required_exponent: required,
                actual_valuation: actual,
            })
        });
    let verdict = if violation.is_some() {
        Verdict::NonMember
    } else {
        Verdict::Member
    };
    Ok(ComponentCertificate {
        pp: pp.clone(),
        expansion,
        verdict,
        violation,
    })
}

/// Membership in `(p, X - j)^n`, read off the `(X - j)`-adic coefficients.
pub fn mj_power_membership(f: &IntPoly, pp: &PrimePower, j: u64) -> Result<bool> {
    check_residue(j, pp.p())?;
    let shifted = f.taylor_shift(&BigInt::from(j));
    let n = pp.n();
    Ok(shifted
        .coeffs()
        .iter()
        .take(n as usize)
        .enumerate()
        .all(|(i, c)| c.is_zero() || vp(c, pp.p()).unwrap() >= n - i as u32))
}

/// Membership in `(p, prod_{j<p} (X - j))^n`, which is the intersection of the
/// coprime ideals `(p, X - j)^n`.
pub fn prime_product_power_membership(f: &IntPoly, pp: &PrimePower) -> Result<bool> {
    for j in 0..pp.p() {
        if !mj_power_membership(f, pp, j)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IpnCertificate {
    pub member: bool,
    /// One certificate per residue, ordered by `j`.
    pub components: Vec<ComponentCertificate>,
}

pub fn ipn_membership(f: &IntPoly, pp: &PrimePower) -> Result<IpnCertificate> {
    let components = (0..pp.p())
        .map(|j| component_membership(f, pp, j))
        .collect::<Result<Vec<_>>>()?;
    Ok(IpnCertificate {
        member: components.iter().all(ComponentCertificate::is_member),
        components,
    })
}

/// Which closed form [`ipn_generators`] uses for a given `(p, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpecialCase {
    #[serde(rename = "n1")]
    N1,
    #[serde(rename = "p_ge_n")]
    PGeN,
    #[serde(rename = "p_plus_1")]
    PPlusOne,
    #[serde(rename = "product")]
    Product,
}

impl SpecialCase {
    pub fn of(pp: &PrimePower) -> Self {
        let (p, n) = (pp.p(), u64::from(pp.n()));
        if n == 1 {
            SpecialCase::N1
        } else if p >= n {
            SpecialCase::PGeN
        } else if n == p + 1 {
            SpecialCase::PPlusOne
        } else {
            SpecialCase::Product
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SpecialCase::N1 => "n1",
            SpecialCase::PGeN => "p_ge_n",
            SpecialCase::PPlusOne => "p_plus_1",
            SpecialCase::Product => "product",
        }
    }
}

/// `B(X) = prod_{j<p} (X - j)`.
pub fn residue_product(p: u64) -> IntPoly {
    IntPoly::from_roots((0..p).map(BigInt::from))
}

/// `H(X) = prod_{i<p^2} (X - i)`.
pub fn full_falling(p: u64) -> IntPoly {
    IntPoly::from_roots((0..p * p).map(BigInt::from))
}

/// `{p^{e-k} B^k : k = 0..=e}`, generators of `(p, B)^e`.
fn prime_product_power_gens(p: u64, e: u32) -> Vec<Generator> {
    let b = residue_product(p);
    let pb = BigInt::from(p);
    (0..=e)
        .map(|k| Generator {
            poly: b.pow(k).scale(&num_traits::pow(pb.clone(), (e - k) as usize)),
            provenance: Provenance::PrimeProductPower { k },
        })
        .collect()
}

/// Number of generators the product expansion would produce, `(mbar+1)^p`.
pub fn product_expansion_size(pp: &PrimePower) -> u128 {
    let base = u128::from(m_bar(pp)) + 1;
    let mut size: u128 = 1;
    for _ in 0..pp.p() {
        size = size.saturating_mul(base);
        if size > PRODUCT_CAP {
            break;
        }
    }
    size
}

/// All products `prod_j g_j` with `g_j` a generator of `Q_{n,j}`.
///
/// Rejects `(p, n)` whose expansion exceeds [`PRODUCT_CAP`] generators.
pub fn component_product_generators(pp: &PrimePower) -> Result<GeneratorSet> {
    let size = product_expansion_size(pp);
    if size > PRODUCT_CAP {
        return Err(Error::CapExceeded {
            what: format!("product expansion for p^n = {pp}"),
            size,
            cap: PRODUCT_CAP,
        });
    }
    let comps = (0..pp.p())
        .map(|j| component_generators(pp, j))
        .collect::<Result<Vec<_>>>()?;
    let mut acc: Vec<(IntPoly, Vec<u64>)> = vec![(IntPoly::one(), Vec::new())];
    for comp in &comps {
        let mut next = Vec::with_capacity(acc.len() * comp.len());
        for (poly, idx) in &acc {
            for g in comp.generators() {
                let Provenance::ComponentBasis { m, .. } = g.provenance else {
                    unreachable!("component generators carry basis provenance")
                };
                let mut idx = idx.clone();
                idx.push(m);
                next.push((poly * &g.poly, idx));
            }
        }
        acc = next;
    }
    let gens = acc
        .into_iter()
        .map(|(poly, indices)| Generator {
            poly,
            provenance: Provenance::ComponentProduct { indices },
        })
        .collect();
    GeneratorSet::new(format!("prod_j Q[{pp}, j]"), gens)
}

/// Generators of `I_{p^n}`, using the closed form matching [`SpecialCase::of`].
pub fn ipn_generators(pp: &PrimePower) -> Result<GeneratorSet> {
    let (p, n) = (pp.p(), pp.n());
    let label = format!("I[{pp}]");
    match SpecialCase::of(pp) {
        SpecialCase::N1 | SpecialCase::PGeN => GeneratorSet::new(label, prime_product_power_gens(p, n)),
        SpecialCase::PPlusOne => {
            let mut gens = prime_product_power_gens(p, n);
            gens.push(Generator {
                poly: full_falling(p),
                provenance: Provenance::FullFalling,
            });
            GeneratorSet::new(label, gens)
        }
        SpecialCase::Product => {
            let set = component_product_generators(pp)?;
            GeneratorSet::new(label, set.gens)
        }
    }
}

/// Checks `H(X) + G_p(X - k) in (p, X - k)^{p+1}`.
pub fn wilson_residue_check(p: u64, k: u64) -> Result<bool> {
    check_residue(k, p)?;
    let pp = PrimePower::new(p, (p + 1) as u32)?;
    let sum = &full_falling(p) + &big_g(p, p, k)?;
    mj_power_membership(&sum, &pp, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn pp(p: u64, n: u32) -> PrimePower {
        PrimePower::new(p, n).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn polys(set: &GeneratorSet) -> Vec<IntPoly> {
        set.polys().cloned().collect()
    }

    #[test]
    fn contraction_examples() {
        let c = ContractionIdeal::new(pp(2, 3), &big(2));
        assert!(c.contains(&p(&[0, -2, 1])));
        assert!(!c.contains(&IntPoly::one()));
        let a = big(-7);
        let c = ContractionIdeal::new(pp(3, 2), &a);
        assert_eq!(c.point(), &big(2));
        assert_eq!(c.residue_class(), 2);
        assert!(c.contains(&IntPoly::x_minus(&a)));
        assert_eq!(c, ContractionIdeal::new(pp(3, 2), &big(11)));
        assert_ne!(c, ContractionIdeal::new(pp(3, 2), &big(5)));
    }

    #[test]
    fn big_g_examples() {
        assert_eq!(big_g(0, 5, 0).unwrap(), IntPoly::one());
        assert_eq!(big_g(2, 3, 0).unwrap(), p(&[0, -3, 1]));
        assert_eq!(big_g(2, 2, 1).unwrap(), p(&[3, -4, 1]));
        assert_eq!(big_g(1, 2, 2), Err(Error::ResidueOutOfRange { j: 2, p: 2 }));
    }

    #[test]
    fn big_g_recursion() {
        for prime in [2u64, 3, 5] {
            for j in 0..prime {
                for k in 1..=20u64 {
                    let node = BigInt::from(j + (k - 1) * prime);
                    assert_eq!(
                        big_g(k, prime, j).unwrap(),
                        big_g(k - 1, prime, j).unwrap().mul_linear(&node)
                    );
                }
            }
        }
    }

    #[test]
    fn m_bar_examples() {
        assert_eq!(m_bar(&pp(5, 3)), 3);
        assert_eq!(m_bar(&pp(2, 3)), 2);
        assert_eq!(m_bar(&pp(2, 4)), 3);
    }

    #[test]
    fn m_bar_bracketing() {
        for prime in [2u64, 3, 5, 7] {
            for n in 1..=12u32 {
                let mb = m_bar(&pp(prime, n));
                if prime >= u64::from(n) {
                    assert_eq!(mb, u64::from(n));
                } else {
                    assert!(prime <= mb && mb < u64::from(n), "p={prime} n={n} mbar={mb}");
                }
            }
        }
    }

    #[test]
    fn q_coeff_examples() {
        let q = |pr, n, m| q_coeff(&pp(pr, n), m).unwrap();
        assert_eq!([q(2, 3, 0), q(2, 3, 1), q(2, 3, 2)], [big(8), big(4), big(1)]);
        assert_eq!(
            (0..=3).map(|m| q(5, 3, m)).collect::<Vec<_>>(),
            vec![big(125), big(25), big(5), big(1)]
        );
        assert_eq!(
            q_coeff(&pp(2, 3), 3),
            Err(Error::IndexOutOfRange { index: 3, max: 2 })
        );
        for (prime, n) in [(2, 5), (3, 7), (5, 9)] {
            let pp = pp(prime, n);
            let mb = m_bar(&pp);
            assert_eq!(q_coeff(&pp, mb).unwrap(), BigInt::one());
            for m in 0..prime.min(mb) {
                assert_eq!(q_coeff(&pp, m).unwrap(), pp.prime_pow(n - m as u32));
            }
        }
    }

    #[test]
    fn component_generator_examples() {
        assert_eq!(
            polys(&component_generators(&pp(2, 3), 0).unwrap()),
            vec![p(&[8]), p(&[0, 4]), p(&[0, -2, 1])]
        );
        assert_eq!(
            polys(&component_generators(&pp(3, 2), 0).unwrap()),
            vec![p(&[9]), p(&[0, 3]), p(&[0, -3, 1])]
        );
        assert_eq!(
            polys(&component_generators(&pp(2, 1), 1).unwrap()),
            vec![p(&[2]), p(&[-1, 1])]
        );
        assert!(component_generators(&pp(3, 2), 3).is_err());
    }

    #[test]
    fn newton_examples() {
        let e = newton_expand(&p(&[0, -2, 1]), 2, 0).unwrap();
        assert_eq!(e.coeffs(), &[big(0), big(0), big(1)]);
        let e = newton_expand(&p(&[0, 0, 1]), 2, 0).unwrap();
        assert_eq!(e.coeffs(), &[big(0), big(2), big(1)]);
        assert_eq!(e.reconstruct(), p(&[0, 0, 1]));
        let e = newton_expand(&p(&[-9]), 7, 3).unwrap();
        assert_eq!(e.coeffs(), &[big(-9)]);
        assert!(newton_expand(&IntPoly::zero(), 3, 1).unwrap().coeffs().is_empty());
    }

    #[test]
    fn component_membership_examples() {
        let f = p(&[0, -2, 1]);
        let cert = component_membership(&f, &pp(2, 3), 0).unwrap();
        assert!(cert.is_member());
        assert!(cert.violation().is_none());
        assert!(!mj_power_membership(&f, &pp(2, 3), 0).unwrap());
        assert!(component_membership(&IntPoly::zero(), &pp(3, 4), 2).unwrap().is_member());
    }

    #[test]
    fn violation_names_least_index() {
        // X = G_1, needs 4 | a_1 in Q_{3,0} for p = 2.
        let cert = component_membership(&IntPoly::x(), &pp(2, 3), 0).unwrap();
        assert_eq!(cert.verdict(), Verdict::NonMember);
        assert_eq!(
            cert.violation(),
            Some(&Violation {
                index: 1,
                required_exponent: 2,
                actual_valuation: 0
            })
        );
        assert!(cert.multipliers().is_none());
        let cert = component_membership(&p(&[2, 1]), &pp(2, 3), 0).unwrap();
        assert_eq!(cert.violation().unwrap().index, 0);
    }

    #[test]
    fn multipliers_reconstruct() {
        let pp = pp(2, 4);
        let gens = component_generators(&pp, 1).unwrap();
        // Something in Q_{4,1}: a combination with polynomial multipliers.
        let f = &(&gens.generators()[3].poly * &p(&[1, -3, 2])) + &gens.generators()[1].poly.scale(&big(5));
        let cert = component_membership(&f, &pp, 1).unwrap();
        assert!(cert.is_member());
        let mult = cert.multipliers().unwrap();
        let rebuilt = mult
            .iter()
            .zip(gens.polys())
            .fold(IntPoly::zero(), |acc, (c, g)| &acc + &(c * g));
        assert_eq!(rebuilt, f);
    }

    #[test]
    fn mj_power_examples() {
        for j in 0..3 {
            assert!(mj_power_membership(&p(&[27]), &pp(3, 3), j).unwrap());
        }
        assert!(mj_power_membership(&p(&[0, -2, 2]), &pp(2, 2), 0).unwrap());
        assert!(!mj_power_membership(&p(&[0, -2, 1]), &pp(2, 3), 0).unwrap());
    }

    #[test]
    fn m_power_floor_of_big_g() {
        for prime in [2u64, 3, 5] {
            for k in 1..=8u32 {
                let g = big_g(u64::from(k), prime, 0).unwrap();
                assert!(mj_power_membership(&g, &pp(prime, k), 0).unwrap());
                assert!(!mj_power_membership(&g, &pp(prime, k + 1), 0).unwrap());
            }
        }
    }

    #[test]
    fn ipn_membership_examples() {
        let quartic = p(&[0, -6, 11, -6, 1]);
        assert!(ipn_membership(&quartic, &pp(2, 3)).unwrap().member);
        for prime in [2u64, 3, 5, 7] {
            let mut c = vec![0i64; prime as usize + 1];
            c[1] = -1;
            c[prime as usize] = 1;
            assert!(ipn_membership(&p(&c), &pp(prime, 1)).unwrap().member);
        }
        let cert = ipn_membership(&IntPoly::x(), &pp(2, 1)).unwrap();
        assert!(!cert.member);
        assert!(cert.components[0].is_member());
        assert!(!cert.components[1].is_member());
    }

    #[test]
    fn ipn_generator_examples() {
        assert_eq!(
            polys(&ipn_generators(&pp(3, 1)).unwrap()),
            vec![p(&[3]), p(&[0, 2, -3, 1])]
        );
        let b = p(&[0, -1, 1]);
        assert_eq!(
            polys(&ipn_generators(&pp(2, 2)).unwrap()),
            vec![p(&[4]), b.scale(&big(2)), b.pow(2)]
        );
        let g = polys(&ipn_generators(&pp(2, 3)).unwrap());
        assert_eq!(g.len(), 5);
        assert_eq!(g[..4], [p(&[8]), b.scale(&big(4)), b.pow(2).scale(&big(2)), b.pow(3)]);
        assert_eq!(g[4], p(&[0, -6, 11, -6, 1]));
        assert_eq!(SpecialCase::of(&pp(2, 3)), SpecialCase::PPlusOne);
        assert_eq!(SpecialCase::of(&pp(2, 4)), SpecialCase::Product);
        assert_eq!(SpecialCase::of(&pp(7, 1)), SpecialCase::N1);
    }

    #[test]
    fn emitted_generators_are_members() {
        for (prime, n) in [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 4), (3, 5), (5, 3)] {
            let pp = pp(prime, n);
            for g in ipn_generators(&pp).unwrap().polys() {
                assert!(ipn_membership(g, &pp).unwrap().member, "{g} in I[{pp}]");
            }
            for j in 0..prime {
                for g in component_generators(&pp, j).unwrap().polys() {
                    assert!(component_membership(g, &pp, j).unwrap().is_member());
                }
            }
        }
    }

    #[test]
    fn product_cap_is_enforced() {
        assert!(product_expansion_size(&pp(11, 12)) > PRODUCT_CAP);
        assert!(matches!(
            component_product_generators(&pp(11, 12)),
            Err(Error::CapExceeded { .. })
        ));
        assert_eq!(product_expansion_size(&pp(2, 4)), 16);
    }

    #[test]
    fn strict_containment_below_n() {
        for prime in [2u64, 3, 5] {
            for n in (prime as u32 + 1)..=6 {
                let pp = pp(prime, n);
                let found = (prime..=m_bar(&pp)).any(|m| {
                    let g = big_g(m, prime, 0).unwrap().scale(&q_coeff(&pp, m).unwrap());
                    !mj_power_membership(&g, &pp, 0).unwrap()
                });
                assert!(found, "p={prime} n={n}");
            }
        }
    }

    #[test]
    fn wilson_examples() {
        assert!(wilson_residue_check(2, 0).unwrap());
        assert!(wilson_residue_check(3, 2).unwrap());
        assert!(wilson_residue_check(5, 1).unwrap());
        assert!(wilson_residue_check(3, 3).is_err());
    }

    #[test]
    fn full_falling_is_product_of_shifted_g() {
        for prime in [2u64, 3, 5] {
            let prod = (0..prime).fold(IntPoly::one(), |acc, j| &acc * &big_g(prime, prime, j).unwrap());
            assert_eq!(prod, full_falling(prime));
        }
    }
}
