//! Independent checks for the ideal descriptions in [`crate::primary`].
//!
//! Two tools live here. The semantic scan decides membership in `I_{p^n}` or
//! `Q_{n,j}` straight from the definition, by evaluating at every residue
//! modulo `p^n`. The truncated lattice is the integer span of all shifts
//! `X^t g` of a generator list up to a degree bound, kept in Hermite normal
//! form; reducing a polynomial against it proves membership in the ideal the
//! list generates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::PrimePower;
use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::primary::{component_generators, component_product_generators, GeneratorSet};

/// Largest degree bound [`verify_equal`] escalates to.
pub const MAX_DEGREE_BOUND: usize = 128;

/// Coefficients reduced modulo `m`, for word-sized Horner evaluation.
fn reduced_coeffs(f: &IntPoly, m: u64) -> Vec<u64> {
    let mb = BigInt::from(m);
    f.coeffs()
        .iter()
        .map(|c| c.mod_floor(&mb).to_u64().expect("reduced below modulus"))
        .collect()
}

fn eval_mod(coeffs: &[u64], x: u64, m: u64) -> u64 {
    let (x, m) = (u128::from(x), u128::from(m));
    coeffs
        .iter()
        .rev()
        .fold(0u128, |acc, &c| (acc * x + u128::from(c)) % m) as u64
}

/// First `i` in `start, start + step, ... < p^n` with `p^n` not dividing `f(i)`.
fn scan(f: &IntPoly, pp: &PrimePower, start: u64, step: u64) -> Option<BigInt> {
    match pp.modulus_u64() {
        Some(m) => {
            let coeffs = reduced_coeffs(f, m);
            (start..m)
                .step_by(step as usize)
                .find(|&i| eval_mod(&coeffs, i, m) != 0)
                .map(BigInt::from)
        }
        None => {
            let m = pp.modulus();
            let mut i = BigInt::from(start);
            while &i < m {
                if !f.eval(&i).is_multiple_of(m) {
                    return Some(i);
                }
                i += step;
            }
            None
        }
    }
}

/// The least residue `i` in `[0, p^n)` where `p^n` does not divide `f(i)`.
pub fn semantic_witness(f: &IntPoly, pp: &PrimePower) -> Option<BigInt> {
    scan(f, pp, 0, 1)
}

/// `p^n` divides `f` on all of `Z`; the residues `[0, p^n)` suffice since
/// `f(i + p^n) = f(i) (mod p^n)`.
pub fn semantic_membership(f: &IntPoly, pp: &PrimePower) -> bool {
    semantic_witness(f, pp).is_none()
}

pub fn semantic_component_witness(f: &IntPoly, pp: &PrimePower, j: u64) -> Result<Option<BigInt>> {
    if j >= pp.p() {
        return Err(Error::ResidueOutOfRange { j, p: pp.p() });
    }
    Ok(scan(f, pp, j, pp.p()))
}

/// `p^n` divides `f(i)` for the `p^{n-1}` residues `i = j (mod p)`.
pub fn semantic_component_membership(f: &IntPoly, pp: &PrimePower, j: u64) -> Result<bool> {
    Ok(semantic_component_witness(f, pp, j)?.is_none())
}

/// Exact membership in `(c, h)` for monic `h`: the remainder of `f` modulo
/// `h` must vanish modulo `c`.
pub fn monic_pair_membership(f: &IntPoly, c: &BigInt, h: &IntPoly) -> Result<bool> {
    let (_, r) = f.divmod_monic(h)?;
    Ok(r.coeffs().iter().all(|x| x.is_multiple_of(c)))
}

/// Hermite normal form of the shift lattice of a generator list.
///
/// `rows[i]`, when present, has degree exactly `i` and a positive leading
/// coefficient (the pivot); every coefficient of a row sitting at another
/// pivot position `k` lies in `[0, pivot_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedLattice {
    degree_bound: usize,
    rows: Vec<Option<Vec<BigInt>>>,
}

impl TruncatedLattice {
    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn pivot(&self, i: usize) -> Option<&BigInt> {
        self.rows.get(i)?.as_ref().map(|r| &r[i])
    }

    /// Basis rows by ascending degree.
    pub fn basis(&self) -> Vec<IntPoly> {
        self.rows
            .iter()
            .flatten()
            .map(|r| IntPoly::new(r.clone()))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.rows.iter().flatten().count()
    }

    fn insert(&mut self, mut v: Vec<BigInt>) {
        while let Some(t) = v.iter().rposition(|c| !c.is_zero()) {
            v.truncate(t + 1);
            let Some(row) = self.rows[t].as_mut() else {
                if v[t].is_negative() {
                    v.iter_mut().for_each(|c| *c = -&*c);
                }
                self.rows[t] = Some(v);
                return;
            };
            let a = row[t].clone();
            let b = v[t].clone();
            if b.is_multiple_of(&a) {
                let q = &b / &a;
                for (vi, ri) in v.iter_mut().zip(row.iter()) {
                    *vi -= &q * ri;
                }
                continue;
            }
            // Unimodular step [[s, t], [-b/g, a/g]] on (row, v).
            let egcd = a.extended_gcd(&b);
            let (g, s, tt) = (egcd.gcd, egcd.x, egcd.y);
            let (ag, bg) = (&a / &g, &b / &g);
            let new_row: Vec<BigInt> = row.iter().zip(&v).map(|(r, x)| &s * r + &tt * x).collect();
            let new_v: Vec<BigInt> = row.iter().zip(&v).map(|(r, x)| &ag * x - &bg * r).collect();
            *row = new_row;
            if row[t].is_negative() {
                row.iter_mut().for_each(|c| *c = -&*c);
            }
            v = new_v;
        }
    }

    fn reduce_above_pivots(&mut self) {
        for i in 0..self.rows.len() {
            if self.rows[i].is_none() {
                continue;
            }
            for k in (0..i).rev() {
                let Some(lower) = self.rows[k].clone() else {
                    continue;
                };
                let row = self.rows[i].as_mut().unwrap();
                let q = row[k].div_floor(&lower[k]);
                if !q.is_zero() {
                    for (x, y) in row.iter_mut().zip(lower.iter()) {
                        *x -= &q * y;
                    }
                }
            }
        }
    }
}

/// HNF of the rows `X^t g`, `g` a generator, `deg(X^t g) <= degree_bound`.
pub fn truncated_lattice<'a, I>(gens: I, degree_bound: usize) -> Result<TruncatedLattice>
where
    I: IntoIterator<Item = &'a IntPoly>,
{
    let gens: Vec<&IntPoly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let required = gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0);
    if required > degree_bound {
        return Err(Error::DegreeBoundTooSmall {
            bound: degree_bound,
            required,
        });
    }
    let mut lattice = TruncatedLattice {
        degree_bound,
        rows: vec![None; degree_bound + 1],
    };
    for g in gens {
        let d = g.degree().unwrap();
        for t in 0..=(degree_bound - d) {
            let mut v = vec![BigInt::zero(); degree_bound + 1];
            for (i, c) in g.coeffs().iter().enumerate() {
                v[i + t] = c.clone();
            }
            lattice.insert(v);
        }
    }
    lattice.reduce_above_pivots();
    Ok(lattice)
}

pub fn generator_lattice(gens: &GeneratorSet, degree_bound: usize) -> Result<TruncatedLattice> {
    truncated_lattice(gens.polys(), degree_bound)
}

/// Reduces `f` from the top against the basis. `true` certifies membership
/// in the ideal; `false` only means "not in this truncation".
pub fn lattice_contains(lattice: &TruncatedLattice, f: &IntPoly) -> Result<bool> {
    let Some(deg) = f.degree() else {
        return Ok(true);
    };
    if deg > lattice.degree_bound {
        return Err(Error::DegreeOverflow {
            degree: deg,
            bound: lattice.degree_bound,
        });
    }
    let mut v = f.coeffs().to_vec();
    for t in (0..=deg).rev() {
        if v[t].is_zero() {
            continue;
        }
        let Some(row) = lattice.rows[t].as_ref() else {
            return Ok(false);
        };
        if !v[t].is_multiple_of(&row[t]) {
            return Ok(false);
        }
        let q = &v[t] / &row[t];
        for (x, y) in v.iter_mut().zip(row.iter()) {
            *x -= &q * y;
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum VerifyMode {
    /// Compare against `Q_{n,j}`.
    Component { j: u64 },
    /// Compare against `I_{p^n}`.
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyOutcome {
    CertifiedEqual {
        degree_bound: usize,
    },
    /// A candidate generator outside the ideal, with a residue where it fails.
    Counterexample {
        generator: IntPoly,
        residue: BigInt,
    },
    /// Some canonical generator did not reduce against the candidate lattice.
    Inconclusive {
        degree_bound: usize,
        uncertified: IntPoly,
    },
}

impl VerifyOutcome {
    pub fn is_certified(&self) -> bool {
        matches!(self, VerifyOutcome::CertifiedEqual { .. })
    }

    pub fn tag(&self) -> &'static str {
        match self {
            VerifyOutcome::CertifiedEqual { .. } => "certified-equal",
            VerifyOutcome::Counterexample { .. } => "counterexample",
            VerifyOutcome::Inconclusive { .. } => "inconclusive",
        }
    }
}

/// Generators the candidate is compared against.
pub fn canonical_generators(pp: &PrimePower, mode: VerifyMode) -> Result<GeneratorSet> {
    match mode {
        VerifyMode::Component { j } => component_generators(pp, j),
        VerifyMode::Full => component_product_generators(pp),
    }
}

fn semantic_check(g: &IntPoly, pp: &PrimePower, mode: VerifyMode) -> Result<Option<BigInt>> {
    match mode {
        VerifyMode::Component { j } => semantic_component_witness(g, pp, j),
        VerifyMode::Full => Ok(semantic_witness(g, pp)),
    }
}

/// Both containments at one degree bound.
pub fn verify_equal_at(
    candidate: &GeneratorSet,
    pp: &PrimePower,
    mode: VerifyMode,
    degree_bound: usize,
) -> Result<VerifyOutcome> {
    let canonical = canonical_generators(pp, mode)?;
    verify_against(candidate, &canonical, pp, mode, &[degree_bound])
}

/// Like [`verify_equal_at`], escalating the bound `D, 2D, 4D` up to
/// [`MAX_DEGREE_BOUND`] while the lattice side stays inconclusive.
pub fn verify_equal(
    candidate: &GeneratorSet,
    pp: &PrimePower,
    mode: VerifyMode,
    degree_bound: usize,
) -> Result<VerifyOutcome> {
    let canonical = canonical_generators(pp, mode)?;
    let mut schedule = vec![degree_bound];
    for _ in 0..2 {
        let next = (schedule.last().unwrap() * 2).min(MAX_DEGREE_BOUND);
        if next > *schedule.last().unwrap() {
            schedule.push(next);
        }
    }
    verify_against(candidate, &canonical, pp, mode, &schedule)
}

/// The smallest bound accepted for a candidate in a mode.
pub fn minimal_degree_bound(candidate: &GeneratorSet, pp: &PrimePower, mode: VerifyMode) -> Result<usize> {
    Ok(candidate
        .max_degree()
        .max(canonical_generators(pp, mode)?.max_degree()))
}

fn verify_against(
    candidate: &GeneratorSet,
    canonical: &GeneratorSet,
    pp: &PrimePower,
    mode: VerifyMode,
    schedule: &[usize],
) -> Result<VerifyOutcome> {
    let required = candidate.max_degree().max(canonical.max_degree());
    if schedule[0] < required {
        return Err(Error::DegreeBoundTooSmall {
            bound: schedule[0],
            required,
        });
    }
    for g in candidate.polys() {
        if let Some(residue) = semantic_check(g, pp, mode)? {
            return Ok(VerifyOutcome::Counterexample {
                generator: g.clone(),
                residue,
            });
        }
    }
    let mut last = None;
    for &bound in schedule {
        let lattice = generator_lattice(candidate, bound)?;
        let mut missing = None;
        for g in canonical.polys() {
            if !lattice_contains(&lattice, g)? {
                missing = Some(g.clone());
                break;
            }
        }
        match missing {
            None => return Ok(VerifyOutcome::CertifiedEqual { degree_bound: bound }),
            Some(g) => {
                last = Some(VerifyOutcome::Inconclusive {
                    degree_bound: bound,
                    uncertified: g,
                })
            }
        }
    }
    Ok(last.expect("schedule is nonempty"))
}
