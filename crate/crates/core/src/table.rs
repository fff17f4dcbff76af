//! Generator tables: the JSON form of the component and `I_{p^n}` generators
//! for one `(p, n)`, and the on-disk cache written by `ivpoly table`.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::arith::PrimePower;
use crate::claims::{overall_outcome, verify_claim, Claim};
use crate::error::Result;
use crate::poly::IntPoly;
use crate::primary::{component_generators, ipn_generators, m_bar, GeneratorSet, SpecialCase};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
pub const SCHEMA_VERSION: u32 = 1;

/// Verification is limited to `p^n` up to this many residues.
pub const VERIFY_RESIDUE_CAP: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentGens {
    pub j: u64,
    pub gens: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorTable {
    pub p: u64,
    pub n: u32,
    pub mbar: u64,
    pub components: Vec<ComponentGens>,
    pub ipn_gens: Vec<Vec<String>>,
    pub special_case: SpecialCase,
}

fn encode(set: &GeneratorSet) -> Vec<Vec<String>> {
    set.polys().map(IntPoly::coeff_strings).collect()
}

impl GeneratorTable {
    /// `component = Some(j)` restricts the component list to that residue.
    pub fn build(pp: &PrimePower, component: Option<u64>) -> Result<Self> {
        let residues: Vec<u64> = match component {
            Some(j) => vec![j],
            None => (0..pp.p()).collect(),
        };
        let components = residues
            .into_iter()
            .map(|j| {
                Ok(ComponentGens {
                    j,
                    gens: encode(&component_generators(pp, j)?),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            p: pp.p(),
            n: pp.n(),
            mbar: m_bar(pp),
            components,
            ipn_gens: encode(&ipn_generators(pp)?),
            special_case: SpecialCase::of(pp),
        })
    }

    pub fn prime_power(&self) -> Result<PrimePower> {
        PrimePower::new(self.p, self.n)
    }

    pub fn ipn_polys(&self) -> Result<Vec<IntPoly>> {
        self.ipn_gens.iter().map(|g| IntPoly::from_coeff_strings(g)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub claim: Claim,
    /// Largest bound reached across the claim's targets.
    pub degree_bound: usize,
    pub verdict: String,
    pub tool_version: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    #[serde(flatten)]
    pub table: GeneratorTable,
    pub tool_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationRecord>,
}

impl TableEntry {
    pub fn build(pp: &PrimePower, verify: bool) -> Result<Self> {
        let table = GeneratorTable::build(pp, None)?;
        let verification = if verify {
            check_verify_cap(pp)?;
            let claim = Claim::default_for(pp);
            let results = verify_claim(claim, pp, None)?;
            let degree_bound = results
                .iter()
                .map(|r| match &r.outcome {
                    crate::lattice::VerifyOutcome::CertifiedEqual { degree_bound }
                    | crate::lattice::VerifyOutcome::Inconclusive { degree_bound, .. } => *degree_bound,
                    crate::lattice::VerifyOutcome::Counterexample { .. } => 0,
                })
                .max()
                .unwrap_or(0);
            Some(VerificationRecord {
                claim,
                degree_bound,
                verdict: overall_outcome(&results).to_string(),
                tool_version: TOOL_VERSION.to_string(),
            })
        } else {
            None
        };
        Ok(Self {
            table,
            tool_version: TOOL_VERSION.to_string(),
            verification,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table entries serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

pub fn check_verify_cap(pp: &PrimePower) -> Result<()> {
    let size = pp.modulus_u64().map_or(u128::MAX, u128::from);
    if size > VERIFY_RESIDUE_CAP {
        return Err(crate::error::Error::CapExceeded {
            what: format!("residue scan for p^n = {pp}"),
            size,
            cap: VERIFY_RESIDUE_CAP,
        });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexItem {
    pub p: u64,
    pub n: u32,
    pub file: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableIndex {
    pub tool_version: String,
    pub schema_version: u32,
    pub entries: Vec<IndexItem>,
}

pub fn entry_file_name(p: u64, n: u32) -> String {
    format!("p{p}_n{n}.json")
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct TableReport {
    pub written: Vec<PathBuf>,
    pub skipped: Vec<PathBuf>,
    pub index: PathBuf,
}

#[derive(Debug, thiserror::Error)]
pub enum TableError {
    #[error(transparent)]
    Domain(#[from] crate::error::Error),
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> TableError + '_ {
    move |source| TableError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn reusable(path: &Path, verify: bool) -> Option<TableEntry> {
    let text = fs::read_to_string(path).ok()?;
    let entry = TableEntry::from_json(&text).ok()?;
    (entry.tool_version == TOOL_VERSION && (!verify || entry.verification.is_some())).then_some(entry)
}

/// Writes one file per `(p, n)` plus `index.json`. Existing files from the same
/// tool version are kept, unless verification is requested and they lack it.
///
/// All caps are checked before anything is written.
pub fn write_table(primes: &[u64], powers: &[u32], out_dir: &Path, verify: bool) -> std::result::Result<TableReport, TableError> {
    let mut pps = Vec::new();
    for &p in primes {
        for &n in powers {
            let pp = PrimePower::new(p, n)?;
            if verify {
                check_verify_cap(&pp)?;
            }
            if SpecialCase::of(&pp) == SpecialCase::Product {
                let size = crate::primary::product_expansion_size(&pp);
                if size > crate::primary::PRODUCT_CAP {
                    return Err(crate::error::Error::CapExceeded {
                        what: format!("product expansion for p^n = {pp}"),
                        size,
                        cap: crate::primary::PRODUCT_CAP,
                    }
                    .into());
                }
            }
            pps.push(pp);
        }
    }
    fs::create_dir_all(out_dir).map_err(io_err(out_dir))?;
    let mut report = TableReport::default();
    let mut items = Vec::new();
    for pp in pps {
        let name = entry_file_name(pp.p(), pp.n());
        let path = out_dir.join(&name);
        let entry = match reusable(&path, verify) {
            Some(entry) => {
                report.skipped.push(path);
                entry
            }
            None => {
                let entry = TableEntry::build(&pp, verify)?;
                fs::write(&path, entry.to_json()).map_err(io_err(&path))?;
                report.written.push(path);
                entry
            }
        };
        items.push(IndexItem {
            p: pp.p(),
            n: pp.n(),
            file: name,
            verdict: entry.verification.map(|v| v.verdict),
        });
    }
    let index = TableIndex {
        tool_version: TOOL_VERSION.to_string(),
        schema_version: SCHEMA_VERSION,
        entries: items,
    };
    let index_path = out_dir.join("index.json");
    fs::write(&index_path, serde_json::to_string_pretty(&index).expect("index serializes"))
        .map_err(io_err(&index_path))?;
    report.index = index_path;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_matches_generator_functions() {
        let pp = PrimePower::new(2, 3).unwrap();
        let t = GeneratorTable::build(&pp, None).unwrap();
        assert_eq!(t.mbar, 2);
        assert_eq!(t.special_case, SpecialCase::PPlusOne);
        assert_eq!(t.components[0].gens, vec![vec!["8"], vec!["0", "4"], vec!["0", "-2", "1"]]);
        assert_eq!(t.ipn_polys().unwrap().len(), 5);
        let one = GeneratorTable::build(&pp, Some(1)).unwrap();
        assert_eq!(one.components.len(), 1);
        assert_eq!(one.components[0].j, 1);
    }

    #[test]
    fn json_shape() {
        let pp = PrimePower::new(3, 1).unwrap();
        let entry = TableEntry::build(&pp, false).unwrap();
        let v: serde_json::Value = serde_json::from_str(&entry.to_json()).unwrap();
        assert_eq!(v["p"], 3);
        assert_eq!(v["n"], 1);
        assert_eq!(v["mbar"], 1);
        assert_eq!(v["special_case"], "n1");
        assert_eq!(v["ipn_gens"][1], serde_json::json!(["0", "2", "-3", "1"]));
        assert!(v.get("verification").is_none());
    }

    #[test]
    fn verify_cap() {
        assert!(check_verify_cap(&PrimePower::new(2, 21).unwrap()).is_err());
        assert!(check_verify_cap(&PrimePower::new(2, 19).unwrap()).is_ok());
    }
}
