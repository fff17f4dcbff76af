//! The `ivpoly` command line.
//!
//! Exit codes: 0 success / member / certified, 1 non-member / counterexample,
//! 2 usage or input error, 3 inconclusive. Payload goes to the output stream,
//! diagnostics to the error stream.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::arith::{is_prime, PrimePower};
use crate::claims::{overall_outcome, verify_claim, Claim};
use crate::error::Error;
use crate::fixdiv::{fixed_divisor, fixed_divisor_p_part};
use crate::lattice::{VerifyMode, VerifyOutcome};
use crate::poly::IntPoly;
use crate::primary::{component_membership, ipn_membership, newton_expand, ComponentCertificate};
use crate::table::{check_verify_cap, write_table, GeneratorTable, SCHEMA_VERSION, TOOL_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

const VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), " (table schema 1)");

#[derive(Debug, Parser)]
#[command(name = "ivpoly", version = VERSION, about = "Fixed divisors and the ideals I_{p^n} of integer polynomials")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fixed divisor d(f) = gcd of all values of f.
    Fixdiv(FixdivArgs),
    /// Membership of f in I_{p^n} or in one primary component.
    Member(MemberArgs),
    /// Coefficients of f in the basis G_k(X - j).
    Decompose(DecomposeArgs),
    /// Generators of the primary components and of I_{p^n}.
    Gens(GensArgs),
    /// Check an ideal equality by residue scan and lattice reduction.
    Verify(VerifyArgs),
    /// Write generator tables for ranges of p and n.
    Table(TableArgs),
}

#[derive(Debug, Args)]
pub struct FixdivArgs {
    /// Ascending coefficients "2,1,1" or "X^2+X+2".
    #[arg(long, allow_hyphen_values = true)]
    pub poly: String,
    /// Report only the exponent of this prime.
    #[arg(long)]
    pub prime: Option<u64>,
}

#[derive(Debug, Args)]
pub struct MemberArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub poly: String,
    #[arg(long)]
    pub prime: u64,
    #[arg(long)]
    pub power: u32,
    /// Restrict to the component of residue j.
    #[arg(long)]
    pub component: Option<u64>,
    /// Include Newton coefficients and generator multipliers.
    #[arg(long)]
    pub certificate: bool,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub poly: String,
    #[arg(long)]
    pub prime: u64,
    #[arg(long)]
    pub component: Option<u64>,
}

#[derive(Debug, Args)]
pub struct GensArgs {
    #[arg(long)]
    pub prime: u64,
    #[arg(long)]
    pub power: u32,
    #[arg(long)]
    pub component: Option<u64>,
    /// Write the JSON table to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub prime: u64,
    #[arg(long)]
    pub power: u32,
    /// pIZ, pnIZ, p_plus_1 or components; defaults to the one matching (p, n).
    #[arg(long)]
    pub claim: Option<Claim>,
    /// Starting degree bound for the lattice side.
    #[arg(long)]
    pub degree_bound: Option<usize>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Primes, e.g. "2,3" or "2..11" (ranges keep only primes).
    #[arg(long)]
    pub primes: String,
    /// Exponents, e.g. "1..4".
    #[arg(long)]
    pub powers: String,
    #[arg(long)]
    pub out_dir: PathBuf,
    #[arg(long)]
    pub verify: bool,
}

/// Runs the CLI with explicit streams and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

type CmdResult = Result<i32, String>;

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match &cli.command {
        Command::Fixdiv(a) => cmd_fixdiv(a, cli.json, out),
        Command::Member(a) => cmd_member(a, cli.json, out),
        Command::Decompose(a) => cmd_decompose(a, cli.json, out),
        Command::Gens(a) => cmd_gens(a, cli.json, out, err),
        Command::Verify(a) => cmd_verify(a, cli.json, out),
        Command::Table(a) => cmd_table(a, cli.json, out, err),
    }
}

fn parse_poly(s: &str) -> Result<IntPoly, String> {
    s.parse::<IntPoly>().map_err(|e| e.to_string())
}

fn prime_power(p: u64, n: u32) -> Result<PrimePower, String> {
    PrimePower::new(p, n).map_err(|e| match e {
        Error::NotPrime(_) => format!("--prime {p} is not prime"),
        Error::ZeroExponent(_) => "--power must be at least 1".to_string(),
        other => other.to_string(),
    })
}

fn check_component(j: Option<u64>, p: u64) -> Result<(), String> {
    match j {
        Some(j) if j >= p => Err(format!("--component {j} out of range, expected 0..{p}")),
        _ => Ok(()),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), String> {
    writeln!(out, "{text}").map_err(|e| e.to_string())
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Result<(), String> {
    emit(out, &serde_json::to_string_pretty(v).expect("values serialize"))
}

fn strings(xs: &[BigInt]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

pub fn cmd_fixdiv(a: &FixdivArgs, json: bool, out: &mut dyn Write) -> CmdResult {
    let f = parse_poly(&a.poly)?;
    if let Some(p) = a.prime {
        if !is_prime(p) {
            return Err(format!("--prime {p} is not prime"));
        }
        let e = fixed_divisor_p_part(&f, p).map_err(|e| e.to_string())?;
        if json {
            emit_json(out, &json!({ "prime": p, "exponent": e }))?;
        } else {
            emit(out, &e.to_string())?;
        }
        return Ok(EXIT_OK);
    }
    let d = fixed_divisor(&f);
    if json {
        let factors: serde_json::Map<String, Value> = d
            .p_parts()
            .iter()
            .map(|(p, e)| (p.to_string(), json!(e)))
            .collect();
        emit_json(
            out,
            &json!({
                "value": d.value().to_string(),
                "factors": factors,
                "image_primitive": d.is_one(),
            }),
        )?;
    } else {
        let fact: Vec<String> = d
            .p_parts()
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        let fact = if fact.is_empty() { String::new() } else { format!(" = {}", fact.join(" * ")) };
        emit(out, &format!("d(f) = {}{}", d.value(), fact))?;
        emit(out, &format!("image primitive: {}", if d.is_one() { "yes" } else { "no" }))?;
    }
    Ok(EXIT_OK)
}

fn certificate_json(c: &ComponentCertificate) -> Value {
    let exp = c.expansion();
    json!({
        "j": exp.residue(),
        "verdict": c.verdict(),
        "newton_coeffs": strings(exp.coeffs()),
        "violation": c.violation(),
        "multipliers": c.multipliers().map(|m| m.iter().map(IntPoly::coeff_strings).collect::<Vec<_>>()),
    })
}

fn certificate_text(c: &ComponentCertificate) -> String {
    let exp = c.expansion();
    let mut s = format!(
        "  j={}: {} a=[{}]",
        exp.residue(),
        if c.is_member() { "member" } else { "non-member" },
        strings(exp.coeffs()).join(", ")
    );
    if let Some(v) = c.violation() {
        s.push_str(&format!(
            " (a_{} has valuation {}, needs {})",
            v.index, v.actual_valuation, v.required_exponent
        ));
    }
    s
}

pub fn cmd_member(a: &MemberArgs, json: bool, out: &mut dyn Write) -> CmdResult {
    let f = parse_poly(&a.poly)?;
    let pp = prime_power(a.prime, a.power)?;
    check_component(a.component, pp.p())?;
    let certs = match a.component {
        Some(j) => vec![component_membership(&f, &pp, j).map_err(|e| e.to_string())?],
        None => ipn_membership(&f, &pp).map_err(|e| e.to_string())?.components,
    };
    let member = certs.iter().all(ComponentCertificate::is_member);
    if json {
        let mut v = json!({
            "p": pp.p(),
            "n": pp.n(),
            "component": a.component,
            "member": member,
        });
        if a.certificate {
            v["certificates"] = Value::Array(certs.iter().map(certificate_json).collect());
        }
        emit_json(out, &v)?;
    } else {
        let target = match a.component {
            Some(j) => format!("Q[{pp}, j={j}]"),
            None => format!("I[{pp}]"),
        };
        emit(out, &format!("{} {} {target}", f, if member { "is in" } else { "is not in" }))?;
        if a.certificate {
            for c in &certs {
                emit(out, &certificate_text(c))?;
            }
        }
    }
    Ok(if member { EXIT_OK } else { EXIT_FALSE })
}

pub fn cmd_decompose(a: &DecomposeArgs, json: bool, out: &mut dyn Write) -> CmdResult {
    let f = parse_poly(&a.poly)?;
    if !is_prime(a.prime) {
        return Err(format!("--prime {} is not prime", a.prime));
    }
    check_component(a.component, a.prime)?;
    let residues: Vec<u64> = match a.component {
        Some(j) => vec![j],
        None => (0..a.prime).collect(),
    };
    let mut expansions = Vec::new();
    for j in residues {
        let e = newton_expand(&f, a.prime, j).map_err(|e| e.to_string())?;
        expansions.push((j, strings(e.coeffs())));
    }
    if json {
        let list: Vec<Value> = expansions
            .iter()
            .map(|(j, c)| json!({ "j": j, "coeffs": c }))
            .collect();
        emit_json(out, &json!({ "p": a.prime, "expansions": list }))?;
    } else {
        for (j, c) in &expansions {
            emit(out, &format!("j={j}: [{}]", c.join(", ")))?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_gens(a: &GensArgs, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let pp = prime_power(a.prime, a.power)?;
    check_component(a.component, pp.p())?;
    let table = GeneratorTable::build(&pp, a.component).map_err(|e| e.to_string())?;
    let text = serde_json::to_string_pretty(&table).expect("tables serialize");
    if let Some(path) = &a.out {
        std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
        let _ = writeln!(err, "wrote {}", path.display());
        return Ok(EXIT_OK);
    }
    if json {
        emit(out, &text)?;
    } else {
        let render = |g: &Vec<String>| {
            IntPoly::from_coeff_strings(g)
                .map(|p| p.to_string())
                .unwrap_or_default()
        };
        emit(out, &format!("p = {}, n = {}, mbar = {}", table.p, table.n, table.mbar))?;
        for c in &table.components {
            let gens: Vec<String> = c.gens.iter().map(render).collect();
            emit(out, &format!("Q[j={}] = ({})", c.j, gens.join(", ")))?;
        }
        let gens: Vec<String> = table.ipn_gens.iter().map(render).collect();
        emit(
            out,
            &format!("I = ({})  [{}]", gens.join(", "), table.special_case.as_str()),
        )?;
    }
    Ok(EXIT_OK)
}

fn outcome_json(mode: VerifyMode, label: &str, o: &VerifyOutcome) -> Value {
    let mut v = json!({
        "target": mode,
        "candidate": label,
        "verdict": o.tag(),
    });
    match o {
        VerifyOutcome::CertifiedEqual { degree_bound } => {
            v["degree_bound"] = json!(degree_bound);
        }
        VerifyOutcome::Counterexample { generator, residue } => {
            v["generator"] = json!(generator.coeff_strings());
            v["residue"] = json!(residue.to_string());
        }
        VerifyOutcome::Inconclusive { degree_bound, uncertified } => {
            v["degree_bound"] = json!(degree_bound);
            v["uncertified"] = json!(uncertified.coeff_strings());
        }
    }
    v
}

pub fn cmd_verify(a: &VerifyArgs, json: bool, out: &mut dyn Write) -> CmdResult {
    let pp = prime_power(a.prime, a.power)?;
    check_verify_cap(&pp).map_err(|e| e.to_string())?;
    let claim = a.claim.unwrap_or_else(|| Claim::default_for(&pp));
    let results = verify_claim(claim, &pp, a.degree_bound).map_err(|e| e.to_string())?;
    let overall = overall_outcome(&results);
    if json {
        let list: Vec<Value> = results
            .iter()
            .map(|r| outcome_json(r.target.mode, r.target.candidate.label(), &r.outcome))
            .collect();
        emit_json(
            out,
            &json!({
                "p": pp.p(),
                "n": pp.n(),
                "claim": claim,
                "verdict": overall,
                "results": list,
            }),
        )?;
    } else {
        emit(out, &format!("claim {claim} for p^n = {pp}: {overall}"))?;
        for r in &results {
            let detail = match &r.outcome {
                VerifyOutcome::CertifiedEqual { degree_bound } => format!("certified at D = {degree_bound}"),
                VerifyOutcome::Counterexample { generator, residue } => {
                    format!("counterexample: {generator} fails at x = {residue}")
                }
                VerifyOutcome::Inconclusive { degree_bound, uncertified } => format!(
                    "inconclusive at D = {degree_bound}: {uncertified} not reduced; raise --degree-bound"
                ),
            };
            emit(out, &format!("  {}: {detail}", r.target.candidate.label()))?;
        }
    }
    Ok(match overall {
        "certified-equal" => EXIT_OK,
        "counterexample" => EXIT_FALSE,
        _ => EXIT_INCONCLUSIVE,
    })
}

/// Parses "2,3", "1..4" or a mix; ranges are inclusive.
fn parse_range(s: &str, what: &str) -> Result<Vec<u64>, String> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if let Some((lo, hi)) = item.split_once("..") {
            let lo: u64 = lo.trim().parse().map_err(|_| format!("bad {what} range {item:?}"))?;
            let hi: u64 = hi.trim().parse().map_err(|_| format!("bad {what} range {item:?}"))?;
            out.extend(lo..=hi);
        } else {
            out.push(item.parse().map_err(|_| format!("bad {what} {item:?}"))?);
        }
    }
    Ok(out)
}

pub fn cmd_table(a: &TableArgs, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let mut primes = Vec::new();
    for item in a.primes.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let values = parse_range(item, "prime")?;
        if item.contains("..") {
            primes.extend(values.into_iter().filter(|&p| is_prime(p)));
        } else if let Some(&p) = values.first() {
            if !is_prime(p) {
                return Err(format!("--primes contains {p}, which is not prime"));
            }
            primes.push(p);
        }
    }
    let powers = parse_range(&a.powers, "power")?
        .into_iter()
        .map(|n| u32::try_from(n).ok().filter(|&n| n >= 1).ok_or(format!("bad power {n}")))
        .collect::<Result<Vec<u32>, String>>()?;
    primes.dedup();
    let report = write_table(&primes, &powers, &a.out_dir, a.verify).map_err(|e| e.to_string())?;
    for path in &report.skipped {
        let _ = writeln!(err, "kept {}", path.display());
    }
    if json {
        let paths = |v: &[PathBuf]| v.iter().map(|p| p.display().to_string()).collect::<Vec<_>>();
        emit_json(
            out,
            &json!({
                "written": paths(&report.written),
                "skipped": paths(&report.skipped),
                "index": report.index.display().to_string(),
                "tool_version": TOOL_VERSION,
                "schema_version": SCHEMA_VERSION,
            }),
        )?;
    } else {
        emit(
            out,
            &format!(
                "{} written, {} kept, index at {}",
                report.written.len(),
                report.skipped.len(),
                report.index.display()
            ),
        )?;
    }
    Ok(EXIT_OK)
}
