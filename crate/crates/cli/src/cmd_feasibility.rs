//! `feasibility`: Moore-polygon intersection-array verdicts — the two
//! parametric families, explicit arrays, and exhaustive scans.

use crate::record::{Format, OutputRecord};
use anyhow::{anyhow, bail, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::Value;
use spectral_moore::feasibility::{
    family1_check, family2_check, integer_eigenvalue_check, scan_families, FeasibilityVerdict,
    IntersectionArray,
};

#[derive(clap::Args, Debug)]
pub struct FeasibilityArgs {
    /// Parametric family: 1 is {k,k-1,k-1;1,1,k-sqrt(k)},
    /// 2 is {k,k-1,k-1,k-1;1,1,1,k-sqrt(2k-1)}.
    #[arg(long)]
    family: Option<u8>,
    /// Valency for a single family check.
    #[arg(short)]
    k: Option<u32>,
    /// Scan all valencies up to this bound.
    #[arg(long, conflicts_with = "k")]
    scan: Option<u32>,
    /// Explicit array "b0,b1,...;c1,...,cd" (Moore-polygon shape only).
    #[arg(long, conflicts_with_all = ["family", "k", "scan"])]
    array: Option<String>,
    /// Worker count for scans.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Exit with status 1 when the verdict does not match.
    #[arg(long, value_enum)]
    expect: Option<Expect>,
}

#[derive(clap::ValueEnum, Clone, Copy, Debug, PartialEq)]
pub enum Expect {
    Feasible,
    Infeasible,
}

pub fn run(args: &FeasibilityArgs, format: Format) -> Result<u8> {
    let mut rec = OutputRecord::new("feasibility");

    if let Some(spec) = &args.array {
        rec.input("array", spec);
        let array = parse_array(spec)?;
        let verdict = integer_eigenvalue_check(&array);
        let code = record_verdict(&mut rec, &array, &verdict, args.expect);
        print!("{}", rec.render(format));
        return Ok(code);
    }

    if let Some(k_max) = args.scan {
        rec.input("scan", k_max);
        rec.input("jobs", args.jobs);
        let report = scan_families(k_max, args.jobs)?;
        let fam = args.family;
        if fam.is_none() || fam == Some(1) {
            rec.result(
                "family1_hits",
                Value::Array(report.family1_hits.iter().map(|&k| k.into()).collect()),
            );
            rec.result("family1_candidates", report.family1_candidates);
        }
        if fam.is_none() || fam == Some(2) {
            rec.result(
                "family2_hits",
                Value::Array(report.family2_hits.iter().map(|&k| k.into()).collect()),
            );
            rec.result("family2_candidates", report.family2_candidates);
        }
        print!("{}", rec.render(format));
        return Ok(0);
    }

    let (family, k) = match (args.family, args.k) {
        (Some(f), Some(k)) => (f, k),
        _ => bail!("give --array, or --family with -k or --scan"),
    };
    rec.input("family", family);
    rec.input("k", k);
    let verdict = match family {
        1 => family1_check(k)?,
        2 => family2_check(k)?,
        other => bail!("family must be 1 or 2, got {other}"),
    };
    let c_display = match family {
        1 => format!("{k}-sqrt({k})"),
        _ => format!("{k}-sqrt({})", 2 * k - 1),
    };
    rec.input("c", c_display);
    let code = record_verdict_plain(&mut rec, k, &verdict, args.expect);
    print!("{}", rec.render(format));
    Ok(code)
}

fn record_verdict(
    rec: &mut OutputRecord,
    array: &IntersectionArray,
    verdict: &FeasibilityVerdict,
    expect: Option<Expect>,
) -> u8 {
    rec.result("array", array.to_string());
    record_verdict_plain(rec, array.k(), verdict, expect)
}

fn record_verdict_plain(
    rec: &mut OutputRecord,
    k: u32,
    verdict: &FeasibilityVerdict,
    expect: Option<Expect>,
) -> u8 {
    rec.result("feasible", verdict.feasible);
    rec.result(
        "reasons",
        Value::Array(
            verdict
                .reasons
                .iter()
                .map(|r| Value::String(r.to_string()))
                .collect(),
        ),
    );
    if let Some(eigs) = &verdict.eigenvalues {
        rec.result(
            "eigenvalues",
            Value::Array(eigs.iter().map(|e| Value::String(e.to_string())).collect()),
        );
        rec.result("trivial_eigenvalue", k);
    }
    match expect {
        Some(Expect::Feasible) if !verdict.feasible => 1,
        Some(Expect::Infeasible) if verdict.feasible => 1,
        _ => 0,
    }
}

/// Parses "b0,...,b_{d-1};c1,...,cd" and checks the Moore-polygon shape
/// {k, k-1, ..., k-1; 1, ..., 1, c}. The last intersection number accepts an
/// integer or an exact fraction p/q; decimals are rejected.
fn parse_array(spec: &str) -> Result<IntersectionArray> {
    let (b_part, c_part) = spec
        .split_once(';')
        .ok_or_else(|| anyhow!("array must contain ';' between the b and c sequences"))?;
    let bs: Vec<&str> = b_part.split(',').map(str::trim).collect();
    let cs: Vec<&str> = c_part.split(',').map(str::trim).collect();
    if bs.len() != cs.len() || bs.is_empty() {
        bail!("need equally many b and c entries");
    }
    let d = bs.len();
    let k: u32 = bs[0]
        .parse()
        .map_err(|_| anyhow!("bad valency {:?}", bs[0]))?;
    for (i, b) in bs.iter().enumerate().skip(1) {
        let v: u32 = b.parse().map_err(|_| anyhow!("bad b entry {b:?}"))?;
        if v != k - 1 {
            bail!("unsupported array shape: b_{i} = {v}, expected k-1 = {}", k - 1);
        }
    }
    for (i, c) in cs.iter().enumerate().take(d - 1) {
        if *c != "1" {
            bail!("unsupported array shape: c_{} = {c}, expected 1", i + 1);
        }
    }
    let c_d = parse_rational(cs[d - 1])?;
    Ok(IntersectionArray::new(k, d, c_d)?)
}

fn parse_rational(token: &str) -> Result<BigRational> {
    if let Some((p, q)) = token.split_once('/') {
        let p: BigInt = p.parse().map_err(|_| anyhow!("bad numerator {p:?}"))?;
        let q: BigInt = q.parse().map_err(|_| anyhow!("bad denominator {q:?}"))?;
        if q == BigInt::from(0) {
            bail!("zero denominator in {token:?}");
        }
        return Ok(BigRational::new(p, q));
    }
    let int: Result<BigInt, _> = token.parse();
    match int {
        Ok(v) => Ok(BigRational::from_integer(v)),
        Err(_) => bail!(
            "invalid c {token:?}: must be an integer or an exact fraction p/q (decimals are not rational input)"
        ),
    }
}
