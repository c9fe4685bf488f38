//! `enumerate`: exhaustive small regular-graph generation with filters and
//! an optional second-eigenvalue interval.

use crate::record::{sig10_string, Format, OutputRecord};
use crate::theta::parse_theta;
use anyhow::{anyhow, bail, Context, Result};
use serde_json::Value;
use spectral_moore::graphs::{
    enumerate_regular, parse_graph6, write_graph6, EnumerateFilters, GraphCatalogEntry,
    IntervalVerdict, Lambda2Interval,
};
use std::path::PathBuf;

/// Optional cache directory for enumeration results (the only environment
/// configuration the tool reads).
pub const CACHE_ENV: &str = "SPECTRAL_MOORE_CACHE";

#[derive(clap::Args, Debug)]
pub struct EnumerateArgs {
    /// Vertex count (n <= 12).
    #[arg(short)]
    n: usize,
    /// Valency (k <= 5).
    #[arg(short)]
    k: usize,
    #[arg(long)]
    connected: bool,
    #[arg(long)]
    girth: Option<u32>,
    #[arg(long)]
    diameter: Option<u32>,
    /// Second-eigenvalue interval, e.g. "(1,sqrt(5)-1]".
    #[arg(long)]
    filter_lambda2: Option<String>,
    /// Emit the matching graphs as graph6 lines.
    #[arg(long)]
    emit: bool,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

pub fn run(args: &EnumerateArgs, format: Format) -> Result<u8> {
    let mut rec = OutputRecord::new("enumerate");
    rec.input("n", args.n);
    rec.input("k", args.k);
    let filters = EnumerateFilters {
        connected: args.connected,
        girth: args.girth,
        diameter: args.diameter,
    };
    rec.input("connected", args.connected);
    if let Some(g) = args.girth {
        rec.input("girth", g);
    }
    if let Some(d) = args.diameter {
        rec.input("diameter", d);
    }
    let entries = enumerate_cached(args, &filters)?;

    let (kept, boundary_count) = match &args.filter_lambda2 {
        None => (entries, 0usize),
        Some(spec) => {
            rec.input("filter_lambda2", spec);
            let interval = parse_interval(spec, args.k as u32)?;
            let mut kept = Vec::new();
            let mut boundary = 0usize;
            for e in entries {
                let l2 = e.graph.second_eigenvalue()?;
                let verdict = interval.classify(l2);
                if matches!(verdict, IntervalVerdict::BoundaryIn | IntervalVerdict::BoundaryOut) {
                    boundary += 1;
                }
                if Lambda2Interval::admits(verdict) {
                    kept.push(e);
                }
            }
            (kept, boundary)
        }
    };

    rec.result("count", kept.len());
    if args.filter_lambda2.is_some() {
        rec.result("boundary_hits", boundary_count);
        let lambdas: Vec<Value> = kept
            .iter()
            .map(|e| {
                Value::String(sig10_string(
                    e.graph.second_eigenvalue().unwrap_or(f64::NAN),
                ))
            })
            .collect();
        rec.result("lambda2", Value::Array(lambdas));
    }
    if args.emit {
        let lines: Vec<Value> = kept
            .iter()
            .map(|e| Value::String(write_graph6(&e.graph)))
            .collect();
        rec.result("graphs", Value::Array(lines));
    }
    print!("{}", rec.render(format));
    Ok(0)
}

/// Reads or writes the graph6 cache when `SPECTRAL_MOORE_CACHE` is set.
fn enumerate_cached(
    args: &EnumerateArgs,
    filters: &EnumerateFilters,
) -> Result<Vec<GraphCatalogEntry>> {
    let cache_file = std::env::var_os(CACHE_ENV).map(|dir| {
        let mut name = format!("regular_n{}_k{}", args.n, args.k);
        if filters.connected {
            name.push_str("_conn");
        }
        if let Some(g) = filters.girth {
            name.push_str(&format!("_g{g}"));
        }
        if let Some(d) = filters.diameter {
            name.push_str(&format!("_d{d}"));
        }
        name.push_str(".g6");
        PathBuf::from(dir).join(name)
    });
    if let Some(path) = &cache_file {
        if path.is_file() {
            let body = std::fs::read_to_string(path)
                .with_context(|| format!("reading cache {}", path.display()))?;
            let mut entries = Vec::new();
            for (i, line) in body.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                let graph = parse_graph6(line)
                    .map_err(|e| anyhow!("cache {} line {}: {e}", path.display(), i + 1))?;
                let canonical_key =
                    spectral_moore::graphs::canonical_form(&graph);
                entries.push(GraphCatalogEntry {
                    graph,
                    source_line: i + 1,
                    canonical_key,
                });
            }
            return Ok(entries);
        }
    }
    let entries = enumerate_regular(args.n, args.k, filters, args.jobs)?;
    if let Some(path) = &cache_file {
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir).ok();
        }
        let body: String = entries
            .iter()
            .map(|e| write_graph6(&e.graph) + "\n")
            .collect();
        std::fs::write(path, body)
            .with_context(|| format!("writing cache {}", path.display()))?;
    }
    Ok(entries)
}

/// Parses "(lo,hi]" style intervals; either endpoint may be empty. Endpoint
/// values accept the theta tokens.
fn parse_interval(spec: &str, k: u32) -> Result<Lambda2Interval> {
    let s: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    let mut chars = s.chars();
    let open = chars.next().ok_or_else(|| anyhow!("empty interval"))?;
    let close = s
        .chars()
        .last()
        .ok_or_else(|| anyhow!("empty interval"))?;
    let lo_closed = match open {
        '[' => true,
        '(' => false,
        _ => bail!("interval must start with '[' or '(', got {open:?}"),
    };
    let hi_closed = match close {
        ']' => true,
        ')' => false,
        _ => bail!("interval must end with ']' or ')', got {close:?}"),
    };
    let inner = &s[1..s.len() - 1];
    let (lo_str, hi_str) = inner
        .split_once(',')
        .ok_or_else(|| anyhow!("interval needs a comma: {spec:?}"))?;
    let parse_end = |t: &str| -> Result<Option<f64>> {
        if t.is_empty() || t == "-inf" || t == "inf" {
            return Ok(None);
        }
        Ok(Some(parse_theta(t, Some(k))?))
    };
    Ok(Lambda2Interval {
        lo: parse_end(lo_str)?.map(|v| (v, lo_closed)),
        hi: parse_end(hi_str)?.map(|v| (v, hi_closed)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_forms() {
        let iv = parse_interval("(1,sqrt(5)-1]", 5).unwrap();
        assert_eq!(iv.lo, Some((1.0, false)));
        let (hi, closed) = iv.hi.unwrap();
        assert!(closed && (hi - (5f64.sqrt() - 1.0)).abs() < 1e-15);

        let iv = parse_interval("[0, )", 5).unwrap();
        assert_eq!(iv.lo, Some((0.0, true)));
        assert_eq!(iv.hi, None);

        assert!(parse_interval("1,2", 5).is_err());
        assert!(parse_interval("(1;2)", 5).is_err());
    }
}
