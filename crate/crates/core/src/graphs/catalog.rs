//! Streaming graph6 catalog filtering: per-line constraints plus a
//! second-eigenvalue interval test with explicit boundary reporting.

use super::{canonical_form, parse_graph6, Graph6Error, GraphCatalogEntry};

/// Comparisons against irrational thresholds carry this guard band; a hit
/// inside it is reported as a boundary case, not silently classified.
pub const LAMBDA2_GUARD: f64 = 1e-9;

/// Interval for λ2 with configurable open/closed endpoints
/// (`(value, closed)`); `None` leaves that side unbounded.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lambda2Interval {
    pub lo: Option<(f64, bool)>,
    pub hi: Option<(f64, bool)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalVerdict {
    Inside,
    Outside,
    /// Within the guard band of a closed endpoint: counted in, flagged.
    BoundaryIn,
    /// Within the guard band of an open endpoint: counted out, flagged.
    BoundaryOut,
}

impl Lambda2Interval {
    pub fn unbounded() -> Self {
        Lambda2Interval { lo: None, hi: None }
    }

    pub fn classify(&self, x: f64) -> IntervalVerdict {
        for (endpoint, is_hi) in [(self.lo, false), (self.hi, true)] {
            if let Some((v, closed)) = endpoint {
                if (x - v).abs() <= LAMBDA2_GUARD {
                    return if closed {
                        IntervalVerdict::BoundaryIn
                    } else {
                        IntervalVerdict::BoundaryOut
                    };
                }
                let outside = if is_hi { x > v } else { x < v };
                if outside {
                    return IntervalVerdict::Outside;
                }
            }
        }
        IntervalVerdict::Inside
    }

    /// Whether verdict counts as a match.
    pub fn admits(v: IntervalVerdict) -> bool {
        matches!(v, IntervalVerdict::Inside | IntervalVerdict::BoundaryIn)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CatalogConstraints {
    /// Require the graph to be regular of this valency.
    pub regular: Option<usize>,
    pub girth: Option<u32>,
    pub diameter: Option<u32>,
    pub connected: bool,
}

#[derive(Debug, Clone)]
pub struct CatalogMatch {
    pub entry: GraphCatalogEntry,
    pub lambda2: f64,
    /// λ2 fell inside the guard band of an interval endpoint.
    pub boundary: bool,
}

#[derive(Debug, Default)]
pub struct CatalogReport {
    pub total_lines: usize,
    pub parsed: usize,
    pub matches: Vec<CatalogMatch>,
    /// Per-line parse failures; never fatal.
    pub errors: Vec<(usize, Graph6Error)>,
    pub constraint_rejects: usize,
    pub lambda2_rejects: usize,
}

/// Streams graph6 lines, applying structural constraints and the λ2 interval
/// test; constant memory per non-matching line. Line numbers are 1-based.
pub fn filter_catalog<I>(
    lines: I,
    interval: &Lambda2Interval,
    constraints: &CatalogConstraints,
) -> CatalogReport
where
    I: IntoIterator,
    I::Item: AsRef<str>,
{
    let mut report = CatalogReport::default();
    for (idx, line) in lines.into_iter().enumerate() {
        let line_no = idx + 1;
        let text = line.as_ref().trim();
        report.total_lines += 1;
        if text.is_empty() || text == ">>graph6<<" {
            continue;
        }
        let graph = match parse_graph6(text) {
            Ok(g) => g,
            Err(e) => {
                report.errors.push((line_no, e));
                continue;
            }
        };
        report.parsed += 1;
        let structural_ok = constraints.regular.map_or(true, |k| graph.is_regular() == Some(k))
            && constraints.girth.map_or(true, |g| graph.girth() == Some(g))
            && (!constraints.connected || graph.is_connected())
            && constraints
                .diameter
                .map_or(true, |d| graph.diameter().ok() == Some(d));
        if !structural_ok {
            report.constraint_rejects += 1;
            continue;
        }
        let lambda2 = match graph.second_eigenvalue() {
            Ok(l) => l,
            Err(_) => {
                report.constraint_rejects += 1;
                continue;
            }
        };
        let verdict = interval.classify(lambda2);
        if Lambda2Interval::admits(verdict) {
            let canonical_key = canonical_form(&graph);
            report.matches.push(CatalogMatch {
                entry: GraphCatalogEntry {
                    graph,
                    source_line: line_no,
                    canonical_key,
                },
                lambda2,
                boundary: matches!(verdict, IntervalVerdict::BoundaryIn),
            });
        } else {
            report.lambda2_rejects += 1;
        }
    }
    report
}
